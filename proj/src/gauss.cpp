#include "f4osc/gauss.hpp"

#include <ostream>

namespace f4osc {

std::string Gauss::str() const {
    if (isZero()) return "0";
    if (im_.isZero()) return re_.str();
    const std::string imag = im_.str() + "*i";
    if (re_.isZero()) return imag;
    if (im_.sign() > 0) return re_.str() + "+" + imag;
    return re_.str() + imag;  // minus sign already in the numerator
}

std::ostream& operator<<(std::ostream& os, const Gauss& z) { return os << z.str(); }

}  // namespace f4osc
