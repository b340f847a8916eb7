#include "f4osc/report.hpp"

#include <chrono>

namespace f4osc {

namespace {
long long nowNs() {
    return std::chrono::duration_cast<std::chrono::nanoseconds>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}
}  // namespace

Timer::Timer() : startNs_(nowNs()) {}

double Timer::elapsed() const { return static_cast<double>(nowNs() - startNs_) * 1e-9; }

}  // namespace f4osc
