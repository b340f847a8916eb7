#ifndef F4OSC_REPORT_HPP
#define F4OSC_REPORT_HPP

#include <string>
#include <vector>

namespace f4osc {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;      // counterexample payload or recorded values
    double elapsedSec = 0.0;
};

/// Ordered list of named checks; overall status is pass iff every check
/// passes.
class Report {
public:
    void add(std::string name, bool pass, std::string detail = "", double elapsedSec = 0.0) {
        checks_.push_back({std::move(name), pass, std::move(detail), elapsedSec});
    }
    void merge(const Report& other) {
        checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
    }
    bool allPass() const {
        for (const auto& c : checks_)
            if (!c.pass) return false;
        return true;
    }
    const std::vector<CheckResult>& checks() const { return checks_; }

private:
    std::vector<CheckResult> checks_;
};

/// Scoped wall-clock timer (seconds).
class Timer {
public:
    Timer();
    double elapsed() const;

private:
    long long startNs_;
};

}  // namespace f4osc

#endif
