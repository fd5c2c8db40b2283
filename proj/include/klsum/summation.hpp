#pragma once

#include <cstddef>

namespace klsum {

// Kahan compensated accumulator. Every sum in the library that feeds a
// reported value goes through one of these, always in a fixed iteration
// order, so results are reproducible bit-for-bit across runs and thread
// counts.
class KahanSum {
public:
    void add(double x) {
        double y = x - comp_;
        double t = sum_ + y;
        comp_ = (t - sum_) - y;
        sum_ = t;
    }

    double value() const { return sum_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

} // namespace klsum
