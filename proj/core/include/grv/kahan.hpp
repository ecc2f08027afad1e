#pragma once

#include <cmath>

namespace grv {

/// Neumaier's variant of compensated summation: tracks the rounding residue
/// of every add, so k-indexed sums stay accurate to a few ulps even after
/// 10^7 terms.
class KahanSum {
public:
    void add(double x) noexcept {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }

    KahanSum& operator+=(double x) noexcept {
        add(x);
        return *this;
    }

    double value() const noexcept { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

}  // namespace grv
