#ifndef ERGO_NUMERIC_HPP
#define ERGO_NUMERIC_HPP

#include <cmath>

namespace ergo {

/// Neumaier-compensated accumulator; summation order still matters, so all
/// reductions over group elements run in canonical element order.
class KahanSum {
public:
    void add(double x) {
        double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

}  // namespace ergo

#endif
