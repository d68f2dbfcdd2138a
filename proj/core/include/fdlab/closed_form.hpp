#ifndef FDLAB_CLOSED_FORM_HPP
#define FDLAB_CLOSED_FORM_HPP

#include <functional>
#include <stdexcept>
#include <string>
#include <utility>

namespace fdlab {

/// Value together with first and second derivative at a point.
struct Deriv2 {
    double value = 0.0;
    double d1 = 0.0;
    double d2 = 0.0;
};

/// A scalar function on an interval that evaluates value, first and second
/// derivative in one call.  Immutable after construction; evaluation is pure,
/// so instances may be shared across threads freely.
class ClosedFormFunction {
public:
    using Eval = std::function<Deriv2(double)>;

    ClosedFormFunction() = default;
    ClosedFormFunction(std::string label, double domain_lo, double domain_hi, Eval eval)
        : label_(std::move(label)), lo_(domain_lo), hi_(domain_hi), eval_(std::move(eval)) {}

    Deriv2 operator()(double x) const
    {
        if (x < lo_ || x > hi_)
            throw std::domain_error(label_ + ": argument " + std::to_string(x) +
                                    " outside [" + std::to_string(lo_) + ", " +
                                    std::to_string(hi_) + "]");
        return eval_(x);
    }

    double value(double x) const { return (*this)(x).value; }
    double d1(double x) const { return (*this)(x).d1; }
    double d2(double x) const { return (*this)(x).d2; }

    const std::string& label() const { return label_; }
    double domain_lo() const { return lo_; }
    double domain_hi() const { return hi_; }

private:
    std::string label_;
    double lo_ = 0.0;
    double hi_ = 0.0;
    Eval eval_;
};

} // namespace fdlab

#endif
