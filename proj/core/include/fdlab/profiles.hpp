#ifndef FDLAB_PROFILES_HPP
#define FDLAB_PROFILES_HPP

#include "fdlab/params.hpp"

#include <functional>
#include <string>
#include <utility>

namespace fdlab {

/// A radial scalar function r -> value with a descriptive label.
class RadialFunction {
public:
    using Fn = std::function<double(double)>;

    RadialFunction() = default;
    RadialFunction(std::string label, Fn fn) : label_(std::move(label)), fn_(std::move(fn)) {}

    double operator()(double r) const { return fn_(r); }
    const std::string& label() const { return label_; }
    bool valid() const { return bool(fn_); }

private:
    std::string label_;
    Fn fn_;
};

/// Stationary Barenblatt profile V_D(x) = (D + |x|^2)^{-(n-2)/2}.
class BarenblattProfile {
public:
    BarenblattProfile(const ModelParams& params, double D_profile)
        : params_(params), D_(D_profile) {}

    double operator()(double radius) const;
    double radial_derivative(double radius) const;
    double D() const { return D_; }

private:
    ModelParams params_;
    double D_;
};

/// Self-similar Barenblatt solution of the original equation,
///   U_{D,T}(y,tau) = R^{-n} (D + (beta(1-m)/2) (|y|/R)^2)^{-1/(1-m)},
/// with R(tau) = (T-tau)^{-beta}.  Throws std::domain_error at tau >= T.
double barenblatt_U(const ModelParams& params, double D_profile, double T, double y,
                    double tau);

/// The stacked changes of variables of the rescaling: original (y, tau, u)
/// to self-similar (x, t, v), and the perturbation levels v <-> phi <-> chi.
class VariableStack {
public:
    VariableStack(const ModelParams& params, double extinction_time)
        : params_(params), T_(extinction_time) {}

    double t_of_tau(double tau) const;
    double tau_of_t(double t) const;
    double R_of_tau(double tau) const;
    double x_of_y(double y, double tau) const;
    double y_of_x(double x, double tau) const;
    double v_of_u(double u, double tau) const;
    double u_of_v(double v, double tau) const;

private:
    ModelParams params_;
    double T_;
};

/// v = (r^2 + D + phi)^{-(n-2)/2} and its inverse.  Both throw
/// std::domain_error when r^2 + D + phi <= 0 (resp. v <= 0).
double v_from_phi(const ModelParams& params, double phi_value, double r);
double phi_from_v(const ModelParams& params, double v_value, double r);

/// Wraps continuous nonnegative radial data psi0 as phi-level initial data
/// (the identity at this level).  Nonnegativity is checked on a sample grid.
RadialFunction initial_phi_from_psi(const RadialFunction& psi0, const ModelParams& params);

/// Canonical family with logarithmic tail:  B (ln r)^{-gamma} for r > 2,
/// closed on [0,2] by a monotone cubic Hermite cap matching value and slope
/// at r = 2.  Decreasing on [0, inf), positive everywhere.
RadialFunction log_tail_data(double B, double gamma);

/// Smooth bump supported in (r_a, r_b), maximum height h.
RadialFunction bump_data(double h = 1.0, double r_a = 1.0, double r_b = 3.0);

/// Constant data phi0 = c (an exact fixed point of the dynamics).
RadialFunction constant_data(double c);

/// Identically zero data (V_D itself).
RadialFunction zero_data();

} // namespace fdlab

#endif
