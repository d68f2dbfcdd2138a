#include "fdlab/profiles.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fdlab {

double BarenblattProfile::operator()(double radius) const
{
    return std::pow(D_ + radius * radius, -params_.one_over_one_minus_m());
}

double BarenblattProfile::radial_derivative(double radius) const
{
    const double e = params_.one_over_one_minus_m();
    return -2.0 * e * radius * std::pow(D_ + radius * radius, -e - 1.0);
}

double barenblatt_U(const ModelParams& params, double D_profile, double T, double y,
                    double tau)
{
    if (tau < 0.0 || tau >= T)
        throw std::domain_error("barenblatt_U: tau must lie in [0, T)");
    if (D_profile < 0.0)
        throw std::domain_error("barenblatt_U: D must be nonnegative");
    const double R = std::pow(T - tau, -params.beta);
    const double s = y / R;
    const double arg = D_profile + params.beta * (1.0 - params.m) / 2.0 * s * s;
    return std::pow(R, -params.n) * std::pow(arg, -1.0 / (1.0 - params.m));
}

double VariableStack::R_of_tau(double tau) const
{
    if (tau >= T_)
        throw std::domain_error("VariableStack: tau must be below the extinction time");
    return std::pow(T_ - tau, -params_.beta);
}

double VariableStack::t_of_tau(double tau) const
{
    return (params_.beta / params_.mu) * std::log(T_ / (T_ - tau));
}

double VariableStack::tau_of_t(double t) const
{
    return T_ * (1.0 - std::exp(-params_.mu * t / params_.beta));
}

double VariableStack::x_of_y(double y, double tau) const
{
    return std::sqrt(params_.beta / params_.mu) * y / R_of_tau(tau);
}

double VariableStack::y_of_x(double x, double tau) const
{
    return x * R_of_tau(tau) / std::sqrt(params_.beta / params_.mu);
}

double VariableStack::v_of_u(double u, double tau) const
{
    return std::pow(R_of_tau(tau), params_.n) * u;
}

double VariableStack::u_of_v(double v, double tau) const
{
    return v / std::pow(R_of_tau(tau), params_.n);
}

double v_from_phi(const ModelParams& params, double phi_value, double r)
{
    const double arg = r * r + params.D + phi_value;
    if (arg <= 0.0)
        throw std::domain_error("v_from_phi: r^2 + D + phi must be positive");
    return std::pow(arg, -params.one_over_one_minus_m());
}

double phi_from_v(const ModelParams& params, double v_value, double r)
{
    if (v_value <= 0.0)
        throw std::domain_error("phi_from_v: v must be positive");
    return std::pow(v_value, -1.0 / params.one_over_one_minus_m()) - r * r - params.D;
}

RadialFunction initial_phi_from_psi(const RadialFunction& psi0, const ModelParams&)
{
    for (int i = 0; i <= 4096; ++i) {
        double r = 1e6 * std::pow(double(i) / 4096, 3);
        if (psi0(r) < 0.0)
            throw std::invalid_argument("initial_phi_from_psi: psi0 negative at r=" +
                                        std::to_string(r));
    }
    return RadialFunction("phi0[" + psi0.label() + "]", [psi0](double r) { return psi0(r); });
}

RadialFunction log_tail_data(double B, double gamma)
{
    if (B <= 0.0 || gamma <= 0.0)
        throw std::invalid_argument("log_tail_data: B and gamma must be positive");
    const double ln2 = std::log(2.0);
    const double v2 = B * std::pow(ln2, -gamma);            // value at r=2
    const double s2 = -B * gamma * std::pow(ln2, -gamma - 1.0) / 2.0;  // slope at r=2
    const double c0 = v2 - 2.0 * s2;                        // cap value at r=0
    auto fn = [B, gamma, v2, s2, c0](double r) {
        if (r > 2.0)
            return B * std::pow(std::log(r), -gamma);
        // Hermite cap: value c0 and slope 0 at r=0, value v2 and slope s2 at
        // r=2; with c0 = v2 - 2 s2 the cap is strictly decreasing on (0,2)
        const double u = r / 2.0;
        const double h00 = (2.0 * u - 3.0) * u * u + 1.0;
        const double h01 = (3.0 - 2.0 * u) * u * u;
        const double h11 = (u - 1.0) * u * u;
        return c0 * h00 + v2 * h01 + 2.0 * s2 * h11;
    };
    return RadialFunction("log-tail(B=" + std::to_string(B) + ",gamma=" +
                              std::to_string(gamma) + ")",
                          fn);
}

RadialFunction bump_data(double h, double r_a, double r_b)
{
    if (!(0.0 <= r_a && r_a < r_b))
        throw std::invalid_argument("bump_data: need 0 <= r_a < r_b");
    auto fn = [h, r_a, r_b](double r) {
        const double s = (2.0 * r - (r_a + r_b)) / (r_b - r_a);
        if (std::abs(s) >= 1.0)
            return 0.0;
        return h * std::exp(1.0 - 1.0 / (1.0 - s * s));
    };
    return RadialFunction("bump(h=" + std::to_string(h) + ",[" + std::to_string(r_a) + "," +
                              std::to_string(r_b) + "])",
                          fn);
}

RadialFunction constant_data(double c)
{
    if (c < 0.0)
        throw std::invalid_argument("constant_data: c must be nonnegative");
    return RadialFunction("const(" + std::to_string(c) + ")", [c](double) { return c; });
}

RadialFunction zero_data()
{
    return RadialFunction("zero", [](double) { return 0.0; });
}

} // namespace fdlab
