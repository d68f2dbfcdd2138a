#include "fdlab/special.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace fdlab {

namespace {

constexpr double SERIES_CROSSOVER = 30.0;   // zeta below: direct series
constexpr int MAX_SERIES_TERMS = 4000;
constexpr int MAX_ASYMPTOTIC_TERMS = 80;

bool is_nonpositive_integer(double x)
{
    return x <= 0.0 && x == std::floor(x);
}

// direct series sum of M(a,b,zeta) with Kahan compensation
double kummer_series(double a, double b, double zeta)
{
    double sum = 1.0, comp = 0.0, term = 1.0;
    for (int k = 0; k < MAX_SERIES_TERMS; ++k) {
        term *= (a + k) / (b + k) * zeta / (k + 1);
        if (term == 0.0)
            break;
        double y = term - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        if (std::abs(term) < std::numeric_limits<double>::epsilon() * std::abs(sum) && k > 2)
            break;
        if (a < 0.0 && a + k + 1 == 0.0)
            break;  // terminating polynomial
    }
    return sum;
}

// optimally truncated asymptotic sum:  M ~ Gamma(b)/Gamma(a) e^z z^{a-b} * S,
// S = sum_k (b-a)_k (1-a)_k / (k! zeta^k).  Returns S.
double kummer_asymptotic_tail(double a, double b, double zeta)
{
    double sum = 1.0, term = 1.0;
    for (int k = 0; k < MAX_ASYMPTOTIC_TERMS; ++k) {
        double next = term * (b - a + k) * (1.0 - a + k) / ((k + 1) * zeta);
        if (std::abs(next) >= std::abs(term))
            break;  // divergence onset: truncate at the smallest term
        term = next;
        sum += term;
        if (std::abs(term) < std::numeric_limits<double>::epsilon() * std::abs(sum))
            break;
    }
    return sum;
}

} // namespace

double kummer_m_scaled(double a, double b, double zeta)
{
    if (is_nonpositive_integer(b))
        throw std::domain_error("kummer_m: b must not be a nonpositive integer");
    if (zeta < 0.0)
        throw std::domain_error("kummer_m: zeta must be nonnegative");
    if (zeta == 0.0)
        return 1.0;
    if (a == 0.0)
        return std::exp(-zeta);
    if (zeta <= SERIES_CROSSOVER || is_nonpositive_integer(a))
        return std::exp(-zeta) * kummer_series(a, b, zeta);
    // scaled asymptotic branch; the e^{-zeta} z^{-a}/Gamma(b-a) companion
    // solution is below double precision here
    double prefix = std::tgamma(b) / std::tgamma(a) * std::pow(zeta, a - b);
    return prefix * kummer_asymptotic_tail(a, b, zeta);
}

double kummer_m(double a, double b, double zeta)
{
    double scaled = kummer_m_scaled(a, b, zeta);
    if (zeta > 700.0)  // e^zeta overflows double
        throw std::overflow_error("kummer_m: result exceeds double range at zeta=" +
                                  std::to_string(zeta));
    double m = std::exp(zeta) * scaled;
    if (!std::isfinite(m))
        throw std::overflow_error("kummer_m: result exceeds double range");
    return m;
}

namespace {

// Taylor coefficients of Phi about z=0 from the recurrence
//   c_{k+1} = -(k + gamma/2) c_k / ((2k+2)(2k+1)),  Phi = sum c_k z^{2k}.
// Used below the Kummer branch where the derivative difference formula
// would cancel.
struct PhiTaylor {
    std::vector<double> c;
    explicit PhiTaylor(double gamma)
    {
        c.resize(24);
        c[0] = 1.0;
        for (size_t k = 0; k + 1 < c.size(); ++k)
            c[k + 1] = -(double(k) + gamma / 2.0) * c[k] / double((2 * k + 2) * (2 * k + 1));
    }
    void eval(double z, double& v, double& d1) const
    {
        double z2 = z * z;
        v = 0.0;
        d1 = 0.0;
        double zp = 1.0;  // z^{2k}
        for (size_t k = 0; k < c.size(); ++k) {
            v += c[k] * zp;
            if (k + 1 < c.size())
                d1 += c[k + 1] * double(2 * (k + 1)) * zp;
            zp *= z2;
        }
        d1 *= z;
    }
};

constexpr double PHI_TAYLOR_EDGE = 1.0;

} // namespace

ClosedFormFunction phi_profile(double gamma)
{
    if (gamma <= 0.0)
        throw std::invalid_argument("phi_profile: gamma must be positive");
    if (gamma > 2.0)
        throw std::invalid_argument("phi_profile: gamma > 2 not supported");

    const double a = (1.0 - gamma) / 2.0;
    const double b = 0.5;
    PhiTaylor taylor(gamma);

    auto eval = [gamma, a, b, taylor](double z) -> Deriv2 {
        Deriv2 out;
        if (z < PHI_TAYLOR_EDGE) {
            taylor.eval(z, out.value, out.d1);
        } else {
            double zeta = z * z / 4.0;
            out.value = kummer_m_scaled(a, b, zeta);
            // Phi'(z) = (gamma/z) [e^{-zeta} M(a-1,b,zeta) - Phi(z)];
            // the first term is smaller by a factor zeta, so no cancellation
            out.d1 = (gamma / z) * (kummer_m_scaled(a - 1.0, b, zeta) - out.value);
        }
        out.d2 = -(z / 2.0) * out.d1 - (gamma / 2.0) * out.value;
        return out;
    };

    std::string label = "phi(gamma=" + std::to_string(gamma) + ")";
    if (gamma >= 1.0)
        label += " [exploratory]";
    return ClosedFormFunction(label, 0.0, std::numeric_limits<double>::infinity(), eval);
}

PhiAsymptotics phi_asymptotic_constants(double gamma, double z_lo, double z_hi, int n_points)
{
    if (z_lo < 1.0 || z_hi <= z_lo)
        throw std::invalid_argument("phi_asymptotic_constants: need 1 <= z_lo < z_hi");
    ClosedFormFunction phi = phi_profile(gamma);
    PhiAsymptotics out;
    out.value = {std::numeric_limits<double>::infinity(), 0.0};
    out.slope = out.value;
    out.curvature = out.value;
    const double step = std::log(z_hi / z_lo) / (n_points - 1);
    for (int i = 0; i < n_points; ++i) {
        double z = z_lo * std::exp(i * step);
        Deriv2 d = phi(z);
        if (d.value <= 0.0)
            throw std::domain_error("phi_asymptotic_constants: Phi nonpositive at z=" +
                                    std::to_string(z));
        if (-d.d1 <= 0.0)
            throw std::domain_error("phi_asymptotic_constants: Phi' nonnegative at z=" +
                                    std::to_string(z));
        double r1 = std::pow(z, gamma) * d.value;
        double r2 = -std::pow(z, gamma + 1.0) * d.d1;
        double r3 = std::pow(z, gamma + 2.0) * std::abs(d.d2);
        out.value.lo = std::min(out.value.lo, r1);
        out.value.hi = std::max(out.value.hi, r1);
        out.slope.lo = std::min(out.slope.lo, r2);
        out.slope.hi = std::max(out.slope.hi, r2);
        out.curvature.lo = std::min(out.curvature.lo, r3);
        out.curvature.hi = std::max(out.curvature.hi, r3);
    }
    return out;
}

ClosedFormFunction rho_profile(double lambda)
{
    if (lambda <= 0.0)
        throw std::invalid_argument("rho_profile: lambda must be positive");
    auto eval = [lambda](double sigma) -> Deriv2 {
        // rho = sum_k (-u)^k/(k!)^2 with u = lambda sigma^2/4
        const double u = lambda * sigma * sigma / 4.0;
        double term = 1.0, v = 1.0, d1s = 0.0;  // d1s = rho'/sigma accumulated
        for (int k = 1; k < 200; ++k) {
            term *= -u / double(k) / double(k);
            v += term;
            d1s += term * double(2 * k);
            if (std::abs(term) < 1e-18 && k > 3)
                break;
        }
        Deriv2 out;
        out.value = v;
        if (sigma > 0.0) {
            out.d1 = d1s / sigma;
            out.d2 = -out.d1 / sigma - lambda * v;
        } else {
            out.d1 = 0.0;
            out.d2 = -lambda / 2.0;  // symmetric limit of the equation at 0
        }
        return out;
    };
    return ClosedFormFunction("rho(lambda=" + std::to_string(lambda) + ")", 0.0,
                              std::numeric_limits<double>::infinity(), eval);
}

double rho_first_zero(double lambda)
{
    ClosedFormFunction rho = rho_profile(lambda);
    const double scale = 1.0 / std::sqrt(lambda);
    double lo = 0.0, hi = 0.0;
    for (double s = 0.1 * scale; s < 10.0 * scale; s += 0.1 * scale) {
        if (rho.value(s) <= 0.0) {
            hi = s;
            break;
        }
        lo = s;
    }
    if (hi == 0.0)
        throw std::runtime_error("rho_first_zero: no sign change located");
    while (hi - lo > 1e-12 * scale) {
        double mid = 0.5 * (lo + hi);
        (rho.value(mid) > 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double sigma0_of(double lambda)
{
    return std::min(0.99, 0.9 * rho_first_zero(lambda));
}

MatchingFactor matching_factor(double gamma, double D, double xi0, double t0)
{
    if (xi0 <= 0.0)
        throw std::invalid_argument("matching_factor: xi0 must be positive");
    const double lambda = (gamma / 2.0 + 1.0) / D;
    const double sigma0 = sigma0_of(lambda);
    if (t0 <= 1.0 / (sigma0 * sigma0))
        throw std::invalid_argument(
            "matching_factor: t0 must exceed sigma0^{-2} = " +
            std::to_string(1.0 / (sigma0 * sigma0)));

    ClosedFormFunction phi = phi_profile(gamma);
    ClosedFormFunction rho = rho_profile(lambda);

    MatchingFactor out;
    out.sigma0 = sigma0;

    // grid-estimated slope constants of the derivative bound
    const int N = 2048;
    out.c1 = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= N; ++i) {
        double s = sigma0 * i / N;
        out.c1 = std::min(out.c1, rho.value(s));
        if (i > 0) {
            out.c3 = std::max(out.c3, std::abs(rho.d1(s)) / s);
            double z = xi0 * i / N;
            out.c2 = std::max(out.c2, std::abs(phi.d1(z)) / z);
        }
    }
    out.c_bound = out.c2 * xi0 * xi0 / (2.0 * out.c1) + out.c3 / (2.0 * out.c1 * out.c1);

    auto eval = [phi, rho, xi0, t0](double t) -> Deriv2 {
        const double s = t + t0;
        const double rs = std::sqrt(s);
        Deriv2 P = phi(xi0 / rs);
        Deriv2 R = rho(1.0 / rs);
        // chain rule through z = xi0 s^{-1/2}, sigma = s^{-1/2}
        const double dz = -0.5 * xi0 / (s * rs), d2z = 0.75 * xi0 / (s * s * rs);
        const double ds = -0.5 / (s * rs), d2s = 0.75 / (s * s * rs);
        const double Np = P.d1 * dz, Npp = P.d2 * dz * dz + P.d1 * d2z;
        const double Dp = R.d1 * ds, Dpp = R.d2 * ds * ds + R.d1 * d2s;
        Deriv2 out;
        out.value = P.value / R.value;
        out.d1 = (Np * R.value - P.value * Dp) / (R.value * R.value);
        out.d2 = (Npp * R.value - P.value * Dpp) / (R.value * R.value) -
                 2.0 * Dp * out.d1 / R.value;
        return out;
    };
    out.f = ClosedFormFunction("f(xi0=" + std::to_string(xi0) + ",t0=" + std::to_string(t0) + ")",
                               0.0, std::numeric_limits<double>::infinity(), eval);
    return out;
}

ClosedFormFunction hat_phi_profile(double gamma)
{
    if (gamma <= 0.0)
        throw std::invalid_argument("hat_phi_profile: gamma must be positive");
    auto eval = [gamma](double z) -> Deriv2 {
        const double w = 1.0 + z * z / 4.0;
        Deriv2 out;
        out.value = std::pow(w, -gamma / 2.0);
        out.d1 = -(gamma / 4.0) * z * std::pow(w, -gamma / 2.0 - 1.0);
        out.d2 = (gamma * (gamma + 2.0) / 16.0) * z * z * std::pow(w, -gamma / 2.0 - 2.0) -
                 (gamma / 4.0) * std::pow(w, -gamma / 2.0 - 1.0);
        return out;
    };
    return ClosedFormFunction("hat_phi(gamma=" + std::to_string(gamma) + ")", 0.0,
                              std::numeric_limits<double>::infinity(), eval);
}

} // namespace fdlab
