#ifndef FDLAB_SPECIAL_HPP
#define FDLAB_SPECIAL_HPP

#include "fdlab/closed_form.hpp"

namespace fdlab {

/// Kummer's confluent hypergeometric function M(a,b,zeta) for zeta >= 0.
/// Direct compensated series up to the crossover, optimally truncated
/// asymptotic expansion beyond it.  Throws std::domain_error if b is a
/// nonpositive integer and std::overflow_error if the result exceeds the
/// double range.
double kummer_m(double a, double b, double zeta);

/// e^{-zeta} M(a,b,zeta) evaluated without overflow for any zeta >= 0.
double kummer_m_scaled(double a, double b, double zeta);

/// Self-similar tail profile, the decreasing solution of
///   Phi'' + (z/2) Phi' + (gamma/2) Phi = 0,  Phi(0)=1, Phi'(0)=0,
/// represented through Kummer's function.  Second derivatives come from the
/// equation itself.  Requires 0 < gamma <= 2; the range gamma >= 1 is outside
/// the regime used by the comparison machinery and is tagged in the label.
ClosedFormFunction phi_profile(double gamma);

/// min/max of a positive quantity over a scan grid
struct Enclosure {
    double lo = 0.0;
    double hi = 0.0;
};

/// Empirical enclosure constants of the tail estimates for Phi:
///   value:      range of  z^gamma Phi(z)
///   slope:      range of -z^{gamma+1} Phi'(z)
///   curvature:  range of  z^{gamma+2} |Phi''(z)|
/// over a dense geometric grid on [z_lo, z_hi].  Throws std::domain_error if
/// Phi or -Phi' is nonpositive anywhere on the grid.
struct PhiAsymptotics {
    Enclosure value;
    Enclosure slope;
    Enclosure curvature;
};
PhiAsymptotics phi_asymptotic_constants(double gamma, double z_lo, double z_hi,
                                        int n_points = 4096);

/// Inner radial profile, the solution of
///   rho'' + rho'/sigma + lambda rho = 0,  rho(0)=1, rho'(0)=0,
/// evaluated by its even power series (a scaled Bessel-J0 profile).
ClosedFormFunction rho_profile(double lambda);

/// First positive zero of rho, located by bisection on the power series.
double rho_first_zero(double lambda);

/// Certified radius of positivity/monotonicity: min(0.99, 0.9 * first zero).
double sigma0_of(double lambda);

/// Time-dependent factor matching the inner and outer comparison profiles,
///   f(t) = Phi(xi0 (t+t0)^{-1/2}) / rho((t+t0)^{-1/2}),
/// with f -> 1 as t -> inf.  c_bound is the computed constant in the bound
/// |f'(t)| <= c_bound/(t+t0)^2, assembled from the grid-estimated slope
/// constants c1, c2, c3 also stored here.
struct MatchingFactor {
    ClosedFormFunction f;   ///< function of t on [0, inf)
    double c_bound = 0.0;   ///< C(xi0) in |f'| <= C/(t+t0)^2
    double c1 = 0.0;        ///< min of rho on [0, sigma0]
    double c2 = 0.0;        ///< max of |Phi'(z)|/z on (0, xi0]
    double c3 = 0.0;        ///< max of |rho'(sigma)|/sigma on (0, sigma0]
    double sigma0 = 0.0;
};
MatchingFactor matching_factor(double gamma, double D, double xi0, double t0);

/// Explicit outer profile of the subsolution branch,
///   hatPhi(z) = (1 + z^2/4)^{-gamma/2},
/// with closed-form first and second derivatives.
ClosedFormFunction hat_phi_profile(double gamma);

} // namespace fdlab

#endif
