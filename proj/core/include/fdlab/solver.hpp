#ifndef FDLAB_SOLVER_HPP
#define FDLAB_SOLVER_HPP

#include "fdlab/comparison.hpp"
#include "fdlab/params.hpp"
#include "fdlab/profiles.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace fdlab {

/// Method-of-lines configuration.  The mesh is composite: a uniform radial
/// patch on [0, e^{xi_min+1}] handling the origin through the symmetric
/// limit of the equation, joined at a shared interface node to a uniform
/// grid in xi = ln r up to xi_max.
struct SolverConfig {
    double xi_min = -8.0;
    double xi_max = 40.0;
    int n_xi = 2048;                   ///< points of the logarithmic patch
    double step_error_target = 1e-7;   ///< sup-norm target per accepted step
    double t_end = 1e3;
    std::vector<double> output_times;  ///< t=0 is always recorded in addition

    enum class FarField { PinnedToInitialTail, ZeroSecondDerivative };
    FarField far_field = FarField::PinnedToInitialTail;

    int corrector_passes = 2;          ///< lagged-coefficient refreshes per solve
    double dt_init = 1e-6;

    /// far field must outrun the diffusive scale: xi_max - ln(t)/2 >= 10
    bool domain_invariant_holds(double largest_output_t) const;

    /// geometric output schedule from t_lo to t_end with n points
    static std::vector<double> geometric_schedule(double t_lo, double t_end, int n);
};

/// Time-stamped fields phi(., t_k) on the composite grid.
struct Trajectory {
    std::vector<double> times;                ///< t_0 = 0, then the output times
    std::vector<double> radii;                ///< composite grid nodes, radii[0] = 0
    std::vector<std::vector<double>> fields;  ///< phi per output time
    std::size_t interface_index = 0;          ///< node shared by the two patches
    std::string initial_label;
    std::uint64_t config_hash = 0;
    std::size_t steps_taken = 0;

    double origin_value(std::size_t k) const { return fields[k][0]; }
    double sup_value(std::size_t k) const;
    double initial_sup() const { return sup_value(0); }

    /// linear interpolation of phi(., t_k) at radius r
    double interpolate(std::size_t k, double r) const;
};

/// Integrates the perturbation equation from phi0.  Implicit first-order
/// steps with lagged coefficients; step size controlled by step doubling
/// against step_error_target.  Throws std::runtime_error on NaN or step-size
/// collapse (dt < 1e-12 t_end).
Trajectory solve(const RadialFunction& phi0, const SolverConfig& config,
                 const ModelParams& params);

/// Per-output-time ordering margins of a trajectory against comparison
/// functions (either side may be null, meaning the zero function below or
/// no bound above).
struct SandwichReport {
    bool precondition_ok = false;
    std::string precondition_note;
    std::vector<double> lower_margin;  ///< min over r of  phi - lower
    std::vector<double> upper_margin;  ///< min over r of  upper - phi
    double tolerance = 0.0;
    bool pass = false;
};

/// tol <= 0 selects the default 1e-4 * sup phi0, absorbing discretization
/// error.  The t=0 ordering is verified first; if it fails, no time slice
/// is inspected and the report names the failing side.
SandwichReport sandwich_check(const Trajectory& traj, const ComparisonSolution* lower,
                              const ComparisonSolution* upper, double tol = 0.0);

} // namespace fdlab

#endif
