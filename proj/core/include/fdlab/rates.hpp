#ifndef FDLAB_RATES_HPP
#define FDLAB_RATES_HPP

#include "fdlab/params.hpp"
#include "fdlab/solver.hpp"

#include <string>
#include <vector>

namespace fdlab {

/// A positive decay observable sampled at the trajectory output times.
struct DecaySeries {
    std::vector<double> times;
    std::vector<double> values;
    std::string provenance;
};

enum class SeriesKind { Sup, Origin };

/// s_k = sup_r phi(., t_k) or phi(0, t_k).  Throws on an empty trajectory.
DecaySeries extract_series(const Trajectory& traj, SeriesKind kind);

/// Least-squares slope of ln s against ln(t+1) on [t_lo, t_hi].
struct RateFit {
    double slope = 0.0;
    double intercept = 0.0;
    double stderr_slope = 0.0;
    double max_log_residual = 0.0;
    double t_lo = 0.0, t_hi = 0.0;
    int n_points = 0;
};
RateFit fit_rate(const DecaySeries& series, double t_lo, double t_hi);

/// Two-sided rate probe: S(t) = (t+1)^exponent s(t) on the window.  The
/// claimed rate t^{-exponent} is confirmed only when S stays in a positive
/// band of bounded ratio with no systematic drift; the trend field
/// (S_end/S_start) records the failure signature otherwise.
struct BandCheck {
    double exponent = 0.0;
    double band_lo = 0.0;
    double band_hi = 0.0;
    double ratio = 0.0;
    double trend = 0.0;
    bool banded = false;     ///< band_lo > 0, ratio <= max_ratio
    bool confirmed = false;  ///< banded and trend within [1/trend_cap, trend_cap]
};
BandCheck band_check(const DecaySeries& series, double exponent, double t_lo, double t_hi,
                     double max_ratio = 20.0, double trend_cap = 2.0);

/// Data family swept by the theorem suite.
struct FamilySpec {
    enum class Kind { LogTail, Bump, Constant } kind = Kind::LogTail;
    double B = 1.0;  ///< tail amplitude (log-tail)
    double b = 1.0;  ///< tail minorant constant (log-tail), defaults to B
    double c = 0.5;  ///< level (constant family)
};

struct TheoremRow {
    double gamma = 0.0;
    double p_sup = 0.0;
    double p_origin = 0.0;
    BandCheck band;          ///< at the family's claimed exponent
    BandCheck ceiling;       ///< at exponent 1/2 (universal lower bound probe)
    BandCheck faster_probe;  ///< at exponent 0.6 (must not be confirmed)
    bool non_decay = false;  ///< raw series did not decay on the window
    bool pass = false;
    std::string note;
};

struct TheoremSuiteConfig {
    double window_lo = 1e2;
    double window_hi = 1e4;
    int output_points = 16;
    double slope_tolerance = 0.10;
    double band_max_ratio = 20.0;
    SolverConfig solver;  ///< t_end/xi_max are adapted per row as needed
};

/// Runs the solver per gamma (log-tail family) or once (compact families),
/// extracts both decay series and evaluates the rate criteria.  Solver
/// failures are recorded per row; partial tables are returned.
std::vector<TheoremRow> theorem_suite(const ModelParams& base,
                                      const std::vector<double>& gammas,
                                      const FamilySpec& family,
                                      const TheoremSuiteConfig& cfg);

} // namespace fdlab

#endif
