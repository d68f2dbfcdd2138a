#ifndef FDLAB_COMPARISON_HPP
#define FDLAB_COMPARISON_HPP

#include "fdlab/params.hpp"
#include "fdlab/profiles.hpp"
#include "fdlab/special.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace fdlab {

/// Space-time jet of a radial function at the phi level.
struct SpaceTimeJet {
    double value = 0.0;
    double d_r = 0.0;
    double d_rr = 0.0;
    double d_t = 0.0;
};

/// Space-time jet in logarithmic radius xi = ln r.
struct ChiJet {
    double value = 0.0;
    double d_xi = 0.0;
    double d_xixi = 0.0;
    double d_t = 0.0;
};

/// Free parameters of the matched supersolution and every derived constant
/// consumed by its certificates.  Produced by select_super_params (A by
/// select_A); all fields go into the run manifest.
struct SuperParams {
    double xi0 = 0.0;           ///< matching offset, fixed by the slope constants
    double t0 = 0.0;            ///< time shift, above every threshold below
    double A = 0.0;             ///< amplitude; NaN until select_A binds it to data
    double sigma0 = 0.0;        ///< certified positivity radius of rho
    double z0 = 0.0;            ///< first sign change of Phi''
    double c1_tail = 0.0;       ///< lower tail constant of -Phi' z^{gamma+1} past z0
    double c2_tail = 0.0;       ///< upper tail constant of Phi'' z^{gamma+2} past z0
    double c1_slope = 0.0;      ///< |rho'(sigma)| <= c1_slope sigma on (0,sigma0)
    double c2_slope = 0.0;      ///< -Phi'(z) >= c2_slope z on (0,1)
    double t_star = 0.0;        ///< drift-sign threshold
    double t_upper_star = 0.0;  ///< inner-supersolution threshold
    double c_xi0 = 0.0;         ///< matching-factor derivative bound C(xi0)
    double corner_bound = 0.0;  ///< c2_slope*xi0 - c1_slope/rho(sigma0) > 0
};

/// Free parameters of the explicit subsolution.
struct SubParams {
    double xi0 = 0.0;     ///< smallest grid value > 1 passing the smallness bounds
    double a = 0.0;       ///< amplitude in (0,1); NaN until select_a binds it to data
    double c2_min = 0.0;  ///< min{1/16, 1/(4 xi0^2)}
};

/// One of the paper-level comparison functions with analytic partials in
/// both radial and logarithmic coordinates.  Immutable and thread-safe.
class ComparisonSolution {
public:
    enum class Kind { OuterSuper, InnerSuper, MatchedSuper, OuterSub, MatchedSub };

    Kind kind() const { return kind_; }
    const ModelParams& params() const { return model_; }
    const SuperParams* super_params() const;
    const SubParams* sub_params() const;

    /// radius at which the matched kinds glue inner to outer (1 for the
    /// supersolution, e^{xi0} for the subsolution); NaN for unmatched kinds
    double match_radius() const { return match_radius_; }

    SpaceTimeJet phi_jet(double r, double t) const;
    ChiJet chi_jet(double xi, double t) const;

private:
    friend ComparisonSolution outer_super(const ModelParams&, const SuperParams&);
    friend ComparisonSolution inner_super(const ModelParams&, const SuperParams&);
    friend ComparisonSolution matched_super(const ModelParams&, const SuperParams&);
    friend ComparisonSolution sub_solution(const ModelParams&, const SubParams&);

    struct Pieces;  // profile evaluators shared by the kinds
    ComparisonSolution(Kind k, const ModelParams& m, std::shared_ptr<const Pieces> p,
                       double match_radius)
        : kind_(k), model_(m), pieces_(std::move(p)), match_radius_(match_radius) {}

    Kind kind_;
    ModelParams model_;
    std::shared_ptr<const Pieces> pieces_;
    double match_radius_ = 0.0;
};

/// P phi = phi_t - (r^2+D+phi)(phi_rr + (n-1)phi_r/r) + (n-2) r phi_r
///         + ((n-2)/2) phi_r^2,  the radial perturbation operator.
/// Throws std::domain_error at r = 0 (the equation is evaluated there through
/// its symmetric limit by the solver, not by this pointwise form).
double operator_P(const SpaceTimeJet& jet, const ModelParams& params, double r);
double operator_P(const ComparisonSolution& fn, const ModelParams& params, double r, double t);

/// Q chi = chi_t - chi_xixi
///         - e^{-2 xi} { (D+chi)[chi_xixi + (n-2) chi_xi] - ((n-2)/2) chi_xi^2 }.
double operator_Q(const ChiJet& jet, const ModelParams& params, double xi);
double operator_Q(const ComparisonSolution& fn, const ModelParams& params, double xi, double t);

/// Outer supersolution  chi(xi,t) = A (t+t0)^{-gamma/2} Phi((xi+xi0)(t+t0)^{-1/2}).
ComparisonSolution outer_super(const ModelParams& params, const SuperParams& sp);

/// Inner supersolution  phi(r,t) = A f(t) (t+t0)^{-gamma/2} rho(r (t+t0)^{-1/2}).
ComparisonSolution inner_super(const ModelParams& params, const SuperParams& sp);

/// The glued supersolution: inner on [0,1], outer past r = 1.
ComparisonSolution matched_super(const ModelParams& params, const SuperParams& sp);

/// Constructive parameter selection for the supersolution: computes every
/// existence constant by grid optimization and returns xi0, t0 with 10%
/// slack above their thresholds.  A is left NaN.
SuperParams select_super_params(const ModelParams& params);

/// Amplitude selection making the matched supersolution dominate phi0 at
/// t = 0, given the tail bound phi0(r) <= B (ln r)^{-gamma} for r > 2.
/// Returns A and stores it in sp; throws std::runtime_error if the
/// domination scan on r in [0, 1e6] finds a violation.
double select_A(const RadialFunction& phi0, const ModelParams& params, SuperParams& sp,
                double B);

/// The explicit matched subsolution: a(t+1)^{-gamma/2} on [0, e^{xi0}],
/// a (t+1+ (ln r - xi0)^2/4)^{-gamma/2} beyond.
ComparisonSolution sub_solution(const ModelParams& params, const SubParams& sp);

/// Smallest xi0 > 1 on a step-0.01 grid satisfying the three smallness
/// conditions with margin factor 0.9.  a is left NaN.
SubParams select_sub_params(const ModelParams& params);

/// Amplitude selection for the subsolution, given the tail bound
/// phi0(r) >= b (ln r)^{-gamma} for r > 2 and phi0 positive on [0, e^{xi0}].
/// Returns a and stores it in sp; throws std::runtime_error if phi0 vanishes
/// on the inner region or the ordering scan fails.
double select_a(const RadialFunction& phi0, double b, const ModelParams& params,
                SubParams& sp);

/// Space-time grid for certification scans: geometric in (t + t_shift) and
/// in r away from the matching radius, with a boundary layer excluded.
struct CertGrid {
    double r_lo = 0.01;
    double r_hi = 1e3;
    double t_hi = 1e3;
    int points_per_decade = 64;
    double exclusion_halfwidth = 1e-2;  ///< around the matching radius
    double domination_r_hi = 1e6;       ///< range of the initial-ordering scan

    static CertGrid preset(const std::string& name);  // "fast" | "full"
};

/// One certified inequality: its extremal margin over the grid and the
/// tolerance it was held to.  For min-type checks the margin must stay
/// above -tolerance; for max-type checks below +tolerance.
struct CheckRow {
    std::string id;
    double margin = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::string note;
};

struct CertificationReport {
    std::vector<CheckRow> checks;
    bool pass = false;
    std::string grid_descriptor;

    const CheckRow* find(const std::string& id) const;
};

enum class Sense { Super, Sub };

/// Runs every grid certificate appropriate for the solution kind; failures
/// are recorded in the report, never thrown.
CertificationReport certify(const ComparisonSolution& fn, const ModelParams& params,
                            const CertGrid& grid, Sense sense,
                            const RadialFunction* phi0 = nullptr);

} // namespace fdlab

#endif
