#include "fdlab/comparison.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace fdlab {

namespace {
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double Z_MAX_TAIL = 50.0;  // window of the tail-constant scans
}

struct ComparisonSolution::Pieces {
    SuperParams sp;
    SubParams sb;
    ClosedFormFunction phi;      // Phi or hatPhi depending on the branch
    ClosedFormFunction rho;
    ClosedFormFunction f;        // matching factor (super only)
    bool is_super = true;
};

const SuperParams* ComparisonSolution::super_params() const
{
    return pieces_->is_super ? &pieces_->sp : nullptr;
}

const SubParams* ComparisonSolution::sub_params() const
{
    return pieces_->is_super ? nullptr : &pieces_->sb;
}

namespace {

// jets of the individual comparison pieces; gamma enters through the model

ChiJet outer_super_chi(const ComparisonSolution::Pieces& P, double gamma, double xi, double t)
{
    const double s = t + P.sp.t0;
    const double z = (xi + P.sp.xi0) / std::sqrt(s);
    const double pref = P.sp.A * std::pow(s, -gamma / 2.0);
    const Deriv2 ph = P.phi(z);
    ChiJet out;
    out.value = pref * ph.value;
    out.d_xi = pref / std::sqrt(s) * ph.d1;
    out.d_xixi = pref / s * ph.d2;
    out.d_t = -pref / s * (z / 2.0 * ph.d1 + gamma / 2.0 * ph.value);
    return out;
}

SpaceTimeJet inner_super_phi(const ComparisonSolution::Pieces& P, double gamma, double r,
                             double t)
{
    const double s = t + P.sp.t0;
    const double sigma = r / std::sqrt(s);
    const Deriv2 rh = P.rho(sigma);
    const Deriv2 fm = P.f(t);
    const double decay = std::pow(s, -gamma / 2.0);
    SpaceTimeJet out;
    out.value = P.sp.A * fm.value * decay * rh.value;
    out.d_r = P.sp.A * fm.value * decay / std::sqrt(s) * rh.d1;
    out.d_rr = P.sp.A * fm.value * decay / s * rh.d2;
    out.d_t = -0.5 * P.sp.A * fm.value * decay / s * (sigma * rh.d1 + gamma * rh.value) +
              P.sp.A * fm.d1 * decay * rh.value;
    return out;
}

ChiJet outer_sub_chi(const ComparisonSolution::Pieces& P, double gamma, double xi, double t)
{
    const double s = t + 1.0;
    const double z = (xi - P.sb.xi0) / std::sqrt(s);
    const double pref = P.sb.a * std::pow(s, -gamma / 2.0);
    const Deriv2 ph = P.phi(z);
    ChiJet out;
    out.value = pref * ph.value;
    out.d_xi = pref / std::sqrt(s) * ph.d1;
    out.d_xixi = pref / s * ph.d2;
    out.d_t = -pref / s * (z / 2.0 * ph.d1 + gamma / 2.0 * ph.value);
    return out;
}

SpaceTimeJet flat_sub_phi(const ComparisonSolution::Pieces& P, double gamma, double t)
{
    const double s = t + 1.0;
    SpaceTimeJet out;
    out.value = P.sb.a * std::pow(s, -gamma / 2.0);
    out.d_t = -(P.sb.a * gamma / 2.0) * std::pow(s, -gamma / 2.0 - 1.0);
    return out;
}

SpaceTimeJet phi_from_chi_jet(const ChiJet& c, double r)
{
    SpaceTimeJet out;
    out.value = c.value;
    out.d_r = c.d_xi / r;
    out.d_rr = (c.d_xixi - c.d_xi) / (r * r);
    out.d_t = c.d_t;
    return out;
}

ChiJet chi_from_phi_jet(const SpaceTimeJet& p, double r)
{
    ChiJet out;
    out.value = p.value;
    out.d_xi = r * p.d_r;
    out.d_xixi = r * r * p.d_rr + r * p.d_r;
    out.d_t = p.d_t;
    return out;
}

} // namespace

SpaceTimeJet ComparisonSolution::phi_jet(double r, double t) const
{
    const double g = model_.gamma;
    switch (kind_) {
    case Kind::OuterSuper:
        return phi_from_chi_jet(outer_super_chi(*pieces_, g, std::log(r), t), r);
    case Kind::InnerSuper:
        return inner_super_phi(*pieces_, g, r, t);
    case Kind::MatchedSuper:
        if (r <= 1.0)
            return inner_super_phi(*pieces_, g, r, t);
        return phi_from_chi_jet(outer_super_chi(*pieces_, g, std::log(r), t), r);
    case Kind::OuterSub:
        return phi_from_chi_jet(outer_sub_chi(*pieces_, g, std::log(r), t), r);
    case Kind::MatchedSub:
        if (r <= match_radius_)
            return flat_sub_phi(*pieces_, g, t);
        return phi_from_chi_jet(outer_sub_chi(*pieces_, g, std::log(r), t), r);
    }
    return {};
}

ChiJet ComparisonSolution::chi_jet(double xi, double t) const
{
    const double g = model_.gamma;
    switch (kind_) {
    case Kind::OuterSuper:
        return outer_super_chi(*pieces_, g, xi, t);
    case Kind::InnerSuper:
        return chi_from_phi_jet(inner_super_phi(*pieces_, g, std::exp(xi), t), std::exp(xi));
    case Kind::MatchedSuper:
        if (xi <= 0.0)
            return chi_from_phi_jet(inner_super_phi(*pieces_, g, std::exp(xi), t),
                                    std::exp(xi));
        return outer_super_chi(*pieces_, g, xi, t);
    case Kind::OuterSub:
        return outer_sub_chi(*pieces_, g, xi, t);
    case Kind::MatchedSub:
        if (xi <= std::log(match_radius_))
            return chi_from_phi_jet(flat_sub_phi(*pieces_, g, t), std::exp(xi));
        return outer_sub_chi(*pieces_, g, xi, t);
    }
    return {};
}

double operator_P(const SpaceTimeJet& jet, const ModelParams& params, double r)
{
    if (r <= 0.0)
        throw std::domain_error("operator_P: r must be positive (singular (n-1)/r term)");
    const double n = params.n;
    return jet.d_t - (r * r + params.D + jet.value) * (jet.d_rr + (n - 1.0) * jet.d_r / r) +
           (n - 2.0) * r * jet.d_r + (n - 2.0) / 2.0 * jet.d_r * jet.d_r;
}

double operator_P(const ComparisonSolution& fn, const ModelParams& params, double r, double t)
{
    return operator_P(fn.phi_jet(r, t), params, r);
}

double operator_Q(const ChiJet& jet, const ModelParams& params, double xi)
{
    const double n = params.n;
    const double e2 = std::exp(-2.0 * xi);
    return jet.d_t - jet.d_xixi -
           e2 * ((params.D + jet.value) * (jet.d_xixi + (n - 2.0) * jet.d_xi) -
                 (n - 2.0) / 2.0 * jet.d_xi * jet.d_xi);
}

double operator_Q(const ComparisonSolution& fn, const ModelParams& params, double xi, double t)
{
    return operator_Q(fn.chi_jet(xi, t), params, xi);
}

namespace {

void validate_super(const SuperParams& sp)
{
    if (!(sp.xi0 > 0.0) || !(sp.t0 > 0.0))
        throw std::invalid_argument("SuperParams: xi0 and t0 must be positive");
    if (!(sp.t0 > 1.0 / (sp.sigma0 * sp.sigma0)))
        throw std::invalid_argument("SuperParams: t0 must exceed sigma0^{-2}");
    if (!(sp.A > 0.0) || !std::isfinite(sp.A))
        throw std::invalid_argument("SuperParams: amplitude A must be positive; "
                                    "run select_A or set it explicitly");
}

std::shared_ptr<const ComparisonSolution::Pieces> make_super_pieces(const ModelParams& m,
                                                                    const SuperParams& sp)
{
    validate_super(sp);
    auto pieces = std::make_shared<ComparisonSolution::Pieces>();
    pieces->sp = sp;
    pieces->phi = phi_profile(m.gamma);
    pieces->rho = rho_profile(m.lambda);
    pieces->f = matching_factor(m.gamma, m.D, sp.xi0, sp.t0).f;
    pieces->is_super = true;
    return pieces;
}

} // namespace

ComparisonSolution outer_super(const ModelParams& params, const SuperParams& sp)
{
    return ComparisonSolution(ComparisonSolution::Kind::OuterSuper, params,
                              make_super_pieces(params, sp), kNaN);
}

ComparisonSolution inner_super(const ModelParams& params, const SuperParams& sp)
{
    return ComparisonSolution(ComparisonSolution::Kind::InnerSuper, params,
                              make_super_pieces(params, sp), kNaN);
}

ComparisonSolution matched_super(const ModelParams& params, const SuperParams& sp)
{
    return ComparisonSolution(ComparisonSolution::Kind::MatchedSuper, params,
                              make_super_pieces(params, sp), 1.0);
}

ComparisonSolution sub_solution(const ModelParams& params, const SubParams& sp)
{
    if (!(sp.xi0 > 1.0))
        throw std::invalid_argument("SubParams: xi0 must exceed 1");
    if (!(sp.a > 0.0 && sp.a < 1.0))
        throw std::invalid_argument("SubParams: a must lie in (0,1); run select_a or set it");
    auto pieces = std::make_shared<ComparisonSolution::Pieces>();
    pieces->sb = sp;
    pieces->phi = hat_phi_profile(params.gamma);
    pieces->is_super = false;
    return ComparisonSolution(ComparisonSolution::Kind::MatchedSub, params, pieces,
                              std::exp(sp.xi0));
}

namespace {

double first_zero_of_phi_dd(const ClosedFormFunction& phi, double gamma)
{
    // Phi''(0) = -gamma/2 < 0; scan for the first sign change
    double prev = -gamma / 2.0, lo = 0.0;
    for (double z = 1e-3; z < 40.0; z += 1e-3) {
        double cur = phi.d2(z);
        if (prev < 0.0 && cur >= 0.0) {
            double hi = z;
            lo = z - 1e-3;
            while (hi - lo > 1e-12) {
                double mid = 0.5 * (lo + hi);
                (phi.d2(mid) < 0.0 ? lo : hi) = mid;
            }
            return 0.5 * (lo + hi);
        }
        prev = cur;
    }
    throw std::runtime_error("select_super_params: no sign change of Phi'' located");
}

} // namespace

SuperParams select_super_params(const ModelParams& params)
{
    if (!(params.gamma > 0.0 && params.gamma < 1.0))
        throw std::invalid_argument("select_super_params: gamma must lie in (0,1)");
    const double g = params.gamma;
    ClosedFormFunction phi = phi_profile(g);
    ClosedFormFunction rho = rho_profile(params.lambda);

    SuperParams sp;
    sp.A = kNaN;
    sp.sigma0 = sigma0_of(params.lambda);

    // sign-change point and tail constants of the drift-sign certificate,
    // optimized on (z0, Z_MAX_TAIL] with a 10% safety factor
    sp.z0 = 0.999 * first_zero_of_phi_dd(phi, g);
    {
        const int N = 4096;
        const double step = std::log(Z_MAX_TAIL / sp.z0) / N;
        double c1 = kInf, c2 = -kInf;
        for (int i = 1; i <= N; ++i) {
            double z = sp.z0 * std::exp(i * step);
            Deriv2 d = phi(z);
            c1 = std::min(c1, -d.d1 * std::pow(z, g + 1.0));
            c2 = std::max(c2, d.d2 * std::pow(z, g + 2.0));
        }
        if (!(c1 > 0.0))
            throw std::runtime_error("select_super_params: tail slope constant not positive");
        sp.c1_tail = 0.9 * c1;
        sp.c2_tail = 1.1 * std::max(c2, 0.0);
    }
    const double n2 = params.n - 2.0;
    sp.t_star = std::max(1.0, std::pow(sp.c2_tail / (n2 * sp.c1_tail * sp.z0), 2.0));

    // slope constants of the corner certificate
    {
        const int N = 4096;
        double c1 = 0.0, c2 = kInf;
        for (int i = 1; i <= N; ++i) {
            double sg = sp.sigma0 * i / N;
            c1 = std::max(c1, std::abs(rho.d1(sg)) / sg);
            double z = double(i) / N;  // (0,1]
            c2 = std::min(c2, -phi.d1(z) / z);
        }
        if (!(c2 > 0.0))
            throw std::runtime_error("select_super_params: Phi slope constant not positive");
        sp.c1_slope = 1.1 * c1;
        sp.c2_slope = 0.9 * c2;
    }
    const double rho_s0 = rho.value(sp.sigma0);
    sp.xi0 = 1.1 * sp.c1_slope / (sp.c2_slope * rho_s0);
    sp.corner_bound = sp.c2_slope * sp.xi0 - sp.c1_slope / rho_s0;

    // matching-factor bound and the inner threshold (independent of t0)
    const double s0_inv2 = 1.0 / (sp.sigma0 * sp.sigma0);
    {
        MatchingFactor mf = matching_factor(g, params.D, sp.xi0, 1.01 * s0_inv2 + 1.0);
        sp.c_xi0 = mf.c_bound;
    }
    sp.t_upper_star = std::max(s0_inv2, sp.c_xi0 / phi.value(sp.xi0));

    sp.t0 = 1.1 * std::max({sp.t_star, sp.t_upper_star, sp.xi0 * sp.xi0, s0_inv2});
    return sp;
}

double select_A(const RadialFunction& phi0, const ModelParams& params, SuperParams& sp,
                double B)
{
    const double g = params.gamma;
    ClosedFormFunction phi = phi_profile(g);
    ClosedFormFunction rho = rho_profile(params.lambda);
    MatchingFactor mf = matching_factor(g, params.D, sp.xi0, sp.t0);

    double sup02 = 0.0;
    for (int i = 0; i <= 4096; ++i)
        sup02 = std::max(sup02, phi0(2.0 * i / 4096.0));

    const double ln2 = std::log(2.0);
    const double z0p = (ln2 + sp.xi0) / std::sqrt(sp.t0);
    double c1_tail = kInf;  // Phi(z) >= c1 z^{-gamma} for z >= z0p
    {
        const int N = 4096;
        const double hi = std::max(Z_MAX_TAIL, 4.0 * z0p);
        const double step = std::log(hi / z0p) / N;
        for (int i = 0; i <= N; ++i) {
            double z = z0p * std::exp(i * step);
            c1_tail = std::min(c1_tail, phi.value(z) * std::pow(z, g));
        }
        c1_tail *= 0.9;
    }

    const double t0g = std::pow(sp.t0, g / 2.0);
    const double rho_t0 = rho.value(1.0 / std::sqrt(sp.t0));
    const double a1 = sup02 * t0g / (mf.f.value(0.0) * rho_t0);
    const double a2 = sup02 * t0g / phi.value(z0p);
    const double a3 = B / c1_tail * std::pow(1.0 + sp.xi0 / ln2, g);
    sp.A = 1.1 * std::max({a1, a2, a3});

    // certify initial domination on [0, 1e6]
    ComparisonSolution bar = matched_super(params, sp);
    double min_margin = kInf, min_at = 0.0;
    auto probe = [&](double r) {
        double m = bar.phi_jet(r, 0.0).value - phi0(r);
        if (m < min_margin) {
            min_margin = m;
            min_at = r;
        }
    };
    for (int i = 0; i <= 2048; ++i)
        probe(2.0 * i / 2048.0);
    const int N = 8192;
    const double step = std::log(1e6 / 2.0) / N;
    for (int i = 1; i <= N; ++i)
        probe(2.0 * std::exp(i * step));
    if (!(min_margin > 0.0))
        throw std::runtime_error("select_A: domination scan failed at r=" +
                                 std::to_string(min_at) + " margin=" +
                                 std::to_string(min_margin) +
                                 " (check B or the cap construction)");
    return sp.A;
}

SubParams select_sub_params(const ModelParams& params)
{
    const double g = params.gamma;
    const double n2 = params.n - 2.0;
    const double margin = 0.9 / 3.0;
    SubParams sp;
    sp.a = kNaN;
    // e^{-2xi}(xi-xi0) <= e^{-2xi0} sup_{s>0} s e^{-2s} = e^{-2xi0}/(2e)
    for (double xi0 = 1.01; xi0 < 50.0; xi0 += 0.01) {
        const double e2 = std::exp(-2.0 * xi0);
        const bool ok = (g + 1.0) * (params.D + 1.0) * e2 < margin &&
                        n2 * (params.D + 1.0) * e2 / (2.0 * std::exp(1.0)) < margin &&
                        n2 * g / 2.0 * e2 < margin;
        if (ok) {
            sp.xi0 = xi0;
            sp.c2_min = std::min(1.0 / 16.0, 1.0 / (4.0 * xi0 * xi0));
            return sp;
        }
    }
    throw std::runtime_error("select_sub_params: no admissible xi0 below 50");
}

double select_a(const RadialFunction& phi0, double b, const ModelParams& params, SubParams& sp)
{
    const double r0 = std::exp(sp.xi0);
    double c1 = kInf;
    for (int i = 0; i <= 4096; ++i)
        c1 = std::min(c1, phi0(r0 * i / 4096.0));
    if (!(c1 > 0.0))
        throw std::runtime_error("select_a: phi0 vanishes on [0, r0]; no admissible a");
    sp.a = 0.9 * std::min({c1, b * std::pow(sp.c2_min, params.gamma / 2.0), 0.999});

    ComparisonSolution lower = sub_solution(params, sp);
    double min_margin = kInf, min_at = 0.0;
    auto probe = [&](double r) {
        double m = phi0(r) - lower.phi_jet(r, 0.0).value;
        if (m < min_margin) {
            min_margin = m;
            min_at = r;
        }
    };
    for (int i = 0; i <= 2048; ++i)
        probe(r0 * i / 2048.0);
    const int N = 8192;
    const double step = std::log(1e6 / r0) / N;
    for (int i = 1; i <= N; ++i)
        probe(r0 * std::exp(i * step));
    if (!(min_margin >= 0.0))
        throw std::runtime_error("select_a: ordering scan failed at r=" +
                                 std::to_string(min_at));
    return sp.a;
}

CertGrid CertGrid::preset(const std::string& name)
{
    CertGrid g;
    if (name == "fast") {
        g.points_per_decade = 16;
        g.t_hi = 1e3;
    } else if (name == "full") {
        g.points_per_decade = 64;
        g.t_hi = 1e4;
    } else {
        throw std::invalid_argument("CertGrid::preset: unknown preset '" + name + "'");
    }
    return g;
}

const CheckRow* CertificationReport::find(const std::string& id) const
{
    for (const auto& c : checks)
        if (c.id == id)
            return &c;
    return nullptr;
}

namespace {

std::vector<double> geometric_points(double lo, double hi, int per_decade)
{
    std::vector<double> pts;
    const int n = std::max(2, int(std::ceil(std::log10(hi / lo) * per_decade)));
    pts.reserve(n + 1);
    for (int i = 0; i <= n; ++i)
        pts.push_back(lo * std::pow(hi / lo, double(i) / n));
    return pts;
}

} // namespace

CertificationReport certify(const ComparisonSolution& fn, const ModelParams& params,
                            const CertGrid& grid, Sense sense, const RadialFunction* phi0)
{
    CertificationReport rep;
    const double g = params.gamma;
    const double rmatch = fn.match_radius();
    const double t_shift = (sense == Sense::Super) ? fn.super_params()->t0 : 1.0;

    // time grid: geometric in t + t_shift, including t = 0
    std::vector<double> times;
    for (double s : geometric_points(t_shift, grid.t_hi + t_shift, grid.points_per_decade))
        times.push_back(s - t_shift);
    times.front() = 0.0;

    // radial grid with the boundary layer around rmatch excluded
    std::vector<double> radii;
    for (double r : geometric_points(grid.r_lo, grid.r_hi, grid.points_per_decade))
        if (!(std::isfinite(rmatch) && std::abs(r - rmatch) < grid.exclusion_halfwidth))
            radii.push_back(r);

    rep.grid_descriptor = "r[" + std::to_string(grid.r_lo) + "," + std::to_string(grid.r_hi) +
                          "] t[0," + std::to_string(grid.t_hi) + "] " +
                          std::to_string(grid.points_per_decade) + "/decade";

    auto scale = [&](double t) { return std::pow(t + t_shift, g / 2.0 + 1.0); };

    if (sense == Sense::Super) {
        const SuperParams& sp = *fn.super_params();

        double heat_max = 0.0;       // |chi_t - chi_xixi| on xi > 0
        double drift_min = kInf;     // -(chi_xixi + (n-2) chi_xi)
        double p_scaled_min = kInf;  // (t+t0)^{g/2+1} P phibar off r = 1
        double corner_min = kInf;    // I1 - I2
        double corner_vs_bound = kInf;
        double cont_gap_max = 0.0;   // |inner - outer| at r = 1

        for (double t : times) {
            for (double r : radii) {
                if (r > 1.0) {
                    ChiJet c = fn.chi_jet(std::log(r), t);
                    heat_max = std::max(heat_max, std::abs(c.d_t - c.d_xixi));
                    drift_min = std::min(drift_min,
                                         -(c.d_xixi + (params.n - 2.0) * c.d_xi));
                }
                double Pv = operator_P(fn.phi_jet(r, t), params, r);
                p_scaled_min = std::min(p_scaled_min, scale(t) * Pv);
            }
            const double tt = t + sp.t0;
            // one-sided radial slopes at the corner: inner from below,
            // outer from above (chi_xi(0+,t) equals r phibar_r at r=1+)
            double I1 = fn.phi_jet(1.0, t).d_r;
            double I2 = fn.chi_jet(1e-12, t).d_xi;
            corner_min = std::min(corner_min, I1 - I2);
            double bound = sp.A * std::pow(tt, -g / 2.0 - 1.0) * sp.corner_bound;
            corner_vs_bound = std::min(corner_vs_bound, (I1 - I2) - bound);
            double inner_v = fn.phi_jet(1.0, t).value;
            double outer_v = fn.chi_jet(0.0, t).value;
            cont_gap_max = std::max(cont_gap_max, std::abs(inner_v - outer_v));
        }
        rep.checks.push_back({"heat_identity", heat_max, 1e-10, heat_max <= 1e-10, ""});
        rep.checks.push_back({"drift_sign", drift_min, 1e-12, drift_min >= -1e-12, ""});
        rep.checks.push_back({"P_super_scaled", p_scaled_min, 1e-9, p_scaled_min >= -1e-9, ""});
        rep.checks.push_back({"corner_gap", corner_min, 0.0, corner_min > 0.0, ""});
        rep.checks.push_back({"corner_vs_bound", corner_vs_bound, 1e-12,
                              corner_vs_bound >= -1e-12, ""});
        rep.checks.push_back({"continuity", cont_gap_max, 1e-10, cont_gap_max <= 1e-10, ""});
    } else {
        const SubParams& sb = *fn.sub_params();
        double q_scaled_max = -kInf;  // (t+1)^{g/2+1} Q chihat past xi0
        double p_inner_max = -kInf;   // scaled P on the flat part (must be < 0)
        double c1_gap_max = 0.0;      // outer slope at r0 (C^1 matching)
        double cont_gap_max = 0.0;

        for (double t : times) {
            for (double r : radii) {
                if (r > rmatch) {
                    double Qv = operator_Q(fn.chi_jet(std::log(r), t), params, std::log(r));
                    q_scaled_max = std::max(q_scaled_max, scale(t) * Qv);
                } else if (r > 0.0) {
                    double Pv = operator_P(fn.phi_jet(r, t), params, r);
                    p_inner_max = std::max(p_inner_max, scale(t) * Pv);
                }
            }
            double outer_slope = fn.phi_jet(rmatch * (1.0 + 1e-14), t).d_r;
            c1_gap_max = std::max(c1_gap_max, std::abs(outer_slope));
            double gap = std::abs(fn.phi_jet(rmatch * (1.0 + 1e-14), t).value -
                                  fn.phi_jet(rmatch, t).value);
            cont_gap_max = std::max(cont_gap_max, gap);
        }
        const double inner_exact = -(sb.a * params.gamma / 2.0);  // scaled inner P at any t
        rep.checks.push_back({"Q_sub_scaled", q_scaled_max, 1e-9, q_scaled_max <= 1e-9, ""});
        rep.checks.push_back({"P_inner_negative", p_inner_max, 0.0, p_inner_max < 0.0,
                              "closed form: " + std::to_string(inner_exact)});
        rep.checks.push_back({"C1_matching", c1_gap_max, 1e-10, c1_gap_max <= 1e-10, ""});
        rep.checks.push_back({"continuity", cont_gap_max, 1e-10, cont_gap_max <= 1e-10, ""});
    }

    if (phi0 != nullptr) {
        double margin = kInf;
        auto probe = [&](double r) {
            double v = fn.phi_jet(r, 0.0).value;
            double d = (sense == Sense::Super) ? v - (*phi0)(r) : (*phi0)(r) - v;
            margin = std::min(margin, d);
        };
        for (int i = 0; i <= 1024; ++i)
            probe(2.0 * i / 1024.0);
        for (double r : geometric_points(2.0, grid.domination_r_hi, grid.points_per_decade))
            probe(r);
        rep.checks.push_back({"initial_ordering", margin, 0.0, margin > 0.0, ""});
    }

    rep.pass = std::all_of(rep.checks.begin(), rep.checks.end(),
                           [](const CheckRow& c) { return c.pass; });
    return rep;
}

} // namespace fdlab
