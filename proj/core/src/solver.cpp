#include "fdlab/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace fdlab {

bool SolverConfig::domain_invariant_holds(double largest_output_t) const
{
    return xi_max - 0.5 * std::log(std::max(largest_output_t, 1.0)) >= 10.0;
}

std::vector<double> SolverConfig::geometric_schedule(double t_lo, double t_end, int n)
{
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i)
        out[i] = t_lo * std::pow(t_end / t_lo, double(i) / (n - 1));
    return out;
}

double Trajectory::sup_value(std::size_t k) const
{
    return *std::max_element(fields[k].begin(), fields[k].end());
}

double Trajectory::interpolate(std::size_t k, double r) const
{
    const auto& f = fields[k];
    if (r <= radii.front())
        return f.front();
    if (r >= radii.back())
        return f.back();
    auto it = std::upper_bound(radii.begin(), radii.end(), r);
    std::size_t i = it - radii.begin();
    double w = (r - radii[i - 1]) / (radii[i] - radii[i - 1]);
    return (1.0 - w) * f[i - 1] + w * f[i];
}

namespace {

struct Workspace {
    std::vector<double> lo, di, up, rhs, sol, cp, dp;
    void resize(std::size_t n)
    {
        lo.assign(n, 0.0);
        di.assign(n, 1.0);
        up.assign(n, 0.0);
        rhs.assign(n, 0.0);
        sol.assign(n, 0.0);
        cp.assign(n, 0.0);
        dp.assign(n, 0.0);
    }
};

void thomas_solve(Workspace& w)
{
    const std::size_t n = w.rhs.size();
    w.cp[0] = w.up[0] / w.di[0];
    w.dp[0] = w.rhs[0] / w.di[0];
    for (std::size_t i = 1; i < n; ++i) {
        double m = w.di[i] - w.lo[i] * w.cp[i - 1];
        w.cp[i] = w.up[i] / m;
        w.dp[i] = (w.rhs[i] - w.lo[i] * w.dp[i - 1]) / m;
    }
    w.sol[n - 1] = w.dp[n - 1];
    for (std::size_t i = n - 1; i-- > 0;)
        w.sol[i] = w.dp[i] - w.cp[i] * w.sol[i + 1];
}

class CompositeScheme {
public:
    CompositeScheme(const SolverConfig& cfg, const ModelParams& params)
        : cfg_(cfg), p_(params)
    {
        const double xi_c = cfg.xi_min + 1.0;
        const double rc = std::exp(xi_c);
        h_xi_ = (cfg.xi_max - xi_c) / cfg.n_xi;
        // inner spacing matched to the interface cell of the log patch;
        // power-of-two count so refined grids share their coarse nodes
        J_ = 16;
        while (double(J_) < 1.0 / std::expm1(h_xi_))
            J_ *= 2;
        h_r_ = rc / double(J_);
        radii_.resize(J_ + 1 + cfg.n_xi);
        for (std::size_t j = 0; j <= J_; ++j)
            radii_[j] = h_r_ * double(j);
        for (int k = 1; k <= cfg.n_xi; ++k)
            radii_[J_ + k] = std::exp(xi_c + h_xi_ * k);
    }

    const std::vector<double>& radii() const { return radii_; }
    std::size_t interface_index() const { return J_; }

    // one implicit step of size dt with lagged coefficients
    void step(const std::vector<double>& u, double dt, double pinned,
              std::vector<double>& out, Workspace& w) const
    {
        const std::size_t N = radii_.size();
        out = u;
        for (int pass = 0; pass <= cfg_.corrector_passes; ++pass) {
            const std::vector<double>& lag = out;
            w.resize(N);
            const double n = p_.n, D = p_.D;

            // origin: phi_t = (D+phi) n phi_rr with the symmetric limit
            // phi_rr(0) ~ 2 (phi_1 - phi_0)/h^2
            {
                double a0 = (D + lag[0]) * n * 2.0 / (h_r_ * h_r_);
                w.di[0] = 1.0 + dt * a0;
                w.up[0] = -dt * a0;
                w.rhs[0] = u[0];
            }
            // radial patch
            for (std::size_t j = 1; j < J_; ++j) {
                const double r = radii_[j];
                const double a = r * r + D + lag[j];
                const double dr_lag = (lag[j + 1] - lag[j - 1]) / (2.0 * h_r_);
                const double adv = (n - 2.0) * r + 0.5 * (n - 2.0) * dr_lag;
                const double diff = a / (h_r_ * h_r_);
                const double drift = (a * (n - 1.0) / r - adv) / (2.0 * h_r_);
                w.lo[j] = -dt * (diff - drift);
                w.up[j] = -dt * (diff + drift);
                w.di[j] = 1.0 + dt * 2.0 * diff;
                w.rhs[j] = u[j];
            }
            // interface node: radial form on the nonuniform 3-point stencil
            {
                const std::size_t j = J_;
                const double r = radii_[j];
                const double hL = h_r_, hR = radii_[j + 1] - radii_[j];
                const double a = r * r + D + lag[j];
                const double dr_lag = (lag[j + 1] - lag[j - 1]) / (hL + hR);
                const double adv = (n - 2.0) * r + 0.5 * (n - 2.0) * dr_lag;
                const double b1 = a * (n - 1.0) / r - adv;
                const double d2L = 2.0 / (hL * (hL + hR)), d2C = -2.0 / (hL * hR),
                             d2R = 2.0 / (hR * (hL + hR));
                const double d1L = -hR / (hL * (hL + hR)), d1C = (hR - hL) / (hL * hR),
                             d1R = hL / (hR * (hL + hR));
                w.lo[j] = -dt * (a * d2L + b1 * d1L);
                w.di[j] = 1.0 - dt * (a * d2C + b1 * d1C);
                w.up[j] = -dt * (a * d2R + b1 * d1R);
                w.rhs[j] = u[j];
            }
            // logarithmic patch: chi_t = alpha chi_xixi + beta chi_xi
            for (std::size_t k = J_ + 1; k + 1 < N; ++k) {
                const double xi = std::log(radii_[k]);
                const double e2 = std::exp(-2.0 * xi);
                const double chi_xi_lag = (lag[k + 1] - lag[k - 1]) / (2.0 * h_xi_);
                const double alpha = 1.0 + (D + lag[k]) * e2;
                const double beta =
                    e2 * ((n - 2.0) * (D + lag[k]) - 0.5 * (n - 2.0) * chi_xi_lag);
                const double diff = alpha / (h_xi_ * h_xi_);
                const double drift = beta / (2.0 * h_xi_);
                w.lo[k] = -dt * (diff - drift);
                w.up[k] = -dt * (diff + drift);
                w.di[k] = 1.0 + dt * 2.0 * diff;
                w.rhs[k] = u[k];
            }
            // far field
            if (cfg_.far_field == SolverConfig::FarField::PinnedToInitialTail) {
                w.di[N - 1] = 1.0;
                w.rhs[N - 1] = pinned;
            } else {
                // zero curvature: chi_N = 2 chi_{N-1} - chi_{N-2}; fold the
                // ghost relation into row N-1... the last PDE row is N-2, so
                // impose the extrapolation as the closing row instead
                w.lo[N - 1] = 0.0;
                w.di[N - 1] = 1.0;
                w.rhs[N - 1] = 2.0 * lag[N - 2] - lag[N - 3];
            }
            thomas_solve(w);
            out = w.sol;
        }
    }

private:
    SolverConfig cfg_;
    ModelParams p_;
    std::vector<double> radii_;
    std::size_t J_ = 0;
    double h_r_ = 0.0, h_xi_ = 0.0;
};

} // namespace

Trajectory solve(const RadialFunction& phi0, const SolverConfig& config,
                 const ModelParams& params)
{
    if (!phi0.valid())
        throw std::invalid_argument("solve: initial data is empty");
    if (config.n_xi < 16 || config.xi_max <= config.xi_min + 2.0)
        throw std::invalid_argument("solve: degenerate grid configuration");

    CompositeScheme scheme(config, params);
    const auto& radii = scheme.radii();

    Trajectory traj;
    traj.radii = radii;
    traj.interface_index = scheme.interface_index();
    traj.initial_label = phi0.label();

    std::vector<double> phi(radii.size());
    for (std::size_t i = 0; i < radii.size(); ++i) {
        phi[i] = phi0(radii[i]);
        if (phi[i] < 0.0)
            throw std::invalid_argument("solve: initial data negative at r=" +
                                        std::to_string(radii[i]));
    }
    const double pinned = phi.back();

    std::vector<double> outputs = config.output_times;
    std::sort(outputs.begin(), outputs.end());
    outputs.erase(std::unique(outputs.begin(), outputs.end()), outputs.end());
    if (outputs.empty() || outputs.back() < config.t_end)
        outputs.push_back(config.t_end);

    traj.times.push_back(0.0);
    traj.fields.push_back(phi);

    Workspace w;
    std::vector<double> big, half, small;
    double t = 0.0, dt = config.dt_init;
    const double t_end = outputs.back();
    const double dt_min = 1e-12 * t_end;
    const double tol = config.step_error_target;
    std::size_t next_out = 0;

    while (t < t_end * (1.0 - 1e-15)) {
        while (next_out < outputs.size() && outputs[next_out] <= t * (1.0 + 1e-15))
            ++next_out;
        bool hits_output = false;
        if (next_out < outputs.size() && t + dt >= outputs[next_out] * (1.0 - 1e-15)) {
            dt = outputs[next_out] - t;
            hits_output = true;
        }

        scheme.step(phi, dt, pinned, big, w);
        scheme.step(phi, dt / 2.0, pinned, half, w);
        scheme.step(half, dt / 2.0, pinned, small, w);

        double err = 0.0;
        for (std::size_t i = 0; i < big.size(); ++i)
            err = std::max(err, std::abs(big[i] - small[i]));
        if (!std::isfinite(err))
            throw std::runtime_error("solve: NaN detected at t=" + std::to_string(t) +
                                     " dt=" + std::to_string(dt));
        if (err > tol) {
            if (dt <= dt_min)
                throw std::runtime_error("solve: step size collapsed at t=" +
                                         std::to_string(t));
            dt *= 0.5;
            continue;
        }

        phi.swap(small);
        t += dt;
        ++traj.steps_taken;
        if (hits_output) {
            traj.times.push_back(t);
            traj.fields.push_back(phi);
            ++next_out;
        }
        const double grow = 0.9 * std::sqrt(tol / std::max(err, 1e-300));
        dt *= std::clamp(grow, 0.3, 2.0);
    }
    return traj;
}

SandwichReport sandwich_check(const Trajectory& traj, const ComparisonSolution* lower,
                              const ComparisonSolution* upper, double tol)
{
    SandwichReport rep;
    rep.tolerance = (tol > 0.0) ? tol : 1e-4 * traj.initial_sup();

    auto lower_at = [&](double r, double t) {
        return lower ? lower->phi_jet(r, t).value : 0.0;
    };

    // t = 0 ordering first
    double lo0 = 0.0, hi0 = 0.0;
    for (std::size_t i = 0; i < traj.radii.size(); ++i) {
        double r = traj.radii[i], v = traj.fields[0][i];
        lo0 = std::min(lo0, v - lower_at(r, 0.0));
        if (upper)
            hi0 = std::min(hi0, upper->phi_jet(r, 0.0).value - v);
    }
    if (lo0 < 0.0 || hi0 < 0.0) {
        rep.precondition_ok = false;
        rep.precondition_note = (lo0 < 0.0) ? "initial data below the lower bound"
                                            : "initial data above the upper bound";
        rep.pass = false;
        return rep;
    }
    rep.precondition_ok = true;

    rep.pass = true;
    for (std::size_t k = 0; k < traj.times.size(); ++k) {
        double t = traj.times[k];
        double lo = std::numeric_limits<double>::infinity(), hi = lo;
        for (std::size_t i = 0; i < traj.radii.size(); ++i) {
            double r = traj.radii[i], v = traj.fields[k][i];
            lo = std::min(lo, v - lower_at(r, t));
            if (upper)
                hi = std::min(hi, upper->phi_jet(r, t).value - v);
        }
        rep.lower_margin.push_back(lo);
        rep.upper_margin.push_back(upper ? hi : 0.0);
        if (lo < -rep.tolerance || (upper && hi < -rep.tolerance))
            rep.pass = false;
    }
    return rep;
}

} // namespace fdlab
