#ifndef FDLAB_PARAMS_HPP
#define FDLAB_PARAMS_HPP

#include <cmath>
#include <stdexcept>

namespace fdlab {

/// Parameters of the critical fast-diffusion model in n >= 3 dimensions.
/// The exponent m = (n-4)/(n-2) is pinned to the critical value; mu, beta
/// and lambda are derived and kept consistent with (n, D, gamma).
struct ModelParams {
    int n = 5;              ///< spatial dimension, n >= 3
    double m = 1.0 / 3.0;   ///< critical exponent (n-4)/(n-2)
    double D = 1.0;         ///< profile constant, D > 0
    double gamma = 0.5;     ///< tail exponent of the initial data, gamma > 0
    double mu = 3.0;        ///< 2/(1-m) = n-2
    double beta = 0.75;     ///< 1/(n(1-m)-2) = (n-2)/4
    double lambda = 1.25;   ///< (gamma/2 + 1)/D

    static ModelParams make(int n, double D, double gamma)
    {
        if (n < 3)
            throw std::invalid_argument("ModelParams: dimension n must be >= 3");
        if (D <= 0.0)
            throw std::invalid_argument("ModelParams: D must be positive");
        if (gamma <= 0.0)
            throw std::invalid_argument("ModelParams: gamma must be positive");
        ModelParams p;
        p.n = n;
        p.m = double(n - 4) / double(n - 2);
        p.D = D;
        p.gamma = gamma;
        p.mu = double(n - 2);
        p.beta = double(n - 2) / 4.0;
        p.lambda = (gamma / 2.0 + 1.0) / D;
        return p;
    }

    /// exponent 1/(1-m) = (n-2)/2 used by the Barenblatt profiles
    double one_over_one_minus_m() const { return double(n - 2) / 2.0; }
};

} // namespace fdlab

#endif
