#ifndef ENTRODYN_GAUSSIAN_HPP
#define ENTRODYN_GAUSSIAN_HPP

#include <cmath>

#include "entrodyn/densities.hpp"

// Closed-form Gaussian / exponential-family analytics. These are the oracles for
// the grid modules, so nothing in here touches a grid.

namespace entrodyn {

/// Fisher informations of the Gaussian family in its three usual parameterizations.
struct GaussianFisherMatrix {
    double f_alpha = 0.0;     // mean:      1/sigma^2
    double f_sigma = 0.0;     // std:       2/sigma^2
    double f_sigma_sq = 0.0;  // variance:  1/(2 sigma^4)
};

/// (1/2) ln(2 pi e sigma^2); independent of the mean.
inline double gaussian_entropy(const GaussianParams& p) {
    return 0.5 * std::log(2.0 * M_PI * M_E * p.std * p.std);
}

/// K(theta | theta') = ln(s'/s) + (1/2)(s^2/s'^2 - 1) + (a - a')^2 / (2 s'^2).
inline double gaussian_kullback(const GaussianParams& theta, const GaussianParams& theta_ref) {
    const double s = theta.std, sr = theta_ref.std;
    const double da = theta.mean - theta_ref.mean;
    return std::log(sr / s) + 0.5 * (s * s / (sr * sr) - 1.0) + da * da / (2.0 * sr * sr);
}

inline GaussianFisherMatrix gaussian_fisher_matrix(const GaussianParams& p) {
    const double s2 = p.std * p.std;
    return {1.0 / s2, 2.0 / s2, 1.0 / (2.0 * s2 * s2)};
}

/// Quadratic Kullback approximation K(theta, theta + dtheta) ~ (1/2) F dtheta^2.
inline double kullback_quadratic_approx(double fisher, double dtheta) {
    if (fisher < 0.0) throw DomainError("kullback_quadratic_approx: negative Fisher information");
    return 0.5 * fisher * dtheta * dtheta;
}

/// Heat kernel (4 pi D t)^{-1/2} exp(-x^2/4Dt): sigma^2 = 2 D t.
struct HeatKernelParams {
    double D = 1.0;
    double t = 1.0;

    HeatKernelParams() = default;
    HeatKernelParams(double D_, double t_) : D(D_), t(t_) {
        if (!(D > 0.0)) throw DomainError("HeatKernelParams: D must be positive");
        if (!(t > 0.0)) throw DomainError("HeatKernelParams: t must be positive");
    }
    double variance() const { return 2.0 * D * t; }
};

/// S(t) = (1/2) ln(4 pi e D t).
inline double heat_kernel_entropy(const HeatKernelParams& p) {
    return 0.5 * std::log(4.0 * M_PI * M_E * p.D * p.t);
}

/// dS/dt = D * F = D / (2 D t) = 1/(2t); D-independent and positive.
inline double de_bruijn_rate(const HeatKernelParams& p) {
    return p.D / p.variance();
}

/// Gaussian limit of the binomial at bin size r: mean G p r, variance G r^2 p (1-p).
inline GaussianParams bernoulli_to_gauss(std::size_t G, double p, double r) {
    if (G < 100) throw DomainError("bernoulli_to_gauss: needs G >= 100");
    if (!(p > 0.0 && p < 1.0)) throw DomainError("bernoulli_to_gauss: p must lie in (0,1)");
    if (!(r > 0.0)) throw DomainError("bernoulli_to_gauss: r must be positive");
    const double g = static_cast<double>(G);
    return GaussianParams(g * p * r, r * std::sqrt(g * p * (1.0 - p)));
}

/// Exponential density coarse-grained at resolution r: the geometric distribution
/// p_k = (1 - e^{-r}) e^{-kr}. All entries are exact sums of the discrete series;
/// entropy ~ 1 - ln r holds to O(r) and is exposed only as that approximation.
struct PlanckCoarseGraining {
    double n_mean = 0.0;    // 1/(e^r - 1)
    double entropy = 0.0;   // -ln(1 - e^{-r}) + n_mean * r   (nats)
    double variance = 0.0;  // n_mean^2 + n_mean  (exact; ~ 1/r^2)
};

inline PlanckCoarseGraining planck_coarse_graining(double r) {
    if (!(r > 0.0)) throw DomainError("planck_coarse_graining: r must be positive");
    PlanckCoarseGraining out;
    out.n_mean = 1.0 / std::expm1(r);
    out.entropy = -std::log(-std::expm1(-r)) + out.n_mean * r;
    out.variance = out.n_mean * out.n_mean + out.n_mean;
    return out;
}

}  // namespace entrodyn

#endif
