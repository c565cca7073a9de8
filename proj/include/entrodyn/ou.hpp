#ifndef ENTRODYN_OU_HPP
#define ENTRODYN_OU_HPP

#include <cmath>
#include <optional>

#include "entrodyn/gaussian.hpp"

// Exact Ornstein-Uhlenbeck solutions, b(x) = -gamma x. Gaussian data stay
// Gaussian, so every diagnostic has a closed form; these serve as oracles for
// the grid solver.

namespace entrodyn {

struct OUParams {
    double gamma = 1.0;
    double D = 1.0;
    double alpha0 = 0.0;
    double sigma0_sq = 1.0;

    OUParams() = default;
    OUParams(double gamma_, double D_, double alpha0_, double sigma0_sq_)
        : gamma(gamma_), D(D_), alpha0(alpha0_), sigma0_sq(sigma0_sq_) {
        if (!(gamma > 0.0)) throw DomainError("OUParams: gamma must be positive");
        if (!(D > 0.0)) throw DomainError("OUParams: D must be positive");
        if (!(sigma0_sq > 0.0)) throw DomainError("OUParams: sigma0_sq must be positive");
    }
    double stationary_variance() const { return D / gamma; }
};

/// The printed rate formula in the source literature carries a 2*gamma prefactor
/// that contradicts the (unambiguous) variance law; the derived prefactor gamma
/// is authoritative. The printed variant is kept for documentation only.
enum class OuRateConvention { derived, paper_printed };

inline double ou_mean(const OUParams& p, double t) { return p.alpha0 * std::exp(-p.gamma * t); }

inline double ou_variance(const OUParams& p, double t) {
    const double e = std::exp(-2.0 * p.gamma * t);
    return p.sigma0_sq * e + (p.D / p.gamma) * (1.0 - e);
}

inline double ou_variance_rate(const OUParams& p, double t) {
    return 2.0 * (p.D - p.gamma * p.sigma0_sq) * std::exp(-2.0 * p.gamma * t);
}

inline GaussianParams ou_state(const OUParams& p, double t) {
    return GaussianParams(ou_mean(p, t), std::sqrt(ou_variance(p, t)));
}

inline double ou_entropy(const OUParams& p, double t) {
    return gaussian_entropy(ou_state(p, t));
}

inline double ou_entropy_rate(const OUParams& p, double t,
                              OuRateConvention conv = OuRateConvention::derived) {
    const double e = std::exp(-2.0 * p.gamma * t);
    const double num = p.gamma * (p.D - p.gamma * p.sigma0_sq) * e;
    const double den = p.D - (p.D - p.gamma * p.sigma0_sq) * e;
    const double rate = num / den;
    return conv == OuRateConvention::derived ? rate : 2.0 * rate;
}

/// H_c(t) = -K(rho_t | rho_*), with rho_* the N(0, D/gamma) invariant density.
/// Reduces to -(gamma alpha0^2 / 2D) exp(-2 gamma t) when sigma0^2 = D/gamma.
inline double ou_conditional_entropy(const OUParams& p, double t) {
    const GaussianParams inv(0.0, std::sqrt(p.stationary_variance()));
    return -gaussian_kullback(ou_state(p, t), inv);
}

inline double ou_conditional_entropy_rate(const OUParams& p, double t) {
    // Hdot_c = <v^2>/D with <v^2> = gamma^2 alpha^2 + (D/sigma^2 - gamma)^2 sigma^2
    const double a = ou_mean(p, t);
    const double s2 = ou_variance(p, t);
    const double w = p.D / s2 - p.gamma;
    return (p.gamma * p.gamma * a * a + w * w * s2) / p.D;
}

inline double ou_fisher(const OUParams& p, double t) { return 1.0 / ou_variance(p, t); }

inline double ou_fisher_rate(const OUParams& p, double t) {
    const double s2 = ou_variance(p, t);
    return -ou_variance_rate(p, t) / (s2 * s2);
}

enum class OuPowerRegime { drainage, supply, equilibrium };

/// Power release Qdot = Hdot_c - Sdot = (gamma/D) e^{-2 gamma t} [gamma alpha0^2 - (D - gamma sigma0^2)].
/// The bracket is time-independent, so the sign never changes; a crossing time
/// does not exist for any parameter choice and the optional stays empty.
struct OuPowerClassification {
    OuPowerRegime regime = OuPowerRegime::equilibrium;
    std::optional<double> t_change;  // always empty; kept for interface completeness
};

inline double ou_power_release(const OUParams& p, double t) {
    return ou_conditional_entropy_rate(p, t) - ou_entropy_rate(p, t);
}

inline OuPowerClassification ou_power_classification(const OUParams& p) {
    const double bracket = p.gamma * p.alpha0 * p.alpha0 - (p.D - p.gamma * p.sigma0_sq);
    OuPowerClassification out;
    if (bracket > 0.0)
        out.regime = OuPowerRegime::supply;
    else if (bracket < 0.0)
        out.regime = OuPowerRegime::drainage;
    else
        out.regime = OuPowerRegime::equilibrium;
    return out;
}

}  // namespace entrodyn

#endif
