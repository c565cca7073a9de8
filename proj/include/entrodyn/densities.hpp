#ifndef ENTRODYN_DENSITIES_HPP
#define ENTRODYN_DENSITIES_HPP

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "entrodyn/grid.hpp"

namespace entrodyn {

inline constexpr double kDensityFloor = 1e-300;  // below this, rho*ln(rho) is taken as 0
inline constexpr double kNormTolerance = 1e-9;

enum class Strictness { lenient, strict };

/// Finite probability vector.
struct DiscreteDistribution {
    std::vector<double> probs;

    DiscreteDistribution() = default;
    explicit DiscreteDistribution(std::vector<double> p) : probs(std::move(p)) {
        if (probs.empty()) throw DomainError("DiscreteDistribution: empty");
        double sum = 0.0;
        for (double q : probs) {
            if (q < 0.0) throw DomainError("DiscreteDistribution: negative probability");
            sum += q;
        }
        if (std::abs(sum - 1.0) > 1e-12) throw DomainError("DiscreteDistribution: does not sum to 1");
    }
};

/// Mean / standard deviation pair of a Gaussian.
struct GaussianParams {
    double mean = 0.0;
    double std = 1.0;

    GaussianParams() = default;
    GaussianParams(double mean_, double std_) : mean(mean_), std(std_) {
        if (!(std > 0.0)) throw DomainError("GaussianParams: std must be positive");
    }
    double variance() const { return std * std; }
};

/// Rescale so the trapezoid integral is 1. No-op when already within roundoff of 1,
/// which makes the operation exactly idempotent.
inline GridDensity normalize(const GridDensity& d) {
    const double mass = trapezoid(d);
    if (!(mass > kDensityFloor)) throw ZeroMass();
    GridDensity out = d;
    if (std::abs(mass - 1.0) > 1e-14) {
        for (double& v : out.values) v /= mass;
    }
    return out;
}

/// Gaussian density sampled pointwise and normalized. The grid should span
/// [mean - 6*std, mean + 6*std]; narrower grids set span_warning (or throw when strict).
inline GridDensity gaussian_on_grid(const GaussianParams& p, const Grid& g,
                                    Strictness strict = Strictness::lenient) {
    const bool narrow = g.x0 > p.mean - 6.0 * p.std || g.xmax() < p.mean + 6.0 * p.std;
    if (narrow && strict == Strictness::strict)
        throw GridTooNarrow("gaussian_on_grid: grid does not cover mean +- 6 sigma");
    std::vector<double> v(g.n);
    const double a = 1.0 / (p.std * std::sqrt(2.0 * M_PI));
    for (std::size_t i = 0; i < g.n; ++i) {
        const double z = (g.x(i) - p.mean) / p.std;
        v[i] = a * std::exp(-0.5 * z * z);
    }
    GridDensity d = normalize(GridDensity(g, std::move(v)));
    d.span_warning = narrow;
    return d;
}

/// Exponential density lambda*exp(-lambda*x) on a grid over [0, L], L >= 20/lambda.
inline GridDensity exponential_on_grid(double lambda, const Grid& g,
                                       Strictness strict = Strictness::lenient) {
    if (!(lambda > 0.0)) throw DomainError("exponential_on_grid: lambda must be positive");
    const bool narrow = g.span() < 20.0 / lambda;
    if (narrow && strict == Strictness::strict)
        throw GridTooNarrow("exponential_on_grid: grid shorter than 20/lambda");
    std::vector<double> v(g.n);
    for (std::size_t i = 0; i < g.n; ++i) v[i] = lambda * std::exp(-lambda * g.x(i));
    GridDensity d = normalize(GridDensity(g, std::move(v)));
    d.span_warning = narrow;
    return d;
}

/// Binomial pmf over n = 0..G via log-gamma (stable far beyond G ~ 170).
inline DiscreteDistribution bernoulli_pmf(std::size_t G, double p) {
    if (!(p > 0.0 && p < 1.0)) throw DomainError("bernoulli_pmf: p must lie in (0,1)");
    if (G < 1 || G > 1000000) throw DomainError("bernoulli_pmf: G out of range [1, 1e6]");
    const double lp = std::log(p), lq = std::log1p(-p);
    const double lgG = std::lgamma(static_cast<double>(G) + 1.0);
    std::vector<double> probs(G + 1);
    for (std::size_t k = 0; k <= G; ++k) {
        const double kk = static_cast<double>(k);
        const double logP = lgG - std::lgamma(kk + 1.0) - std::lgamma(static_cast<double>(G - k) + 1.0) +
                            kk * lp + (static_cast<double>(G) - kk) * lq;
        probs[k] = std::exp(logP);
    }
    // renormalize away the accumulated roundoff (sums to 1 within ~1e-13 already)
    const double sum = std::accumulate(probs.begin(), probs.end(), 0.0);
    for (double& q : probs) q /= sum;
    return DiscreteDistribution(std::move(probs));
}

struct Moments {
    double mean = 0.0;
    double variance = 0.0;
};

/// Trapezoid first and second central moments of a normalized density.
inline Moments moments(const GridDensity& d) {
    std::vector<double> xf(d.grid.n);
    for (std::size_t i = 0; i < d.grid.n; ++i) xf[i] = d.grid.x(i) * d.values[i];
    const double mean = trapezoid(d.grid, xf);
    for (std::size_t i = 0; i < d.grid.n; ++i) {
        const double c = d.grid.x(i) - mean;
        xf[i] = c * c * d.values[i];
    }
    return {mean, trapezoid(d.grid, xf)};
}

inline Moments moments(const DiscreteDistribution& mu) {
    double mean = 0.0;
    for (std::size_t k = 0; k < mu.probs.size(); ++k) mean += static_cast<double>(k) * mu.probs[k];
    double var = 0.0;
    for (std::size_t k = 0; k < mu.probs.size(); ++k) {
        const double c = static_cast<double>(k) - mean;
        var += c * c * mu.probs[k];
    }
    return {mean, var};
}

struct CoarseGrainResult {
    DiscreteDistribution dist;
    double r_effective = 0.0;   // r rounded to an integer multiple of dx
    bool partial_trailing_bin = false;
};

/// Bin probabilities p_k = integral of d over bin k. Bins start at grid.x0 and are
/// r_effective = round(r/dx)*dx wide; a trailing partial bin is kept and flagged.
/// Cell-wise trapezoid sums telescope, so the bin masses add up to the total mass exactly.
inline CoarseGrainResult coarse_grain_detail(const GridDensity& d, double r) {
    const Grid& g = d.grid;
    if (r < g.dx * (1.0 - 1e-12)) throw ResolutionTooFine("coarse_grain: r below grid spacing");
    const std::size_t cells_per_bin = static_cast<std::size_t>(std::llround(r / g.dx));
    const std::size_t cells = g.n - 1;
    const std::size_t nbins = (cells + cells_per_bin - 1) / cells_per_bin;

    std::vector<double> probs(nbins, 0.0);
    for (std::size_t c = 0; c < cells; ++c) {
        probs[c / cells_per_bin] += 0.5 * (d.values[c] + d.values[c + 1]) * g.dx;
    }
    const double total = std::accumulate(probs.begin(), probs.end(), 0.0);
    for (double& q : probs) q = std::max(q, 0.0) / total;

    CoarseGrainResult out;
    out.dist = DiscreteDistribution(std::move(probs));
    out.r_effective = static_cast<double>(cells_per_bin) * g.dx;
    out.partial_trailing_bin = cells % cells_per_bin != 0;
    return out;
}

inline DiscreteDistribution coarse_grain(const GridDensity& d, double r) {
    return coarse_grain_detail(d, r).dist;
}

}  // namespace entrodyn

#endif
