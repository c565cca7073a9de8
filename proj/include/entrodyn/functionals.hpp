#ifndef ENTRODYN_FUNCTIONALS_HPP
#define ENTRODYN_FUNCTIONALS_HPP

#include <cmath>
#include <vector>

#include "entrodyn/densities.hpp"
#include "entrodyn/grid.hpp"

namespace entrodyn {

enum class EntropyBase { e, two };

/// Entropy value tagged with its logarithm base. Internally everything is
/// computed in nats; base-2 values are obtained by exact division by ln 2.
struct EntropyValue {
    double value = 0.0;
    EntropyBase base = EntropyBase::e;

    double in_nats() const { return base == EntropyBase::e ? value : value * M_LN2; }
    double in_bits() const { return base == EntropyBase::two ? value : value / M_LN2; }
};

/// Shannon entropy -sum mu_k log mu_k with the 0*log 0 = 0 convention.
inline EntropyValue shannon_discrete(const DiscreteDistribution& mu,
                                     EntropyBase base = EntropyBase::e) {
    double s = 0.0;
    for (double p : mu.probs)
        if (p > 0.0) s -= p * std::log(p);
    if (base == EntropyBase::two) return {s / M_LN2, base};
    return {s, base};
}

/// Differential entropy -int rho ln rho dx; the integrand vanishes where rho does.
inline EntropyValue differential_entropy(const GridDensity& d) {
    std::vector<double> f(d.grid.n, 0.0);
    for (std::size_t i = 0; i < d.grid.n; ++i) {
        const double r = d.values[i];
        if (r >= kDensityFloor) f[i] = -r * std::log(r);
    }
    return {trapezoid(d.grid, f), EntropyBase::e};
}

/// Shannon entropy of the bin probabilities at resolution r (nats).
inline EntropyValue coarse_grained_entropy(const GridDensity& d, double r) {
    return shannon_discrete(coarse_grain(d, r), EntropyBase::e);
}

/// Dimensionless entropy -int rho ln(unit * rho) dx = S(rho) - ln(unit).
inline EntropyValue entropy_with_unit(const GridDensity& d, double unit) {
    if (!(unit > 0.0)) throw DomainError("entropy_with_unit: unit must be positive");
    return {differential_entropy(d).value - std::log(unit), EntropyBase::e};
}

/// Relative entropy int rho ln(rho/ref) dx >= 0. The integrand is taken as 0
/// where rho is below the density floor; ref must be strictly positive on the
/// support of rho. The conditional entropy is the negative of this value.
inline double kullback(const GridDensity& rho, const GridDensity& ref) {
    if (!(rho.grid == ref.grid)) throw SupportMismatch("kullback: densities on different grids");
    std::vector<double> f(rho.grid.n, 0.0);
    for (std::size_t i = 0; i < rho.grid.n; ++i) {
        const double r = rho.values[i];
        if (r < kDensityFloor) continue;
        const double q = ref.values[i];
        if (q < kDensityFloor)
            throw SupportMismatch("kullback: reference vanishes on the support of rho");
        f[i] = r * (std::log(r) - std::log(q));
    }
    return trapezoid(rho.grid, f);
}

inline double conditional_entropy(const GridDensity& rho, const GridDensity& ref) {
    return -kullback(rho, ref);
}

/// Fisher information via 4 int (d sqrt(rho)/dx)^2 dx, which avoids 0/0 at the
/// tails and agrees with int (rho')^2/rho dx for differentiable densities.
inline double fisher_information(const GridDensity& d) {
    std::vector<double> root(d.grid.n);
    for (std::size_t i = 0; i < d.grid.n; ++i) root[i] = std::sqrt(std::max(d.values[i], 0.0));
    std::vector<double> dr = derivative(d.grid, root);
    for (double& v : dr) v = v * v;
    return 4.0 * trapezoid(d.grid, dr);
}

/// Entropy power (2 pi e)^{-1/2} exp(S); bounded above by the standard deviation.
inline double entropy_power(const EntropyValue& s) {
    if (s.base != EntropyBase::e) throw DomainError("entropy_power: expects entropy in nats");
    return std::exp(s.value) / std::sqrt(2.0 * M_PI * M_E);
}

/// Quantum (de Broglie-Bohm) potential Q = 2 D^2 (d^2 sqrt(rho)/dx^2) / sqrt(rho).
/// Endpoints use one-sided stencils. Where rho is below the floor Q is set to 0;
/// the density weight kills those points in every mean anyway.
inline GridField quantum_potential(const GridDensity& d, double D) {
    if (!(D > 0.0)) throw DomainError("quantum_potential: D must be positive");
    std::vector<double> root(d.grid.n);
    for (std::size_t i = 0; i < d.grid.n; ++i) root[i] = std::sqrt(std::max(d.values[i], 0.0));
    std::vector<double> lap = second_derivative(d.grid, root);
    std::vector<double> q(d.grid.n, 0.0);
    for (std::size_t i = 0; i < d.grid.n; ++i) {
        if (d.values[i] >= kDensityFloor) q[i] = 2.0 * D * D * lap[i] / root[i];
    }
    return GridField(d.grid, std::move(q));
}

/// Osmotic velocity u = D * d(ln rho)/dx, set to 0 below the density floor.
inline GridField osmotic_velocity(const GridDensity& d, double D) {
    std::vector<double> logr(d.grid.n, 0.0);
    for (std::size_t i = 0; i < d.grid.n; ++i)
        logr[i] = std::log(std::max(d.values[i], kDensityFloor));
    std::vector<double> u = derivative(d.grid, logr);
    for (std::size_t i = 0; i < d.grid.n; ++i) u[i] = d.values[i] >= kDensityFloor ? D * u[i] : 0.0;
    return GridField(d.grid, std::move(u));
}

}  // namespace entrodyn

#endif
