#ifndef ENTRODYN_SPECTRAL_HPP
#define ENTRODYN_SPECTRAL_HPP

#include <cmath>
#include <complex>
#include <vector>

#include "entrodyn/densities.hpp"
#include "entrodyn/functionals.hpp"
#include "entrodyn/quantum.hpp"

// Fourier transform of wave functions to momentum densities and the entropic
// uncertainty bookkeeping. Convention fixed to the unitary angular transform
//   psi~(k) = (2 pi)^{-1/2} int psi(x) e^{-ikx} dx,
// under which F_raw = 4 <(k - <k>)^2> with equality for real psi (the 16 pi^2
// constant of the cyclic-frequency convention becomes 4).

namespace entrodyn {

struct WaveFunction {
    Grid grid;
    std::vector<std::complex<double>> values;

    WaveFunction() = default;
    WaveFunction(Grid g, std::vector<std::complex<double>> v) : grid(g), values(std::move(v)) {
        if (values.size() != grid.n) throw DomainError("WaveFunction: size mismatch");
        double norm = 0.0;
        {
            std::vector<double> a(grid.n);
            for (std::size_t i = 0; i < grid.n; ++i) a[i] = std::norm(values[i]);
            norm = trapezoid(grid, a);
        }
        if (!(norm > kDensityFloor)) throw ZeroMass("WaveFunction: zero norm");
        if (std::abs(norm - 1.0) > 1e-9) {
            const double s = 1.0 / std::sqrt(norm);
            for (auto& z : values) z *= s;
        }
    }

    GridDensity position_density() const {
        std::vector<double> a(grid.n);
        for (std::size_t i = 0; i < grid.n; ++i) a[i] = std::norm(values[i]);
        return normalize(GridDensity(grid, std::move(a)));
    }
};

namespace detail {

/// In-place iterative radix-2 FFT (sign = -1 forward, +1 inverse, unscaled).
inline void fft_pow2(std::vector<std::complex<double>>& a, int sign) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {  // bit reversal
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = sign * 2.0 * M_PI / static_cast<double>(len);
        const std::complex<double> wl(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            std::complex<double> w(1.0, 0.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                const std::complex<double> u = a[i + k];
                const std::complex<double> v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wl;
            }
        }
    }
}

inline std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

}  // namespace detail

/// |psi~(k)|^2 on the conjugate uniform k-grid. The input is zero-padded to
/// twice the next power of two before the transform to suppress leakage.
inline GridDensity momentum_density(const WaveFunction& psi) {
    const Grid& g = psi.grid;
    if (std::norm(psi.values.front()) > 1e-8 || std::norm(psi.values.back()) > 1e-8)
        throw AliasingDetected("momentum_density: wave function does not vanish at the grid ends");

    const std::size_t N = 2 * detail::next_pow2(g.n);
    const std::size_t off = (N - g.n) / 2;
    std::vector<std::complex<double>> work(N, {0.0, 0.0});
    for (std::size_t i = 0; i < g.n; ++i) work[off + i] = psi.values[i];
    // center the spectrum: multiply by (-1)^m so k = 0 lands at index N/2
    for (std::size_t m = 0; m < N; ++m)
        if (m & 1) work[m] = -work[m];
    detail::fft_pow2(work, -1);

    const double dk = 2.0 * M_PI / (static_cast<double>(N) * g.dx);
    const double scale = g.dx * g.dx / (2.0 * M_PI);  // |dx/sqrt(2 pi)|^2
    std::vector<double> dens(N);
    for (std::size_t j = 0; j < N; ++j) dens[j] = scale * std::norm(work[j]);
    Grid kgrid(-dk * static_cast<double>(N) / 2.0, dk, N);
    if (dens.front() > 1e-8 || dens.back() > 1e-8)
        throw AliasingDetected("momentum_density: spectrum reaches the Nyquist boundary");
    return normalize(GridDensity(kgrid, std::move(dens)));
}

/// Position/momentum entropy pair with the saturation bound 1 + ln(pi) and the
/// entropy-power chain entries.
struct UncertaintyReport {
    double s_x = 0.0;
    double s_p = 0.0;
    double sum = 0.0;
    double bound = 0.0;  // 1 + ln(pi)
    double sigma_x = 0.0;
    double sigma_p = 0.0;
    double entropy_power_product = 0.0;  // (2 pi e)^{-1} exp(s_x + s_p)
    double fisher_x = 0.0;
};

inline UncertaintyReport uncertainty_report(const WaveFunction& psi) {
    UncertaintyReport r;
    const GridDensity rx = psi.position_density();
    const GridDensity rp = momentum_density(psi);
    r.s_x = differential_entropy(rx).value;
    r.s_p = differential_entropy(rp).value;
    r.sum = r.s_x + r.s_p;
    r.bound = 1.0 + std::log(M_PI);
    r.sigma_x = std::sqrt(moments(rx).variance);
    r.sigma_p = std::sqrt(moments(rp).variance);
    r.entropy_power_product = std::exp(r.sum) / (2.0 * M_PI * M_E);
    r.fisher_x = fisher_information(rx);
    return r;
}

/// Coarse-grained uncertainty sum at resolutions (r, r~) with the bound
/// 1 + ln(pi) - ln(r r~); complement_residual is the defect of the identity
/// s_pB = bound - s_xB.
struct CoarseUncertainty {
    double s_xB = 0.0;
    double s_pB = 0.0;
    double bound = 0.0;
    double complement_residual = 0.0;
};

inline CoarseUncertainty coarse_uncertainty(const WaveFunction& psi, double r, double r_tilde) {
    const GridDensity rx = psi.position_density();
    const GridDensity rp = momentum_density(psi);
    CoarseUncertainty out;
    out.s_xB = coarse_grained_entropy(rx, r).value;
    out.s_pB = coarse_grained_entropy(rp, r_tilde).value;
    out.bound = 1.0 + std::log(M_PI) - std::log(r * r_tilde);
    out.complement_residual = out.s_pB - (out.bound - out.s_xB);
    return out;
}

/// psi = sqrt(rho) exp(i s/2D): the stored velocity potential is 2D times the
/// quantum phase.
inline WaveFunction to_wave_function(const QuantumState& state) {
    std::vector<std::complex<double>> v(state.rho.grid.n);
    for (std::size_t i = 0; i < state.rho.grid.n; ++i) {
        const double amp = std::sqrt(std::max(state.rho.values[i], 0.0));
        const double ph = state.phase_s.values[i] / (2.0 * state.D);
        v[i] = std::polar(amp, ph);
    }
    return WaveFunction(state.rho.grid, std::move(v));
}

/// Real nonnegative wave function sqrt(rho).
inline WaveFunction wave_function_from_density(const GridDensity& rho) {
    std::vector<std::complex<double>> v(rho.grid.n);
    for (std::size_t i = 0; i < rho.grid.n; ++i)
        v[i] = std::sqrt(std::max(rho.values[i], 0.0));
    return WaveFunction(rho.grid, std::move(v));
}

}  // namespace entrodyn

#endif
