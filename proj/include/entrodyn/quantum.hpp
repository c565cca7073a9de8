#ifndef ENTRODYN_QUANTUM_HPP
#define ENTRODYN_QUANTUM_HPP

#include <cmath>
#include <vector>

#include "entrodyn/densities.hpp"
#include "entrodyn/functionals.hpp"
#include "entrodyn/grid.hpp"

// Closed-form Schroedinger-driven density families sampled onto grids: free
// packet, coherent (steady) state, squeezed oscillator state and stationary
// Hermite states. No PDE solver here; everything is analytic. phase_s is the
// velocity potential (v = grad s); for the families below it is quadratic in x,
// so the centered gradient reproduces v exactly.

namespace entrodyn {

struct QuantumState {
    GridDensity rho;
    GridField phase_s;    // velocity potential s(x, t), v = grad s
    GridField drift_b;    // forward drift b = v + u
    GridField omega_field;  // volume potential Omega = V/m
    double D = 1.0;       // hbar / 2m in the chosen units
    double energy_E = 0.0;  // conserved mean energy (1/2)(<v^2>+<u^2>) + <Omega>
    double t = 0.0;
};

namespace detail {

inline void require_span(const Grid& g, double lo, double hi, Strictness strict, bool& warn,
                         const char* who) {
    const bool narrow = g.x0 > lo || g.xmax() < hi;
    if (narrow && strict == Strictness::strict) throw GridTooNarrow(std::string(who) + ": grid too narrow");
    warn = narrow;
}

/// Gaussian density with an x^2/linear phase: shared assembly for the three
/// Gaussian families. v(x) = vslope*(x) + vshift, b = v + u.
inline QuantumState gaussian_state(const Grid& g, double mean, double var, double vslope,
                                   double vshift, double phase_t, double D,
                                   std::vector<double> omega, double energy, double t) {
    QuantumState st;
    st.rho = gaussian_on_grid(GaussianParams(mean, std::sqrt(var)), g);
    st.D = D;
    st.energy_E = energy;
    st.t = t;
    std::vector<double> s(g.n), b(g.n);
    for (std::size_t i = 0; i < g.n; ++i) {
        const double x = g.x(i);
        const double v = vslope * x + vshift;
        const double u = -D * (x - mean) / var;
        s[i] = 0.5 * vslope * x * x + vshift * x + phase_t;
        b[i] = v + u;
    }
    st.phase_s = GridField(g, std::move(s));
    st.drift_b = GridField(g, std::move(b));
    st.omega_field = GridField(g, std::move(omega));
    return st;
}

}  // namespace detail

/// Free packet from psi(x,0) = (pi a^2)^{-1/4} exp(-x^2/2a^2):
/// rho(x,t) = a/sqrt(pi(a^4+4D^2t^2)) exp(-x^2 a^2/(a^4+4D^2t^2)), Omega = 0,
/// E = D^2/a^2, b = 2D(2Dt - a^2) x / (a^4 + 4D^2 t^2).
inline QuantumState free_packet(double alpha, double D, double t, const Grid& g,
                                Strictness strict = Strictness::lenient) {
    if (!(alpha > 0.0)) throw DomainError("free_packet: alpha must be positive");
    if (!(D > 0.0)) throw DomainError("free_packet: D must be positive");
    const double denom = alpha * alpha * alpha * alpha + 4.0 * D * D * t * t;
    const double var = denom / (2.0 * alpha * alpha);
    bool warn = false;
    detail::require_span(g, -4.0 * std::sqrt(var), 4.0 * std::sqrt(var), strict, warn, "free_packet");
    QuantumState st = detail::gaussian_state(
        g, 0.0, var, 4.0 * D * D * t / denom, 0.0,
        -D * std::atan(2.0 * D * t / (alpha * alpha)), D, std::vector<double>(g.n, 0.0),
        D * D / (alpha * alpha), t);
    st.rho.span_warning = warn;
    return st;
}

/// Coherent state: Gaussian of constant variance D/omega riding the classical
/// trajectory q(t), p(t). S is constant while the production term oscillates.
inline QuantumState coherent_state(double omega, double q0, double p0, double m, double D,
                                   double t, const Grid& g,
                                   Strictness strict = Strictness::lenient) {
    if (!(omega > 0.0) || !(m > 0.0) || !(D > 0.0))
        throw DomainError("coherent_state: omega, m, D must be positive");
    const double q = q0 * std::cos(omega * t) + p0 / (m * omega) * std::sin(omega * t);
    const double pm = p0 / m * std::cos(omega * t) - omega * q0 * std::sin(omega * t);  // p(t)/m
    const double var = D / omega;
    const double amp = std::sqrt(q0 * q0 + p0 * p0 / (m * m * omega * omega));
    bool warn = false;
    detail::require_span(g, -amp - 4.0 * std::sqrt(var), amp + 4.0 * std::sqrt(var), strict, warn,
                         "coherent_state");
    // time part of s from the Hamilton-Jacobi equation:
    //   phi'(t) = (omega^2 q^2 - (p/m)^2)/2 - omega D
    const double A = omega * q0, C = p0 / m, th = omega * t;
    const double phase_t =
        ((A * A - C * C) * std::sin(2.0 * th) + 2.0 * A * C * (1.0 - std::cos(2.0 * th))) /
            (4.0 * omega) -
        omega * D * t;
    std::vector<double> om(g.n);
    for (std::size_t i = 0; i < g.n; ++i) om[i] = 0.5 * omega * omega * g.x(i) * g.x(i);
    const double energy = 0.5 * (pm * pm + omega * omega * q * q) + omega * D;
    QuantumState st =
        detail::gaussian_state(g, q, var, 0.0, pm, phase_t, D, std::move(om), energy, t);
    st.rho.span_warning = warn;
    return st;
}

namespace detail {
/// arctan(gamma^2 cot t) unwrapped to a continuous function of t.
inline double unwrapped_cot_atan(double gamma, double t) {
    const double pi = M_PI;
    double k = std::floor(t / pi);
    double tau = t - k * pi;
    double theta;
    if (tau < 1e-12)
        theta = 0.5 * pi;
    else
        theta = std::atan(gamma * gamma / std::tan(tau));
    return theta - k * pi;
}
}  // namespace detail

/// Squeezed oscillator state in hbar = omega = m = 1 units (so D = 1/2):
/// 2 sigma^2(t) = gamma^2 cos^2 t + gamma^{-2} sin^2 t, S = (1/2) ln(2 pi e sigma^2(t)).
inline QuantumState squeezed_state(double gamma, double t, const Grid& g,
                                   Strictness strict = Strictness::lenient) {
    if (!(gamma > 0.0)) throw DomainError("squeezed_state: gamma must be positive");
    const double D = 0.5;
    const double g2 = gamma * gamma;
    const double c = std::cos(t), s = std::sin(t);
    const double var = 0.5 * (g2 * c * c + s * s / g2);
    const double var_rate = 0.5 * (1.0 / g2 - g2) * 2.0 * s * c;
    const double sigma_max = std::sqrt(0.5 * std::max(g2, 1.0 / g2));
    bool warn = false;
    detail::require_span(g, -4.0 * sigma_max, 4.0 * sigma_max, strict, warn, "squeezed_state");
    const double phase_t = 0.5 * detail::unwrapped_cot_atan(gamma, t) + 0.25 * M_PI;
    const double energy = 0.25 * (g2 + 1.0 / g2);
    std::vector<double> om(g.n);
    for (std::size_t i = 0; i < g.n; ++i) om[i] = 0.5 * g.x(i) * g.x(i);
    QuantumState st = detail::gaussian_state(g, 0.0, var, 0.5 * var_rate / var, 0.0, phase_t, D,
                                             std::move(om), energy, t);
    st.rho.span_warning = warn;
    return st;
}

namespace detail {
/// H_0..H_n (physicists' Hermite) at x via the recurrence.
inline std::vector<double> hermite_values(int n, double x) {
    std::vector<double> h(static_cast<std::size_t>(n) + 1);
    h[0] = 1.0;
    if (n >= 1) h[1] = 2.0 * x;
    for (int k = 1; k < n; ++k) h[k + 1] = 2.0 * x * h[k] - 2.0 * k * h[k - 1];
    return h;
}
}  // namespace detail

inline constexpr double kNodeFloor = 1e-12;  // rho below this marks a Hermite node region

/// Stationary oscillator state n (hbar = omega = m = 1, D = 1/2):
/// sqrt(rho_n) = (2^n n! sqrt(pi))^{-1/2} exp(-x^2/2) H_n(x), v = 0,
/// b_n = -x + H_n'/H_n away from nodes (masked to 0 inside node regions).
inline QuantumState stationary_state(int n, const Grid& g,
                                     Strictness strict = Strictness::lenient) {
    if (n < 0) throw DomainError("stationary_state: n must be nonnegative");
    if (n > 12) throw DomainError("stationary_state: n > 12 not supported by the recurrence");
    const double need = std::sqrt(2.0 * n + 1.0) + 3.0;
    bool warn = false;
    detail::require_span(g, -need, need, strict, warn, "stationary_state");

    double lognorm = 0.25 * std::log(M_PI);  // ln (2^n n! sqrt(pi))^{1/2}
    for (int k = 1; k <= n; ++k) lognorm += 0.5 * std::log(2.0 * k);

    QuantumState st;
    st.D = 0.5;
    st.energy_E = n + 0.5;
    st.t = 0.0;
    std::vector<double> rho(g.n), b(g.n, 0.0), om(g.n);
    for (std::size_t i = 0; i < g.n; ++i) {
        const double x = g.x(i);
        auto h = detail::hermite_values(n, x);
        const double root = std::exp(-0.5 * x * x - lognorm) * h[static_cast<std::size_t>(n)];
        rho[i] = root * root;
        om[i] = 0.5 * x * x;
        if (rho[i] >= kNodeFloor) {
            const double hn = h[static_cast<std::size_t>(n)];
            const double hprime = n >= 1 ? 2.0 * n * h[static_cast<std::size_t>(n) - 1] : 0.0;
            b[i] = -x + hprime / hn;
        }
    }
    st.rho = normalize(GridDensity(g, std::move(rho)));
    st.rho.span_warning = warn;
    st.phase_s = GridField::zeros(g);
    st.drift_b = GridField(g, std::move(b));
    st.omega_field = GridField(g, std::move(om));
    return st;
}

/// Pointwise residual of (n + 1/2) = Omega - Q evaluated from the analytic
/// drift (Q = b^2/2 + b'/2 with v = 0, D = 1/2). Node regions carry 0.
struct HermiteResidual {
    GridField residual;
    double max_abs = 0.0;  // over points with rho_n >= kNodeFloor
};

inline HermiteResidual stationary_hj_residual(int n, const Grid& g) {
    QuantumState st = stationary_state(n, g);
    HermiteResidual out{GridField::zeros(g), 0.0};
    for (std::size_t i = 0; i < g.n; ++i) {
        if (st.rho.values[i] < kNodeFloor) continue;
        const double x = g.x(i);
        auto h = detail::hermite_values(n, x);
        const double hn = h[static_cast<std::size_t>(n)];
        const double hm1 = n >= 1 ? h[static_cast<std::size_t>(n) - 1] : 0.0;
        const double hm2 = n >= 2 ? h[static_cast<std::size_t>(n) - 2] : 0.0;
        const double u = -x + (n >= 1 ? 2.0 * n * hm1 / hn : 0.0);
        const double uprime =
            -1.0 + (n >= 1 ? 2.0 * n * (2.0 * (n - 1) * hm2 * hn - 2.0 * n * hm1 * hm1) / (hn * hn)
                           : 0.0);
        const double Q = 0.5 * u * u + 0.5 * uprime;
        const double r = (n + 0.5) - (0.5 * x * x - Q);
        out.residual.values[i] = r;
        out.max_abs = std::max(out.max_abs, std::abs(r));
    }
    return out;
}

/// One time slice of the quantum entropy balance.
struct QuantumBalanceReport {
    double t = 0.0;
    double S = 0.0;
    double S_dot = 0.0;      // -<v u>/D
    double S_dot_in = 0.0;   // (2/D)[E - (F_scaled/2 + <Omega>)] = <v^2>/D
    double F_scaled = 0.0;   // D^2 F_raw via 2(E - <Omega>) - <v^2>
    double F_dot = 0.0;      // +2 <v dQ/dx>
    double E = 0.0;
    double v2_mean = 0.0;
    double u2_mean = 0.0;    // computed as D^2 * F_raw (smooth through Hermite nodes)
    double omega_mean = 0.0;
};

inline QuantumBalanceReport quantum_balance(const QuantumState& state) {
    const Grid& g = state.rho.grid;
    QuantumBalanceReport r;
    r.t = state.t;
    r.E = state.energy_E;
    r.S = differential_entropy(state.rho).value;

    std::vector<double> v = derivative(g, state.phase_s.values);
    std::vector<double> w(g.n);
    for (std::size_t i = 0; i < g.n; ++i) w[i] = v[i] * v[i];
    r.v2_mean = mean_of(state.rho, w);
    for (std::size_t i = 0; i < g.n; ++i) w[i] = v[i] * (state.drift_b.values[i] - v[i]);
    r.S_dot = -mean_of(state.rho, w) / state.D;
    r.u2_mean = state.D * state.D * fisher_information(state.rho);
    r.omega_mean = mean_of(state.rho, state.omega_field);
    r.F_scaled = 2.0 * (r.E - r.omega_mean) - r.v2_mean;
    r.S_dot_in = (2.0 / state.D) * (r.E - (0.5 * r.F_scaled + r.omega_mean));

    GridField Q = quantum_potential(state.rho, state.D);
    std::vector<double> dq = derivative(g, Q.values);
    for (std::size_t i = 0; i < g.n; ++i) w[i] = v[i] * dq[i];
    r.F_dot = 2.0 * mean_of(state.rho, w);
    return r;
}

/// Residual of the conserved-energy identity (1/2)(<v^2>+<u^2>) + <Omega> - E.
inline double energy_residual(const QuantumState& state) {
    QuantumBalanceReport r = quantum_balance(state);
    return 0.5 * (r.v2_mean + r.u2_mean) + r.omega_mean - r.E;
}

}  // namespace entrodyn

#endif
