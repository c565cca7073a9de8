#ifndef ENTRODYN_FOKKER_PLANCK_HPP
#define ENTRODYN_FOKKER_PLANCK_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <vector>

#include "entrodyn/functionals.hpp"
#include "entrodyn/grid.hpp"

// 1-D Smoluchowski dynamics d rho/dt = D Lap(rho) - div(b rho), integrated in
// flux form with Crank-Nicolson and reflecting (zero-flux) boundaries. The flux
// form makes the discrete mass a constant of the scheme.

namespace entrodyn {

struct SmoluchowskiModel {
    double D = 1.0;
    std::function<double(double)> drift;                      // forward drift b(x)
    std::optional<std::function<double(double)>> potential;   // V(x), with b = -V'/m_beta
    double m_beta = 1.0;  // physical friction scale, recorded for labeling only

    // m_beta is normalized to 1 in all formulas, so the Einstein relation reads kT = D.
    double kT() const { return D; }
};

inline SmoluchowskiModel free_diffusion(double D) {
    return {D, [](double) { return 0.0; }, std::nullopt};
}

inline SmoluchowskiModel ou_model(double gamma, double D) {
    return {D, [gamma](double x) { return -gamma * x; },
            [gamma](double x) { return 0.5 * gamma * x * x; }};
}

/// Checks that a supplied potential is consistent with the drift on this grid:
/// max |b + V'| below 1e-6 (scaled); exact for polynomial V up to quadratic.
inline void validate_model(const SmoluchowskiModel& model, const Grid& g) {
    if (!model.drift) throw DomainError("SmoluchowskiModel: drift is required");
    if (!model.potential) return;
    std::vector<double> v(g.n), b(g.n);
    for (std::size_t i = 0; i < g.n; ++i) {
        v[i] = (*model.potential)(g.x(i));
        b[i] = model.drift(g.x(i));
    }
    std::vector<double> dv = derivative(g, v);
    double worst = 0.0, scale = 1.0;
    for (std::size_t i = 1; i + 1 < g.n; ++i) {
        worst = std::max(worst, std::abs(b[i] + dv[i]));
        scale = std::max(scale, std::abs(b[i]));
    }
    if (worst > 1e-6 * scale)
        throw DomainError("SmoluchowskiModel: drift does not match -grad(V)");
}

/// Osmotic velocity u, current velocity v = b - u, quantum potential Q and
/// volume potential Omega = b^2/2 + D b' for one density snapshot.
struct HydroFields {
    GridField u;
    GridField v;
    GridField Q;
    GridField Omega;
};

inline HydroFields hydro_fields(const GridDensity& rho, const SmoluchowskiModel& model) {
    const Grid& g = rho.grid;
    HydroFields f{osmotic_velocity(rho, model.D), GridField::zeros(g),
                  quantum_potential(rho, model.D), GridField::zeros(g)};
    std::vector<double> b(g.n);
    for (std::size_t i = 0; i < g.n; ++i) b[i] = model.drift(g.x(i));
    std::vector<double> db = derivative(g, b);
    for (std::size_t i = 0; i < g.n; ++i) {
        f.v.values[i] = b[i] - f.u.values[i];
        f.Omega.values[i] = 0.5 * b[i] * b[i] + model.D * db[i];
    }
    return f;
}

/// One time slice of entropy-balance diagnostics. Rates come from the
/// instantaneous fields, not from trajectory differencing.
struct BalanceReport {
    double t = 0.0;
    double S = 0.0;
    double S_dot = 0.0;         // (<v^2> - <b v>)/D == -<v u>/D
    double S_dot_in = 0.0;      // <v^2>/D, entropy production rate
    double Q_dot = 0.0;         // <b v>/D, power release
    double F_raw = 0.0;         // Fisher information
    double F_dot = 0.0;         // d(D^2 F_raw)/dt = -2 <v dQ/dx>
    std::optional<double> H_c;        // S - ln Z - <V>/kT (needs potential)
    std::optional<double> helmholtz;  // <V> - kT S       (needs potential)
    double mean = 0.0;
    double variance = 0.0;
    double v2_mean = 0.0;
    double u2_mean = 0.0;
    double omega_mean = 0.0;
    double energy_H = 0.0;      // (1/2)(<v^2> - <u^2>) - <Omega>, identically 0
    double s_dot_divergence = 0.0;  // cross-check route <div v>
};

/// Gibbs density exp(-V/kT)/Z on the grid; the minimizer of the Helmholtz mean.
inline GridDensity invariant_density(const SmoluchowskiModel& model, const Grid& g) {
    if (!model.potential) throw MissingPotential("invariant_density: potential required");
    std::vector<double> v(g.n);
    for (std::size_t i = 0; i < g.n; ++i) v[i] = std::exp(-(*model.potential)(g.x(i)) / model.kT());
    const double z = trapezoid(g, v);
    if (!(z > kDensityFloor) || !std::isfinite(z))
        throw NotNormalizable("invariant_density: exp(-V/kT) not integrable on this grid");
    for (double& q : v) q /= z;
    return GridDensity(g, std::move(v));
}

inline double helmholtz_energy(const GridDensity& rho, const SmoluchowskiModel& model) {
    if (!model.potential) throw MissingPotential("helmholtz_energy: potential required");
    std::vector<double> v(rho.grid.n);
    for (std::size_t i = 0; i < rho.grid.n; ++i) v[i] = (*model.potential)(rho.grid.x(i));
    return mean_of(rho, v) - model.kT() * differential_entropy(rho).value;
}

/// dF/dt for the scaled Fisher measure F = D^2 F_raw: -2 <v dQ/dx>.
inline double fisher_rate(const GridDensity& rho, const SmoluchowskiModel& model) {
    HydroFields f = hydro_fields(rho, model);
    std::vector<double> dq = derivative(rho.grid, f.Q.values);
    std::vector<double> w(rho.grid.n);
    for (std::size_t i = 0; i < rho.grid.n; ++i) w[i] = f.v.values[i] * dq[i];
    return -2.0 * mean_of(rho, w);
}

inline BalanceReport balance_report(const GridDensity& rho, const SmoluchowskiModel& model,
                                    double t = 0.0) {
    const Grid& g = rho.grid;
    HydroFields f = hydro_fields(rho, model);

    std::vector<double> b(g.n), w(g.n);
    for (std::size_t i = 0; i < g.n; ++i) b[i] = model.drift(g.x(i));

    BalanceReport r;
    r.t = t;
    r.S = differential_entropy(rho).value;
    for (std::size_t i = 0; i < g.n; ++i) w[i] = f.v.values[i] * f.v.values[i];
    r.v2_mean = mean_of(rho, w);
    for (std::size_t i = 0; i < g.n; ++i) w[i] = f.u.values[i] * f.u.values[i];
    r.u2_mean = mean_of(rho, w);
    for (std::size_t i = 0; i < g.n; ++i) w[i] = b[i] * f.v.values[i];
    const double bv = mean_of(rho, w);

    r.S_dot = (r.v2_mean - bv) / model.D;
    r.S_dot_in = r.v2_mean / model.D;
    r.Q_dot = bv / model.D;
    r.F_raw = fisher_information(rho);
    std::vector<double> dq = derivative(g, f.Q.values);
    for (std::size_t i = 0; i < g.n; ++i) w[i] = f.v.values[i] * dq[i];
    r.F_dot = -2.0 * mean_of(rho, w);
    r.omega_mean = mean_of(rho, f.Omega);
    r.energy_H = 0.5 * (r.v2_mean - r.u2_mean) - r.omega_mean;

    const Moments m = moments(rho);
    r.mean = m.mean;
    r.variance = m.variance;

    std::vector<double> dv = derivative(g, f.v.values);
    r.s_dot_divergence = mean_of(rho, dv);

    if (model.potential) {
        std::vector<double> pot(g.n), gibbs(g.n);
        for (std::size_t i = 0; i < g.n; ++i) {
            pot[i] = (*model.potential)(g.x(i));
            gibbs[i] = std::exp(-pot[i] / model.kT());
        }
        const double z = trapezoid(g, gibbs);
        const double vbar = mean_of(rho, pot);
        r.H_c = r.S - std::log(z) - vbar / model.kT();
        r.helmholtz = vbar - model.kT() * r.S;
    }
    return r;
}

namespace detail {

/// Assembles the flux-form tridiagonal generator A (d rho/dt = A rho) with
/// zero-flux boundaries. Row i holds {lower, diag, upper}.
struct FluxOperator {
    std::vector<double> lower, diag, upper;

    FluxOperator(const Grid& g, const SmoluchowskiModel& model) {
        const std::size_t n = g.n;
        const double dx = g.dx, D = model.D;
        std::vector<double> bface(n - 1);
        double bmax = 0.0;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            bface[i] = model.drift(g.x(i) + 0.5 * dx);
            bmax = std::max(bmax, std::abs(bface[i]));
        }
        if (bmax * dx / D >= 2.0)
            throw DomainError("step: cell Peclet number |b| dx / D >= 2; refine the grid");

        lower.assign(n, 0.0);
        diag.assign(n, 0.0);
        upper.assign(n, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            if (i + 1 < n) {  // right face
                diag[i] += (-D / dx - 0.5 * bface[i]) / dx;
                upper[i] += (D / dx - 0.5 * bface[i]) / dx;
            }
            if (i > 0) {  // left face
                diag[i] += (-D / dx + 0.5 * bface[i - 1]) / dx;
                lower[i] += (D / dx + 0.5 * bface[i - 1]) / dx;
            }
        }
    }
};

/// Thomas solve of (I - c A) x = rhs.
inline void solve_shifted(const FluxOperator& A, double c, std::vector<double>& rhs) {
    const std::size_t n = rhs.size();
    std::vector<double> du(n), dd(n);
    for (std::size_t i = 0; i < n; ++i) {
        dd[i] = 1.0 - c * A.diag[i];
        du[i] = -c * A.upper[i];
    }
    for (std::size_t i = 1; i < n; ++i) {
        const double m = (-c * A.lower[i]) / dd[i - 1];
        dd[i] -= m * du[i - 1];
        rhs[i] -= m * rhs[i - 1];
    }
    rhs[n - 1] /= dd[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) rhs[i] = (rhs[i] - du[i] * rhs[i + 1]) / dd[i];
}

inline double step_inplace(std::vector<double>& rho, const FluxOperator& A, const Grid& g,
                           double dt, double initial_max) {
    const std::size_t n = rho.size();
    std::vector<double> rhs(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double al = i > 0 ? A.lower[i] * rho[i - 1] : 0.0;
        const double au = i + 1 < n ? A.upper[i] * rho[i + 1] : 0.0;
        rhs[i] = rho[i] + 0.5 * dt * (al + A.diag[i] * rho[i] + au);
    }
    solve_shifted(A, 0.5 * dt, rhs);

    double clipped = 0.0, peak = 0.0;
    for (double& v : rhs) {
        if (v < 0.0) {
            clipped -= v;
            v = 0.0;
        }
        peak = std::max(peak, v);
    }
    if (peak > 1e6 * initial_max) throw Instability("step: solution blew up");
    if (clipped > 0.0) {  // restore the mass the clip added
        const double mass = trapezoid(g, rhs);
        if (mass > kDensityFloor && std::abs(mass - 1.0) > 1e-14)
            for (double& v : rhs) v /= mass;
    }
    rho.swap(rhs);
    return clipped * g.dx;
}

}  // namespace detail

/// One Crank-Nicolson step of size dt. Unconditionally stable; negative
/// undershoots are clipped and the density renormalized.
inline GridDensity step(const GridDensity& rho, const SmoluchowskiModel& model, double dt) {
    if (!(dt > 0.0)) throw DomainError("step: dt must be positive");
    validate_model(model, rho.grid);
    detail::FluxOperator A(rho.grid, model);
    GridDensity out = rho;
    const double peak0 = *std::max_element(out.values.begin(), out.values.end());
    detail::step_inplace(out.values, A, rho.grid, dt, peak0);
    return normalize(out);
}

struct Trajectory {
    std::vector<double> times;
    std::vector<GridDensity> states;
    std::vector<BalanceReport> reports;
    double clipped_mass = 0.0;  // total mass removed by nonnegativity clipping
};

/// Integrate to t_end with fixed dt, reporting every report_every steps
/// (snapshot 0 and the final step always included).
inline Trajectory evolve(const GridDensity& rho0, const SmoluchowskiModel& model, double t_end,
                         double dt, std::size_t report_every = 1) {
    if (t_end < 0.0) throw DomainError("evolve: t_end must be nonnegative");
    if (!(dt > 0.0)) throw DomainError("evolve: dt must be positive");
    if (report_every == 0) report_every = 1;
    validate_model(model, rho0.grid);

    Trajectory traj;
    GridDensity rho = normalize(rho0);
    const auto snapshot = [&](double t) {
        traj.times.push_back(t);
        traj.states.push_back(rho);
        traj.reports.push_back(balance_report(rho, model, t));
    };
    snapshot(0.0);

    const auto nsteps = static_cast<std::size_t>(std::llround(t_end / dt));
    if (nsteps == 0) return traj;

    detail::FluxOperator A(rho.grid, model);
    const double peak0 = *std::max_element(rho.values.begin(), rho.values.end());
    for (std::size_t k = 1; k <= nsteps; ++k) {
        traj.clipped_mass += detail::step_inplace(rho.values, A, rho.grid, dt, peak0);
        if (k % report_every == 0 || k == nsteps) {
            rho = normalize(rho);
            snapshot(static_cast<double>(k) * dt);
        }
    }
    return traj;
}

}  // namespace entrodyn

#endif
