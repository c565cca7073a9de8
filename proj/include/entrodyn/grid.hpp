#ifndef ENTRODYN_GRID_HPP
#define ENTRODYN_GRID_HPP

#include <cmath>
#include <cstddef>
#include <vector>

#include "entrodyn/errors.hpp"

namespace entrodyn {

/// Uniform 1-D grid: points x_i = x0 + i*dx, i = 0..n-1.
struct Grid {
    double x0 = 0.0;
    double dx = 1.0;
    std::size_t n = 0;

    Grid() = default;
    Grid(double x0_, double dx_, std::size_t n_) : x0(x0_), dx(dx_), n(n_) {
        if (!(dx > 0.0)) throw DomainError("Grid: dx must be positive");
        if (n < 8) throw DomainError("Grid: need at least 8 points");
    }

    /// Grid over [a, b] with n points (dx = (b-a)/(n-1)).
    static Grid over(double a, double b, std::size_t n) {
        if (!(b > a)) throw DomainError("Grid::over: empty interval");
        return Grid(a, (b - a) / static_cast<double>(n - 1), n);
    }

    double x(std::size_t i) const { return x0 + static_cast<double>(i) * dx; }
    double xmax() const { return x(n - 1); }
    double span() const { return xmax() - x0; }

    bool operator==(const Grid& o) const { return x0 == o.x0 && dx == o.dx && n == o.n; }
};

/// Signed field sampled on a grid (velocities, potentials, phases).
struct GridField {
    Grid grid;
    std::vector<double> values;

    GridField() = default;
    GridField(Grid g, std::vector<double> v) : grid(g), values(std::move(v)) {
        if (values.size() != grid.n) throw DomainError("GridField: size mismatch");
    }
    static GridField zeros(const Grid& g) { return GridField(g, std::vector<double>(g.n, 0.0)); }
};

/// Nonnegative probability density on a grid; integrates to 1 after normalize().
struct GridDensity {
    Grid grid;
    std::vector<double> values;
    bool span_warning = false;  // set by constructors when the grid is narrower than requested

    GridDensity() = default;
    GridDensity(Grid g, std::vector<double> v) : grid(g), values(std::move(v)) {
        if (values.size() != grid.n) throw DomainError("GridDensity: size mismatch");
    }
};

/// Composite trapezoid rule over the full grid.
inline double trapezoid(const Grid& g, const std::vector<double>& f) {
    double s = 0.5 * (f.front() + f.back());
    for (std::size_t i = 1; i + 1 < g.n; ++i) s += f[i];
    return s * g.dx;
}

inline double trapezoid(const GridField& f) { return trapezoid(f.grid, f.values); }
inline double trapezoid(const GridDensity& d) { return trapezoid(d.grid, d.values); }

/// Mean of a field against a density on the same grid.
inline double mean_of(const GridDensity& rho, const std::vector<double>& f) {
    std::vector<double> w(rho.grid.n);
    for (std::size_t i = 0; i < rho.grid.n; ++i) w[i] = rho.values[i] * f[i];
    return trapezoid(rho.grid, w);
}

inline double mean_of(const GridDensity& rho, const GridField& f) {
    if (!(f.grid == rho.grid)) throw SupportMismatch("mean_of: fields on different grids");
    return mean_of(rho, f.values);
}

/// Second-order first derivative: centered interior, one-sided at the ends.
inline std::vector<double> derivative(const Grid& g, const std::vector<double>& f) {
    const std::size_t n = g.n;
    std::vector<double> d(n);
    const double h = g.dx;
    d[0] = (-3.0 * f[0] + 4.0 * f[1] - f[2]) / (2.0 * h);
    for (std::size_t i = 1; i + 1 < n; ++i) d[i] = (f[i + 1] - f[i - 1]) / (2.0 * h);
    d[n - 1] = (3.0 * f[n - 1] - 4.0 * f[n - 2] + f[n - 3]) / (2.0 * h);
    return d;
}

inline GridField derivative(const GridField& f) { return GridField(f.grid, derivative(f.grid, f.values)); }

/// Second-order second derivative (one-sided second-order at the ends).
inline std::vector<double> second_derivative(const Grid& g, const std::vector<double>& f) {
    const std::size_t n = g.n;
    std::vector<double> d(n);
    const double h2 = g.dx * g.dx;
    for (std::size_t i = 1; i + 1 < n; ++i) d[i] = (f[i + 1] - 2.0 * f[i] + f[i - 1]) / h2;
    d[0] = (2.0 * f[0] - 5.0 * f[1] + 4.0 * f[2] - f[3]) / h2;
    d[n - 1] = (2.0 * f[n - 1] - 5.0 * f[n - 2] + 4.0 * f[n - 3] - f[n - 4]) / h2;
    return d;
}

}  // namespace entrodyn

#endif
