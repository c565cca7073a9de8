#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "entrodyn/densities.hpp"
#include "entrodyn/functionals.hpp"
#include "entrodyn/gaussian.hpp"
#include "entrodyn/quantum.hpp"

using namespace entrodyn;

namespace {
Grid sym_grid(double half, std::size_t n) { return Grid::over(-half, half, n); }

GridDensity unit_gaussian(double sigma = 1.0, double mean = 0.0, std::size_t n = 4096) {
    return gaussian_on_grid({mean, sigma}, sym_grid(std::max(8.0 * sigma + std::abs(mean), 8.0), n));
}
}  // namespace

TEST_CASE("shannon_discrete") {
    REQUIRE(std::abs(shannon_discrete(DiscreteDistribution({0.1, 0.9}), EntropyBase::two).value -
                     0.469) < 1e-3);
    REQUIRE(std::abs(shannon_discrete(DiscreteDistribution({0.5, 0.5}), EntropyBase::two).value -
                     1.0) < 1e-12);
    REQUIRE(shannon_discrete(DiscreteDistribution({1.0})).value == 0.0);

    DiscreteDistribution uniform27(std::vector<double>(27, 1.0 / 27.0));
    REQUIRE(std::abs(shannon_discrete(uniform27, EntropyBase::two).value - 4.755) < 1e-3);

    SECTION("base conversion is an exact ln 2 factor") {
        DiscreteDistribution mu({0.2, 0.3, 0.5});
        EntropyValue nats = shannon_discrete(mu, EntropyBase::e);
        EntropyValue bits = shannon_discrete(mu, EntropyBase::two);
        REQUIRE(std::abs(nats.value - bits.in_nats()) < 1e-14);
        REQUIRE(std::abs(bits.value - nats.in_bits()) < 1e-14);
    }
}

TEST_CASE("differential_entropy") {
    SECTION("unit Gaussian") {
        REQUIRE(std::abs(differential_entropy(unit_gaussian()).value -
                         0.5 * std::log(2.0 * M_PI * M_E)) < 1e-4);
    }
    SECTION("narrow localization bump") {
        // (1/2) ln(2 pi e sigma^2) at sigma = 0.5e-3: the exact value is
        // 1.418939 - ln(2000) = -6.18199 (the printed -6.7 drops a factor e).
        Grid g(0.0, 1e-5, 100001);
        GridDensity d = gaussian_on_grid({0.5, 0.5e-3}, g);
        REQUIRE(std::abs(differential_entropy(d).value - (-6.18199)) < 1e-4);
    }
    SECTION("exponential density has S = 1 - ln lambda") {
        GridDensity d = exponential_on_grid(1.0, Grid(0.0, 20.0 / 16384, 16385));
        REQUIRE(std::abs(differential_entropy(d).value - 1.0) < 1e-4);
    }
}

TEST_CASE("coarse_grained_entropy") {
    SECTION("equals -ln r + S(rho) for a resolved Gaussian") {
        GridDensity d = gaussian_on_grid({0.0, 1.0}, Grid(-8.0, 0.0025, 6401));
        const double s = coarse_grained_entropy(d, 0.01).value;
        REQUIRE(std::abs(s - 6.024) < 1e-3);
    }
    SECTION("exponential at r = 0.01 gives 1 - ln r") {
        GridDensity d = exponential_on_grid(1.0, Grid(0.0, 0.0025, 8001));
        REQUIRE(std::abs(coarse_grained_entropy(d, 0.01).value - 5.605) < 0.01);
    }
    SECTION("localization bump at r = 1e-6") {
        Grid g(0.0, 1e-6, 1000001);
        GridDensity d = gaussian_on_grid({0.5, 0.5e-3}, g);
        const double sB = coarse_grained_entropy(d, 1e-6).value;
        const double s = differential_entropy(d).value;
        REQUIRE(sB >= s - std::log(1e-6));          // lower bound, Jensen
        REQUIRE(std::abs(sB - 7.63355) < 5e-4);     // oracle: -ln r + S
    }
}

TEST_CASE("entropy_with_unit") {
    GridDensity d = unit_gaussian(1.3);
    SECTION("subtracts ln(unit)") {
        const double s = differential_entropy(d).value;
        REQUIRE(std::abs(entropy_with_unit(d, 0.05).value - (s - std::log(0.05))) < 1e-12);
        REQUIRE(std::abs(entropy_with_unit(d, 1.0).value - s) < 1e-12);
    }
    SECTION("vanishes when sigma/unit = (2 pi e)^{-1/2}") {
        const double unit = 1.3 * std::sqrt(2.0 * M_PI * M_E);
        REQUIRE(std::abs(entropy_with_unit(d, unit).value) < 1e-6);
    }
    SECTION("Gaussian closed form (1/2) ln(2 pi e (sigma/unit)^2)") {
        const double unit = 0.07;
        const double expect = 0.5 * std::log(2.0 * M_PI * M_E * (1.3 / unit) * (1.3 / unit));
        REQUIRE(std::abs(entropy_with_unit(d, unit).value - expect) < 1e-4);
    }
}

TEST_CASE("kullback") {
    Grid g = sym_grid(16.0, 8192);
    SECTION("identical densities give zero") {
        GridDensity d = gaussian_on_grid({0.0, 1.0}, g);
        REQUIRE(std::abs(kullback(d, d)) < 1e-12);
    }
    SECTION("matches the Gaussian closed form") {
        GridDensity a = gaussian_on_grid({0.0, 1.0}, g);
        GridDensity b = gaussian_on_grid({0.0, 2.0}, g);
        GridDensity c = gaussian_on_grid({1.0, 1.0}, g);
        REQUIRE(std::abs(kullback(a, b) - 0.31815) < 1e-4);
        REQUIRE(std::abs(kullback(a, c) - 0.5) < 1e-4);
        REQUIRE(std::abs(conditional_entropy(a, c) + 0.5) < 1e-4);
    }
    SECTION("grid mismatch raises") {
        GridDensity a = gaussian_on_grid({0.0, 1.0}, g);
        GridDensity b = gaussian_on_grid({0.0, 1.0}, sym_grid(16.0, 4096));
        REQUIRE_THROWS_AS(kullback(a, b), SupportMismatch);
    }
    SECTION("vanishing reference on the support raises") {
        GridDensity a = gaussian_on_grid({0.0, 1.0}, g);
        std::vector<double> v(g.n, 0.0);
        for (std::size_t i = 0; i < g.n; ++i)
            if (g.x(i) > 2.0) v[i] = 1.0;
        GridDensity b = normalize(GridDensity(g, std::move(v)));
        REQUIRE_THROWS_AS(kullback(a, b), SupportMismatch);
    }
}

TEST_CASE("fisher_information") {
    REQUIRE(std::abs(fisher_information(unit_gaussian(1.0)) - 1.0) < 1e-3);
    REQUIRE(std::abs(fisher_information(unit_gaussian(2.0)) - 0.25) < 1e-3);

    SECTION("heat kernel at D = 1, t = 0.5") {
        // sigma^2 = 2 D t = 1
        REQUIRE(std::abs(fisher_information(unit_gaussian(1.0, 0.0, 8192)) - 1.0) < 1e-3);
    }
    SECTION("Cramer-Rao lower bound") {
        GridDensity d = unit_gaussian(1.7, 0.4, 16384);
        REQUIRE(fisher_information(d) >= 1.0 / moments(d).variance - 1e-6);
    }
}

TEST_CASE("entropy_power") {
    REQUIRE(std::abs(entropy_power(differential_entropy(unit_gaussian())) - 1.0) < 1e-3);

    SECTION("exponential: e/sqrt(2 pi e) below sigma = 1") {
        GridDensity d = exponential_on_grid(1.0, Grid(0.0, 20.0 / 16384, 16385));
        const double power = entropy_power(differential_entropy(d));
        REQUIRE(std::abs(power - M_E / std::sqrt(2.0 * M_PI * M_E)) < 1e-3);
        REQUIRE(power <= std::sqrt(moments(d).variance));
    }
    SECTION("scaling by a tenth") {
        EntropyValue s{0.5 * std::log(2.0 * M_PI * M_E) - std::log(10.0), EntropyBase::e};
        REQUIRE(std::abs(entropy_power(s) - 0.1) < 1e-12);
    }
    SECTION("requires nats") {
        REQUIRE_THROWS_AS(entropy_power(EntropyValue{1.0, EntropyBase::two}), DomainError);
    }
}

TEST_CASE("quantum_potential") {
    const double D = 0.8;
    SECTION("Gaussian closed form and mean") {
        const double sigma = 1.2, mean = 0.3;
        GridDensity d = unit_gaussian(sigma, mean, 8192);
        GridField q = quantum_potential(d, D);
        const double s2 = sigma * sigma;
        for (std::size_t i = q.grid.n / 4; i < 3 * q.grid.n / 4; i += 131) {
            const double x = q.grid.x(i) - mean;
            const double expect = 2.0 * D * D * (x * x / (4.0 * s2 * s2) - 1.0 / (2.0 * s2));
            REQUIRE(std::abs(q.values[i] - expect) < 1e-5);
        }
        REQUIRE(std::abs(mean_of(d, q) + D * D / (2.0 * s2)) < 1e-5);
    }
    SECTION("<Q> = -(D^2/2) Fisher") {
        GridDensity d = unit_gaussian(0.9, -0.2, 8192);
        const double lhs = mean_of(d, quantum_potential(d, D));
        const double rhs = -0.5 * D * D * fisher_information(d);
        REQUIRE(std::abs(lhs - rhs) < 1e-3 * std::abs(rhs));
    }
    SECTION("ground-state oscillator: Q = x^2/2 - 1/2 in D = 1/2 units") {
        QuantumState st = stationary_state(0, sym_grid(8.0, 8192));
        GridField q = quantum_potential(st.rho, 0.5);
        for (std::size_t i = 3 * q.grid.n / 8; i < 5 * q.grid.n / 8; i += 113) {
            const double x = q.grid.x(i);
            REQUIRE(std::abs(q.values[i] - (0.5 * x * x - 0.5)) < 1e-5);
        }
    }
    SECTION("<Q> = -<u^2>/2 with u = D grad ln rho") {
        GridDensity d = unit_gaussian(1.1, 0.5, 8192);
        GridField u = osmotic_velocity(d, D);
        std::vector<double> u2(u.grid.n);
        for (std::size_t i = 0; i < u.grid.n; ++i) u2[i] = u.values[i] * u.values[i];
        const double lhs = mean_of(d, quantum_potential(d, D));
        REQUIRE(std::abs(lhs + 0.5 * mean_of(d, u2)) < 1e-3 * std::abs(lhs));
    }
}
