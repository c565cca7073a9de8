#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "entrodyn/densities.hpp"
#include "entrodyn/functionals.hpp"
#include "entrodyn/quantum.hpp"

using namespace entrodyn;

namespace {
Grid sym_grid(double half, std::size_t n) { return Grid::over(-half, half, n); }
}  // namespace

TEST_CASE("normalize restores unit mass and is exactly idempotent") {
    GridDensity d = gaussian_on_grid({0.0, 1.0}, sym_grid(8.0, 2048));

    SECTION("already normalized is unchanged") {
        GridDensity e = normalize(d);
        for (std::size_t i = 0; i < d.grid.n; i += 97)
            REQUIRE(std::abs(e.values[i] - d.values[i]) < 1e-12);
    }
    SECTION("doubled values are restored") {
        GridDensity twice = d;
        for (double& v : twice.values) v *= 2.0;
        GridDensity e = normalize(twice);
        for (std::size_t i = 0; i < d.grid.n; i += 97)
            REQUIRE(std::abs(e.values[i] - d.values[i]) < 1e-12);
    }
    SECTION("all-zero input raises ZeroMass") {
        GridDensity zero(sym_grid(1.0, 16), std::vector<double>(16, 0.0));
        REQUIRE_THROWS_AS(normalize(zero), ZeroMass);
    }
    SECTION("normalize(normalize(d)) == normalize(d) bitwise") {
        GridDensity once = normalize(d);
        GridDensity twice = normalize(once);
        REQUIRE(once.values == twice.values);
    }
}

TEST_CASE("gaussian_on_grid") {
    SECTION("unit variance on a wide grid") {
        GridDensity d = gaussian_on_grid({0.0, 1.0}, sym_grid(8.0, 2048));
        REQUIRE_FALSE(d.span_warning);
        Moments m = moments(d);
        REQUIRE(std::abs(m.mean) < 1e-9);
        REQUIRE(std::abs(m.variance - 1.0) < 1e-6);
    }
    SECTION("peak value is 1/sqrt(2 pi)") {
        Grid g = sym_grid(8.0, 2049);  // odd count puts a node at x = 0
        GridDensity d = gaussian_on_grid({0.0, 1.0}, g);
        REQUIRE(std::abs(d.values[1024] - 1.0 / std::sqrt(2.0 * M_PI)) < 1e-6);
    }
    SECTION("narrow localization bump inside [0,1]") {
        Grid g(0.0, 1e-5, 100001);
        GridDensity d = gaussian_on_grid({0.5, 0.5e-3}, g);
        Moments m = moments(d);
        REQUIRE(std::abs(m.mean - 0.5) < 1e-9);
        REQUIRE(std::abs(m.variance - 2.5e-7) < 1e-12);
    }
    SECTION("narrow grid warns, strict mode throws") {
        Grid g = sym_grid(2.0, 64);
        REQUIRE(gaussian_on_grid({0.0, 1.0}, g).span_warning);
        REQUIRE_THROWS_AS(gaussian_on_grid({0.0, 1.0}, g, Strictness::strict), GridTooNarrow);
    }
}

TEST_CASE("exponential_on_grid") {
    Grid g(0.0, 20.0 / 16384, 16385);
    GridDensity d = exponential_on_grid(1.0, g);
    Moments m = moments(d);
    REQUIRE(std::abs(m.mean - 1.0) < 1e-6);
    REQUIRE(std::abs(m.variance - 1.0) < 1e-5);

    GridDensity d2 = exponential_on_grid(2.0, Grid(0.0, 10.0 / 16384, 16385));
    REQUIRE(std::abs(moments(d2).mean - 0.5) < 1e-6);

    REQUIRE(std::abs(differential_entropy(d).value - 1.0) < 1e-4);
    REQUIRE_THROWS_AS(exponential_on_grid(1.0, Grid(0.0, 0.1, 64), Strictness::strict),
                      GridTooNarrow);
}

TEST_CASE("bernoulli_pmf") {
    SECTION("G = 1 gives the two-point distribution") {
        DiscreteDistribution d = bernoulli_pmf(1, 0.5);
        REQUIRE(d.probs.size() == 2);
        REQUIRE(std::abs(d.probs[0] - 0.5) < 1e-14);
        REQUIRE(std::abs(d.probs[1] - 0.5) < 1e-14);
    }
    SECTION("moments G p and G p (1-p)") {
        DiscreteDistribution d = bernoulli_pmf(20, 0.5);
        Moments m = moments(d);
        REQUIRE(std::abs(m.mean - 10.0) < 1e-10);
        REQUIRE(std::abs(m.variance - 5.0) < 1e-9);
    }
    SECTION("moments at G = 10^4 to 1e-8 relative") {
        DiscreteDistribution d = bernoulli_pmf(10000, 0.37);
        Moments m = moments(d);
        REQUIRE(std::abs(m.mean / (10000 * 0.37) - 1.0) < 1e-8);
        REQUIRE(std::abs(m.variance / (10000 * 0.37 * 0.63) - 1.0) < 1e-8);
    }
    SECTION("de Moivre-Laplace sup-norm at G = 10^4") {
        const std::size_t G = 10000;
        const double p = 0.5;
        DiscreteDistribution d = bernoulli_pmf(G, p);
        const double var = G * p * (1.0 - p);
        double worst = 0.0;
        for (std::size_t k = 0; k <= G; ++k) {
            const double z = (static_cast<double>(k) - G * p);
            const double gauss = std::exp(-z * z / (2.0 * var)) / std::sqrt(2.0 * M_PI * var);
            worst = std::max(worst, std::abs(d.probs[k] - gauss));
        }
        REQUIRE(worst < 1e-6);
    }
    SECTION("domain errors") {
        REQUIRE_THROWS_AS(bernoulli_pmf(10, 0.0), DomainError);
        REQUIRE_THROWS_AS(bernoulli_pmf(10, 1.0), DomainError);
    }
}

TEST_CASE("moments of the free-packet density match the closed form") {
    const double alpha = 1.0, D = 1.0, t = 0.7;
    QuantumState st = free_packet(alpha, D, t, sym_grid(30.0, 8192));
    const double expect = (std::pow(alpha, 4) + 4.0 * D * D * t * t) / (2.0 * alpha * alpha);
    REQUIRE(std::abs(moments(st.rho).variance - expect) < 1e-6 * expect);
}

TEST_CASE("coarse_grain") {
    SECTION("uniform density in four bins") {
        Grid g(0.0, 1.0 / 1024, 1025);
        GridDensity u = normalize(GridDensity(g, std::vector<double>(g.n, 1.0)));
        DiscreteDistribution d = coarse_grain(u, 0.25);
        REQUIRE(d.probs.size() == 4);
        for (double q : d.probs) REQUIRE(std::abs(q - 0.25) < 1e-12);
    }
    SECTION("full-span bin collects everything") {
        GridDensity d = gaussian_on_grid({0.0, 1.0}, sym_grid(8.0, 1024));
        DiscreteDistribution one = coarse_grain(d, d.grid.span());
        REQUIRE(one.probs.size() == 1);
        REQUIRE(std::abs(one.probs[0] - 1.0) < 1e-12);
    }
    SECTION("localization bump at micro resolution") {
        Grid g(0.0, 1e-6, 1000001);
        GridDensity d = gaussian_on_grid({0.5, 0.5e-3}, g);
        EntropyValue s = shannon_discrete(coarse_grain(d, 1e-6));
        // oracle: -ln r + S(rho) = 6 ln 10 + (1/2) ln(2 pi e sigma^2) = 7.63355
        REQUIRE(std::abs(s.value - 7.6336) < 5e-4);
    }
    SECTION("mass is conserved for awkward resolutions") {
        GridDensity d = gaussian_on_grid({0.0, 1.0}, sym_grid(8.0, 3201));
        for (double r : {0.013, 0.25, 1.7, 5.0}) {
            DiscreteDistribution q = coarse_grain(d, r);
            double sum = 0.0;
            for (double p : q.probs) sum += p;
            REQUIRE(std::abs(sum - 1.0) < 1e-9);
        }
    }
    SECTION("too fine a resolution throws") {
        GridDensity d = gaussian_on_grid({0.0, 1.0}, sym_grid(8.0, 1024));
        REQUIRE_THROWS_AS(coarse_grain(d, 0.5 * d.grid.dx), ResolutionTooFine);
    }
    SECTION("partial trailing bin is flagged and r is rounded") {
        Grid g(0.0, 0.01, 101);
        GridDensity u = normalize(GridDensity(g, std::vector<double>(g.n, 1.0)));
        CoarseGrainResult res = coarse_grain_detail(u, 0.03);
        REQUIRE(res.partial_trailing_bin);  // 100 cells, 3 per bin
        REQUIRE(std::abs(res.r_effective - 0.03) < 1e-12);
    }
}

TEST_CASE("scaling law S(beta rho(beta(x - a))) = S(rho) - ln beta") {
    Grid g = sym_grid(10.0, 4096);
    GridDensity d = gaussian_on_grid({0.3, 1.3}, g);
    const double s0 = differential_entropy(d).value;
    for (double beta : {0.5, 2.0, 10.0}) {
        const double a = 0.7;
        Grid gs(a + g.x0 / beta, g.dx / beta, g.n);
        std::vector<double> v(g.n);
        for (std::size_t i = 0; i < g.n; ++i) v[i] = beta * d.values[i];
        GridDensity scaled(gs, std::move(v));
        REQUIRE(std::abs(differential_entropy(scaled).value - (s0 - std::log(beta))) < 1e-4);
    }
}
