#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracle.hpp"
#include "waring/errors.hpp"
#include "waring/heur.hpp"

using namespace waring;

namespace {

const std::vector<std::pair<unsigned, unsigned>> kFifths{{2, 5}, {3, 5}, {4, 5}};
constexpr double kScherSeidl = 563661204304422162432.0;

VolumeOptions mc_opts(std::uint64_t samples, std::uint64_t seed = 0x5eed20240001ULL) {
    VolumeOptions o;
    o.mc_samples = samples;
    o.mc_seed = seed;
    return o;
}

}  // namespace

TEST_CASE("fifth-power volumes") {
    double a2 = volume(2, 5, VolumeMethod::quadrature).value;
    CHECK(a2 > 0.9501);
    CHECK(a2 < 0.9502);
    CHECK(volume(3, 5, VolumeMethod::quadrature).value == doctest::Approx(0.86629).epsilon(1e-4));
    CHECK(volume(4, 5, VolumeMethod::quadrature).value == doctest::Approx(0.76306).epsilon(1e-4));
}

TEST_CASE("quadrature matches the gamma closed form") {
    for (unsigned k = 1; k <= 9; ++k)
        for (unsigned j = 1; j <= 8; ++j) {
            auto v = volume(j, k, VolumeMethod::quadrature, 1e-9);
            INFO("j=" << j << " k=" << k);
            CHECK(std::abs(v.value - oracle::volume_closed_form(j, k)) < 1e-8);
            CHECK(v.error <= 1e-9);
        }
    CHECK(volume(2, 2, VolumeMethod::quadrature).value == doctest::Approx(std::numbers::pi / 4));
    CHECK(volume(3, 1, VolumeMethod::quadrature).value == doctest::Approx(1.0 / 6));
}

TEST_CASE("volumes shrink with j") {
    for (unsigned k = 2; k <= 8; ++k) {
        double prev = 1.0;
        for (unsigned j = 2; j <= 10; ++j) {
            double v = volume(j, k, VolumeMethod::quadrature).value;
            CHECK(v > 0.0);
            CHECK(v < prev);
            prev = v;
        }
    }
}

TEST_CASE("Monte Carlo agrees with quadrature") {
    for (unsigned k = 1; k <= 6; ++k)
        for (unsigned j = 2; j <= 4; ++j) {
            auto q = volume(j, k, VolumeMethod::quadrature);
            auto m = volume(j, k, VolumeMethod::monte_carlo, 1.0, mc_opts(1'000'000));
            INFO("j=" << j << " k=" << k << " mc=" << m.value << " se=" << m.error);
            CHECK(m.samples == 1'000'000);
            CHECK(std::abs(m.value - q.value) <= 3 * std::hypot(m.error, q.error));
        }
}

TEST_CASE("Monte Carlo is reproducible") {
    auto a = volume(3, 5, VolumeMethod::monte_carlo, 1.0, mc_opts(200'000, 42));
    auto b = volume(3, 5, VolumeMethod::monte_carlo, 1.0, mc_opts(200'000, 42));
    auto c = volume(3, 5, VolumeMethod::monte_carlo, 1.0, mc_opts(200'000, 43));
    CHECK(a.value == b.value);
    CHECK(a.seed == 42);
    CHECK(a.value != c.value);
}

TEST_CASE("unreachable tolerance carries the best estimate") {
    try {
        volume(3, 5, VolumeMethod::monte_carlo, 1e-6, mc_opts(10'000));
        FAIL("expected ToleranceError");
    } catch (const ToleranceError& e) {
        CHECK(e.best().samples == 10'000);
        CHECK(e.best().value == doctest::Approx(0.866).epsilon(0.05));
    }
    VolumeOptions shallow;
    shallow.max_depth = 2;
    CHECK_THROWS_AS(volume(4, 7, VolumeMethod::quadrature, 1e-12, shallow), ToleranceError);
    CHECK_THROWS_AS(volume(0, 5, VolumeMethod::quadrature), PreconditionError);
    CHECK_THROWS_AS(volume(2, 5, VolumeMethod::quadrature, 0.0), PreconditionError);
}

TEST_CASE("density constants") {
    HeuristicModel m(5, {2, 3, 4});
    CHECK(m.density_constant(2) == doctest::Approx(0.19003).epsilon(0.005));
    CHECK(m.density_constant(3) == doctest::Approx(0.08663).epsilon(0.005));
    CHECK(m.density_constant(4) == doctest::Approx(0.02544).epsilon(0.005));
    CHECK(m.density_constant(2) * m.density_constant(3) == doctest::Approx(0.01646).epsilon(0.005));
    CHECK(m.count_constant(3) == doctest::Approx(0.14438).epsilon(0.001));
    CHECK(density(kScherSeidl, 4, 5, m) == doctest::Approx(0.0000018).epsilon(0.01));
    CHECK(density(1.0, 2, 5, m) == m.density_constant(2));
    CHECK_THROWS_AS(m.volume(5), NotFoundError);
    CHECK_THROWS_AS(density(10.0, 2, 4, m), PreconditionError);
}

TEST_CASE("exponent calculus") {
    auto log = exponent_E({{2, 5}, {3, 5}});
    CHECK(log.E == Rational(-1));
    CHECK(log.regime == ExponentRegime::logarithmic);
    CHECK(exponent_E({{3, 6}, {4, 6}, {5, 6}}).E == Rational(-1));
    auto six = exponent_E({{2, 6}, {3, 6}, {4, 6}, {5, 6}});
    CHECK(six.E == Rational(-5, 3));
    CHECK(six.regime == ExponentRegime::finite_expected);
    CHECK(exponent_E({{4, 5}}).regime == ExponentRegime::infinite);
    CHECK(exponent_E(kFifths).E == Rational(-6, 5));

    for (unsigned k = 3; k <= 12; ++k)
        for (unsigned d = 2; d < k; ++d) {
            std::vector<std::pair<unsigned, unsigned>> pairs;
            for (unsigned i = d; i < k; ++i) pairs.emplace_back(i, k);
            std::int64_t x = k - d;
            CHECK(exponent_E(pairs).E == Rational(-x * (x + 1), 2 * k));
        }
    CHECK_THROWS_AS(exponent_E({}), PreconditionError);
}

TEST_CASE("expected coincidences") {
    HeuristicModel m(5, {2, 3, 4});
    auto r = expected_coincidences(kScherSeidl, kFifths, m);
    CHECK(r.exponent.regime == ExponentRegime::finite_expected);
    CHECK(r.constant == doctest::Approx(0.0004188).epsilon(0.001));
    REQUIRE(r.value);
    // C b^(-1/5) / (1/5)
    CHECK(*r.value == doctest::Approx(5 * r.constant * std::pow(kScherSeidl, -0.2)));
    CHECK(*r.value == doctest::Approx(1.4815e-7).epsilon(0.001));

    auto inf = expected_coincidences(2.0, {{2, 5}, {3, 5}}, m);
    CHECK(inf.exponent.regime == ExponentRegime::logarithmic);
    CHECK_FALSE(inf.value);
    CHECK(inf.constant == doctest::Approx(0.01646).epsilon(0.005));
    CHECK_THROWS_AS(expected_coincidences(0.5, kFifths, m), PreconditionError);
}

TEST_CASE("two-square counting formula tracks the lattice count") {
    // pairs a >= b >= 1 with a^2 + b^2 < N, against N V(2,2) / 2!
    const std::uint64_t N = 1'000'000;
    std::uint64_t pairs = 0;
    for (std::uint64_t a = 1; a * a < N; ++a)
        for (std::uint64_t b = 1; b <= a && a * a + b * b < N; ++b) ++pairs;
    HeuristicModel m(2, {2});
    double predicted = m.count_constant(2) * static_cast<double>(N);
    CHECK(std::abs(pairs - predicted) / predicted < 0.10);
}

TEST_CASE("adaptive Simpson") {
    SimpsonStats st;
    double v = adaptive_simpson([](double x) { return std::sin(x); }, 0.0, std::numbers::pi, 1e-10, 50, st);
    CHECK(v == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(st.converged);
}
