#include "doctest.h"
#include "lacunary/growth.hpp"

#include <cmath>
#include <stdexcept>
#include <random>

using namespace lacunary;

TEST_CASE("power growth values")
{
    auto g = Growth::power(2);
    CHECK(g.eval(3) == doctest::Approx(9));
    CHECK(g.start_index() == 1);
    CHECK(Growth::power(1.5).eval(4) == doctest::Approx(8).epsilon(1e-15));
    CHECK(g.inverse(9) == doctest::Approx(3).epsilon(1e-15));
    CHECK(Growth::power(3).inverse(8) == doctest::Approx(2).epsilon(1e-15));
}

TEST_CASE("geometric growth values and normalization")
{
    auto g = Growth::geometric(2, true);
    CHECK(g.eval(0) == 0);
    CHECK(g.start_index() == 0);
    auto raw = Growth::geometric(2);
    CHECK(raw.inverse(8) == doctest::Approx(3).epsilon(1e-15));
    CHECK(raw.eval(5) == doctest::Approx(32));
}

TEST_CASE("invalid parameters rejected")
{
    CHECK_THROWS_AS(Growth::power(1.0), std::invalid_argument);
    CHECK_THROWS_AS(Growth::geometric(0.5), std::invalid_argument);
    CHECK_THROWS_AS(Growth::power(2).eval(-1), std::domain_error);
    CHECK_THROWS_AS(Growth::power(2).inverse(-1), std::domain_error);
    CHECK_THROWS_AS(Growth::custom([](double k) { return -k; }, [](double) { return -1.0; }),
                    std::invalid_argument);
}

TEST_CASE("custom growth inverse by bracketing")
{
    auto g = Growth::custom([](double k) { return k * k + k; }, [](double k) { return 2 * k + 1; });
    for (double u : {0.5, 2.0, 12.0, 1e6}) {
        double k = g.inverse(u);
        CHECK(g.eval(k) == doctest::Approx(u).epsilon(1e-12));
    }
}

TEST_CASE("monotonicity, round trip and derivative on random samples")
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> U(0.0, 50.0);
    std::vector<Growth> gs = {Growth::power(2), Growth::power(1.5), Growth::power(3),
                              Growth::geometric(2), Growth::geometric(3, true),
                              Growth::custom([](double k) { return std::pow(k, 2.5) + k; },
                                             [](double k) { return 2.5 * std::pow(k, 1.5) + 1; })};
    for (const auto& g : gs) {
        double lo = g.start_index();
        for (int i = 0; i < 100; ++i) {
            double k = lo + U(rng);
            if (g.kind() == GrowthKind::geometric) k = lo + U(rng) / 5;
            double k2 = k + 0.01 + U(rng) / 10;
            CHECK(g.eval(k2) > g.eval(k));
            double back = g.inverse(g.eval(k));
            CHECK(std::abs(back - k) <= 1e-12 * std::max(1.0, k));
            double h = 1e-5 * std::max(1.0, k);
            double fd = (g.eval(k + h) - g.eval(k - std::min(h, k))) / (h + std::min(h, k));
            CHECK(fd == doctest::Approx(g.derivative(k)).epsilon(1e-6));
        }
    }
}
