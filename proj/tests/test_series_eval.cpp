#include "doctest.h"
#include "lacunary/series_eval.hpp"

#include <cmath>
#include <random>

using namespace lacunary;

TEST_CASE("known sums")
{
    auto r = direct_sum(Growth::power(2), 1.0, 1e-12);
    CHECK(std::abs(r.value - cplx(0.386318602413326077)) < 1e-14);
    CHECK(r.terms_used <= 6);
    CHECK(r.tail_bound < 1e-12);

    // sum_{k>=0} e^{-2^k} and the k >= 1 part
    auto geo = direct_sum(Growth::geometric(2), 1.0, 1e-12);
    CHECK(std::abs(geo.value - cplx(0.521865938459879)) < 1e-13);
    CHECK(geo.terms_used <= 7);
    auto geo1 = direct_sum(Growth::geometric(2, false, 1), 1.0, 1e-12);
    CHECK(std::abs(geo1.value - cplx(0.153986497288437)) < 1e-13);

    auto c2 = direct_sum(Growth::power(2), cplx(0.2, 0.7), 1e-13);
    CHECK(std::abs(c2.value - cplx(0.378554308303755427, -0.634319199953860457)) < 1e-12);
    auto c3 = direct_sum(Growth::power(3), cplx(0.05, 0.3), 1e-13);
    CHECK(std::abs(c3.value - cplx(0.391487024669633508, -0.998949780441663406)) < 1e-12);
    auto g2 = direct_sum(Growth::geometric(2), cplx(0.5, -1), 1e-13);
    CHECK(std::abs(g2.value - cplx(0.0831709126188859168, 0.760491910355625667)) < 1e-12);
}

TEST_CASE("dominant first term for large Re z")
{
    auto r = direct_sum(Growth::power(2), cplx(60, 3), 1e-12);
    CHECK(r.terms_used == 1);
    CHECK(std::abs(r.value - std::exp(cplx(-60, -3))) < 1e-30);
}

TEST_CASE("coefficients with polynomial bound")
{
    Coefficients c{[](long long k) { return cplx(static_cast<double>(k), 0); }, 1.0, 1.0};
    auto r = direct_sum(Growth::power(2), 0.5, 1e-13, c);
    double ref = 0;
    for (int k = 1; k < 60; ++k) ref += k * std::exp(-0.5 * k * k);
    CHECK(std::abs(r.value.real() - ref) < 1e-13);
}

TEST_CASE("preconditions")
{
    CHECK_THROWS_AS(direct_sum(Growth::power(2), cplx(0, 1), 1e-12), std::domain_error);
    CHECK_THROWS_AS(direct_sum(Growth::power(2), 1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(direct_sum(Growth::power(1.01), 1e-9, 1e-14), TermCapExceeded);
}

TEST_CASE("functional relation for geometric growth")
{
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> X(0.1, 5), Y(-3, 3);
    const double tol = 1e-13;
    for (double a : {2.0, 3.0}) {
        auto g = Growth::geometric(a);
        for (int i = 0; i < 50; ++i) {
            cplx z(X(rng), Y(rng));
            cplx d = direct_sum(g, z, tol).value - direct_sum(g, a * z, tol).value;
            CHECK(std::abs(d - std::exp(-z)) < 10 * tol);
        }
    }
}

TEST_CASE("conjugation symmetry and monotone real growth")
{
    auto g = Growth::power(1.5);
    cplx z(0.07, 0.9);
    auto a = direct_sum(g, z, 1e-12).value, b = direct_sum(g, std::conj(z), 1e-12).value;
    CHECK(std::abs(a - std::conj(b)) < 1e-11);
    double prev = 0;
    for (double x : {2.0, 1.0, 0.5, 0.1, 0.01}) {
        double v = std::abs(direct_sum(g, x, 1e-12).value);
        CHECK(v >= prev);
        prev = v;
    }
}

TEST_CASE("grid evaluation")
{
    auto g = Growth::power(2);
    std::vector<cplx> pts = {1.0, cplx(0.3, 1), cplx(2, -4)};
    auto res = grid_eval(g, pts, 1e-13);
    REQUIRE(res.size() == 3);
    for (std::size_t i = 0; i < pts.size(); ++i)
        CHECK(res[i].value == direct_sum(g, pts[i], 1e-13).value);
    CHECK(grid_eval(g, {}, 1e-13).empty());
    try {
        grid_eval(g, {1.0, cplx(0.5, 0), cplx(-1, 0), cplx(0, 2)}, 1e-13);
        CHECK(false);
    } catch (const GridError& e) {
        CHECK(e.index() == 2);
    }
}
