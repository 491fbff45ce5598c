#include "doctest.h"
#include "lacunary/botcher.hpp"

#include <bit>
#include <cmath>
#include <random>

using namespace lacunary;

TEST_CASE("dyadic arithmetic")
{
    Dyadic half(1, 1), quarter(1, 2);
    CHECK((half + quarter) == Dyadic(3, 2));
    CHECK((half - half).is_zero());
    CHECK((half * quarter) == Dyadic(1, 3));
    CHECK(Dyadic(4, 3) == half);
    CHECK(Dyadic(6).log2_denominator() == -1);
    CHECK(Dyadic(3, 2).to_double() == 0.75);
    CHECK(Dyadic(-3, 2).str() == "-3/2^2");
    CHECK(Dyadic(12).str() == "12");
    CHECK(abs_le(Dyadic(-1, 1), Dyadic(1)));
    CHECK_FALSE(abs_le(Dyadic(3), Dyadic(-1, 1)));
    BigInt big = BigInt(1) << 200;
    CHECK(Dyadic(big + 1, 201).to_double() == doctest::Approx(0.5));
}

TEST_CASE("sparse polynomials and the averaging operator")
{
    using P = SparsePolynomial;
    P z = P::monomial(1, Dyadic(1), 64);
    P t = operator_T(z);
    REQUIRE(t.terms().size() == 7);
    for (int j = 0; j <= 6; ++j) CHECK(t.coeff(P::Power(1) << j) == Dyadic(1, j + 1));
    CHECK(operator_T(P::monomial(0, Dyadic(3), 64)) == P::monomial(0, Dyadic(3), 64));

    P q = P::monomial(3, Dyadic(5, 2), 64) + P::monomial(6, Dyadic(-1), 64);
    CHECK(operator_T(z + q) == operator_T(z) + operator_T(q));
    CHECK(inverse_T(operator_T(q)) == q);
    CHECK(inverse_T(operator_T(z)) == z);

    P over = P::monomial(60, Dyadic(1), 64) * P::monomial(10, Dyadic(1), 64);
    CHECK(over.empty());
    CHECK(over.dropped() == 1);
    CHECK(z.squared_argument() == P::monomial(2, Dyadic(1), 64));
    CHECK(std::abs(q.eval(cplx(0.5, 0.25)) - (1.25 * std::pow(cplx(0.5, 0.25), 3) - std::pow(cplx(0.5, 0.25), 6))) < 1e-15);

    // inverse identity on random sparse polynomials
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> pw(0, 200), num(-50, 50), den(0, 12);
    for (int trial = 0; trial < 20; ++trial) {
        P p(256);
        for (int i = 0; i < 6; ++i) p.add(static_cast<P::Power>(pw(rng)), Dyadic(num(rng), den(rng)));
        CHECK(inverse_T(operator_T(p)) == p);
    }
}

TEST_CASE("psi recurrence")
{
    auto s = psi_series(8, 256);
    CHECK(s.psi[0] == SparsePolynomial::monomial(0, Dyadic(1), 256));
    // psi_1 = T z and 2 psi_1(z) - psi_1(z^2) = z
    CHECK(s.psi[1] == operator_T(SparsePolynomial::monomial(1, Dyadic(1), 256)));
    CHECK(inverse_T(s.psi[1]) == SparsePolynomial::monomial(1, Dyadic(1), 256));
    CHECK(s.psi[1].coeff(1) == Dyadic(1, 1));
    for (int j = 1; j <= 8; ++j) CHECK(s.psi[1].coeff(SparsePolynomial::Power(1) << j) == Dyadic(1, j + 1));
    // hand expansion: psi_2 starts 1/8 z^2 + 1/4 z^3
    CHECK(s.psi[2].coeff(2) == Dyadic(1, 3));
    CHECK(s.psi[2].coeff(3) == Dyadic(1, 2));
    CHECK(s.psi[2].coeff(1).is_zero());

    CHECK(s.binary_lacunary());
    for (int k = 1; k <= 8; ++k)
        for (const auto& [p, c] : s.psi[k].terms()) CHECK(std::popcount(p) <= k);
    CHECK(s.max_coefficient() <= 1);
    CHECK(s.dropped_terms > 0);

    CHECK(psi_series(3).D == 32);
    CHECK_THROWS(psi_series(0));

    std::string js = psi_series(2, 16).to_json();
    CHECK(js.find("\"coeffs_log2_den\"") != std::string::npos);
    CHECK(js.find("\"powers\":[1,2,4,8,16]") != std::string::npos);
}

TEST_CASE("psi evaluation and the functional equation")
{
    auto s = psi_series(8, 256);
    CHECK(psi_eval(s, 0.3, 0).value == cplx(0));
    double h = 1e-6;
    cplx d = (psi_eval(s, 0.3, h).value - psi_eval(s, 0.3, -h).value) / (2 * h);
    CHECK(std::abs(d - 0.3) < 1e-9);
    CHECK(functional_residual(s, 0, cplx(0.4, 0.3)) == 0);
    CHECK_THROWS(psi_eval(s, 1.0, 0.5));
    CHECK_THROWS(psi_eval(s, 0.3, 1.5));

    // orbit evaluation agrees with the polynomials well inside the disk
    auto ov = psi_orbit_values(8, cplx(0.3, 0.2));
    for (int k = 0; k <= 8; ++k) CHECK(std::abs(ov[k] - s.psi[k].eval(cplx(0.3, 0.2))) < 1e-15);

    std::mt19937_64 rng(12345);
    std::uniform_real_distribution<double> U(0, 1);
    double worst = 0;
    for (int i = 0; i < 100; ++i) {
        cplx z = std::polar(std::sqrt(U(rng)), 2 * pi * U(rng));
        worst = std::max(worst, functional_residual(s, 0.3, z));
    }
    CHECK(worst < 1e-6);
    CHECK(functional_residual(s, 0.3, 0.7) < 1e-6);

    auto s6 = psi_series(6);
    double w6 = 0;
    for (int i = 0; i < 50; ++i) w6 = std::max(w6, functional_residual(s6, 0.1, std::polar(std::sqrt(U(rng)), 2 * pi * U(rng))));
    CHECK(w6 < 1e-8);

    // doubling K from 4 to 8 shrinks the residual by at least 0.3^4/2
    auto s4 = psi_series(4);
    for (double r : {0.5, 0.9, 1.0}) {
        cplx z = std::polar(r, 0.7);
        CHECK(functional_residual(s, 0.3, z) <= 0.5 * std::pow(0.3, 4) * functional_residual(s4, 0.3, z));
    }
    auto pv = psi_eval(s, 0.3, 0.5);
    CHECK(pv.tail_estimate == doctest::Approx(std::pow(0.3, 10) * (0.3 / 0.7) / 0.7));
}

TEST_CASE("Julia curve against escape time")
{
    auto s = psi_series(8, 256);
    CHECK(julia_curve(s, 0.3, 0).empty());
    auto c = julia_curve(s, 0.3, 256);
    // real lambda: symmetric about the horizontal axis
    for (std::size_t i = 1; i < 128; ++i) {
        CHECK(std::abs(c[i].x - c[256 - i].x) < 1e-10);
        CHECK(std::abs(c[i].y + c[256 - i].y) < 1e-10);
    }
    for (cplx lam : {cplx(0.3, 0), cplx(0, 0.3), cplx(0.01, 0)}) {
        auto curve = julia_curve(s, lam, 1024);
        auto cloud = escape_time_oracle(lam, 256, 200, 100, curve_box(curve));
        CHECK_FALSE(cloud.points.empty());
        CHECK(curve_to_cloud_distance(curve, cloud) < 2);
    }
    CHECK(points_csv({{1, 2}}).rfind("x,y\n", 0) == 0);
    CHECK_THROWS(escape_time_oracle(0.3, 1, 10, 10, Box{}));
}

TEST_CASE("self-similarity of psi_1")
{
    for (auto [rho, m, n] : {std::tuple{0.9, 1L, 2}, std::tuple{0.9, 1L, 1}, std::tuple{0.5, 3L, 4}, std::tuple{0.99, 5L, 6}}) {
        auto r = self_similarity_check(rho, m, n);
        CHECK(r.corrected < 1e-12);
    }
    // the displayed form does not close
    CHECK(self_similarity_check(0.9, 1, 2).printed > 0.1);
    auto tiny = self_similarity_check(1e-4, 1, 2);
    CHECK(tiny.corrected < 1e-15);
    CHECK(tiny.printed < 1e-3);
    CHECK_THROWS(self_similarity_check(1.0, 1, 2));
}
