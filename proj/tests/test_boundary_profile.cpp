#include "doctest.h"
#include "lacunary/boundary_profile.hpp"
#include "lacunary/series_eval.hpp"

#include <cmath>

using namespace lacunary;

TEST_CASE("rational points and exponential sums")
{
    RationalPoint p(2, 4);
    CHECK(p.m == 1);
    CHECK(p.n == 2);
    RationalPoint q(3, -9);
    CHECK(q.m == -1);
    CHECK(q.n == 3);
    CHECK_THROWS(RationalPoint(1, 0));

    auto g3 = Growth::power(3);
    CHECK(exp_sum(g3, 0, 17) == cplx(17));
    CHECK(std::abs(exp_sum(g3, pi, 2)) < 1e-12);
    CHECK(std::abs(exp_sum(g3, 1.2345, 500)) <= 500);
}

TEST_CASE("Gauss profiles")
{
    CHECK(std::abs(gauss_profile(3, {1, 2})) < 1e-15);
    CHECK(std::abs(gauss_profile(3, {1, 9}) - cplx((1 + 2 * std::cos(2 * pi / 9)) / 3)) < 1e-15);
    CHECK(std::abs(gauss_profile(3, {1, 9}).real() - 0.844030) < 1e-6);
    CHECK(std::abs(gauss_profile(2, {1, 4}) - cplx(0.5, -0.5)) < 1e-15);
    for (long n : {5L, 7L, 12L}) {
        for (long m = 1; m < n; ++m) {
            cplx a = gauss_profile(3, {m, n}), b = gauss_profile(3, {m + n, n});
            CHECK(std::abs(a - b) < 1e-14);
            CHECK(std::abs(a) <= 1 + 1e-14);
        }
    }
}

TEST_CASE("profile limits at rational points")
{
    std::vector<double> xs = {1e-2, 3e-3, 1e-3, 3e-4, 1e-4, 3e-5, 1e-5};
    for (double b : {2.0, 3.0, 1.5}) {
        auto e = profile_limit(Growth::power(b), b, 0, xs);
        CHECK(std::abs(e.extrapolated_value - cplx(gamma_function(1 + 1 / b))) < 1e-3);
    }
    auto half = profile_limit(Growth::power(3), 3, pi, xs);
    CHECK(std::abs(half.extrapolated_value) < 5e-3);
    auto ninth = profile_limit(Growth::power(3), 3, 2 * pi / 9, xs);
    cplx target = gamma_function(4.0 / 3) * gauss_profile(3, {1, 9});
    CHECK(std::abs(ninth.extrapolated_value - target) < 0.01 * std::abs(target));
    CHECK(ninth.extrapolants.size() == xs.size() - 1);
    CHECK(ninth.convergence_indicator < 1e-4);

    std::string csv = ninth.to_csv();
    CHECK(csv.rfind("x,re,im,abs,scaled_abs\n", 0) == 0);

    CHECK_THROWS(profile_limit(Growth::power(3), 3, 0, {1e-3, 1e-2}));
    CHECK_THROWS(profile_limit(Growth::power(3), 3, 0, {1e-3}));
    CHECK_THROWS(profile_limit(Growth::power(3), 3, 0, {1e-6, 1e-8}));
}

TEST_CASE("irrational probes stay small")
{
    std::vector<double> xs = {1e-2, 3e-3, 1e-3, 3e-4, 1e-4, 3e-5, 1e-5, 3e-6, 1e-6, 3e-7, 1e-7};
    double bound = 0.1 * gamma_function(4.0 / 3);
    for (double y : {2 * pi / std::sqrt(2.0), pi * (std::sqrt(5.0) - 1), 2.0}) {
        auto e = profile_limit(Growth::power(3), 3, y, xs);
        CHECK(std::abs(e.extrapolated_value) < bound);
    }
}

TEST_CASE("three halves boundary values")
{
    cplx t11 = three_halves_target({1, 1});
    CHECK(std::abs(t11) == doctest::Approx(std::sqrt(6 * pi) / std::pow(3.0, 1.75)).epsilon(1e-14));
    CHECK(std::abs(t11) == doctest::Approx(0.635).epsilon(1e-3));
    CHECK(std::arg(t11) == doctest::Approx(pi / 4));
    CHECK(std::abs(three_halves_target({1, 2})) < 1e-15);

    std::vector<double> ds = {1e-3, 3e-4, 1e-4, 3e-5, 1e-5};
    auto e = three_halves_profile({1, 1}, ds);
    CHECK(std::abs(e.extrapolated_value - t11) < 0.02 * std::abs(t11));
    CHECK(e.exponent_d == 2.0);
    auto z = three_halves_profile({1, 2}, ds);
    CHECK(std::abs(z.extrapolated_value) < 1e-3);
    CHECK_THROWS(three_halves_target({-1, 2}));
}

TEST_CASE("duality")
{
    for (RationalPoint p : {RationalPoint(1, 1), RationalPoint(1, 2), RationalPoint(1, 9), RationalPoint(2, 3),
                            RationalPoint(5, 7)})
        CHECK(duality_residual(p) < 1e-12);
    // the printed argument convention does not close
    CHECK(duality_printed_residual({1, 1}) > 0.1);
}

TEST_CASE("weighted limits")
{
    auto g3 = Growth::power(3);
    auto id = [](double N) { return N; };
    auto one = [](double) { return 1.0; };
    auto w9 = weighted_limit(g3, 2 * pi / 9, id, one, 20000);
    CHECK(std::abs(w9.L - gauss_profile(3, {1, 9})) < 1e-3);
    CHECK(w9.limit_detected);
    auto w0 = weighted_limit(g3, 0, id, one, 1000);
    CHECK(std::abs(w0.L - cplx(1)) < 1e-15);
    CHECK(w0.Phi(1e-3) == doctest::Approx(gamma_function(4.0 / 3) * std::pow(1e-3, -1.0 / 3)).epsilon(1e-10));
    auto w2 = weighted_limit(g3, pi, id, one, 20000);
    CHECK(std::abs(w2.L) < 1e-3);
    CHECK(w2.spread < 1e-3);

    // f(x + iy) = L Phi(x) + o(Phi): relative error decreases
    double prev = INFINITY;
    for (double x : {1e-1, 1e-2, 1e-3, 1e-4}) {
        cplx f = direct_sum(g3, cplx(x, 2 * pi / 9), 1e-13).value;
        double rel = std::abs(f - w9.L * w9.Phi(x)) / w9.Phi(x);
        CHECK(rel < prev);
        prev = rel;
    }

    // a sum with no limit is flagged, not fatal
    auto wn = weighted_limit(Growth::power(2), 1.0, [](double N) { return std::sqrt(N); },
                             [](double u) { return 0.5 / std::sqrt(std::max(u, 1e-300)); }, 20000);
    CHECK_FALSE(wn.limit_detected);
}

TEST_CASE("standard function, blow-up predictions, critical curve")
{
    CHECK(standard_Q(0.5, 10) == 0.5);
    CHECK(standard_Q(2.0 / 4.0, 10) == 0.5);
    CHECK(standard_Q(3.0, 10) == 1.0);
    CHECK(standard_Q(1 / std::sqrt(2.0), 50) == 0.0);
    CHECK_THROWS(standard_Q(0.5, 0));

    auto g3 = Growth::power(3);
    for (double d : {1e-2, 1e-3, 1e-4}) {
        cplx f = direct_sum(g3, cplx(d, 2 * pi / 9), 1e-13).value;
        CHECK(std::abs(rational_blowup(3, {1, 9}, d) - f) <= 5);
        CHECK(std::abs(direct_sum(g3, cplx(d, pi), 1e-13).value) < 10);
    }
    CHECK(std::abs(rational_blowup(3, {0, 1}, 1e-3) - gamma_function(4.0 / 3) * 10) < 1e-13);

    CHECK(critical_curve(0.1) == doctest::Approx(1.04430800267e-4).epsilon(1e-10));
    CHECK(critical_curve(1 - 1e-12) < 1e-14);
    CHECK(critical_curve(0.2) > critical_curve(0.1));
    CHECK_THROWS(critical_curve(1.5));
}
