// Acceptance harness: one PASS/FAIL line per criterion, then a summary line.
#include "lacunary/asymptotics.hpp"
#include "lacunary/botcher.hpp"
#include "lacunary/boundary_profile.hpp"
#include "lacunary/closed_forms.hpp"
#include "lacunary/formal_series.hpp"
#include "lacunary/measure_blowup.hpp"
#include "lacunary/series_eval.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

using namespace lacunary;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char* f, double a, double b = 0, double c = 0, double d = 0)
{
    char buf[512];
    std::snprintf(buf, sizeof buf, f, a, b, c, d);
    return buf;
}

Outcome theta_identity()
{
    std::mt19937_64 rng(101);
    std::uniform_real_distribution<double> X(0.01, 3), Y(-1, 1);
    auto g = Growth::power(2);
    double worst = 0;
    for (int i = 0; i < 30; ++i) {
        cplx z(X(rng), Y(rng));
        worst = std::max(worst, std::abs(theta_identity_eval(z) - direct_sum(g, z, 1e-15).value));
    }
    return {worst < 1e-10, fmt("max |theta - direct| = %.3e over 30 points (< 1e-10)", worst)};
}

Outcome geometric_representation()
{
    double worst = 0, ratio_err = 0;
    for (double a : {2.0, 3.0}) {
        auto rep = make_geometric_rep(a);
        auto g = Growth::geometric(a);
        std::mt19937_64 rng(static_cast<unsigned>(200 + a));
        std::uniform_real_distribution<double> R(0.05, 4), T(-1, 1);
        for (int i = 0; i < 20; ++i) {
            cplx z = std::polar(R(rng), T(rng));
            worst = std::max(worst, std::abs(geometric_rep_eval(rep, z) - direct_sum(g, z, 1e-15).value));
        }
        double r = std::abs(geometric_fourier_coeff(a, 6)) / std::abs(geometric_fourier_coeff(a, 5)) / fourier_decay_ratio(a);
        ratio_err = std::max(ratio_err, std::abs(r - 1));
    }
    return {worst < 1e-8 && ratio_err < 0.10,
            fmt("max |rep - direct| = %.3e (< 1e-8); |c6/c5| vs exp(-pi^2/log a) off by %.1f%% (< 10%%)", worst, 100 * ratio_err)};
}

Outcome functional_equation()
{
    double worst = 0;
    for (double a : {2.0, 3.0}) {
        auto rep = make_geometric_rep(a);
        std::mt19937_64 rng(static_cast<unsigned>(300 + a));
        std::uniform_real_distribution<double> R(0.05, 3), T(-1.2, 1.2);
        for (int i = 0; i < 50; ++i) {
            cplx z = std::polar(R(rng), T(rng));
            cplx res = geometric_rep_eval(rep, z) - geometric_rep_eval(rep, a * z) - std::exp(-z);
            worst = std::max(worst, std::abs(res));
        }
    }
    return {worst < 1e-10, fmt("max |f(z) - f(az) - exp(-z)| = %.3e over 50 points each for a = 2, 3 (< 1e-10)", worst)};
}

Outcome asymptotic_coefficients()
{
    auto s3 = asymptotic_coeffs(Rational(3), 3);
    auto s32 = asymptotic_coeffs(Rational(3, 2), 3);
    const double z52 = zeta(2.5), z112 = zeta(5.5);
    struct Item {
        const char* name;
        cplx got;
        double want;
    };
    Item items[] = {
        {"b=3 z", s3.coeff[0], -1.0 / 120},
        {"b=3 z^3", s3.coeff[2], 1.0 / 792},
        {"b=3/2 z", s32.coeff[0], -3 * z52 / (16 * pi * pi)},
        {"b=3/2 z^2", s32.coeff[1], 1.0 / 240},
        {"b=3/2 z^3", s32.coeff[2], 315 * z112 / (2048 * std::pow(pi, 5))},
    };
    bool ok = true;
    std::ostringstream os;
    for (const auto& it : items) {
        double d = std::abs(it.got - it.want);
        ok = ok && d < 1e-12;
        os << it.name << ": " << fmt("%.15g vs %.15g (diff %.1e); ", it.got.real(), it.want, d);
    }
    return {ok, os.str()};
}

Outcome borel_sum()
{
    double worst = 0;
    for (Rational b : {Rational(3), Rational(3, 2)}) {
        for (int i = 0; i < 10; ++i) {
            double z = 0.2 + 0.8 * i / 9.0;
            double bv = b.value();
            cplx f = gamma_function(1 + 1 / bv) * std::pow(z, -1 / bv) - 0.5 + borel_eval(b, z);
            cplx d = direct_sum(Growth::power(bv), z, 1e-15).value;
            worst = std::max(worst, std::abs(f - d) / std::abs(d));
        }
    }
    return {worst < 1e-6, fmt("max relative |Borel - direct| = %.3e over z in [0.2, 1], b = 3, 3/2 (< 1e-6)", worst)};
}

Outcome contour_oracle()
{
    double worst = 0;
    for (int k = 1; k <= 3; ++k) {
        cplx blocks = borel_block(Rational(3), k, -1, 0.4) + borel_block(Rational(3), k, 1, 0.4);
        worst = std::max(worst, std::abs(saddle_term_quadrature(Rational(3), k, 0.4) - blocks));
    }
    return {worst < 1e-8, fmt("max |saddle quadrature - Borel block| = %.3e for k <= 3 (< 1e-8)", worst)};
}

Outcome leading_blowup()
{
    std::vector<double> xs;
    for (int j = 4; j <= 14; ++j) xs.push_back(std::ldexp(1.0, -j));
    double worst = 0;
    std::ostringstream os;
    for (double b : {2.0, 3.0, 1.5}) {
        auto e = profile_limit(Growth::power(b), b, 0, xs);
        double d = std::abs(e.extrapolated_value - cplx(gamma_function(1 + 1 / b)));
        worst = std::max(worst, d);
        os << fmt("b=%g: %.3e; ", b, d);
    }
    return {worst < 1e-4, os.str() + "(< 1e-4)"};
}

Outcome rational_profiles()
{
    std::vector<double> xs = {1e-2, 3e-3, 1e-3, 3e-4, 1e-4, 3e-5, 1e-5};
    auto g3 = Growth::power(3);
    auto e = profile_limit(g3, 3, 2 * pi / 9, xs);
    cplx target = gamma_function(4.0 / 3) * (1 + 2 * std::cos(2 * pi / 9)) / 3.0;
    double rel = std::abs(e.extrapolated_value - target) / std::abs(target);
    double worst_half = 0;
    for (double x : {1e-2, 3e-3, 1e-3, 3e-4, 1e-4}) worst_half = std::max(worst_half, std::abs(direct_sum(g3, cplx(x, pi), 1e-13).value));
    return {rel < 0.01 && worst_half < 10,
            fmt("1/9 relative error %.3e (< 1%%); max |f| at 1/2 down to x = 1e-4 is %.3f (< 10)", rel, worst_half)};
}

Outcome three_halves_value()
{
    std::vector<double> ds = {1e-3, 3e-4, 1e-4, 3e-5, 1e-5};
    auto e = three_halves_profile({1, 1}, ds);
    cplx target = std::sqrt(cplx(0, 6 * pi)) / std::pow(3.0, 1.75);
    double rel = std::abs(e.extrapolated_value - target) / std::abs(target);
    return {rel < 0.02, fmt("extrapolated %.6f%+.6fi vs %.6f%+.6fi", e.extrapolated_value.real(), e.extrapolated_value.imag(),
                            target.real(), target.imag()) +
                            fmt(", relative error %.3e (< 2%%)", rel)};
}

Outcome duality()
{
    double worst = 0;
    for (RationalPoint p : {RationalPoint(1, 1), RationalPoint(1, 2), RationalPoint(1, 9), RationalPoint(2, 3), RationalPoint(5, 7)})
        worst = std::max(worst, duality_residual(p));
    return {worst < 1e-12, fmt("max closed-form residual %.3e at 5 rational points (< 1e-12); printed form at (1,1): %.3f",
                               worst, duality_printed_residual({1, 1}))};
}

Outcome measure_ratio(std::string& extra)
{
    auto g2 = Growth::power(2);
    auto rows = measure_ratio_scan(g2, {0, 1, 1 << 14}, {0.2, 0.1, 0.05, 0.02});
    bool decreasing = true;
    std::ostringstream os;
    os << "|ratio - 1| at x = 0.2, 0.1, 0.05, 0.02:";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        double d = std::abs(rows[i].ratio - 1);
        os << fmt(" %.3e", d);
        if (i && !(d < std::abs(rows[i - 1].ratio - 1))) decreasing = false;
    }
    double last = std::abs(rows.back().ratio - 1);
    os << (decreasing ? "; strictly decreasing" : "; not strictly decreasing") << fmt("; last %.3e (< 0.15)", last);

    auto generic = measure_ratio_scan(g2, {0.1, 0.37, 64}, {0.2, 0.1, 0.05, 0.02});
    std::ostringstream ex;
    ex << "diagnostic window [0.1, 0.37]: |ratio - 1| =";
    for (const auto& r : generic) ex << fmt(" %.3e", std::abs(r.ratio - 1));
    extra = ex.str();
    return {decreasing && last < 0.15, os.str()};
}

Outcome botcher_structure()
{
    auto s = psi_series(8, 256);
    bool lac = s.binary_lacunary();
    std::mt19937_64 rng(12345);
    std::uniform_real_distribution<double> U(0, 1);
    double worst = 0;
    for (int i = 0; i < 100; ++i) {
        cplx z = std::polar(std::sqrt(U(rng)), 2 * pi * U(rng));
        worst = std::max(worst, functional_residual(s, 0.3, z));
    }
    std::mt19937_64 prng(77);
    std::uniform_int_distribution<int> pw(0, 250), num(-1000, 1000), den(0, 30);
    bool inverse = true;
    for (int trial = 0; trial < 20; ++trial) {
        SparsePolynomial p(256);
        for (int i = 0; i < 8; ++i) p.add(static_cast<SparsePolynomial::Power>(pw(prng)), Dyadic(num(prng), den(prng)));
        inverse = inverse && inverse_T(operator_T(p)) == p;
    }
    return {lac && worst < 1e-6 && inverse,
            std::string("lacunarity k <= 8: ") + (lac ? "exact" : "violated") + fmt("; max residual %.3e at lambda = 0.3, K = 8 (< 1e-6)", worst) +
                "; inverse identity on 20 random polynomials: " + (inverse ? "exact" : "broken")};
}

Outcome julia_vs_escape()
{
    auto s = psi_series(8, 256);
    double worst = 0;
    std::ostringstream os;
    for (cplx lam : {cplx(0.3, 0), cplx(0, 0.3)}) {
        auto curve = julia_curve(s, lam, 4096);
        auto cloud = escape_time_oracle(lam, 512, 200, 100, curve_box(curve));
        double d = curve_to_cloud_distance(curve, cloud);
        worst = std::max(worst, d);
        os << fmt("lambda = %g%+gi: %.3f cells; ", lam.real(), lam.imag(), d);
    }
    return {worst < 3, os.str() + "(< 3)"};
}

Outcome pointwise_bound()
{
    double worst = 0;
    for (double b : {2.0, 3.0}) {
        auto g = Growth::power(b);
        std::mt19937_64 rng(static_cast<unsigned>(1400 + b));
        std::uniform_real_distribution<double> X(1e-3, 0.1), Y(-pi, pi);
        for (int i = 0; i < 100; ++i) {
            double x = X(rng), y = Y(rng);
            double f = std::abs(direct_sum(g, cplx(x, y), 1e-13).value);
            worst = std::max(worst, f / laplace_integral(g, cplx(x, 0)).real());
        }
    }
    return {worst <= 1.05, fmt("max |f(x+iy)| / int exp(-g(s) x) ds = %.6f over 100 samples each for b = 2, 3 (<= 1.05)", worst)};
}

}  // namespace

int main()
{
    std::ostringstream report;
    int passed = 0, total = 0;
    auto run = [&](int id, const char* name, const std::function<Outcome()>& f) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = f();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        ++total;
        if (o.pass) ++passed;
        std::string line = std::string(o.pass ? "PASS" : "FAIL") + " [" + std::to_string(id) + "] " + name + ": " + o.detail +
                           fmt(" (%.1fs)", secs);
        std::cout << line << std::endl;
        report << line << '\n';
    };
    std::string measure_extra;
    run(1, "theta identity", theta_identity);
    run(2, "geometric representation", geometric_representation);
    run(3, "functional equation", functional_equation);
    run(4, "asymptotic coefficients", asymptotic_coefficients);
    run(5, "Borel sum equals the function", borel_sum);
    run(6, "contour oracle", contour_oracle);
    run(7, "leading blow-up", leading_blowup);
    run(8, "rational-point profiles", rational_profiles);
    run(9, "b=3/2 boundary value", three_halves_value);
    run(10, "duality", duality);
    run(11, "in-measure ratio", [&] { return measure_ratio(measure_extra); });
    run(12, "Bottcher structure", botcher_structure);
    run(13, "Julia curve vs escape time", julia_vs_escape);
    run(14, "pointwise bound", pointwise_bound);
    if (!measure_extra.empty()) {
        std::cout << "note: " << measure_extra << '\n';
        report << "note: " << measure_extra << '\n';
    }
    std::string summary = "acceptance: " + std::to_string(passed) + "/" + std::to_string(total) + " criteria passed";
    std::cout << summary << std::endl;
    report << summary << '\n';
    std::ofstream("acceptance_report.txt") << report.str();
    return passed == total ? 0 : 1;
}
