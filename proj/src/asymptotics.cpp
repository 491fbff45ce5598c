#include "lacunary/asymptotics.hpp"

#include "lacunary/compensated.hpp"
#include "lacunary/quadrature.hpp"
#include "lacunary/series_eval.hpp"

#include <algorithm>
#include <cmath>

namespace lacunary {

namespace {

// Integrates f over [a, b] split so that each piece sees at most ~2 radians
// of the phase exp(-i y g(s)).
template <class F>
cplx phase_split(const Growth& g, cplx z, F&& f, double a, double b, double rel_tol, double abs_tol)
{
    double span = std::abs(z) * (g.eval(b) - g.eval(a));
    int n = std::clamp(static_cast<int>(std::ceil(span / 2.0)), 1, 1 << 20);
    CompensatedSum acc;
    double h = (b - a) / n;
    for (int i = 0; i < n; ++i) {
        double lo = a + i * h, hi = (i + 1 == n) ? b : a + (i + 1) * h;
        if (lo == 0 && g.derivative(0) == 0)
            acc += integrate_singular(f, lo, hi, rel_tol).value;
        else
            acc += integrate(f, lo, hi, rel_tol, abs_tol / n).value;
    }
    return acc.value();
}

}  // namespace

cplx laplace_integral(const Growth& g, cplx z, double rel_tol)
{
    if (!(z.real() > 0)) throw std::domain_error("laplace_integral needs Re z > 0");
    if (g.kind() == GrowthKind::power) {
        double b = g.param();
        return gamma_function(1.0 + 1.0 / b) * cpow(z, -1.0 / b);
    }
    const double x = z.real();
    const double g0 = g.eval(0);
    // beyond u_max the integrand is below e^{-60} of its start
    double s_max = g.inverse(g0 + 60.0 / x);
    auto f = [&](double s) { return std::exp(-z * (g.eval(s) - g0)); };
    // split by unit steps in s as well, so slowly growing g keeps resolution
    CompensatedSum acc;
    double step = std::max(1.0, s_max / 64);
    for (double a = 0; a < s_max; a += step) {
        double b = std::min(s_max, a + step);
        acc += phase_split(g, z, f, a, b, rel_tol, 1e-17 * step);
    }
    return std::exp(-z * g0) * acc.value();
}

cplx fractional_remainder(const Growth& g, cplx z, double tol)
{
    const double x = z.real();
    if (!(x > 0)) throw std::domain_error("fractional_remainder needs Re z > 0");
    CompensatedSum acc;
    for (long long k = 0;; ++k) {
        double gk = g.eval(static_cast<double>(k));
        if (std::abs(z) * std::exp(-x * gk) / x < 0.5 * tol) break;
        if (k >= 10'000'000) throw TermCapExceeded("fractional_remainder: too many jump points, Re z too small");
        double kd = static_cast<double>(k);
        // on [g(k), g(k+1)) the fractional part of g^{-1}(u) is s - k with u = g(s)
        auto f = [&](double s) { return std::exp(-z * g.eval(s)) * ((s - kd) * g.derivative(s)); };
        acc += phase_split(g, z, f, kd, kd + 1, 1e-13, 0.01 * tol / std::max(1.0, std::abs(z)));
    }
    return -z * acc.value();
}

AsymptoticDecomposition decompose(const Growth& g, cplx z)
{
    AsymptoticDecomposition d;
    d.z = z;
    d.integral_term = laplace_integral(g, z);
    d.remainder = fractional_remainder(g, z);
    return d;
}

double growth_constant(const Growth& g)
{
    auto profile = [&](double nu) {
        double base = g.inverse(nu);
        return [&g, nu, base](double u) { return g.inverse(nu * u) / base; };
    };
    auto coarse = profile(1e3);
    auto fine = profile(1e6);
    for (double u : {0.05, 0.2, 1.0, 3.0, 10.0}) {
        double a = coarse(u), b = fine(u);
        if (!(std::abs(a - b) <= 1e-6 * std::max(1.0, std::abs(b))))
            throw ScalingLimitFailure("growth_constant: inverse growth has no power-type scaling limit");
    }
    auto r = integrate_half_line([&](double u) { return std::exp(-u) * fine(u); }, 1e-13);
    return r.value.real();
}

double measure_rate(const Growth& g, double x)
{
    if (!(x > 0)) throw std::domain_error("measure_rate needs x > 0");
    return laplace_integral(g, cplx(2 * x, 0)).real();
}

}  // namespace lacunary
