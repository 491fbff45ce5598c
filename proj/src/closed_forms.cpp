#include "lacunary/closed_forms.hpp"

#include "lacunary/compensated.hpp"
#include "lacunary/quadrature.hpp"
#include "lacunary/series_eval.hpp"

#include <cmath>
#include <stdexcept>

namespace lacunary {

cplx theta_identity_eval(cplx z)
{
    if (!(z.real() > 0)) throw std::domain_error("theta_identity_eval needs Re z > 0");
    cplx root = std::sqrt(pi / z);
    cplx w = -pi * pi / z;
    CompensatedSum dual;
    for (long k = 1; k < 1'000'000; ++k) {
        cplx t = std::exp(w * static_cast<double>(k * k));
        dual += t;
        if (std::abs(t) < 1e-17) break;
    }
    return 0.5 * root - 0.5 + root * dual.value();
}

CheckGResult geometric_checkG(double a, cplx z, int M)
{
    if (!(a > 1)) throw std::invalid_argument("geometric_checkG needs a > 1");
    const double az = std::abs(z);
    CompensatedSum acc;
    cplx pw = 1;        // (-z)^n / n!
    double an = 1;      // a^n
    CheckGResult r;
    for (int n = 1;; ++n) {
        pw *= -z / static_cast<double>(n);
        an *= a;
        acc += pw / (1.0 - an);
        // remaining terms shrink at least by |z|/(n+2) each step
        double next = std::abs(pw) * az / (n + 1) / (an * a - 1);
        double q = az / (n + 2);
        double bound = q < 1 ? next / (1 - q) : INFINITY;
        if ((M > 0 && n >= M) || (M <= 0 && bound < 1e-15 && n > az)) {
            r.value = acc.value();
            r.terms = n;
            r.tail_bound = bound;
            return r;
        }
        if (n > 100000) throw std::runtime_error("geometric_checkG: series did not settle");
    }
}

cplx geometric_checkG_stable(double a, cplx z)
{
    if (!(a > 1)) throw std::invalid_argument("geometric_checkG needs a > 1");
    CompensatedSum acc;
    double an = 1;
    for (int n = 1; n < 100000; ++n) {
        an *= a;
        cplx w = -z / an;
        cplx em1 = std::abs(w) < 1e-4 ? w * (1.0 + w * (0.5 + w / 6.0 * (1.0 + w / 4.0))) : std::exp(w) - 1.0;
        acc += -em1;
        if (std::abs(w) < 1e-18) break;
    }
    return acc.value();
}

cplx geometric_fourier_coeff(double a, long k)
{
    if (k == 0) throw std::invalid_argument("geometric_fourier_coeff needs k != 0");
    if (!(a > 1)) throw std::invalid_argument("geometric_fourier_coeff needs a > 1");
    double la = std::log(a);
    return gamma_function(cplx(0, -2.0 * pi * k / la)) / la;
}

double geometric_c0(double a, double rel_tol)
{
    if (!(a > 1)) throw std::invalid_argument("geometric_c0 needs a > 1");
    auto g = Growth::geometric(a);
    auto f = [&](double y) { return direct_sum(g, std::pow(a, y), 1e-16).value; };
    auto G = [&](double y) { return geometric_checkG(a, std::pow(a, y)).value; };
    auto i1 = integrate(f, 0, 1, rel_tol, 1e-15);
    auto i3 = integrate(G, 0, 1, rel_tol, 1e-15);
    double tol = 1e-10;
    if (i1.error > tol || i3.error > tol) throw QuadratureError("geometric_c0 quadrature", std::max(i1.error, i3.error));
    return i1.value.real() + 0.5 - i3.value.real();
}

GeometricRep make_geometric_rep(double a)
{
    GeometricRep rep;
    rep.a = a;
    rep.c0 = geometric_c0(a);
    // e^{-K pi^2/log a} < 1e-14
    rep.fourier_cutoff = std::max(1, static_cast<int>(std::ceil(14 * std::log(10.0) * std::log(a) / (pi * pi))));
    return rep;
}

int fourier_terms_needed(const GeometricRep& rep, cplx z)
{
    // |c_k z^{2k pi i/log a}| ~ exp(-y (pi/2 - |arg z|)), y = 2 |k| pi / log a
    double margin = pi / 2 - std::abs(std::arg(z));
    if (!(margin > 0)) throw std::domain_error("geometric representation needs Re z > 0");
    double la = std::log(rep.a);
    int k = static_cast<int>(std::ceil(38.0 * la / (2 * pi * margin)));
    return std::max(rep.fourier_cutoff, std::min(k, 4000));
}

namespace {

cplx assemble(const GeometricRep& rep, cplx z, cplx G)
{
    const double la = std::log(rep.a);
    const cplx lz = std::log(z);
    const int K = fourier_terms_needed(rep, z);
    CompensatedSum fourier;
    for (int k = K; k >= 1; --k) {
        for (int s : {1, -1}) {
            cplx w(0, 2.0 * pi * k * s / la);
            fourier += std::exp(log_gamma(-w) - std::log(la) + w * lz);
        }
    }
    return -lz / la + G + rep.c0 + fourier.value();
}

}  // namespace

cplx geometric_rep_eval(const GeometricRep& rep, cplx z)
{
    if (!(z.real() > 0)) throw std::domain_error("geometric_rep_eval needs Re z > 0");
    cplx G = std::abs(z) <= 1 ? geometric_checkG(rep.a, z, rep.entire_series_cutoff).value
                              : geometric_checkG_stable(rep.a, z);
    return assemble(rep, z, G);
}

double geometric_zeta_variant_residual(const GeometricRep& rep, cplx z)
{
    cplx zeta_var = 1.0 - std::exp(-z);
    cplx v = assemble(rep, zeta_var, geometric_checkG_stable(rep.a, zeta_var));
    return std::abs(v - direct_sum(Growth::geometric(rep.a), z, 1e-15).value);
}

double fourier_modulus_asymptotic(double a, long k)
{
    double la = std::log(a);
    return std::sqrt(1.0 / (pi * la)) * std::exp(-std::abs(k) * pi * pi / la);
}

double fourier_decay_ratio(double a) { return std::exp(-pi * pi / std::log(a)); }

cplx lacunary_power_series(int a, cplx s)
{
    if (a < 2) throw std::invalid_argument("lacunary_power_series needs integer a >= 2");
    if (!(std::abs(s) < 1)) throw std::domain_error("lacunary_power_series needs |s| < 1");
    CompensatedSum acc;
    cplx p = s;
    while (std::abs(p) > 1e-20) {
        acc += p;
        cplx q = p;
        for (int i = 1; i < a; ++i) q *= p;
        p = q;
    }
    return acc.value();
}

RegroupResult rational_angle_regroup(int a, long m, int j, double rho)
{
    if (a < 2) throw std::invalid_argument("rational_angle_regroup needs a >= 2");
    if (j < 0 || j > 40) throw std::invalid_argument("rational_angle_regroup needs 0 <= j <= 40");
    if (!(rho >= 0 && rho < 1)) throw std::domain_error("rational_angle_regroup needs 0 <= rho < 1");
    CompensatedSum poly;
    double rp = rho;  // rho^{a^n}
    for (int n = 0; n < j; ++n) {
        long long den = 1;
        for (int i = 0; i < j - n; ++i) den *= a;
        long long num = ((m % den) + den) % den;
        cplx phase = std::exp(cplx(0, 2.0 * pi * static_cast<double>(num) / static_cast<double>(den)));
        poly += rp * (phase - 1.0);
        rp = std::pow(rp, a);
    }
    return {poly.value(), rho};
}

}  // namespace lacunary
