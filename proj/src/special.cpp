#include "lacunary/special.hpp"

#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/zeta.hpp>

#include <cmath>
#include <stdexcept>

namespace lacunary {

namespace {

// Lanczos coefficients, g = 671/128, 14 terms
const double lanczos_cof[14] = {
    57.1562356658629235,     -59.5979603554754912,    14.1360979747417471,
    -0.491913816097620199,   .339946499848118887e-4,  .465236289270485756e-4,
    -.983744753048795646e-4, .158088703224912494e-3,  -.210264441724104883e-3,
    .217439618115212643e-3,  -.164318106536763890e-3, .844182239838527433e-4,
    -.261908384015814087e-4, .368991826595316234e-5};

cplx lanczos_log_gamma(cplx x)
{
    cplx y = x;
    cplx tmp = x + 671.0 / 128.0;
    tmp = (x + 0.5) * std::log(tmp) - tmp;
    cplx ser = 0.999999999999997092;
    for (double c : lanczos_cof) {
        y += 1.0;
        ser += c / y;
    }
    return tmp + std::log(2.5066282746310005 * ser / x);
}

}  // namespace

cplx log_sin_pi(cplx z)
{
    cplx w = pi * z;
    if (std::abs(w.imag()) < 20) return std::log(std::sin(w));
    // sin w = e^{-iw}(e^{2iw}-1)/(2i) for Im w > 0, mirror otherwise
    if (w.imag() > 0) return -I * w + std::log((std::exp(2.0 * I * w) - 1.0) / (2.0 * I));
    return I * w + std::log((1.0 - std::exp(-2.0 * I * w)) / (2.0 * I));
}

cplx log_gamma(cplx z)
{
    if (z.real() <= 0 && z.imag() == 0 && z.real() == std::floor(z.real()))
        throw std::domain_error("log_gamma at a pole");
    if (z.real() < 0.5) return std::log(pi) - log_sin_pi(z) - lanczos_log_gamma(1.0 - z);
    return lanczos_log_gamma(z);
}

cplx gamma_function(cplx z)
{
    if (z.imag() == 0 && z.real() > 0 && z.real() < 170) return boost::math::tgamma(z.real());
    return std::exp(log_gamma(z));
}

double gamma_function(double x) { return boost::math::tgamma(x); }

double zeta(double s)
{
    if (!(s > 1)) throw std::domain_error("zeta needs s > 1");
    return boost::math::zeta(s);
}

double hurwitz_zeta(double s, double a)
{
    if (!(s > 1)) throw std::domain_error("hurwitz zeta needs s > 1");
    if (!(a > 0)) throw std::domain_error("hurwitz zeta needs a > 0");
    // direct head plus Euler-Maclaurin tail
    // B_{2j}/(2j)!
    static const double b2j[] = {1.0 / 12, -1.0 / 720, 1.0 / 30240, -1.0 / 1209600,
                                 1.0 / 47900160, -691.0 / 1307674368000.0,
                                 1.0 / 74724249600.0, -3617.0 / 10670622842880000.0};
    const int N = 12;
    double head = 0;
    for (int n = N - 1; n >= 0; --n) head += std::pow(n + a, -s);
    double x = N + a;
    double tail = std::pow(x, 1 - s) / (s - 1) + 0.5 * std::pow(x, -s);
    double rising = s;                 // s (s+1) ... (s+2j-2)
    double xp = std::pow(x, -s - 1);   // x^{-s-2j+1}
    for (int j = 0; j < 8; ++j) {
        tail += b2j[j] * rising * xp;
        rising *= (s + 2 * j + 1) * (s + 2 * j + 2);
        xp /= x * x;
    }
    return head + tail;
}

}  // namespace lacunary
