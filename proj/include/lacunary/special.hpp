#pragma once

#include <complex>

namespace lacunary {

using cplx = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846;
inline const cplx I{0.0, 1.0};

// log Gamma for complex argument (Lanczos, reflection for Re z < 1/2).
// Branch of the imaginary part is not the principal log Gamma branch;
// exp(log_gamma(z)) is Gamma(z).
cplx log_gamma(cplx z);
cplx gamma_function(cplx z);
double gamma_function(double x);

// Riemann zeta for real s > 1, Hurwitz zeta sum_{n>=0} (n+a)^{-s} for s > 1, a > 0.
double zeta(double s);
double hurwitz_zeta(double s, double a);

// Principal power with the cut on the negative real axis.
inline cplx cpow(cplx z, double e) { return z == cplx(0) ? cplx(0) : std::exp(e * std::log(z)); }
inline cplx cpow(cplx z, cplx e) { return z == cplx(0) ? cplx(0) : std::exp(e * std::log(z)); }

// log(sin(pi z)) without overflow for large |Im z|, modulo 2 pi i.
cplx log_sin_pi(cplx z);

}  // namespace lacunary
