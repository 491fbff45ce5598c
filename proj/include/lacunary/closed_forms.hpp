#pragma once

#include "lacunary/special.hpp"

namespace lacunary {

// sum_{k>=1} exp(-z k^2) through the theta modular transformation
//   (1/2) sqrt(pi/z) - 1/2 + sqrt(pi/z) sum_{k>=1} exp(-k^2 pi^2 / z)
cplx theta_identity_eval(cplx z);

// Entire part of the geometric representation,
//   sum_{n=1}^{M} (-z)^n / (n! (1 - a^n)).
// M = 0 selects the smallest cutoff whose factorial tail bound is < 1e-15.
struct CheckGResult {
    cplx value;
    int terms = 0;
    double tail_bound = 0;
};
CheckGResult geometric_checkG(double a, cplx z, int M = 0);

// Same function through the rearranged sum_{n>=1} (1 - exp(-z/a^n)),
// free of the cancellation the power series suffers for large |z|.
cplx geometric_checkG_stable(double a, cplx z);

// c_k = Gamma(-2 k pi i / log a) / log a, k != 0
cplx geometric_fourier_coeff(double a, long k);

// Mean Fourier coefficient by quadrature over one period.
double geometric_c0(double a, double rel_tol = 1e-13);

// Representation of sum_{k>=0} exp(-z a^k) for Re z > 0:
//   -log z/log a + checkG(z) + c0 + sum_{0<|k|<=K} c_k z^{2 k pi i/log a}
struct GeometricRep {
    double a = 2;
    double c0 = 0;
    int fourier_cutoff = 0;        // minimum K; extended per point when arg z is large
    int entire_series_cutoff = 0;  // 0 means adaptive
};

GeometricRep make_geometric_rep(double a);
int fourier_terms_needed(const GeometricRep& rep, cplx z);
cplx geometric_rep_eval(const GeometricRep& rep, cplx z);

// Same representation written in zeta = 1 - exp(-z) instead of z; returns
// |value - direct sum| as a diagnostic.
double geometric_zeta_variant_residual(const GeometricRep& rep, cplx z);

// Asymptotic for |c_k| and its consecutive-ratio form.
double fourier_modulus_asymptotic(double a, long k);
double fourier_decay_ratio(double a);

// F(s) = sum_{n>=0} s^{a^n} at s = rho exp(2 pi i m / a^j) regrouped as
// polynomial + F(rho); the polynomial is sum_{n<j} rho^{a^n} (e^{2 pi i m a^{n-j}} - 1).
struct RegroupResult {
    cplx polynomial;
    double reduced_argument;
};
RegroupResult rational_angle_regroup(int a, long m, int j, double rho);

// Direct evaluation of F(s) = sum_{n>=0} s^{a^n}, |s| < 1.
cplx lacunary_power_series(int a, cplx s);

}  // namespace lacunary
