#pragma once

#include "lacunary/growth.hpp"
#include "lacunary/special.hpp"

#include <stdexcept>

namespace lacunary {

// Small-z description of sum_{k>=1} exp(-z g(k)):
//   integral_term + remainder  (exact),  integral_term - 1/2 + o(1)  (leading).
struct AsymptoticDecomposition {
    cplx integral_term;
    double half_term = -0.5;
    cplx remainder;
    cplx z;
    // the k >= 1 sum reconstructed from the two exact pieces
    cplx sum_from_one() const { return integral_term + remainder; }
};

class ScalingLimitFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// int_0^inf exp(-z g(s)) ds; closed form for power growth.
cplx laplace_integral(const Growth& g, cplx z, double rel_tol = 1e-11);

// -z int_{g(0)}^inf exp(-z u) frac(g^{-1}(u)) du, integrated between jump points.
cplx fractional_remainder(const Growth& g, cplx z, double tol = 1e-13);

AsymptoticDecomposition decompose(const Growth& g, cplx z);

// C_g = int_0^inf e^{-u} phi_1(u) du with phi_1 the scaling limit of g^{-1}.
double growth_constant(const Growth& g);

// int_0^inf exp(-2 g(s) x) ds
double measure_rate(const Growth& g, double x);

}  // namespace lacunary
