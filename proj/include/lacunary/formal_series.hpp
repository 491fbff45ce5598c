#pragma once

#include "lacunary/puiseux.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lacunary {

// The phase map for sigma = -1 is phi + 2 pi i phi^{1/b} = u, for sigma = +1
// its conjugate. With b = p/q and r = phi^{1/p} it becomes the polynomial
// equation r^p + c r^q = u, c = -sigma 2 pi i.
cplx phase_constant(int sigma);

// Series of the phase inverse derivative Hcheck_-(s) = phi'(s) near 0 in
// powers s^{(n+1)(b-1)}, n < order.
PuiseuxSeries invert_phase(Rational b, int order);

// The phase inverse phi(s) itself (integrated series), start b.
PuiseuxSeries phase_inverse_series(Rational b, int order);

// |phi + 2 pi i phi^{1/b} - s| for the truncated phase inverse series.
double phase_residual(Rational b, int order, cplx s);

// Power part Gamma(1+1/b) z^{-1/b} - 1/2 + sum_j coeff[j-1] z^j.
struct AsymptoticSeries {
    Rational b;
    std::vector<cplx> watson;  // b_j, j = 1..N
    std::vector<cplx> coeff;   // coefficient of z^j, j = 1..N
    cplx eval(cplx z, int terms = -1) const;
    PuiseuxSeries power_part() const;
};
AsymptoticSeries asymptotic_coeffs(Rational b, int N);

struct Singularities {
    Rational b;
    double d = 0;  // dual exponent b/(b-1)
    cplx s_minus, s_plus, t_minus, t_plus;
    std::vector<cplx> all_minus;  // every critical value of the sigma=-1 phase map
    double theta_minus = 0, theta_plus = 0;
    bool theta_known = false;  // only the b = 3/2 sector is known
};
Singularities singularities(Rational b);

// Hcheck_-(s) = sum_j c_j (s - s_minus)^{(j-1)/2} at the critical point.
PuiseuxSeries branch_expansion(Rational b, int order);

struct TransseriesBlock {
    int k = 1;
    int sigma = -1;
    cplx rate;             // multiplies z^{-1/(b-1)} in the exponent: exp(-rate z^{-1/(b-1)})
    PuiseuxSeries series;  // prefactor series in z
};

struct TransseriesRep {
    Rational b;
    int sigma = -1;
    PuiseuxSeries power;
    std::vector<TransseriesBlock> blocks;

    cplx eval_power(cplx z) const;
    cplx eval_blocks(cplx z) const;
    std::string to_json() const;
};
TransseriesRep assemble_transseries(Rational b, int sigma, int K, int J);

class RayTooClose : public std::domain_error {
public:
    RayTooClose(const std::string& what, double suggested) : std::domain_error(what), suggested_(suggested) {}
    double suggested() const { return suggested_; }

private:
    double suggested_;
};

struct BorelOptions {
    std::optional<double> ray_minus;  // Laplace ray angle for the sigma=-1 family
    std::optional<double> ray_plus;
};

// Default Laplace rays at z for both families (minus, plus).
std::pair<double, double> borel_rays(Rational b, cplx z);

// Laplace part of f: f(z) = Gamma(1+1/b) z^{-1/b} - 1/2 + borel_eval(...).
// K is the number of k-terms summed pointwise before the Hurwitz tail takes
// over (grown automatically where needed).
cplx borel_eval(Rational b, cplx z, int K = 4, double tol = 1e-12, const BorelOptions& opt = {});

// Contribution of the single k term of family sigma on the given ray.
cplx borel_block(Rational b, int k, int sigma, cplx z, std::optional<double> ray = {}, double tol = 1e-12);

// Pointwise phase inverse derivative Hcheck_sigma(u), continued from 0 along
// the segment [0, u].
cplx phase_inverse_derivative(Rational b, int sigma, cplx u);

// sigma z/(2 pi i k) int_0^inf e^{-z u + sigma 2 pi i k u^{1/b}} du by direct
// contour quadrature (u = t^b on a rotated t ray).
cplx saddle_term_family(Rational b, int k, int sigma, cplx z, double tol = 1e-12);
// Sum of both families.
cplx saddle_term_quadrature(Rational b, int k, cplx z, double tol = 1e-12);

}  // namespace lacunary
