#pragma once

#include "lacunary/growth.hpp"
#include "lacunary/special.hpp"

#include <functional>
#include <string>
#include <vector>

namespace lacunary {

// Reduced fraction m/n, n >= 1.
struct RationalPoint {
    long m = 0;
    long n = 1;
    RationalPoint() = default;
    RationalPoint(long m_, long n_);
    double value() const { return static_cast<double>(m) / static_cast<double>(n); }
};

// sum_{k=1}^N exp(-i y g(k)), compensated.
cplx exp_sum(const Growth& g, double y, long N);

// (1/n) sum_{l=1}^n exp(-2 pi i (m/n) l^b), exact residues of l^b mod n.
cplx gauss_profile(int b, const RationalPoint& p);

struct ProfileEstimate {
    double y = 0;
    double exponent_d = 1;           // scaled value is x^{1/d} f(x + i y)
    cplx extrapolated_value;
    std::vector<double> x_sequence;
    std::vector<cplx> raw_values;     // f(x + i y)
    std::vector<cplx> extrapolants;  // one per consecutive pair of grid points
    double convergence_indicator = 0;

    cplx scaled(std::size_t i) const;
    // columns x, re, im, abs, scaled_abs
    std::string to_csv() const;
};

// x^{1/d} f(x + i y) on a decreasing grid, Richardson-extrapolated with the
// model Q + A x^{1/d}.
ProfileEstimate profile_limit(const Growth& g, double d, double y, const std::vector<double>& x_grid);

// Same scan for b = 3/2 at z = -(4 pi i/(3 sqrt 3)) sqrt(n/m) + delta,
// scaled by sqrt(delta).
ProfileEstimate three_halves_profile(const RationalPoint& p, const std::vector<double>& delta_grid);
cplx three_halves_target(const RationalPoint& p);
double three_halves_ordinate(const RationalPoint& p);

// |Q_{3/2}(s) - sqrt(6 pi i)|s|^{1/2}/(3 sqrt 2 Gamma(4/3)) Q_{3,3}(4/(27 s^2))| with s the
// boundary abscissa of the b = 3/2 point over 2 pi, both sides in closed form.
double duality_residual(const RationalPoint& p);
// The same comparison written with s = (16/27)(n/m) and the 2^8 3^{-6} s^{-2} argument.
double duality_printed_residual(const RationalPoint& p);

struct WeightedLimit {
    cplx L;
    double spread = 0;         // max |S_N - L| over the last decade
    bool limit_detected = true;
    std::function<double(double)> Phi;
};
// S_{rho,N} = rho(N)^{-1} sum_{j<=N} exp(-i y g(j)), averaged over N in [N_max/10, N_max].
WeightedLimit weighted_limit(const Growth& g, double y, std::function<double(double)> rho,
                             std::function<double(double)> rho_prime, long N_max);

// 1/q when x is within 1e-12 of p/q in lowest terms with q <= q_max, else 0.
double standard_Q(double x, long q_max);

// Leading term G Gamma(1+1/b) delta^{-1/b} at z = delta + 2 pi i m/n.
cplx rational_blowup(int b, const RationalPoint& p, double delta);

// (9/(64 pi^3)) r^2 log(1/r)
double critical_curve(double r);

}  // namespace lacunary
