#include "lacunary/boundary_profile.hpp"

#include "lacunary/compensated.hpp"
#include "lacunary/parallel.hpp"
#include "lacunary/quadrature.hpp"
#include "lacunary/series_eval.hpp"

#include <cmath>
#include <iomanip>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace lacunary {

namespace {

// exp(-i y g) with the phase reduced in extended precision; y g reaches 1e15 in the N sweeps
cplx unit_phase(double y, double gk)
{
    const long double two_pi = 6.283185307179586476925286766559L;
    long double ph = std::fmod(static_cast<long double>(y) * static_cast<long double>(gk), two_pi);
    return std::polar(1.0, -static_cast<double>(ph));
}

}  // namespace

RationalPoint::RationalPoint(long m_, long n_)
{
    if (n_ == 0) throw std::invalid_argument("rational point needs n != 0");
    if (n_ < 0) m_ = -m_, n_ = -n_;
    long g = std::gcd(std::labs(m_), n_);
    m = m_ / g;
    n = n_ / g;
}

cplx exp_sum(const Growth& g, double y, long N)
{
    if (N < 1) throw std::invalid_argument("exp_sum needs N >= 1");
    CompensatedSum acc;
    for (long k = 1; k <= N; ++k) acc += unit_phase(y, g.eval(static_cast<double>(k)));
    return acc.value();
}

cplx gauss_profile(int b, const RationalPoint& p)
{
    if (b < 2) throw std::invalid_argument("gauss_profile needs integer b >= 2");
    const long n = p.n;
    const long m = ((p.m % n) + n) % n;
    CompensatedSum acc;
    for (long l = 1; l <= n; ++l) {
        __int128 r = 1;
        for (int i = 0; i < b; ++i) r = (r * (l % n)) % n;
        long e = static_cast<long>((static_cast<__int128>(m) * r) % n);
        acc += std::polar(1.0, -2 * pi * static_cast<double>(e) / static_cast<double>(n));
    }
    return acc.value() / static_cast<double>(n);
}

cplx ProfileEstimate::scaled(std::size_t i) const { return std::pow(x_sequence[i], 1 / exponent_d) * raw_values[i]; }

std::string ProfileEstimate::to_csv() const
{
    std::ostringstream os;
    os << std::setprecision(15) << "x,re,im,abs,scaled_abs\n";
    for (std::size_t i = 0; i < x_sequence.size(); ++i)
        os << x_sequence[i] << ',' << raw_values[i].real() << ',' << raw_values[i].imag() << ','
           << std::abs(raw_values[i]) << ',' << std::abs(scaled(i)) << '\n';
    return os.str();
}

namespace {

void check_grid(const std::vector<double>& xs)
{
    if (xs.size() < 2) throw std::invalid_argument("profile grid needs at least two points");
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (!(xs[i] > 0)) throw std::invalid_argument("profile grid must be positive");
        if (i && !(xs[i] < xs[i - 1])) throw std::invalid_argument("profile grid must be strictly decreasing");
    }
    if (xs.back() < 1e-7) throw std::invalid_argument("profile grid below 1e-7 is beyond the double precision floor");
}

// two-point elimination of A in Q + A x^{1/d}
void extrapolate(ProfileEstimate& est)
{
    est.extrapolants.clear();
    for (std::size_t i = 0; i + 1 < est.x_sequence.size(); ++i) {
        double h1 = std::pow(est.x_sequence[i], 1 / est.exponent_d);
        double h2 = std::pow(est.x_sequence[i + 1], 1 / est.exponent_d);
        est.extrapolants.push_back((est.scaled(i + 1) * h1 - est.scaled(i) * h2) / (h1 - h2));
    }
    est.extrapolated_value = est.extrapolants.back();
    std::size_t k = est.extrapolants.size();
    est.convergence_indicator = k >= 2 ? std::abs(est.extrapolants[k - 1] - est.extrapolants[k - 2]) : INFINITY;
}

ProfileEstimate scan(const Growth& g, double d, double y, const std::vector<double>& xs)
{
    check_grid(xs);
    ProfileEstimate est;
    est.y = y;
    est.exponent_d = d;
    est.x_sequence = xs;
    est.raw_values.resize(xs.size());
    parallel_for(xs.size(), [&](std::size_t i) { est.raw_values[i] = direct_sum(g, cplx(xs[i], y), 1e-13).value; });
    extrapolate(est);
    return est;
}

// Continued-fraction recovery of a rational from a double.
RationalPoint to_rational(double t)
{
    long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
    double x = t;
    for (int it = 0; it < 40; ++it) {
        double a = std::floor(x);
        long ai = static_cast<long>(a);
        long h2 = ai * h1 + h0, k2 = ai * k1 + k0;
        h0 = h1, h1 = h2, k0 = k1, k1 = k2;
        if (std::abs(static_cast<double>(h1) / static_cast<double>(k1) - t) <= 1e-12 * std::max(1.0, std::abs(t)))
            return RationalPoint(h1, k1);
        double frac = x - a;
        if (frac < 1e-15 || k1 > 1'000'000'000L) break;
        x = 1 / frac;
    }
    throw std::domain_error("value is not a rational with small denominator");
}

}  // namespace

ProfileEstimate profile_limit(const Growth& g, double d, double y, const std::vector<double>& x_grid)
{
    if (!(d > 0)) throw std::invalid_argument("profile_limit needs d > 0");
    return scan(g, d, y, x_grid);
}

double three_halves_ordinate(const RationalPoint& p)
{
    if (p.m <= 0) throw std::invalid_argument("three-halves profile needs m > 0");
    return -(4 * pi / (3 * std::sqrt(3.0))) * std::sqrt(static_cast<double>(p.n) / static_cast<double>(p.m));
}

cplx three_halves_target(const RationalPoint& p)
{
    double ratio = static_cast<double>(p.n) / static_cast<double>(p.m);
    if (p.m <= 0) throw std::invalid_argument("three-halves profile needs m > 0");
    return std::sqrt(cplx(0, 6 * pi)) / std::pow(3.0, 1.75) * std::pow(ratio, 0.25) * gauss_profile(3, p);
}

ProfileEstimate three_halves_profile(const RationalPoint& p, const std::vector<double>& delta_grid)
{
    return scan(Growth::power(1.5), 2.0, three_halves_ordinate(p), delta_grid);
}

double duality_residual(const RationalPoint& p)
{
    cplx lhs = three_halves_target(p);
    double s = three_halves_ordinate(p) / (2 * pi);
    RationalPoint t = to_rational(4 / (27 * s * s));
    double g43 = gamma_function(4.0 / 3);
    cplx q33 = g43 * gauss_profile(3, t);
    cplx rhs = std::sqrt(cplx(0, 6 * pi)) * std::sqrt(std::abs(s)) / (3 * std::sqrt(2.0) * g43) * q33;
    return std::abs(lhs - rhs);
}

double duality_printed_residual(const RationalPoint& p)
{
    cplx lhs = three_halves_target(p);
    double s = 16.0 / 27 * static_cast<double>(p.n) / static_cast<double>(p.m);
    RationalPoint t = to_rational(256.0 / 729 / (s * s));
    double g43 = gamma_function(4.0 / 3);
    cplx rhs = std::sqrt(cplx(0, 6 * pi)) * std::sqrt(s) / g43 * (g43 * gauss_profile(3, t));
    return std::abs(lhs - rhs);
}

WeightedLimit weighted_limit(const Growth& g, double y, std::function<double(double)> rho,
                             std::function<double(double)> rho_prime, long N_max)
{
    if (N_max < 10) throw std::invalid_argument("weighted_limit needs N_max >= 10");
    CompensatedSum acc;
    std::vector<cplx> tail;
    long lo = N_max / 10;
    for (long j = 1; j <= N_max; ++j) {
        acc += unit_phase(y, g.eval(static_cast<double>(j)));
        if (j >= lo) tail.push_back(acc.value() / rho(static_cast<double>(j)));
    }
    WeightedLimit out;
    CompensatedSum mean;
    for (cplx v : tail) mean += v;
    out.L = mean.value() / static_cast<double>(tail.size());
    for (cplx v : tail) out.spread = std::max(out.spread, std::abs(v - out.L));
    out.limit_detected = out.spread <= 0.1 * std::max(std::abs(out.L), 0.1);
    out.Phi = [g, rho_prime](double x) {
        if (!(x > 0)) throw std::domain_error("Phi needs x > 0");
        // u = g^{-1}(v/x): int e^{-v} rho'(u) du/dv dv
        auto f = [&](double v) {
            if (v <= 0) return 0.0;
            double u = g.inverse(v / x);
            double gp = g.derivative(u);
            return std::exp(-v) * rho_prime(u) / (x * gp);
        };
        auto r = integrate_half_line(f, 1e-12);
        return r.value.real();
    };
    return out;
}

double standard_Q(double x, long q_max)
{
    if (q_max < 1) throw std::invalid_argument("standard_Q needs q_max >= 1");
    for (long q = 1; q <= q_max; ++q) {
        double pnum = std::round(x * static_cast<double>(q));
        if (std::abs(x - pnum / static_cast<double>(q)) <= 1e-12) return 1.0 / static_cast<double>(q);
    }
    return 0;
}

cplx rational_blowup(int b, const RationalPoint& p, double delta)
{
    if (!(delta > 0)) throw std::domain_error("rational_blowup needs delta > 0");
    return gauss_profile(b, p) * gamma_function(1 + 1.0 / b) * std::pow(delta, -1.0 / b);
}

double critical_curve(double r)
{
    if (!(r > 0 && r < 1)) throw std::domain_error("critical_curve needs 0 < r < 1");
    return 9 / (64 * std::pow(pi, 3)) * r * r * std::log(1 / r);
}

}  // namespace lacunary
