#include "lacunary/formal_series.hpp"

#include "lacunary/compensated.hpp"
#include "lacunary/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <sstream>

namespace lacunary {

namespace {

template <class T>
std::vector<T> mul(const std::vector<T>& a, const std::vector<T>& b, std::size_t n)
{
    std::vector<T> c(n, T(0));
    for (std::size_t i = 0; i < n && i < a.size(); ++i) {
        if (a[i] == T(0)) continue;
        for (std::size_t j = 0; i + j < n && j < b.size(); ++j) c[i + j] += a[i] * b[j];
    }
    return c;
}

// A^alpha for A[0] = 1 (Miller recurrence).
template <class T>
std::vector<T> pow_one(const std::vector<T>& A, double alpha, std::size_t n)
{
    std::vector<T> B(n, T(0));
    B[0] = T(1);
    for (std::size_t m = 1; m < n; ++m) {
        T acc(0);
        for (std::size_t k = 1; k <= m && k < A.size(); ++k)
            acc += ((alpha + 1) * static_cast<double>(k) - static_cast<double>(m)) * A[k] * B[m - k];
        B[m] = acc / static_cast<double>(m);
    }
    return B;
}

template <class T>
std::vector<T> ipow(const std::vector<T>& a, long e, std::size_t n)
{
    std::vector<T> r(n, T(0));
    r[0] = T(1);
    for (long i = 0; i < e; ++i) r = mul(r, a, n);
    return r;
}

cplx ipow(cplx x, long e)
{
    cplx r = 1;
    for (long i = 0; i < e; ++i) r *= x;
    return r;
}

void check_b(Rational b)
{
    if (!(b.num > b.den)) throw std::invalid_argument("phase map needs b > 1");
    if (b.num > 64) throw std::invalid_argument("phase map needs b with numerator <= 64");
}

// Scaled solution of r^p + c r^q = u: with v = (u/c)^{1/q}, eps = v^p/u and
// r = v R, R^q + eps R^p = 1; R and Hcheck are real series in eps.
struct EpsSeries {
    std::vector<double> R;  // R(eps)
    std::vector<double> h;  // Hcheck = sum h_n eps^{n+1}
};

EpsSeries eps_series(long p, long q, std::size_t n)
{
    EpsSeries s;
    std::vector<double> R(n, 0.0);
    R[0] = 1;
    for (std::size_t it = 0; it <= n; ++it) {
        auto Rp = ipow(R, p, n);
        std::vector<double> A(n, 0.0);
        A[0] = 1;
        for (std::size_t i = 1; i < n; ++i) A[i] = -Rp[i - 1];
        R = pow_one(A, 1.0 / static_cast<double>(q), n);
    }
    s.R = R;
    // w = b eps R^{p-q}, Hcheck = w / (1 + w)
    const double b = static_cast<double>(p) / static_cast<double>(q);
    auto Rd = ipow(R, p - q, n);
    std::vector<double> w(n + 1, 0.0);
    for (std::size_t i = 0; i < n; ++i) w[i + 1] = b * Rd[i];
    std::vector<double> one_plus(n + 1, 0.0);
    one_plus[0] = 1;
    for (std::size_t i = 1; i <= n; ++i) one_plus[i] = w[i];
    auto inv = pow_one(one_plus, -1.0, n + 1);
    auto H = mul(w, inv, n + 1);
    s.h.assign(H.begin() + 1, H.end());
    return s;
}

std::size_t series_length(Rational b)
{
    double bm1 = b.value() - 1;
    return static_cast<std::size_t>(std::min(400.0, std::ceil(40.0 / (1.2 * bm1)) + 12));
}

// Pointwise evaluator of Hcheck_sigma with series near 0 and Newton
// continuation beyond.
struct PhaseInverse {
    long p, q;
    double b;
    int sigma;
    cplx c;
    EpsSeries es;
    std::vector<cplx> a;  // Hcheck_sigma = sum a_n u^{(n+1)(b-1)}
    double radius;        // smallest critical value modulus
    double series_radius;

    PhaseInverse(Rational br, int sg) : p(br.num), q(br.den), b(br.value()), sigma(sg), c(phase_constant(sg))
    {
        check_b(br);
        std::size_t n = series_length(br);
        es = eps_series(p, q, n);
        cplx lc = std::log(c);
        a.resize(n);
        for (std::size_t i = 0; i < n; ++i) a[i] = es.h[i] * std::exp(-static_cast<double>(i + 1) * b * lc);
        radius = INFINITY;
        for (cplx s : critical_values()) radius = std::min(radius, std::abs(s));
        series_radius = 0.3 * radius;
    }

    cplx poly(cplx r) const { return ipow(r, p) + c * ipow(r, q); }
    cplx dpoly(cplx r) const
    {
        return static_cast<double>(p) * ipow(r, p - 1) + c * static_cast<double>(q) * ipow(r, q - 1);
    }

    // r^{p-q} = -c/b, principal root first
    std::vector<cplx> critical_points() const
    {
        std::vector<cplx> out;
        long m = p - q;
        cplx base = -c / b;
        double mod = std::pow(std::abs(base), 1.0 / m);
        double arg = std::arg(base) / m;
        for (long j = 0; j < m; ++j) {
            double a = arg + 2 * pi * j / m;
            out.push_back(std::polar(mod, a));
        }
        return out;
    }
    std::vector<cplx> critical_values() const
    {
        std::vector<cplx> out;
        for (cplx r : critical_points()) out.push_back(poly(r));
        return out;
    }

    cplx from_r(cplx r) const { return 1.0 / (1.0 + (c / b) * ipow(1.0 / r, p - q)); }

    cplx series(cplx u) const
    {
        if (u == cplx(0)) return 0;
        cplx w = std::exp((b - 1) * std::log(u));
        cplx acc = 0;
        for (std::size_t i = a.size(); i-- > 0;) acc = acc * w + a[i];
        return acc * w;
    }

    cplx r_series(cplx u) const
    {
        cplx v = std::exp(std::log(u / c) / static_cast<double>(q));
        cplx eps = ipow(v, p) / u;
        cplx acc = 0;
        for (std::size_t i = es.R.size(); i-- > 0;) acc = acc * eps + es.R[i];
        return v * acc;
    }

    bool newton(cplx& r, cplx u) const
    {
        for (int it = 0; it < 40; ++it) {
            cplx dr = (poly(r) - u) / dpoly(r);
            r -= dr;
            if (!(std::isfinite(r.real()) && std::isfinite(r.imag()))) return false;
            if (std::abs(dr) <= 1e-15 * std::abs(r)) return true;
        }
        return false;
    }

    cplx eval(cplx u) const
    {
        double m = std::abs(u);
        if (m <= series_radius) return series(u);
        cplx dir = u / m;
        double t = series_radius;
        cplx r = r_series(t * dir);
        while (t < m) {
            double h = t < 8 * radius ? 0.05 * radius : 0.05 * t;
            double tn = std::min(m, t + h);
            for (int tries = 0;; ++tries) {
                cplx du = (tn - t) * dir;
                cplx guess = r + du / dpoly(r);
                if (newton(guess, tn * dir)) {
                    r = guess;
                    break;
                }
                if (tries > 20) throw std::runtime_error("phase inverse continuation failed to converge");
                tn = t + 0.5 * (tn - t);
            }
            t = tn;
        }
        return from_r(r);
    }
};

double wrap_angle(double a)
{
    while (a > pi) a -= 2 * pi;
    while (a <= -pi) a += 2 * pi;
    return a;
}

const double ray_margin = 0.1;  // keep e^{-X s} decaying at least like cos(pi/2 - margin)
const double min_distance = 0.1;

double ray_distance(double alpha, cplx s)
{
    double gap = std::abs(wrap_angle(std::arg(s) - alpha));
    return gap >= pi / 2 ? std::abs(s) : std::abs(s) * std::sin(gap);
}

// Feasible Laplace ray interval for one family.
std::pair<double, double> ray_window(const PhaseInverse& ph, double argX)
{
    double theta = std::arg(ph.critical_values().front());
    double delta = std::asin(min_distance);
    double lo = -pi / 2 + ray_margin - argX, hi = pi / 2 - ray_margin - argX;
    lo = std::max(lo, -pi / 2);
    hi = std::min(hi, pi / 2);
    if (ph.sigma < 0) {
        if (theta < pi / 2) lo = std::max(lo, theta + delta);
    } else {
        if (theta > -pi / 2) hi = std::min(hi, theta - delta);
    }
    return {lo, hi};
}

cplx dual_prefactor(double b, cplx z) { return std::exp((1 - b / (b - 1)) * std::log(z)); }

cplx laplace_ray(double b, cplx z, double alpha, double tol, const std::function<cplx(cplx)>& H, int sigma)
{
    cplx X = std::exp(-std::log(z) / (b - 1));
    cplx e = std::polar(1.0, alpha);
    double decay = (X * e).real();
    if (!(decay > 0)) throw std::domain_error("Laplace ray does not decay");
    double T = 45.0 / decay;
    auto f = [&](double t) { return e * std::exp(-X * e * t) * H(t * e); };
    auto r = integrate_singular(f, 0.0, T, tol);
    if (!(r.error <= std::max(1e-14, tol * 10 * std::abs(r.value)))) {
        auto g = integrate(f, 0.0, T, tol, 1e-16, 20000);
        if (g.error > std::max(1e-13, tol * 100 * std::abs(g.value)))
            throw QuadratureError("Borel-Laplace quadrature", g.error);
        r = g;
    }
    return static_cast<double>(sigma) * dual_prefactor(b, z) / (2 * pi * I) * r.value;
}

void check_ray(const PhaseInverse& ph, double alpha, double argX, double suggested)
{
    if (!(std::cos(alpha + argX) > 0))
        throw RayTooClose("Laplace ray does not give decay of exp(-z^{-1/(b-1)} s)", suggested);
    for (cplx s : ph.critical_values()) {
        if (ray_distance(alpha, s) < min_distance * std::abs(s))
            throw RayTooClose("Laplace ray passes within 0.1|s0| of a singularity", suggested);
    }
}

double default_ray(const PhaseInverse& ph, double argX)
{
    auto [lo, hi] = ray_window(ph, argX);
    if (lo > hi) throw std::domain_error("z lies outside the Borel summation sector of this family");
    return 0.5 * (lo + hi);
}

double pick_ray(const PhaseInverse& ph, double argX, std::optional<double> user)
{
    if (!user) {
        double a = default_ray(ph, argX);
        check_ray(ph, a, argX, a);
        return a;
    }
    double sug = NAN;
    try {
        sug = default_ray(ph, argX);
    } catch (const std::domain_error&) {
    }
    check_ray(ph, *user, argX, sug);
    return *user;
}

// sum_{k>=1} k^{-1} Hcheck(s/k^d): K(s) terms directly, Hurwitz zeta tail.
cplx summed_inverse(const PhaseInverse& ph, cplx s, int kmin)
{
    const double b = ph.b, d = b / (b - 1);
    double m = std::abs(s);
    int K = kmin;
    double cut = 0.25 * ph.radius;
    while (m / std::pow(K + 1.0, d) > cut) ++K;
    CompensatedSum acc;
    for (int k = K; k >= 1; --k) acc += ph.eval(s / std::pow(static_cast<double>(k), d)) / static_cast<double>(k);
    if (s != cplx(0)) {
        cplx w = std::exp((b - 1) * std::log(s));
        cplx wn = w;
        for (std::size_t n = 0; n < ph.a.size(); ++n) {
            double zt = hurwitz_zeta(1 + (n + 1) * b, K + 1.0);
            cplx term = ph.a[n] * wn * zt;
            acc += term;
            if (std::abs(term) < 1e-19 * std::max(1e-300, std::abs(acc.value())) && n > 2) break;
            wn *= w;
        }
    }
    return acc.value();
}

}  // namespace

cplx phase_constant(int sigma)
{
    if (sigma != 1 && sigma != -1) throw std::invalid_argument("sigma must be +1 or -1");
    return cplx(0, -2.0 * pi * sigma);
}

PuiseuxSeries invert_phase(Rational b, int order)
{
    check_b(b);
    if (order < 1) throw std::invalid_argument("invert_phase needs order >= 1");
    auto es = eps_series(b.num, b.den, static_cast<std::size_t>(order));
    cplx lc = std::log(phase_constant(-1));
    PuiseuxSeries s;
    s.step = b - Rational(1);
    s.start = s.step;
    s.truncation_order = order;
    for (int i = 0; i < order; ++i) s.coeffs.push_back(es.h[i] * std::exp(-(i + 1.0) * b.value() * lc));
    return s;
}

PuiseuxSeries phase_inverse_series(Rational b, int order)
{
    auto h = invert_phase(b, order);
    PuiseuxSeries s = h;
    s.start = h.start + Rational(1);
    for (int i = 0; i < order; ++i) s.coeffs[i] /= s.exponent(i).value();
    return s;
}

double phase_residual(Rational b, int order, cplx s)
{
    auto phi = phase_inverse_series(b, order);
    cplx v = phi.eval(s);
    // phi^{1/b} on the branch ~ s/(2 pi i): scale out (s/(2 pi i))^b before the principal root
    cplx lead = s / (2.0 * pi * I);
    cplx ratio = v / cpow(lead, b.value());
    return std::abs(v + 2.0 * pi * I * lead * cpow(ratio, 1.0 / b.value()) - s);
}

cplx AsymptoticSeries::eval(cplx z, int terms) const
{
    double bb = b.value();
    cplx v = gamma_function(1 + 1 / bb) * cpow(z, -1 / bb) - 0.5;
    int n = terms < 0 ? static_cast<int>(coeff.size()) : std::min<int>(terms, coeff.size());
    cplx zp = 1;
    for (int j = 1; j <= n; ++j) {
        zp *= z;
        v += coeff[j - 1] * zp;
    }
    return v;
}

PuiseuxSeries AsymptoticSeries::power_part() const
{
    // exponents -1/b, 0, 1, 2, ... all lie on the grid of step 1/num(b)
    Rational step(1, b.num);
    PuiseuxSeries s;
    s.step = step;
    s.start = Rational(-1) / b;
    auto idx = [&](long e) { return static_cast<std::size_t>(((Rational(e) - s.start) / step).num); };
    s.truncation_order = static_cast<int>(idx(static_cast<long>(coeff.size()) + 1));
    s.coeffs.assign(static_cast<std::size_t>(s.truncation_order), cplx(0));
    s.coeffs[0] = gamma_function(1 + 1 / b.value());
    s.coeffs[idx(0)] = -0.5;
    for (std::size_t j = 1; j <= coeff.size(); ++j) s.coeffs[idx(static_cast<long>(j))] = coeff[j - 1];
    return s;
}

AsymptoticSeries asymptotic_coeffs(Rational b, int N)
{
    check_b(b);
    if (N < 0) throw std::invalid_argument("asymptotic_coeffs needs N >= 0");
    AsymptoticSeries out;
    out.b = b;
    if (N == 0) return out;
    auto h = invert_phase(b, N);
    const double bb = b.value();
    for (int j = 1; j <= N; ++j) {
        // Watson: int e^{-Xs} s^{j(b-1)} ds = Gamma(j(b-1)+1) X^{-j(b-1)-1}
        cplx wj = h.coeffs[j - 1] * gamma_function(j * (bb - 1) + 1);
        out.watson.push_back(wj);
        cplx parity = 1.0 - std::exp(cplx(0, pi * j * bb));
        out.coeff.push_back(I / (2 * pi) * parity * zeta(j * bb + 1) * wj);
    }
    return out;
}

Singularities singularities(Rational b)
{
    check_b(b);
    PhaseInverse ph(b, -1);
    Singularities s;
    s.b = b;
    s.d = b.value() / (b.value() - 1);
    auto rc = ph.critical_points();
    s.all_minus = ph.critical_values();
    s.s_minus = s.all_minus.front();
    s.s_plus = std::conj(s.s_minus);
    s.t_minus = ipow(rc.front(), b.num);
    s.t_plus = std::conj(s.t_minus);
    if (b == Rational(3, 2)) {
        s.theta_known = true;
        s.theta_minus = s.theta_plus = pi / 4;
    } else {
        s.theta_minus = s.theta_plus = NAN;
    }
    return s;
}

PuiseuxSeries branch_expansion(Rational b, int order)
{
    check_b(b);
    if (order < 1) throw std::invalid_argument("branch_expansion needs order >= 1");
    PhaseInverse ph(b, -1);
    const long p = ph.p, q = ph.q;
    const cplx c = ph.c;
    const cplx rc = ph.critical_points().front();
    const std::size_t n = static_cast<std::size_t>(order) + 2;
    auto binom = [](long nn, long k) {
        double r = 1;
        for (long i = 1; i <= k; ++i) r = r * (nn - k + i) / i;
        return r;
    };
    // P(rc + rho) - s0 = sum_{m>=2} P_m rho^m
    std::vector<cplx> P(p + 1, 0.0);
    for (long m = 2; m <= p; ++m) {
        P[m] = binom(p, m) * ipow(rc, p - m);
        if (m <= q) P[m] += c * binom(q, m) * ipow(rc, q - m);
    }
    if (std::abs(P[2]) < 1e-12 * std::abs(ipow(rc, p)))
        throw std::domain_error("branch point is not of square-root type");
    const cplx sq = std::sqrt(P[2]);
    // revert tau = sq rho sqrt(1 + sum_{m>=3} (P_m/P_2) rho^{m-2})
    std::vector<cplx> rho(n, 0.0);
    rho[1] = 1.0 / sq;
    for (std::size_t it = 0; it < n + 2; ++it) {
        std::vector<cplx> S(n, 0.0), rp(n, 0.0);
        S[0] = 1;
        rp[0] = 1;
        for (long m = 3; m <= p; ++m) {
            rp = mul(rp, rho, n);
            std::vector<cplx> t = rp;
            for (auto& x : t) x *= P[m] / P[2];
            // S += (P_m/P_2) rho^{m-2}: rp holds rho^{m-2}
            for (std::size_t i = 0; i < n; ++i) S[i] += t[i];
        }
        auto inv = pow_one(S, -0.5, n);
        std::vector<cplx> next(n, 0.0);
        for (std::size_t i = 1; i < n; ++i) next[i] = inv[i - 1] / sq;
        rho = next;
    }
    // Hcheck = p (rc + rho)^{p-1} rho'(tau) / (2 tau)
    std::vector<cplx> r = rho;
    r[0] += rc;
    auto rpw = ipow(r, p - 1, n);
    std::vector<cplx> dr(n, 0.0);
    for (std::size_t j = 0; j + 1 < n; ++j) dr[j] = static_cast<double>(j + 1) * rho[j + 1];
    auto H = mul(rpw, dr, n);
    PuiseuxSeries s;
    s.step = Rational(1, 2);
    s.start = Rational(-1, 2);
    s.truncation_order = order;
    for (int j = 0; j < order; ++j) s.coeffs.push_back(static_cast<double>(p) * H[j] / 2.0);
    return s;
}

cplx TransseriesRep::eval_power(cplx z) const { return power.eval(z); }

cplx TransseriesRep::eval_blocks(cplx z) const
{
    cplx X = std::exp(-std::log(z) / (b.value() - 1));
    CompensatedSum acc;
    for (const auto& blk : blocks) acc += std::exp(-blk.rate * X) * blk.series.eval(z);
    return acc.value();
}

std::string TransseriesRep::to_json() const
{
    std::ostringstream os;
    os << std::setprecision(15);
    os << "{\"b\": \"" << b.str() << "\", \"sigma\": " << sigma << ", \"power\": [";
    bool first = true;
    for (std::size_t i = 0; i < power.coeffs.size(); ++i) {
        if (power.coeffs[i] == cplx(0)) continue;
        if (!first) os << ", ";
        first = false;
        os << "{\"exp\": \"" << power.exponent(i).str() << "\", \"re\": " << power.coeffs[i].real()
           << ", \"im\": " << power.coeffs[i].imag() << "}";
    }
    os << "], \"blocks\": [";
    for (std::size_t k = 0; k < blocks.size(); ++k) {
        const auto& blk = blocks[k];
        if (k) os << ", ";
        os << "{\"k\": " << blk.k << ", \"rate_re\": " << blk.rate.real() << ", \"rate_im\": " << blk.rate.imag()
           << ", \"coeffs\": [";
        for (std::size_t i = 0; i < blk.series.coeffs.size(); ++i) {
            if (i) os << ", ";
            os << "{\"exp\": \"" << blk.series.exponent(i).str() << "\", \"re\": " << blk.series.coeffs[i].real()
               << ", \"im\": " << blk.series.coeffs[i].imag() << "}";
        }
        os << "]}";
    }
    os << "]}";
    return os.str();
}

TransseriesRep assemble_transseries(Rational b, int sigma, int K, int J)
{
    if (!(b == Rational(3) || b == Rational(3, 2)))
        throw std::invalid_argument("assemble_transseries supports b = 3 and b = 3/2 only");
    if (sigma != 1 && sigma != -1) throw std::invalid_argument("sigma must be +1 or -1");
    if (K < 0 || J < 0) throw std::invalid_argument("assemble_transseries needs K, J >= 0");
    TransseriesRep rep;
    rep.b = b;
    rep.sigma = sigma;
    rep.power = asymptotic_coeffs(b, J).power_part();
    if (K == 0) return rep;

    const Rational bm1 = b - Rational(1);
    const double d = b.value() / bm1.value();
    const int terms = std::max(1, J);
    auto br = branch_expansion(b, 2 * terms);
    auto sing = singularities(b);
    for (int k = 1; k <= K; ++k) {
        TransseriesBlock blk;
        blk.k = k;
        blk.sigma = sigma;
        blk.rate = (sigma < 0 ? sing.s_minus : sing.s_plus) * std::pow(static_cast<double>(k), d);
        blk.series.step = Rational(1) / bm1;
        blk.series.start = Rational(-1) / (Rational(2) * bm1);
        blk.series.truncation_order = terms;
        for (int j = 0; j < terms; ++j) {
            // Hankel loop around the cut from k^d s_sigma picks up the even-index
            // half-integer powers of the branch expansion
            cplx cj = br.coeffs[2 * j];
            cplx v = -cj * gamma_function(j + 0.5) / (pi * I) * std::pow(static_cast<double>(k), d / 2 - 1 - d * j);
            blk.series.coeffs.push_back(sigma < 0 ? v : std::conj(v));
        }
        rep.blocks.push_back(blk);
    }
    return rep;
}

std::pair<double, double> borel_rays(Rational b, cplx z)
{
    if (!(z.real() > 0)) throw std::domain_error("Borel evaluation needs Re z > 0");
    double argX = -std::arg(z) / (b.value() - 1);
    PhaseInverse mn(b, -1), pl(b, 1);
    return {default_ray(mn, argX), default_ray(pl, argX)};
}

cplx phase_inverse_derivative(Rational b, int sigma, cplx u)
{
    PhaseInverse ph(b, sigma);
    return ph.eval(u);
}

cplx borel_eval(Rational b, cplx z, int K, double tol, const BorelOptions& opt)
{
    check_b(b);
    if (!(z.real() > 0)) throw std::domain_error("borel_eval needs Re z > 0");
    if (K < 1) K = 1;
    const double bb = b.value();
    const double argX = -std::arg(z) / (bb - 1);
    cplx total = 0;
    for (int sigma : {-1, 1}) {
        PhaseInverse ph(b, sigma);
        double alpha = pick_ray(ph, argX, sigma < 0 ? opt.ray_minus : opt.ray_plus);
        total += laplace_ray(bb, z, alpha, tol, [&](cplx s) { return summed_inverse(ph, s, K); }, sigma);
    }
    return total;
}

cplx borel_block(Rational b, int k, int sigma, cplx z, std::optional<double> ray, double tol)
{
    check_b(b);
    if (k < 1) throw std::invalid_argument("borel_block needs k >= 1");
    if (!(z.real() > 0)) throw std::domain_error("borel_block needs Re z > 0");
    const double bb = b.value(), d = bb / (bb - 1);
    const double argX = -std::arg(z) / (bb - 1);
    PhaseInverse ph(b, sigma);
    double alpha = pick_ray(ph, argX, ray);
    const double kd = std::pow(static_cast<double>(k), d);
    return laplace_ray(bb, z, alpha, tol, [&](cplx s) { return ph.eval(s / kd) / static_cast<double>(k); }, sigma);
}

cplx saddle_term_family(Rational b, int k, int sigma, cplx z, double tol)
{
    check_b(b);
    if (k < 1) throw std::invalid_argument("saddle term needs k >= 1");
    if (sigma != 1 && sigma != -1) throw std::invalid_argument("sigma must be +1 or -1");
    if (!(z.real() > 0)) throw std::domain_error("saddle term needs Re z > 0");
    const double bb = b.value();
    // u = t^b with t on the ray sigma*theta: both exponentials decay there
    const double theta = sigma * (pi / 2 - sigma * std::arg(z)) / (2 * bb);
    const cplx e = std::polar(1.0, theta);
    const cplx w = cplx(0, 2.0 * pi * k * sigma) * e;
    const cplx zb = z * std::polar(1.0, bb * theta);
    const double decay_poly = zb.real(), decay_lin = -w.real();
    // T where the exponent has dropped below -60
    double T = 1;
    while (decay_poly * std::pow(T, bb) + decay_lin * T < 60) T *= 1.5;
    auto f = [&](double t) {
        cplx te = t * e;
        return e * bb * cpow(te, bb - 1) * std::exp(-z * cpow(te, bb) + w * t);
    };
    auto r = integrate_singular(f, 0.0, T, tol);
    if (!(r.error <= std::max(1e-15, tol * 10 * std::abs(r.value)))) {
        auto g = integrate(f, 0.0, T, tol, 1e-17, 20000);
        if (g.error > std::max(1e-14, tol * 100 * std::abs(g.value)))
            throw QuadratureError("saddle term quadrature", g.error);
        r = g;
    }
    return static_cast<double>(sigma) * z / (2 * pi * I * static_cast<double>(k)) * r.value;
}

cplx saddle_term_quadrature(Rational b, int k, cplx z, double tol)
{
    return saddle_term_family(b, k, -1, z, tol) + saddle_term_family(b, k, 1, z, tol);
}

}  // namespace lacunary
