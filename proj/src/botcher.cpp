#include "lacunary/botcher.hpp"

#include "lacunary/parallel.hpp"

#include "json.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

namespace lacunary {

SparsePolynomial SparsePolynomial::monomial(Power p, Dyadic c, Power degree_cap)
{
    SparsePolynomial out(degree_cap);
    out.add(p, c);
    return out;
}

Dyadic SparsePolynomial::coeff(Power p) const
{
    auto it = terms_.find(p);
    return it == terms_.end() ? Dyadic() : it->second;
}

bool SparsePolynomial::add(Power p, const Dyadic& c)
{
    if (p > cap_) {
        if (!c.is_zero()) ++dropped_;
        return false;
    }
    if (c.is_zero()) return true;
    auto [it, fresh] = terms_.try_emplace(p, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
    return true;
}

SparsePolynomial SparsePolynomial::operator+(const SparsePolynomial& o) const
{
    SparsePolynomial out = *this;
    out.cap_ = std::min(cap_, o.cap_);
    for (const auto& [p, c] : o.terms_) out.add(p, c);
    out.dropped_ = dropped_ + o.dropped_;
    return out;
}

SparsePolynomial SparsePolynomial::operator-(const SparsePolynomial& o) const { return *this + o.scaled(Dyadic(-1)); }

SparsePolynomial SparsePolynomial::operator*(const SparsePolynomial& o) const
{
    SparsePolynomial out(std::min(cap_, o.cap_));
    for (const auto& [p, c] : terms_)
        for (const auto& [q, d] : o.terms_) out.add(p + q, c * d);
    return out;
}

SparsePolynomial SparsePolynomial::scaled(const Dyadic& c) const
{
    SparsePolynomial out(cap_);
    for (const auto& [p, d] : terms_) out.add(p, c * d);
    out.dropped_ = dropped_;
    return out;
}

SparsePolynomial SparsePolynomial::times_z() const
{
    SparsePolynomial out(cap_);
    for (const auto& [p, c] : terms_) out.add(p + 1, c);
    return out;
}

SparsePolynomial SparsePolynomial::squared_argument() const
{
    SparsePolynomial out(cap_);
    for (const auto& [p, c] : terms_) out.add(2 * p, c);
    return out;
}

cplx SparsePolynomial::eval(cplx z) const
{
    // z^{2^j} once, then each power from its binary digits
    std::vector<cplx> sq(1, z);
    cplx acc = 0;
    for (const auto& [p, c] : terms_) {
        while ((Power(1) << (sq.size() - 1)) < p && sq.size() < 64) sq.push_back(sq.back() * sq.back());
        cplx zp = 1;
        for (Power r = p, j = 0; r; r >>= 1, ++j)
            if (r & 1) zp *= sq[j];
        acc += c.to_double() * zp;
    }
    return acc;
}

int SparsePolynomial::max_popcount() const
{
    int m = 0;
    for (const auto& [p, c] : terms_) m = std::max(m, std::popcount(p));
    return m;
}

SparsePolynomial operator_T(const SparsePolynomial& p)
{
    SparsePolynomial out(p.degree_cap());
    for (const auto& [q, c] : p.terms()) {
        if (q == 0) {
            out.add(0, c);
            continue;
        }
        for (int k = 0;; ++k) {
            SparsePolynomial::Power e = q << k;
            if ((e >> k) != q || !out.add(e, c.scaled(-k - 1))) break;
        }
    }
    return out;
}

SparsePolynomial inverse_T(const SparsePolynomial& p) { return p.scaled(Dyadic(2)) - p.squared_argument(); }

bool BotcherSeries::binary_lacunary() const
{
    for (int k = 1; k < static_cast<int>(psi.size()); ++k)
        if (psi[k].max_popcount() > k) return false;
    return true;
}

double BotcherSeries::max_coefficient() const
{
    double m = 0;
    for (const auto& p : psi)
        for (const auto& [q, c] : p.terms()) m = std::max(m, std::abs(c.to_double()));
    return m;
}

std::string BotcherSeries::to_json() const
{
    nlohmann::json j;
    j["K"] = K;
    j["D"] = D;
    j["psi"] = nlohmann::json::array();
    for (const auto& p : psi) {
        nlohmann::json e;
        e["powers"] = nlohmann::json::array();
        e["coeffs_num"] = nlohmann::json::array();
        e["coeffs_log2_den"] = nlohmann::json::array();
        for (const auto& [q, c] : p.terms()) {
            e["powers"].push_back(q);
            const BigInt& n = c.numerator();
            if (boost::multiprecision::msb(n < 0 ? BigInt(-n) : n) < 62) e["coeffs_num"].push_back(n.convert_to<long long>());
            else e["coeffs_num"].push_back(n.str());
            e["coeffs_log2_den"].push_back(c.log2_denominator());
        }
        j["psi"].push_back(e);
    }
    return j.dump();
}

BotcherSeries psi_series(int K, SparsePolynomial::Power D)
{
    if (K < 1) throw std::invalid_argument("psi_series needs K >= 1");
    if (D == 0) {
        if (K > 60) throw std::invalid_argument("default degree cap overflows for K > 60");
        D = SparsePolynomial::Power(1) << (K + 2);
    }
    BotcherSeries s;
    s.K = K;
    s.D = D;
    s.psi.push_back(SparsePolynomial::monomial(0, Dyadic(1), D));
    for (int k = 1; k <= K; ++k) {
        SparsePolynomial a(D), b(D);
        for (int j = 0; j < k; ++j) a = a + s.psi[j].squared_argument() * s.psi[k - 1 - j];
        for (int j = 1; j < k; ++j) b = b + s.psi[j] * s.psi[k - j];
        SparsePolynomial src = a.times_z() - b;
        SparsePolynomial pk = operator_T(src);
        s.dropped_terms += a.dropped() + b.dropped() + src.dropped() + pk.dropped();
        if (pk.max_popcount() > k) throw std::logic_error("binary lacunarity violated at k = " + std::to_string(k));
        s.psi.push_back(std::move(pk));
    }
    return s;
}

std::vector<cplx> psi_orbit_values(int K, cplx z)
{
    if (K < 0) throw std::invalid_argument("psi_orbit_values needs K >= 0");
    if (std::abs(z) > 1 + 1e-12) throw std::domain_error("psi_orbit_values needs |z| <= 1");
    constexpr int L = 60;  // 2^{-61} weight cutoff in the T sum
    const std::size_t M = static_cast<std::size_t>(K + 1) * (L + 1) + 2;
    std::vector<cplx> w(M);
    w[0] = z;
    for (std::size_t m = 1; m < M; ++m) {
        w[m] = w[m - 1] * w[m - 1];
        double a = std::abs(w[m]);
        if (a < 1e-300) w[m] = 0;
        else if (a > 1) w[m] /= a;  // rounding drift on the circle
    }
    std::vector<std::vector<cplx>> psi(K + 1, std::vector<cplx>(M));
    std::fill(psi[0].begin(), psi[0].end(), cplx(1));
    std::vector<cplx> R(M);
    for (int k = 1; k <= K; ++k) {
        // psi_k is only consumed at orbit indices below (K - k + 1)(L + 1)
        const std::size_t top = std::min(M, static_cast<std::size_t>(K - k + 1) * (L + 1) + 1);
        for (std::size_t m = 0; m + 1 < M && m < top + L + 1; ++m) {
            cplx a = 0, b = 0;
            for (int i = 0; i < k; ++i) a += psi[i][m + 1] * psi[k - 1 - i][m];
            for (int i = 1; i < k; ++i) b += psi[i][m] * psi[k - i][m];
            R[m] = w[m] * a - b;
        }
        R[M - 1] = 0;
        for (std::size_t m = 0; m < top; ++m) {
            cplx acc = 0;
            double wt = 0.5;
            for (std::size_t j = 0; j <= L && m + j < M; ++j, wt *= 0.5) acc += wt * R[m + j];
            psi[k][m] = acc;
        }
    }
    std::vector<cplx> out(K + 1);
    for (int k = 0; k <= K; ++k) out[k] = psi[k][0];
    return out;
}

namespace {

void check_lambda(cplx lambda)
{
    if (!(std::abs(lambda) < 1)) throw std::domain_error("Bottcher series needs |lambda| < 1");
}

}  // namespace

PsiValue psi_eval(const BotcherSeries& s, cplx lambda, cplx z, PsiMode mode)
{
    check_lambda(lambda);
    if (std::abs(z) > 1 + 1e-12) throw std::domain_error("psi_eval needs |z| <= 1");
    std::vector<cplx> v;
    if (mode == PsiMode::orbit) v = psi_orbit_values(s.K, z);
    else
        for (const auto& p : s.psi) v.push_back(p.eval(z));
    cplx acc = 0, lk = lambda;
    for (int k = s.K; k >= 1; --k) acc = acc * lambda + v[k];
    // Horner in lambda: sum_{k>=1} lambda^{k+1} psi_k = lambda^2 (psi_1 + lambda psi_2 + ...)
    acc *= lk * lk;
    PsiValue out;
    out.value = lambda * z + z * acc;
    double r = std::abs(lambda);
    double A = r / (1 - r);
    out.tail_estimate = std::pow(r, s.K + 2) * A / (1 - r);
    return out;
}

double functional_residual(const BotcherSeries& s, cplx lambda, cplx z, PsiMode mode)
{
    cplx p = psi_eval(s, lambda, z, mode).value;
    cplx p2 = psi_eval(s, lambda, z * z, mode).value;
    return std::abs(p * p - lambda * p2 * (1.0 + p));
}

std::vector<PlanarPoint> julia_curve(const BotcherSeries& s, cplx lambda, std::size_t samples)
{
    check_lambda(lambda);
    std::vector<PlanarPoint> out(samples);
    parallel_for(samples, [&](std::size_t i) {
        double t = 2 * pi * static_cast<double>(i) / static_cast<double>(samples);
        cplx p = psi_eval(s, lambda, std::polar(1.0, t)).value;
        if (std::abs(p) < 1e-12)
            throw NearZeroPsi("psi vanishes on the unit circle at t = " + std::to_string(t) +
                                  "; lambda too large for the truncation order", t);
        cplx H = 1.0 / p;
        out[i] = {-H.real(), -H.imag()};
    });
    return out;
}

Box curve_box(const std::vector<PlanarPoint>& curve, double enlarge)
{
    if (curve.empty()) throw std::invalid_argument("curve_box needs a nonempty curve");
    double x0 = INFINITY, x1 = -INFINITY, y0 = INFINITY, y1 = -INFINITY;
    for (const auto& p : curve) {
        x0 = std::min(x0, p.x), x1 = std::max(x1, p.x);
        y0 = std::min(y0, p.y), y1 = std::max(y1, p.y);
    }
    // square box so that cells are square
    double cx = 0.5 * (x0 + x1), cy = 0.5 * (y0 + y1);
    double h = 0.5 * enlarge * std::max(x1 - x0, y1 - y0);
    return {cx - h, cx + h, cy - h, cy + h};
}

EscapeCloud escape_time_oracle(cplx lambda, std::size_t resolution, int max_iter, double escape_radius, const Box& box)
{
    if (resolution < 2) throw std::invalid_argument("escape_time_oracle needs resolution >= 2");
    if (max_iter < 1 || !(escape_radius > 0)) throw std::invalid_argument("escape_time_oracle needs max_iter >= 1 and radius > 0");
    if (!(box.xmax > box.xmin && box.ymax > box.ymin)) throw std::invalid_argument("escape_time_oracle needs a nondegenerate box");
    const std::size_t n = resolution;
    const double dx = (box.xmax - box.xmin) / static_cast<double>(n);
    const double dy = (box.ymax - box.ymin) / static_cast<double>(n);
    EscapeCloud c;
    c.box = box;
    c.resolution = n;
    c.cell = std::max(dx, dy);
    c.escaped.assign(n * n, 0);
    const double r2 = escape_radius * escape_radius;
    parallel_for(n, [&](std::size_t row) {
        double y = box.ymin + (static_cast<double>(row) + 0.5) * dy;
        for (std::size_t col = 0; col < n; ++col) {
            cplx x(box.xmin + (static_cast<double>(col) + 0.5) * dx, y);
            for (int it = 0; it < max_iter; ++it) {
                x = lambda * x * (1.0 - x);
                if (std::norm(x) > r2) {
                    c.escaped[row * n + col] = 1;
                    break;
                }
            }
        }
    });
    for (std::size_t row = 0; row < n; ++row)
        for (std::size_t col = 0; col < n; ++col) {
            unsigned char e = c.escaped[row * n + col];
            bool edge = (col > 0 && c.escaped[row * n + col - 1] != e) || (col + 1 < n && c.escaped[row * n + col + 1] != e) ||
                        (row > 0 && c.escaped[(row - 1) * n + col] != e) || (row + 1 < n && c.escaped[(row + 1) * n + col] != e);
            if (edge)
                c.points.push_back({box.xmin + (static_cast<double>(col) + 0.5) * dx, box.ymin + (static_cast<double>(row) + 0.5) * dy});
        }
    return c;
}

double curve_to_cloud_distance(const std::vector<PlanarPoint>& curve, const EscapeCloud& cloud)
{
    if (cloud.points.empty()) return INFINITY;
    const std::size_t n = cloud.resolution;
    const double dx = (cloud.box.xmax - cloud.box.xmin) / static_cast<double>(n);
    const double dy = (cloud.box.ymax - cloud.box.ymin) / static_cast<double>(n);
    // bucket cloud points by cell
    std::vector<std::vector<std::size_t>> bucket(n * n);
    for (std::size_t i = 0; i < cloud.points.size(); ++i) {
        auto col = static_cast<std::size_t>((cloud.points[i].x - cloud.box.xmin) / dx);
        auto row = static_cast<std::size_t>((cloud.points[i].y - cloud.box.ymin) / dy);
        bucket[std::min(row, n - 1) * n + std::min(col, n - 1)].push_back(i);
    }
    auto dist = [&](const PlanarPoint& p, std::size_t i) { return std::hypot(p.x - cloud.points[i].x, p.y - cloud.points[i].y); };
    std::vector<double> best(curve.size());
    parallel_for(curve.size(), [&](std::size_t k) {
        const PlanarPoint& p = curve[k];
        double d = INFINITY;
        long col = static_cast<long>(std::floor((p.x - cloud.box.xmin) / dx));
        long row = static_cast<long>(std::floor((p.y - cloud.box.ymin) / dy));
        const long R = 8;
        bool inside = col >= 0 && row >= 0 && col < static_cast<long>(n) && row < static_cast<long>(n);
        if (inside) {
            for (long r = std::max(0L, row - R); r <= std::min<long>(n - 1, row + R); ++r)
                for (long c = std::max(0L, col - R); c <= std::min<long>(n - 1, col + R); ++c)
                    for (std::size_t i : bucket[static_cast<std::size_t>(r) * n + static_cast<std::size_t>(c)]) d = std::min(d, dist(p, i));
        }
        // anything beyond the search square is at least R cells away
        if (!(d <= static_cast<double>(R) * std::min(dx, dy)))
            for (std::size_t i = 0; i < cloud.points.size(); ++i) d = std::min(d, dist(p, i));
        best[k] = d / cloud.cell;
    });
    double m = 0;
    for (double b : best) m = std::max(m, b);
    return m;
}

std::string points_csv(const std::vector<PlanarPoint>& pts)
{
    std::ostringstream os;
    os << std::setprecision(15) << "x,y\n";
    for (const auto& p : pts) os << p.x << ',' << p.y << '\n';
    return os.str();
}

namespace {

// psi_1(z) = sum_{j>=0} 2^{-j-1} z^{2^j}
cplx psi1(cplx z)
{
    cplx acc = 0, w = z;
    double wt = 0.5;
    for (int j = 0; j < 64 && std::abs(w) > 1e-300; ++j, wt *= 0.5, w *= w) acc += wt * w;
    return acc;
}

}  // namespace

SelfSimilarity self_similarity_check(double rho, long m, int n)
{
    if (!(rho > 0 && rho < 1)) throw std::domain_error("self_similarity_check needs 0 < rho < 1");
    if (n < 1 || n > 60) throw std::invalid_argument("self_similarity_check needs 1 <= n <= 60");
    const double period = std::ldexp(1.0, n);
    auto phase = [&](int j) {  // exp(2 pi i m 2^{j-n}) with m 2^j reduced mod 2^n
        long double frac = std::fmod(static_cast<long double>(m) * std::ldexp(1.0L, j), static_cast<long double>(period));
        return std::polar(1.0, 2 * pi * static_cast<double>(frac) / period);
    };
    cplx lhs = psi1(rho * phase(0));

    SelfSimilarity out;
    cplx corr = 0;
    for (int j = 0; j < n; ++j) corr += std::ldexp(1.0, -j - 1) * std::pow(rho, std::ldexp(1.0, j)) * phase(j);
    corr += std::ldexp(1.0, -n) * psi1(std::pow(rho, period));
    out.corrected = std::abs(lhs - corr);

    cplx printed = 0;
    for (int k = 1; k <= n - 1; ++k) printed += std::pow(rho, std::ldexp(1.0, k)) * phase(k) / std::ldexp(1.0, k);
    printed += std::pow(rho, period - 2) / std::ldexp(1.0, n - 1) * psi1(rho);
    out.printed = std::abs(lhs - printed);
    return out;
}

}  // namespace lacunary
