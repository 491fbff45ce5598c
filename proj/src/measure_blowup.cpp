#include "lacunary/measure_blowup.hpp"

#include "lacunary/compensated.hpp"
#include "lacunary/parallel.hpp"
#include "lacunary/series_eval.hpp"
#include "lacunary/special.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <sstream>

namespace lacunary {

void WindowSpec::validate() const
{
    if (!(beta1 >= beta0)) throw std::invalid_argument("window needs beta1 >= beta0");
    if (quadrature_points < 64) throw std::invalid_argument("window needs at least 64 quadrature points");
}

namespace {

constexpr long max_points = 1L << 24;

// Terms of f(x + 2 pi i beta) that matter at double precision.
struct Terms {
    std::vector<double> weight, freq;
};

Terms significant_terms(const Growth& g, double x)
{
    Terms t;
    for (long long k = g.start_index();; ++k) {
        double gk = g.eval(static_cast<double>(k));
        double w = std::exp(-x * gk);
        t.weight.push_back(w);
        t.freq.push_back(gk);
        if (w < 1e-18 && tail_bound(g, x, k) < 1e-18) break;
        if (static_cast<long long>(t.weight.size()) >= max_terms) throw TermCapExceeded("window sum needs too many terms");
    }
    return t;
}

double abs2_at(const Terms& t, double beta)
{
    const long double two_pi = 6.283185307179586476925286766559L;
    CompensatedSum acc;
    for (std::size_t i = 0; i < t.weight.size(); ++i) {
        double ph = static_cast<double>(std::fmod(two_pi * beta * t.freq[i], two_pi));
        acc += std::polar(t.weight[i], -ph);
    }
    return std::norm(acc.value());
}

// Oscillation scale of |f|^2 in beta, x/g'(g^{-1}(1/x)), with the fastest
// significant frequency as a fallback when g has no inverse.
double oscillation_scale(const Growth& g, const Terms& t, double x)
{
    double fallback = 1 / std::max(1.0, t.freq.back());
    try {
        double u = g.inverse(1 / x);
        double d = g.derivative(std::max(u, static_cast<double>(g.start_index())));
        if (d > 0 && std::isfinite(d)) return std::min(x / d, 1.0);
    } catch (const std::exception&) {
    }
    return fallback;
}

// Composite 8-point Gauss-Legendre with `panels` panels of weight kern.
template <class Kernel>
double composite(const Terms& t, double a, double b, long panels, Kernel&& kern)
{
    using gl = boost::math::quadrature::gauss<double, 8>;
    const auto& xs = gl::abscissa();
    const auto& ws = gl::weights();
    std::vector<double> part(static_cast<std::size_t>(panels));
    double h = (b - a) / static_cast<double>(panels);
    parallel_for(part.size(), [&](std::size_t p) {
        double c = a + (static_cast<double>(p) + 0.5) * h, r = 0.5 * h;
        double s = 0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            if (xs[i] == 0) {
                s += ws[i] * kern(c) * abs2_at(t, c);
                continue;
            }
            s += ws[i] * (kern(c + r * xs[i]) * abs2_at(t, c + r * xs[i]) + kern(c - r * xs[i]) * abs2_at(t, c - r * xs[i]));
        }
        part[p] = s * r;
    });
    CompensatedSum acc;
    for (double v : part) acc += v;
    return acc.value().real();
}

template <class Kernel>
WindowIntegral refine(const Terms& t, double a, double b, long start_points, double rel_tol, Kernel&& kern)
{
    WindowIntegral out;
    if (b <= a) return out;
    long panels = std::max(1L, (start_points + 7) / 8);
    double prev = composite(t, a, b, panels, kern);
    for (;;) {
        panels *= 2;
        if (8 * panels > max_points)
            throw RefinementCapExceeded("window quadrature did not settle within the point budget; x too small", out.change);
        double cur = composite(t, a, b, panels, kern);
        out.change = std::abs(cur - prev) / std::max(std::abs(cur), 1e-300);
        out.value = cur;
        out.points = 8 * panels;
        if (out.change < rel_tol) return out;
        prev = cur;
    }
}

long point_budget(const Growth& g, const Terms& t, double x, const WindowSpec& w, double len)
{
    double scale = oscillation_scale(g, t, x);
    double want = 4 * len / scale;
    if (want > static_cast<double>(max_points / 2))
        throw RefinementCapExceeded("window quadrature would exceed the point budget; x too small", INFINITY);
    return std::max<long>(w.quadrature_points, static_cast<long>(want));
}

}  // namespace

WindowIntegral window_l2_detail(const Growth& g, double x, const WindowSpec& w, double rel_tol)
{
    if (!(x > 0)) throw std::domain_error("window_l2 needs x > 0");
    w.validate();
    if (w.length() == 0) return {};
    Terms t = significant_terms(g, x);
    long budget = point_budget(g, t, x, w, w.length());
    return refine(t, w.beta0, w.beta1, budget, rel_tol, [](double) { return 1.0; });
}

double window_l2(const Growth& g, double x, const WindowSpec& w) { return window_l2_detail(g, x, w).value; }

double smoothed_window_l2(const Growth& g, double x, const WindowSpec& w, const std::vector<double>& widths)
{
    if (!(x > 0)) throw std::domain_error("smoothed_window_l2 needs x > 0");
    w.validate();
    if (widths.size() > 2) throw std::invalid_argument("smoothing is implemented for at most two box averages");
    for (double c : widths)
        if (!(c > 0)) throw std::invalid_argument("smoothing widths must be positive");
    if (widths.empty()) return window_l2(g, x, w);

    const double b0 = w.beta0, b1 = w.beta1, c1 = widths[0];
    // weight of |f(u)|^2: length of [b0,b1] ∩ [u-c1,u] over c1
    auto k1 = [=](double u) { return std::max(0.0, std::min(b1, u) - std::max(b0, u - c1)) / c1; };
    std::vector<double> breaks = {b0, b1, b0 + c1, b1 + c1};
    std::function<double(double)> kern = k1;
    if (widths.size() == 2) {
        const double c2 = widths[1];
        // k1 is piecewise linear, so the trapezoid rule between its kinks is exact
        kern = [=](double u) {
            std::vector<double> pts = {u - c2, u};
            for (double p : {b0, b1, b0 + c1, b1 + c1})
                if (p > u - c2 && p < u) pts.push_back(p);
            std::sort(pts.begin(), pts.end());
            double s = 0;
            for (std::size_t i = 0; i + 1 < pts.size(); ++i) s += 0.5 * (pts[i + 1] - pts[i]) * (k1(pts[i]) + k1(pts[i + 1]));
            return s / c2;
        };
        for (double p : {b0 + c2, b1 + c2, b0 + c1 + c2, b1 + c1 + c2}) breaks.push_back(p);
    }
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

    Terms t = significant_terms(g, x);
    CompensatedSum acc;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        double len = breaks[i + 1] - breaks[i];
        acc += refine(t, breaks[i], breaks[i + 1], point_budget(g, t, x, w, len), 1e-6, kern).value;
    }
    return acc.value().real();
}

double diagonal_term(const Growth& g, double x)
{
    if (!(x > 0)) throw std::domain_error("diagonal_term needs x > 0");
    return direct_sum(g, cplx(2 * x, 0), 1e-13).value.real();
}

OffdiagonalBound offdiagonal_bound(const Growth& g, double x, int m)
{
    if (!(x > 0)) throw std::domain_error("offdiagonal_bound needs x > 0");
    if (m < 1) throw std::invalid_argument("offdiagonal_bound needs m >= 1");
    const double tol = 1e-16;
    std::vector<double> gs, ws;
    long long k = g.start_index();
    for (;; ++k) {
        double gk = g.eval(static_cast<double>(k));
        gs.push_back(gk);
        ws.push_back(std::exp(-x * gk));
        if (ws.back() < tol && tail_bound(g, x, k) < tol) break;
    }
    OffdiagonalBound out;
    CompensatedSum acc;
    for (std::size_t i = 0; i < gs.size(); ++i)
        for (std::size_t j = 0; j < gs.size(); ++j)
            if (i != j) acc += ws[i] * ws[j] / std::pow(std::abs(gs[j] - gs[i]), m);
    out.sum = acc.value().real();

    // pairs with an index past the cut: convex g keeps |g(j)-g(k)| >= the first gap
    double gap = gs.size() > 1 ? gs[1] - gs[0] : g.eval(static_cast<double>(k + 1)) - gs[0];
    double first_sum = direct_sum(g, cplx(x, 0), 1e-15).value.real();
    out.tail = 2 * tail_bound(g, x, k) * first_sum / std::pow(gap, m);
    out.diagonal = diagonal_term(g, x);
    out.ratio = (out.sum + out.tail) / out.diagonal;
    return out;
}

std::vector<MeasureScanRow> measure_ratio_scan(const Growth& g, const WindowSpec& w, const std::vector<double>& x_grid)
{
    w.validate();
    if (!(w.length() > 0)) throw std::invalid_argument("measure scan needs a window of positive length");
    for (std::size_t i = 0; i < x_grid.size(); ++i) {
        if (!(x_grid[i] > 0)) throw std::invalid_argument("measure scan grid must be positive");
        if (i && !(x_grid[i] < x_grid[i - 1])) throw std::invalid_argument("measure scan grid must be decreasing");
    }
    std::vector<MeasureScanRow> rows;
    for (double x : x_grid) {
        MeasureScanRow r;
        r.x = x;
        r.ratio = window_l2(g, x, w) / (w.length() * diagonal_term(g, x));
        r.offdiag_ratio = offdiagonal_bound(g, x, 1).ratio;
        rows.push_back(r);
    }
    return rows;
}

std::string measure_scan_csv(const std::vector<MeasureScanRow>& rows)
{
    std::ostringstream os;
    os << std::setprecision(15) << "x,ratio,offdiag_ratio\n";
    for (const auto& r : rows) os << r.x << ',' << r.ratio << ',' << r.offdiag_ratio << '\n';
    return os.str();
}

}  // namespace lacunary
