#include "lacunary/series_eval.hpp"

#include "lacunary/compensated.hpp"
#include "lacunary/parallel.hpp"

#include <cmath>
#include <limits>

namespace lacunary {

double tail_bound(const Growth& g, double x, long long n, double C, double r)
{
    // g(s) >= g(n) + g'(n)(s-n), and s^r <= n^r e^{r(s-n)/n}
    double lambda = x * g.derivative(static_cast<double>(n));
    double shift = n > 0 ? r / static_cast<double>(n) : (r > 0 ? INFINITY : 0.0);
    if (!(lambda > shift)) return std::numeric_limits<double>::infinity();
    double nr = r == 0 ? 1.0 : std::pow(static_cast<double>(n), r);
    return C * nr * std::exp(-x * g.eval(static_cast<double>(n))) / (lambda - shift);
}

EvalResult direct_sum(const Growth& g, cplx z, double tol, const std::optional<Coefficients>& coeff)
{
    const double x = z.real();
    if (!(x > 0)) throw std::domain_error("direct_sum needs Re z > 0");
    if (!(tol > 0)) throw std::invalid_argument("direct_sum needs tol > 0");

    const double C = coeff ? coeff->bound : 1.0;
    const double r = coeff ? coeff->degree : 0.0;

    CompensatedSum acc;
    long long used = 0;
    for (long long k = g.start_index();; ++k) {
        double gk = g.eval(static_cast<double>(k));
        cplx term = std::exp(-z * gk);
        if (coeff) term *= coeff->c(k);
        acc += term;
        ++used;

        double tb = tail_bound(g, x, k, C, r);
        if (tb < 0.5 * tol && std::abs(term) < 0.5 * tol) return {acc.value(), used, tb};
        if (used >= max_terms)
            throw TermCapExceeded("direct_sum: term cap exceeded, Re z too small for tol");
    }
}

std::vector<EvalResult> grid_eval(const Growth& g, const std::vector<cplx>& points, double tol)
{
    std::vector<EvalResult> out(points.size());
    parallel_for(points.size(), [&](std::size_t i) {
        try {
            out[i] = direct_sum(g, points[i], tol);
        } catch (const std::exception& e) {
            throw GridError(i, e.what());
        }
    });
    return out;
}

}  // namespace lacunary
