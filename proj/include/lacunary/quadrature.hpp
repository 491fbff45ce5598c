#pragma once

#include "lacunary/special.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>

namespace lacunary {

struct QuadResult {
    cplx value;
    double error;
};

class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, double achieved)
        : std::runtime_error(what + " (achieved error " + std::to_string(achieved) + ")"), achieved_(achieved) {}
    double achieved() const { return achieved_; }

private:
    double achieved_;
};

// Globally adaptive Gauss-Kronrod 7/15 on a finite interval. Stops when the
// summed error estimate is below max(abs_tol, rel_tol |I|) or the interval
// budget runs out (the achieved error is then reported, not thrown).
template <class F>
QuadResult integrate(F&& f, double a, double b, double rel_tol = 1e-12, double abs_tol = 0,
                     int max_intervals = 2000)
{
    using gk = boost::math::quadrature::gauss_kronrod<double, 15>;
    static const auto& xk = gk::abscissa();
    static const auto& wk = gk::weights();
    using gauss = boost::math::quadrature::gauss<double, 7>;
    static const auto& wg = gauss::weights();

    struct Piece {
        double a, b;
        cplx val;
        double err;
        bool operator<(const Piece& o) const { return err < o.err; }
    };
    auto rule = [&](double lo, double hi) {
        double c = 0.5 * (lo + hi), h = 0.5 * (hi - lo);
        cplx fc = f(c);
        cplx k = wk[0] * fc, g = wg[0] * fc;
        for (std::size_t i = 1; i < xk.size(); ++i) {
            cplx s = f(c + h * xk[i]) + f(c - h * xk[i]);
            k += wk[i] * s;
            if (i % 2 == 0) g += wg[i / 2] * s;
        }
        return Piece{lo, hi, k * h, std::abs((k - g) * h)};
    };
    std::priority_queue<Piece> heap;
    heap.push(rule(a, b));
    cplx total = heap.top().val;
    double err = heap.top().err;
    int n = 1;
    while (err > std::max(abs_tol, rel_tol * std::abs(total)) && n < max_intervals) {
        Piece p = heap.top();
        heap.pop();
        double m = 0.5 * (p.a + p.b);
        if (!(m > p.a && m < p.b)) break;
        Piece l = rule(p.a, m), r = rule(m, p.b);
        total += l.val + r.val - p.val;
        err += l.err + r.err - p.err;
        heap.push(l);
        heap.push(r);
        ++n;
    }
    // re-add to drop accumulated cancellation in the running total
    cplx sum = 0;
    double esum = 0;
    while (!heap.empty()) {
        sum += heap.top().val;
        esum += heap.top().err;
        heap.pop();
    }
    return {sum, esum};
}

// Half line [0, inf) via exp-sinh; integrand must decay.
template <class F>
QuadResult integrate_half_line(F&& f, double rel_tol = 1e-12)
{
    static thread_local boost::math::quadrature::exp_sinh<double> es;
    double err = 0, l1 = 0;
    cplx v = es.integrate([&](double t) { return cplx(f(t)); }, rel_tol, &err, &l1);
    return {v, err};
}

// Finite interval with possible endpoint singularities via tanh-sinh.
template <class F>
QuadResult integrate_singular(F&& f, double a, double b, double rel_tol = 1e-12)
{
    static thread_local boost::math::quadrature::tanh_sinh<double> ts;
    double err = 0, l1 = 0;
    cplx v = ts.integrate([&](double t) { return cplx(f(t)); }, a, b, rel_tol, &err, &l1);
    return {v, err};
}

}  // namespace lacunary
