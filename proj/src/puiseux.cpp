#include "lacunary/puiseux.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace lacunary {

Rational::Rational(long n, long d)
{
    if (d == 0) throw std::invalid_argument("Rational with zero denominator");
    if (d < 0) n = -n, d = -d;
    long g = std::gcd(std::labs(n), d);
    if (g == 0) g = 1;
    num = n / g;
    den = d / g;
}

std::string Rational::str() const
{
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

Rational operator+(Rational a, Rational b) { return Rational(a.num * b.den + b.num * a.den, a.den * b.den); }
Rational operator-(Rational a, Rational b) { return Rational(a.num * b.den - b.num * a.den, a.den * b.den); }
Rational operator*(Rational a, Rational b) { return Rational(a.num * b.num, a.den * b.den); }
Rational operator/(Rational a, Rational b) { return Rational(a.num * b.den, a.den * b.num); }

Rational parse_rational(const std::string& text)
{
    auto slash = text.find('/');
    try {
        if (slash != std::string::npos) {
            std::size_t used = 0;
            long n = std::stol(text.substr(0, slash), &used);
            if (used != slash) throw std::invalid_argument("");
            std::string rest = text.substr(slash + 1);
            long d = std::stol(rest, &used);
            if (used != rest.size()) throw std::invalid_argument("");
            return Rational(n, d);
        }
        std::size_t used = 0;
        double v = std::stod(text, &used);
        if (used != text.size()) throw std::invalid_argument("");
        for (long d = 1; d <= 1000; ++d) {
            double n = v * static_cast<double>(d);
            if (std::abs(n - std::round(n)) < 1e-9 * std::max(1.0, std::abs(n)))
                return Rational(static_cast<long>(std::llround(n)), d);
        }
    } catch (const std::logic_error&) {
    }
    throw std::invalid_argument("cannot read '" + text + "' as a rational number");
}

cplx PuiseuxSeries::eval(cplx s) const
{
    if (s == cplx(0)) {
        cplx v = 0;
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            Rational e = exponent(i);
            if (e.num < 0 && coeffs[i] != cplx(0)) throw std::domain_error("Puiseux series has a pole at 0");
            if (e.num == 0) v += coeffs[i];
        }
        return v;
    }
    // s^{start + i step} = exp(start log s) * (exp(step log s))^i
    cplx ls = std::log(s);
    cplx base = std::exp(start.value() * ls);
    cplx ratio = std::exp(step.value() * ls);
    cplx acc = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * ratio + coeffs[i];
    return base * acc;
}

PuiseuxSeries PuiseuxSeries::refine(Rational new_step) const
{
    Rational q = step / new_step;
    if (q.den != 1 || q.num < 1) throw std::invalid_argument("refine: new step must divide the old step");
    PuiseuxSeries r;
    r.step = new_step;
    r.start = start;
    r.truncation_order = static_cast<int>((truncation_order - 1) * q.num + 1);
    if (truncation_order == 0) r.truncation_order = 0;
    r.coeffs.assign(coeffs.empty() ? 0 : (coeffs.size() - 1) * q.num + 1, cplx(0));
    for (std::size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i * q.num] = coeffs[i];
    return r;
}

PuiseuxSeries PuiseuxSeries::derivative() const
{
    PuiseuxSeries r = *this;
    r.start = start - Rational(1);
    for (std::size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] *= exponent(i).value();
    return r;
}

PuiseuxSeries PuiseuxSeries::scaled(cplx factor) const
{
    PuiseuxSeries r = *this;
    for (auto& c : r.coeffs) c *= factor;
    return r;
}

namespace {

Rational common_step(Rational a, Rational b)
{
    // largest rational dividing both: gcd of numerators over lcm of denominators
    long n = std::gcd(a.num * (b.den), b.num * (a.den));
    return Rational(n, a.den * b.den);
}

// Aligns both series on a common grid; returns index offset of b relative to a.
void align(PuiseuxSeries& a, PuiseuxSeries& b)
{
    Rational st = common_step(common_step(a.step, b.step), b.start - a.start == Rational(0) ? a.step : b.start - a.start);
    a = a.refine(st);
    b = b.refine(st);
}

}  // namespace

PuiseuxSeries operator+(const PuiseuxSeries& x, const PuiseuxSeries& y)
{
    PuiseuxSeries a = x, b = y;
    align(a, b);
    if ((a.start - b.start).value() > 0) std::swap(a, b);
    long off = ((b.start - a.start) / a.step).num;
    PuiseuxSeries r;
    r.step = a.step;
    r.start = a.start;
    // known through the smaller of the two truncation exponents
    long ta = a.truncation_order, tb = b.truncation_order + off;
    r.truncation_order = static_cast<int>(std::min(ta, tb));
    r.coeffs.assign(static_cast<std::size_t>(r.truncation_order), cplx(0));
    for (long i = 0; i < r.truncation_order; ++i) {
        if (i < static_cast<long>(a.coeffs.size())) r.coeffs[i] += a.coeffs[i];
        long j = i - off;
        if (j >= 0 && j < static_cast<long>(b.coeffs.size())) r.coeffs[i] += b.coeffs[j];
    }
    return r;
}

PuiseuxSeries operator*(const PuiseuxSeries& x, const PuiseuxSeries& y)
{
    PuiseuxSeries a = x, b = y;
    Rational st = common_step(a.step, b.step);
    a = a.refine(st);
    b = b.refine(st);
    PuiseuxSeries r;
    r.step = st;
    r.start = a.start + b.start;
    // a_0 b_j, a_i b_0 limit the known range
    r.truncation_order = std::min(a.truncation_order, b.truncation_order);
    r.coeffs.assign(static_cast<std::size_t>(r.truncation_order), cplx(0));
    for (int i = 0; i < r.truncation_order && i < static_cast<int>(a.coeffs.size()); ++i)
        for (int j = 0; i + j < r.truncation_order && j < static_cast<int>(b.coeffs.size()); ++j)
            r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    return r;
}

}  // namespace lacunary
