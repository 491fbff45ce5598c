#pragma once

#include "lacunary/special.hpp"

#include <string>
#include <vector>

namespace lacunary {

struct Rational {
    long num = 0;
    long den = 1;

    Rational() = default;
    Rational(long n, long d = 1);

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const;

    friend Rational operator+(Rational a, Rational b);
    friend Rational operator-(Rational a, Rational b);
    friend Rational operator*(Rational a, Rational b);
    friend Rational operator/(Rational a, Rational b);
    friend bool operator==(Rational a, Rational b) { return a.num == b.num && a.den == b.den; }
};

// Parses "3", "3/2", "1.5" (decimal restricted to small denominators).
Rational parse_rational(const std::string& text);

// Truncated series sum_i coeffs[i] s^{start + i*step}, known through
// truncation_order terms (coefficients beyond it are unknown, not zero).
struct PuiseuxSeries {
    Rational step{1};
    Rational start{0};
    std::vector<cplx> coeffs;
    int truncation_order = 0;

    Rational exponent(std::size_t i) const { return start + step * Rational(static_cast<long>(i)); }

    // principal branch powers
    cplx eval(cplx s) const;
    PuiseuxSeries refine(Rational new_step) const;
    PuiseuxSeries derivative() const;
    PuiseuxSeries scaled(cplx factor) const;
};

PuiseuxSeries operator+(const PuiseuxSeries& a, const PuiseuxSeries& b);
PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b);

}  // namespace lacunary
