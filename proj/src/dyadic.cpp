#include "lacunary/dyadic.hpp"

#include <cmath>

namespace lacunary {

void Dyadic::normalize()
{
    if (num_ == 0) {
        den_ = 0;
        return;
    }
    unsigned tz = boost::multiprecision::lsb(num_ < 0 ? BigInt(-num_) : num_);
    if (tz) {
        num_ >>= tz;
        den_ -= static_cast<int>(tz);
    }
}

double Dyadic::to_double() const
{
    if (num_ == 0) return 0;
    BigInt a = num_ < 0 ? BigInt(-num_) : num_;
    int shift = 0;
    unsigned msb = boost::multiprecision::msb(a);
    if (msb > 62) {
        shift = static_cast<int>(msb) - 62;
        a >>= shift;
    }
    double v = std::ldexp(static_cast<double>(a.convert_to<unsigned long long>()), shift - den_);
    return num_ < 0 ? -v : v;
}

std::string Dyadic::str() const
{
    if (den_ <= 0) return BigInt(num_ << -den_).str();
    return num_.str() + "/2^" + std::to_string(den_);
}

namespace {

// both operands brought to the larger denominator
void align(const Dyadic& a, const Dyadic& b, BigInt& x, BigInt& y, int& den)
{
    den = std::max(a.log2_denominator(), b.log2_denominator());
    x = a.numerator() << (den - a.log2_denominator());
    y = b.numerator() << (den - b.log2_denominator());
}

}  // namespace

Dyadic operator+(const Dyadic& a, const Dyadic& b)
{
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    BigInt x, y;
    int den;
    align(a, b, x, y, den);
    return Dyadic(x + y, den);
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }

Dyadic operator*(const Dyadic& a, const Dyadic& b) { return Dyadic(a.num_ * b.num_, a.den_ + b.den_); }

bool abs_le(const Dyadic& a, const Dyadic& b)
{
    BigInt x, y;
    int den;
    align(a, b, x, y, den);
    if (x < 0) x = -x;
    if (y < 0) y = -y;
    return x <= y;
}

}  // namespace lacunary
