#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace lacunary {

using BigInt = boost::multiprecision::cpp_int;

// Exact number num / 2^log2_den, kept with num odd (or zero with log2_den 0).
class Dyadic {
public:
    Dyadic() = default;
    Dyadic(long long n) : num_(n) { normalize(); }
    Dyadic(BigInt n, int log2_den) : num_(std::move(n)), den_(log2_den) { normalize(); }

    const BigInt& numerator() const { return num_; }
    int log2_denominator() const { return den_; }
    bool is_zero() const { return num_ == 0; }

    // multiply by 2^e
    Dyadic scaled(int e) const { return Dyadic(num_, den_ - e); }
    double to_double() const;
    std::string str() const;

    friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
    friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
    friend Dyadic operator*(const Dyadic& a, const Dyadic& b);
    Dyadic operator-() const { return Dyadic(-num_, den_); }
    Dyadic& operator+=(const Dyadic& o) { return *this = *this + o; }
    friend bool operator==(const Dyadic& a, const Dyadic& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    // |a| <= |b|
    friend bool abs_le(const Dyadic& a, const Dyadic& b);

private:
    void normalize();
    BigInt num_ = 0;
    int den_ = 0;  // may be negative for integers with trailing zero bits
};

}  // namespace lacunary
