#pragma once

#include <functional>
#include <string>

namespace lacunary {

enum class GrowthKind { power, geometric, custom };

// Exponent sequence g(k) of a lacunary Dirichlet series sum c_k exp(-z g(k)).
// Values are immutable after construction.
class Growth {
public:
    using Fn = std::function<double(double)>;

    // g(k) = k^b, summation from k = start (default 1).
    static Growth power(double b, int start = 1);
    // g(k) = a^k, or a^k - 1 when normalized so that g(0) = 0.
    static Growth geometric(double a, bool normalized = false, int start = 0);
    // User supplied g, g' and optionally g^{-1}; monotonicity is sampled.
    static Growth custom(Fn eval, Fn deriv, Fn inverse = {}, int start = 1);

    double operator()(double k) const { return eval(k); }
    double eval(double k) const;
    double derivative(double k) const;
    double inverse(double u) const;

    GrowthKind kind() const { return kind_; }
    double param() const { return param_; }   // b for power, a for geometric
    double offset() const { return offset_; }
    int start_index() const { return start_; }
    Growth with_start(int start) const;

    std::string describe() const;

private:
    Growth() = default;
    double raw(double k) const;

    GrowthKind kind_ = GrowthKind::power;
    double param_ = 2;
    double offset_ = 0;
    int start_ = 1;
    Fn f_, df_, inv_;
};

}  // namespace lacunary
