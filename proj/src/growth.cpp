#include "lacunary/growth.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace lacunary {

Growth Growth::power(double b, int start)
{
    if (!(b > 1)) throw std::invalid_argument("power growth needs exponent b > 1");
    if (start < 0) throw std::invalid_argument("start index must be >= 0");
    Growth g;
    g.kind_ = GrowthKind::power;
    g.param_ = b;
    g.start_ = start;
    return g;
}

Growth Growth::geometric(double a, bool normalized, int start)
{
    if (!(a > 1)) throw std::invalid_argument("geometric growth needs base a > 1");
    if (start < 0) throw std::invalid_argument("start index must be >= 0");
    Growth g;
    g.kind_ = GrowthKind::geometric;
    g.param_ = a;
    g.offset_ = normalized ? 1.0 : 0.0;
    g.start_ = start;
    return g;
}

Growth Growth::custom(Fn eval, Fn deriv, Fn inverse, int start)
{
    if (!eval || !deriv) throw std::invalid_argument("custom growth needs eval and derivative");
    if (start < 0) throw std::invalid_argument("start index must be >= 0");
    Growth g;
    g.kind_ = GrowthKind::custom;
    g.param_ = 0;
    g.start_ = start;
    g.f_ = std::move(eval);
    g.df_ = std::move(deriv);
    g.inv_ = std::move(inverse);

    // sample monotonicity and growth of the derivative
    double prev = g.f_(start);
    for (int i = 1; i <= 64; ++i) {
        double k = start + 0.5 * i;
        double v = g.f_(k);
        if (!(v > prev)) throw std::invalid_argument("custom growth is not strictly increasing");
        if (!(g.df_(k) > 0)) throw std::invalid_argument("custom growth derivative not positive");
        prev = v;
    }
    if (!(g.df_(start + 1e6) > g.df_(start + 1.0)))
        throw std::invalid_argument("custom growth derivative does not grow");
    return g;
}

Growth Growth::with_start(int start) const
{
    if (start < 0) throw std::invalid_argument("start index must be >= 0");
    Growth g = *this;
    g.start_ = start;
    return g;
}

double Growth::raw(double k) const
{
    switch (kind_) {
    case GrowthKind::power: return std::pow(k, param_);
    case GrowthKind::geometric: return std::pow(param_, k);
    case GrowthKind::custom: return f_(k);
    }
    return 0;
}

double Growth::eval(double k) const
{
    if (k < 0) throw std::domain_error("growth evaluated at negative index");
    return raw(k) - offset_;
}

double Growth::derivative(double k) const
{
    if (k < 0) throw std::domain_error("growth derivative at negative index");
    switch (kind_) {
    case GrowthKind::power: return k == 0 ? 0.0 : param_ * std::pow(k, param_ - 1);
    case GrowthKind::geometric: return std::log(param_) * std::pow(param_, k);
    case GrowthKind::custom: return df_(k);
    }
    return 0;
}

double Growth::inverse(double u) const
{
    if (u < 0) throw std::domain_error("growth inverse of negative value");
    switch (kind_) {
    case GrowthKind::power: return std::pow(u, 1.0 / param_);
    case GrowthKind::geometric: return std::log(u + offset_) / std::log(param_);
    case GrowthKind::custom: break;
    }
    if (inv_) return inv_(u);

    // bracket, bisect, then polish
    double lo = 0, hi = 1;
    int doublings = 0;
    while (f_(hi) < u) {
        lo = hi;
        hi *= 2;
        if (++doublings > 1100) throw std::runtime_error("growth inverse: no bracket, growth not monotone?");
    }
    for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
        double mid = 0.5 * (lo + hi);
        if (f_(mid) < u) lo = mid; else hi = mid;
    }
    double k = 0.5 * (lo + hi);
    for (int it = 0; it < 5; ++it) {
        double d = df_(k);
        if (!(d > 0)) break;
        double step = (f_(k) - u) / d;
        if (!std::isfinite(step)) break;
        k -= step;
    }
    if (!(std::abs(f_(k) - u) <= 1e-10 * std::max(1.0, std::abs(u))))
        throw std::runtime_error("growth inverse did not converge, growth not monotone?");
    return k;
}

std::string Growth::describe() const
{
    std::ostringstream os;
    switch (kind_) {
    case GrowthKind::power: os << "power(b=" << param_ << ")"; break;
    case GrowthKind::geometric: os << "geometric(a=" << param_ << (offset_ != 0 ? ",normalized" : "") << ")"; break;
    case GrowthKind::custom: os << "custom"; break;
    }
    os << " from k=" << start_;
    return os.str();
}

}  // namespace lacunary
