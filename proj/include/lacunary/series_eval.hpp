#pragma once

#include "lacunary/growth.hpp"
#include "lacunary/special.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lacunary {

struct EvalResult {
    cplx value;
    long long terms_used = 0;
    double tail_bound = 0;   // bound on |discarded tail|
};

// Coefficient weights c(k) with a caller-asserted bound |c(k)| <= bound * k^degree.
struct Coefficients {
    std::function<cplx(long long)> c;
    double bound = 1;
    double degree = 0;
};

class TermCapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class GridError : public std::runtime_error {
public:
    GridError(std::size_t index, const std::string& what)
        : std::runtime_error("point " + std::to_string(index) + ": " + what), index_(index) {}
    std::size_t index() const { return index_; }

private:
    std::size_t index_;
};

inline constexpr long long max_terms = 100'000'000;

// f(z) = sum_{k >= start} c(k) exp(-z g(k)), Re z > 0, |error| <= tail_bound < tol.
EvalResult direct_sum(const Growth& g, cplx z, double tol = 1e-13,
                      const std::optional<Coefficients>& coeff = std::nullopt);

// Integral comparison bound on sum_{k > n} C k^r exp(-x g(k)) for convex g.
double tail_bound(const Growth& g, double x, long long n, double C = 1, double r = 0);

std::vector<EvalResult> grid_eval(const Growth& g, const std::vector<cplx>& points, double tol = 1e-13);

}  // namespace lacunary
