#pragma once

#include "lacunary/dyadic.hpp"
#include "lacunary/special.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace lacunary {

// Sparse polynomial with exact dyadic coefficients; terms above degree_cap are
// dropped and counted.
class SparsePolynomial {
public:
    using Power = std::uint64_t;

    explicit SparsePolynomial(Power degree_cap = 256) : cap_(degree_cap) {}
    static SparsePolynomial monomial(Power p, Dyadic c, Power degree_cap);

    Power degree_cap() const { return cap_; }
    const std::map<Power, Dyadic>& terms() const { return terms_; }
    std::size_t dropped() const { return dropped_; }
    bool empty() const { return terms_.empty(); }
    Dyadic coeff(Power p) const;

    // adds c z^p; returns false when p exceeds the cap
    bool add(Power p, const Dyadic& c);

    SparsePolynomial operator+(const SparsePolynomial& o) const;
    SparsePolynomial operator-(const SparsePolynomial& o) const;
    SparsePolynomial operator*(const SparsePolynomial& o) const;
    SparsePolynomial scaled(const Dyadic& c) const;
    SparsePolynomial times_z() const;
    // p(z^2)
    SparsePolynomial squared_argument() const;
    friend bool operator==(const SparsePolynomial& a, const SparsePolynomial& b) { return a.terms_ == b.terms_; }

    cplx eval(cplx z) const;
    Power degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }
    int max_popcount() const;

private:
    Power cap_;
    std::map<Power, Dyadic> terms_;
    std::size_t dropped_ = 0;
};

// (T f)(z) = (1/2) sum_k 2^{-k} f(z^{2^k}), truncated at the cap; a constant c maps to c.
SparsePolynomial operator_T(const SparsePolynomial& p);
// f -> 2 f - f(z^2), the inverse of operator_T.
SparsePolynomial inverse_T(const SparsePolynomial& p);

struct BotcherSeries {
    int K = 0;
    SparsePolynomial::Power D = 0;
    std::vector<SparsePolynomial> psi;  // psi_0 .. psi_K
    std::size_t dropped_terms = 0;      // terms lost to the degree cap

    bool binary_lacunary() const;
    double max_coefficient() const;
    std::string to_json() const;
};

// psi_0 = 1 and psi_k = T(z sum_{j<k} psi_j(z^2) psi_{k-1-j} - sum_{0<j<k} psi_j psi_{k-j}).
// D = 0 selects 2^{K+2}.
BotcherSeries psi_series(int K, SparsePolynomial::Power D = 0);

// psi_0(z) .. psi_K(z) without degree truncation, from the recurrence
// evaluated along the orbit z, z^2, z^4, ...
std::vector<cplx> psi_orbit_values(int K, cplx z);

enum class PsiMode { orbit, polynomial };

struct PsiValue {
    cplx value;
    double tail_estimate = 0;  // |lambda|^{K+2} A/(1-|lambda|), A = |lambda|/(1-|lambda|)
};

// lambda z + sum_{k=1}^K lambda^{k+1} z psi_k(z)
PsiValue psi_eval(const BotcherSeries& s, cplx lambda, cplx z, PsiMode mode = PsiMode::orbit);

// |psi(z)^2 - lambda psi(z^2)(1 + psi(z))|
double functional_residual(const BotcherSeries& s, cplx lambda, cplx z, PsiMode mode = PsiMode::orbit);

class NearZeroPsi : public std::runtime_error {
public:
    NearZeroPsi(const std::string& what, double t) : std::runtime_error(what), t_(t) {}
    double t() const { return t_; }

private:
    double t_;
};

struct PlanarPoint {
    double x = 0, y = 0;
};

// -(Re H, Im H)(e^{it}) with H = 1/psi, t uniform in [0, 2 pi).
std::vector<PlanarPoint> julia_curve(const BotcherSeries& s, cplx lambda, std::size_t samples);

struct Box {
    double xmin = -1, xmax = 1, ymin = -1, ymax = 1;
};

struct EscapeCloud {
    Box box;
    std::size_t resolution = 0;
    double cell = 0;                  // larger of the two cell sides
    std::vector<PlanarPoint> points;  // centres of boundary cells
    std::vector<unsigned char> escaped;  // row-major classification
};

// Escape-time classification of x -> lambda x (1 - x) on a resolution^2 grid;
// boundary cells are those with a 4-neighbour of the other class.
EscapeCloud escape_time_oracle(cplx lambda, std::size_t resolution, int max_iter, double escape_radius, const Box& box);
// Box from the curve's extent enlarged by 1.5 about its centre.
Box curve_box(const std::vector<PlanarPoint>& curve, double enlarge = 1.5);

// max over the curve of the distance to the nearest cloud point, in cells
double curve_to_cloud_distance(const std::vector<PlanarPoint>& curve, const EscapeCloud& cloud);

std::string points_csv(const std::vector<PlanarPoint>& pts);

struct SelfSimilarity {
    double corrected = 0;  // psi_1 identity iterated n times
    double printed = 0;    // displayed form read literally
};
SelfSimilarity self_similarity_check(double rho, long m, int n);

}  // namespace lacunary
