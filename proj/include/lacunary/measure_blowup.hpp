#pragma once

#include "lacunary/growth.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace lacunary {

// Window [beta0, beta1] in the variable y/(2 pi).
struct WindowSpec {
    double beta0 = 0;
    double beta1 = 1;
    int quadrature_points = 64;  // floor for the point budget
    void validate() const;
    double length() const { return beta1 - beta0; }
};

class RefinementCapExceeded : public std::runtime_error {
public:
    RefinementCapExceeded(const std::string& what, double achieved)
        : std::runtime_error(what), achieved_(achieved) {}
    double achieved() const { return achieved_; }

private:
    double achieved_;
};

struct WindowIntegral {
    double value = 0;
    double change = 0;  // relative difference of the last two refinements
    long points = 0;
};

// int_{beta0}^{beta1} |f(x + 2 pi i beta)|^2 d beta by composite Gauss-Legendre,
// doubling the panel count until consecutive results agree to rel_tol.
WindowIntegral window_l2_detail(const Growth& g, double x, const WindowSpec& w, double rel_tol = 1e-6);
double window_l2(const Growth& g, double x, const WindowSpec& w);

// Same integral against the window smoothed by up to two box averages of the
// given widths: S_j(beta) = (1/c_j) int_0^{c_j} S_{j-1}(beta + t) dt.
double smoothed_window_l2(const Growth& g, double x, const WindowSpec& w, const std::vector<double>& widths);

// sum_{k >= start} exp(-2 g(k) x)
double diagonal_term(const Growth& g, double x);

struct OffdiagonalBound {
    double sum = 0;       // truncated sum_{k != j} exp(-(g(k)+g(j)) x)/|g(j)-g(k)|^m
    double tail = 0;      // bound on the discarded part
    double diagonal = 0;
    double ratio = 0;     // (sum + tail)/diagonal
};
OffdiagonalBound offdiagonal_bound(const Growth& g, double x, int m);

struct MeasureScanRow {
    double x = 0;
    double ratio = 0;          // window_l2/(length diagonal)
    double offdiag_ratio = 0;  // m = 1 off-diagonal bound over diagonal
};
std::vector<MeasureScanRow> measure_ratio_scan(const Growth& g, const WindowSpec& w, const std::vector<double>& x_grid);
// columns x, ratio, offdiag_ratio
std::string measure_scan_csv(const std::vector<MeasureScanRow>& rows);

}  // namespace lacunary
