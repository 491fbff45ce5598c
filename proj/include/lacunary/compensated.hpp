#pragma once

#include <cmath>
#include <complex>

namespace lacunary {

// Neumaier compensated accumulator, real and imaginary parts kept separately.
class CompensatedSum {
public:
    void add(std::complex<double> v)
    {
        step(re_, cre_, v.real());
        step(im_, cim_, v.imag());
    }
    CompensatedSum& operator+=(std::complex<double> v)
    {
        add(v);
        return *this;
    }
    std::complex<double> value() const { return {re_ + cre_, im_ + cim_}; }

private:
    static void step(double& s, double& c, double x)
    {
        double t = s + x;
        if (std::abs(s) >= std::abs(x)) c += (s - t) + x;
        else c += (x - t) + s;
        s = t;
    }
    double re_ = 0, cre_ = 0, im_ = 0, cim_ = 0;
};

}  // namespace lacunary
