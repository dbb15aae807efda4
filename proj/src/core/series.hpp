#pragma once

#include <complex>
#include <initializer_list>
#include <vector>

#include "errors.hpp"

namespace tdet {

using Complex = std::complex<double>;

// Truncated complex power series c_0 + c_1 z + ... + c_N z^N, dense storage.
// Values are immutable in spirit: every operation returns a fresh series of
// the same order N, discarding coefficients above N.  N >= 3 always.
class Series {
public:
    explicit Series(int order);
    Series(int order, std::initializer_list<Complex> coeffs);

    static Series constant(int order, Complex c0);
    static Series identity(int order); // the monomial z
    static Series from_coeffs(std::vector<Complex> coeffs);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    Complex operator[](int k) const { return coeffs_[static_cast<size_t>(k)]; }
    Complex& operator[](int k) { return coeffs_[static_cast<size_t>(k)]; }
    const std::vector<Complex>& coeffs() const { return coeffs_; }

    // Horner evaluation of the truncating polynomial at a point.
    Complex eval(Complex z) const;

private:
    std::vector<Complex> coeffs_;
};

Series operator+(const Series& f, const Series& g);
Series operator-(const Series& f, const Series& g);
Series operator-(const Series& f);
Series operator*(const Series& f, const Series& g); // Cauchy product
Series operator*(Complex c, const Series& f);
Series operator/(const Series& f, const Series& g); // needs g[0] != 0

Series exp(const Series& f);
Series log(const Series& f);              // needs f[0] = 1
Series pow(const Series& f, double expo); // needs f[0] = 1; branch = 1 at 0
Series compose(const Series& f, const Series& w); // needs w[0] = 0
Series derivative(const Series& f);

// integral_0^z (f(t) - 1) / t dt; needs f[0] = 1.  If g = exp of the result,
// then 1 + z g'(z)/g(z) = f(z), which is how subordinate factors are built.
Series integrate_logderiv(const Series& f);

Series scale_argument(const Series& f, Complex c); // f(c z)
Series truncated(const Series& f, int order);      // drop to a lower order

} // namespace tdet
