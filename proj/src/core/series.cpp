#include "series.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace tdet {

namespace {

constexpr int kMinOrder = 3;

void check_order(int order) {
    if (order < kMinOrder) {
        throw InvalidInput("series order must be at least " + std::to_string(kMinOrder) +
                           ", got " + std::to_string(order));
    }
}

void check_same_order(const Series& f, const Series& g) {
    if (f.order() != g.order()) {
        throw InvalidInput("series order mismatch: " + std::to_string(f.order()) + " vs " +
                           std::to_string(g.order()));
    }
}

void check_unit_constant(const Series& f, const char* what) {
    if (std::abs(f[0] - Complex(1.0, 0.0)) > 1e-12) {
        throw InvalidInput(std::string(what) + " requires constant term 1");
    }
}

} // namespace

Series::Series(int order) {
    check_order(order);
    coeffs_.assign(static_cast<size_t>(order) + 1, Complex(0.0, 0.0));
}

Series::Series(int order, std::initializer_list<Complex> coeffs) : Series(order) {
    if (static_cast<int>(coeffs.size()) > order + 1) {
        throw InvalidInput("more coefficients than the requested order admits");
    }
    size_t k = 0;
    for (Complex c : coeffs) coeffs_[k++] = c;
}

Series Series::constant(int order, Complex c0) {
    Series s(order);
    s[0] = c0;
    return s;
}

Series Series::identity(int order) {
    Series s(order);
    s[1] = Complex(1.0, 0.0);
    return s;
}

Series Series::from_coeffs(std::vector<Complex> coeffs) {
    check_order(static_cast<int>(coeffs.size()) - 1);
    Series s(static_cast<int>(coeffs.size()) - 1);
    s.coeffs_ = std::move(coeffs);
    return s;
}

Complex Series::eval(Complex z) const {
    Complex acc = coeffs_.back();
    for (int k = order() - 1; k >= 0; --k) acc = acc * z + coeffs_[static_cast<size_t>(k)];
    return acc;
}

Series operator+(const Series& f, const Series& g) {
    check_same_order(f, g);
    Series r(f.order());
    for (int k = 0; k <= f.order(); ++k) r[k] = f[k] + g[k];
    return r;
}

Series operator-(const Series& f, const Series& g) {
    check_same_order(f, g);
    Series r(f.order());
    for (int k = 0; k <= f.order(); ++k) r[k] = f[k] - g[k];
    return r;
}

Series operator-(const Series& f) {
    Series r(f.order());
    for (int k = 0; k <= f.order(); ++k) r[k] = -f[k];
    return r;
}

Series operator*(const Series& f, const Series& g) {
    check_same_order(f, g);
    const int n = f.order();
    Series r(n);
    for (int k = 0; k <= n; ++k) {
        Complex acc(0.0, 0.0);
        for (int j = 0; j <= k; ++j) acc += f[j] * g[k - j];
        r[k] = acc;
    }
    return r;
}

Series operator*(Complex c, const Series& f) {
    Series r(f.order());
    for (int k = 0; k <= f.order(); ++k) r[k] = c * f[k];
    return r;
}

Series operator/(const Series& f, const Series& g) {
    check_same_order(f, g);
    if (g[0] == Complex(0.0, 0.0)) {
        throw InvalidInput("division by a series with zero constant term");
    }
    const int n = f.order();
    Series q(n);
    for (int k = 0; k <= n; ++k) {
        Complex acc = f[k];
        for (int j = 0; j < k; ++j) acc -= q[j] * g[k - j];
        q[k] = acc / g[0];
    }
    return q;
}

// h = exp(f): from h' = f' h, k h_k = sum_{j=1..k} j f_j h_{k-j}.
Series exp(const Series& f) {
    const int n = f.order();
    Series h(n);
    h[0] = std::exp(f[0]);
    for (int k = 1; k <= n; ++k) {
        Complex acc(0.0, 0.0);
        for (int j = 1; j <= k; ++j) acc += static_cast<double>(j) * f[j] * h[k - j];
        h[k] = acc / static_cast<double>(k);
    }
    return h;
}

// h = log(f): from f h' = f', k f_0 h_k = k f_k - sum_{j=1..k-1} j h_j f_{k-j}.
Series log(const Series& f) {
    check_unit_constant(f, "log of a series");
    const int n = f.order();
    Series h(n);
    h[0] = std::log(f[0]);
    for (int k = 1; k <= n; ++k) {
        Complex acc = static_cast<double>(k) * f[k];
        for (int j = 1; j < k; ++j) acc -= static_cast<double>(j) * h[j] * f[k - j];
        h[k] = acc / (f[0] * static_cast<double>(k));
    }
    return h;
}

// h = f^a with h(0) = 1: from a f' h = f h', k f_0 h_k = sum_{j=1..k} (a j - (k - j)) f_j h_{k-j}.
Series pow(const Series& f, double expo) {
    check_unit_constant(f, "pow of a series");
    const int n = f.order();
    Series h(n);
    h[0] = Complex(1.0, 0.0);
    for (int k = 1; k <= n; ++k) {
        Complex acc(0.0, 0.0);
        for (int j = 1; j <= k; ++j) {
            acc += (expo * static_cast<double>(j) - static_cast<double>(k - j)) * f[j] * h[k - j];
        }
        h[k] = acc / (f[0] * static_cast<double>(k));
    }
    return h;
}

Series compose(const Series& f, const Series& w) {
    check_same_order(f, w);
    if (w[0] != Complex(0.0, 0.0)) {
        throw InvalidInput("composition requires an inner series with zero constant term");
    }
    const int n = f.order();
    Series acc = Series::constant(n, f[n]);
    for (int k = n - 1; k >= 0; --k) {
        acc = acc * w;
        acc[0] += f[k];
    }
    return acc;
}

Series derivative(const Series& f) {
    const int n = f.order();
    Series r(n);
    for (int k = 0; k < n; ++k) r[k] = static_cast<double>(k + 1) * f[k + 1];
    return r;
}

Series integrate_logderiv(const Series& f) {
    check_unit_constant(f, "integrate_logderiv");
    const int n = f.order();
    Series r(n);
    for (int k = 1; k <= n; ++k) r[k] = f[k] / static_cast<double>(k);
    return r;
}

Series scale_argument(const Series& f, Complex c) {
    Series r(f.order());
    Complex ck(1.0, 0.0);
    for (int k = 0; k <= f.order(); ++k) {
        r[k] = f[k] * ck;
        ck *= c;
    }
    return r;
}

Series truncated(const Series& f, int order) {
    check_order(order);
    if (order > f.order()) {
        throw InvalidInput("cannot truncate a series to a higher order");
    }
    Series r(order);
    for (int k = 0; k <= order; ++k) r[k] = f[k];
    return r;
}

} // namespace tdet
