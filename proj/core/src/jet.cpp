#include "cyclab/jet.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cyclab/error.hpp"

namespace cyclab {

void Tolerance::validate() const {
    if (!(rel_zero >= 0.0 && rel_zero < 1.0)) {
        throw DomainError("tolerance: rel_zero must lie in [0, 1)");
    }
    if (!(abs_floor >= 0.0) || !std::isfinite(abs_floor)) {
        throw DomainError("tolerance: abs_floor must be a finite nonnegative number");
    }
}

double Tolerance::threshold(double scale) const {
    return std::max(rel_zero * scale, abs_floor);
}

namespace {

bool finite(Complex c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

}  // namespace

Jet::Jet(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
        throw DomainError("jet: coefficient list is empty");
    }
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (!finite(coeffs_[k])) {
            throw NumericError("jet: non-finite coefficient at index " + std::to_string(k));
        }
    }
}

Jet Jet::zero(std::size_t trunc_order) {
    return Jet(std::vector<Complex>(trunc_order + 1));
}

Jet Jet::constant(Complex value, std::size_t trunc_order) {
    return monomial(value, 0, trunc_order);
}

Jet Jet::monomial(Complex value, std::size_t power, std::size_t trunc_order) {
    std::vector<Complex> c(trunc_order + 1);
    if (power <= trunc_order) c[power] = value;
    return Jet(std::move(c));
}

Jet Jet::polynomial(std::span<const Complex> ascending, std::size_t trunc_order) {
    std::vector<Complex> c(trunc_order + 1);
    const std::size_t n = std::min(ascending.size(), c.size());
    std::copy_n(ascending.begin(), n, c.begin());
    return Jet(std::move(c));
}

double Jet::max_abs() const noexcept {
    double m = 0.0;
    for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
    return m;
}

Jet Jet::truncated(std::size_t trunc_order) const {
    if (trunc_order >= this->trunc_order()) return *this;
    return Jet(std::vector<Complex>(coeffs_.begin(), coeffs_.begin() + trunc_order + 1));
}

Complex Jet::evaluate(Complex z) const noexcept {
    Complex acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

Jet& Jet::operator+=(const Jet& other) {
    coeffs_.resize(std::min(coeffs_.size(), other.coeffs_.size()));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
    return *this;
}

Jet& Jet::operator-=(const Jet& other) {
    coeffs_.resize(std::min(coeffs_.size(), other.coeffs_.size()));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
    return *this;
}

Jet& Jet::operator*=(Complex scalar) {
    for (auto& c : coeffs_) c *= scalar;
    return *this;
}

Jet operator+(Jet a, const Jet& b) { return a += b; }
Jet operator-(Jet a, const Jet& b) { return a -= b; }
Jet operator-(Jet a) { return a *= -1.0; }
Jet operator*(Jet a, Complex scalar) { return a *= scalar; }
Jet operator*(Complex scalar, Jet a) { return a *= scalar; }

Jet operator*(const Jet& a, const Jet& b) {
    const std::size_t n = std::min(a.trunc_order(), b.trunc_order());
    const auto ac = a.coeffs();
    const auto bc = b.coeffs();
    std::vector<Complex> out(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        Complex s = 0.0;
        for (std::size_t i = 0; i <= k; ++i) s += ac[i] * bc[k - i];
        out[k] = s;
    }
    return Jet(std::move(out));
}

Jet derivative(const Jet& a) {
    const std::size_t n = a.trunc_order();
    if (n == 0) {
        throw TruncationError("derivative: jet of truncation order 0 has no derivative coefficients");
    }
    const auto ac = a.coeffs();
    std::vector<Complex> out(n);
    for (std::size_t k = 0; k < n; ++k) out[k] = static_cast<double>(k + 1) * ac[k + 1];
    return Jet(std::move(out));
}

Jet exp(const Jet& a) {
    // (e^f)' = f' e^f  =>  n b_n = sum_{k=1}^{n} k a_k b_{n-k}
    const std::size_t n = a.trunc_order();
    const auto ac = a.coeffs();
    std::vector<Complex> b(n + 1);
    b[0] = std::exp(ac[0]);
    for (std::size_t j = 1; j <= n; ++j) {
        Complex s = 0.0;
        for (std::size_t k = 1; k <= j; ++k) s += static_cast<double>(k) * ac[k] * b[j - k];
        b[j] = s / static_cast<double>(j);
    }
    return Jet(std::move(b));
}

Order order_of_vanishing(const Jet& a, const Tolerance& tol, double scale) {
    const double thr = tol.threshold(std::max(a.max_abs(), scale));
    const auto ac = a.coeffs();
    for (std::size_t k = 0; k < ac.size(); ++k) {
        if (std::abs(ac[k]) > thr) return k;
    }
    return std::nullopt;
}

Jet div_monomial(const Jet& a, std::size_t k, const Tolerance& tol, double scale) {
    if (k > a.trunc_order()) {
        throw TruncationError("div_monomial: power " + std::to_string(k) +
                              " exceeds truncation order " + std::to_string(a.trunc_order()));
    }
    const Order ord = order_of_vanishing(a, tol, scale);
    if (ord && *ord < k) {
        throw DomainError("div_monomial: jet vanishes only to order " + std::to_string(*ord) +
                          ", cannot divide by z^" + std::to_string(k));
    }
    const auto ac = a.coeffs();
    return Jet(std::vector<Complex>(ac.begin() + static_cast<std::ptrdiff_t>(k), ac.end()));
}

Jet divide(const Jet& a, const Jet& b, const Tolerance& tol) {
    const auto bc = b.coeffs();
    if (std::abs(bc[0]) <= tol.threshold(b.max_abs())) {
        throw DomainError("divide: denominator has vanishing constant term");
    }
    const std::size_t n = std::min(a.trunc_order(), b.trunc_order());
    const auto ac = a.coeffs();
    std::vector<Complex> c(n + 1);
    for (std::size_t j = 0; j <= n; ++j) {
        Complex s = ac[j];
        for (std::size_t k = 1; k <= j; ++k) s -= bc[k] * c[j - k];
        c[j] = s / bc[0];
    }
    return Jet(std::move(c));
}

Jet rescale_variable(const Jet& a, double r) {
    std::vector<Complex> out(a.coeffs().begin(), a.coeffs().end());
    double rk = 1.0;
    for (auto& c : out) {
        c *= rk;
        rk *= r;
    }
    return Jet(std::move(out));
}

}  // namespace cyclab
