#pragma once

// Truncated complex power series ("jets") at the origin.
//
// A Jet of truncation order N stores the coefficients a_0..a_N of
// sum_k a_k z^k. Binary operations on jets of different truncation order
// silently truncate to the shorter operand, matching arithmetic in the ring
// C[[z]]/(z^{N+1}).

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace cyclab {

using Complex = std::complex<double>;

/// Threshold used to decide whether a computed coefficient is zero.
/// A coefficient counts as nonzero when |a_k| > max(rel_zero * scale, abs_floor),
/// where scale is the largest coefficient magnitude in play.
struct Tolerance {
    double rel_zero = 1e-10;
    double abs_floor = 1e-300;

    void validate() const;
    double threshold(double scale) const;
};

/// Order of vanishing at 0. std::nullopt means the jet vanishes to its
/// truncation order (no coefficient above tolerance).
using Order = std::optional<std::size_t>;

class Jet {
public:
    /// Throws NumericError on non-finite entries, DomainError on an empty list.
    explicit Jet(std::vector<Complex> coeffs);

    static Jet zero(std::size_t trunc_order);
    static Jet constant(Complex value, std::size_t trunc_order);
    /// value * z^power, truncated (zero if power > trunc_order).
    static Jet monomial(Complex value, std::size_t power, std::size_t trunc_order);
    /// Jet of a polynomial with coefficients in ascending powers; extra terms
    /// are dropped and missing ones are zero.
    static Jet polynomial(std::span<const Complex> ascending, std::size_t trunc_order);

    std::size_t trunc_order() const noexcept { return coeffs_.size() - 1; }
    std::span<const Complex> coeffs() const noexcept { return coeffs_; }
    Complex operator[](std::size_t k) const { return coeffs_.at(k); }

    /// Largest coefficient magnitude.
    double max_abs() const noexcept;
    Jet truncated(std::size_t trunc_order) const;
    /// Horner evaluation of the truncated polynomial.
    Complex evaluate(Complex z) const noexcept;

    Jet& operator+=(const Jet& other);
    Jet& operator-=(const Jet& other);
    Jet& operator*=(Complex scalar);

private:
    std::vector<Complex> coeffs_;
};

Jet operator+(Jet a, const Jet& b);
Jet operator-(Jet a, const Jet& b);
Jet operator-(Jet a);
/// Cauchy product truncated at the smaller truncation order.
Jet operator*(const Jet& a, const Jet& b);
Jet operator*(Jet a, Complex scalar);
Jet operator*(Complex scalar, Jet a);

/// d/dz; the truncation order drops by one. Throws TruncationError at order 0.
Jet derivative(const Jet& a);

/// exp of a jet. The constant term contributes the scalar factor e^{a_0}.
Jet exp(const Jet& a);

/// Smallest k with |a_k| > tol.threshold(max(max_abs(a), scale)).
/// `scale` lets callers supply an external magnitude (e.g. the size of the
/// inputs a cancelling computation started from).
Order order_of_vanishing(const Jet& a, const Tolerance& tol = {}, double scale = 0.0);

/// a / z^k. Throws DomainError when a does not vanish to order k within
/// tolerance (judged as in order_of_vanishing) and TruncationError when k
/// exceeds the truncation order.
Jet div_monomial(const Jet& a, std::size_t k, const Tolerance& tol = {}, double scale = 0.0);

/// Series quotient a / b. Throws DomainError when b_0 is zero within tolerance.
Jet divide(const Jet& a, const Jet& b, const Tolerance& tol = {});

/// Jet of z -> f(r z): coefficient k is multiplied by r^k.
Jet rescale_variable(const Jet& a, double r);

}  // namespace cyclab
