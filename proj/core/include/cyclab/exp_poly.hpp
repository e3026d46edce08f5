#pragma once

// Generalized exponential polynomials  f(z) = sum_k P_k(z) exp(Q_k(z)),
// deg P_k <= p, deg Q_k <= q, Q_k(0) = 0.
//
// Summands are indexed 0..m-1 in this API. P_k has coefficients c(k, 0..p);
// Q_k has coefficients d(k, 1..q) (no constant term).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cyclab/jet.hpp"

namespace cyclab {

inline constexpr std::size_t kDefaultTruncation = 64;

struct FamilyShape {
    std::size_t m = 1;  ///< number of summands
    std::size_t p = 0;  ///< degree bound of P_k
    std::size_t q = 1;  ///< degree bound of Q_k

    /// Throws DomainError unless m >= 1 and q >= 1.
    void validate() const;
    /// Number of complex coordinates, m (p + q + 1).
    std::size_t parameter_count() const noexcept { return m * (p + q + 1); }

    friend bool operator==(const FamilyShape&, const FamilyShape&) = default;
};

/// Parameter vector (the coefficient strings of all P_k and Q_k).
class ExpPolyParams {
public:
    /// All coefficients zero.
    explicit ExpPolyParams(FamilyShape shape);
    /// c is m x (p+1) and d is m x q, both row-major by summand.
    ExpPolyParams(FamilyShape shape, std::vector<Complex> c, std::vector<Complex> d);

    const FamilyShape& shape() const noexcept { return shape_; }

    Complex& c(std::size_t k, std::size_t i);
    Complex c(std::size_t k, std::size_t i) const;
    /// 1 <= j <= q.
    Complex& d(std::size_t k, std::size_t j);
    Complex d(std::size_t k, std::size_t j) const;

    /// Coefficients of P_k in ascending powers (p + 1 entries).
    std::span<const Complex> p_coeffs(std::size_t k) const;
    /// Coefficients d_{k1}..d_{kq}.
    std::span<const Complex> q_coeffs(std::size_t k) const;
    /// Q_k in ascending powers including the zero constant term (q + 1 entries).
    std::vector<Complex> q_polynomial(std::size_t k) const;

    std::span<const Complex> c_all() const noexcept { return c_; }
    std::span<const Complex> d_all() const noexcept { return d_; }

    /// Flattened coordinates: for each summand, c_{k0..kp} then d_{k1..kq}.
    std::vector<Complex> coordinates() const;
    static ExpPolyParams from_coordinates(FamilyShape shape, std::span<const Complex> coords);

    /// True when every Q_k vanishes identically (within `threshold`).
    bool is_polynomial(double threshold = 0.0) const;

    /// Coordinatewise scaling z * lambda.
    friend ExpPolyParams operator*(Complex z, const ExpPolyParams& lambda);

private:
    std::size_t check_summand(std::size_t k) const;

    FamilyShape shape_;
    std::vector<Complex> c_;
    std::vector<Complex> d_;
};

struct ValueAndDerivative {
    Complex value;
    Complex derivative;
};

/// f(z) by Horner evaluation of each P_k, Q_k. Throws NumericError when some
/// Re Q_k(z) leaves the double exponent range.
Complex evaluate(const ExpPolyParams& lambda, Complex z);

/// f(z) and f'(z) = sum_k (P_k' + P_k Q_k') e^{Q_k}, analytically.
ValueAndDerivative evaluate_with_derivative(const ExpPolyParams& lambda, Complex z);

/// Jet of P_k e^{Q_k} at 0 (k is 0-based).
Jet summand_jet(const ExpPolyParams& lambda, std::size_t k,
                std::size_t trunc_order = kDefaultTruncation);

/// Jet of f at 0: the sum of all summand jets.
Jet family_jet(const ExpPolyParams& lambda, std::size_t trunc_order = kDefaultTruncation);

/// Largest summand-jet coefficient; the magnitude scale against which
/// cancellation in family_jet is judged.
double summand_scale(const ExpPolyParams& lambda, std::size_t trunc_order = kDefaultTruncation);

/// Maclaurin coefficient a_n by the closed multinomial formula: for each
/// summand, sum over j of c_{kj} times the sum over all weighted compositions
/// k_1 + 2 k_2 + ... + q k_q = n - j of prod_i d_{ki}^{k_i} / k_i!.
Complex maclaurin_coeff(const ExpPolyParams& lambda, std::size_t n);

enum class CenterReason { structural, coefficient_vanishing, wronskian_vanishing };

struct CenterVerdict {
    bool in_center = false;
    /// Bitmask (bit k <-> summand k) of the summands whose P_k are nonzero
    /// and cancel; empty when all P_k vanish or the point is not a center.
    std::optional<std::uint32_t> witness_subset;
    CenterReason reason = CenterReason::structural;
};

/// Whether f vanishes identically. Summands are grouped by equal Q_k
/// (coefficientwise within tolerance); f == 0 iff the P_k of every group sum
/// to the zero polynomial. The verdict is cross-checked against the order of
/// vanishing of family_jet:
///   structural             the grouping decides, and the jet agrees or the grouping says "center";
///   coefficient_vanishing  grouping says "not a center" but every jet coefficient vanishes;
///   wronskian_vanishing    not a center, yet the summands are linearly dependent
///                          (full Wronskian vanishes to truncation).
CenterVerdict center_membership(const ExpPolyParams& lambda, const Tolerance& tol = {});

/// c_{p,q,m} = m - 1 + m p + m (m - 1) (q - 1) / 2.
std::size_t cyclicity_bound(const FamilyShape& shape);

/// m p + m (m - 1) (q - 1) / 2: degree bound for the polynomial factor of
/// the full Wronskian of the summands.
std::size_t wronskian_degree_bound(const FamilyShape& shape);

/// c_{ki} -> c_{ki}^{i+1}, d_{kj} -> d_{kj}^{j}.
ExpPolyParams psi_map(const ExpPolyParams& lambda);

/// The unique R > 0 with max_k sup_{|z-w|<=R} |Q_k(z)| = 1, to relative 1e-8.
/// Throws DomainError when every Q_k vanishes (f is a polynomial) or when
/// already max_k |Q_k(w)| >= 1.
double radius_normalizer(const ExpPolyParams& lambda, Complex w);

}  // namespace cyclab
