#pragma once

// Wronskian determinants of jet tuples, subset multiplicity tables, and the
// Frobenius factorization of the differential operator annihilating the span
// of a tuple.

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "cyclab/exp_poly.hpp"
#include "cyclab/jet.hpp"
#include "cyclab/report.hpp"

namespace cyclab {

/// det [f_c^{(r)}]_{r,c}, r, c = 0..l-1, by Laplace expansion over the
/// series ring. The result has truncation order min_trunc - (l - 1).
/// Throws TruncationError when no output coefficient can be produced.
Jet wronskian(std::span<const Jet> fs);

/// Product over columns of the largest derivative-jet coefficient; an upper
/// scale for the determinant used when deciding whether it vanishes.
double wronskian_scale(std::span<const Jet> fs);

/// Order of vanishing of wronskian(fs) judged against wronskian_scale(fs).
Order wronskian_order(std::span<const Jet> fs, const Tolerance& tol = {});

/// Multiplicity at 0 of the Wronskian of each nonempty subset of summands.
struct WronskianTable {
    FamilyShape shape;
    /// Key: subset bitmask (bit k <-> summand k). std::nullopt: vanishes to truncation.
    std::map<std::uint32_t, Order> entries;

    Order at(std::uint32_t subset) const;
    std::uint32_t full_set() const { return (std::uint32_t{1} << shape.m) - 1; }
};

WronskianTable wronskian_table(const ExpPolyParams& lambda,
                               std::size_t trunc_order = kDefaultTruncation,
                               const Tolerance& tol = {});

/// Checks  m_full <= m p + m (m - 1)(q - 1) / 2  for the Wronskian of all
/// summands. Throws DomainError when the full Wronskian vanishes (lambda is a
/// center point and the bound is vacuous).
InequalityReport wronskian_degree_check(const ExpPolyParams& lambda,
                                        std::size_t trunc_order = kDefaultTruncation,
                                        const Tolerance& tol = {});

/// z^valuation * unit: a truncated Laurent series. Coefficient k of `unit`
/// multiplies z^(valuation + k); powers beyond the unit's length are unknown.
struct LaurentJet {
    std::ptrdiff_t valuation = 0;
    Jet unit = Jet::zero(0);

    /// Coefficient of z^power; zero below the valuation. Throws
    /// TruncationError above the known window.
    Complex coefficient(std::ptrdiff_t power) const;
    std::ptrdiff_t top_power() const {
        return valuation + static_cast<std::ptrdiff_t>(unit.trunc_order());
    }
};

LaurentJet operator*(const LaurentJet& a, const LaurentJet& b);
/// d/dz without loss of window: z^v sum u_k z^k -> z^(v-1) sum (v+k) u_k z^k.
LaurentJet derivative(const LaurentJet& a);

struct FrobeniusChain {
    /// Orders of vanishing of W_1..W_l.
    std::vector<std::size_t> wronskian_orders;
    /// Intermediate functions, in application order. For l functions the
    /// chain has 2l + 1 entries: the first multiplication by W_0/W_1, then
    /// alternately a derivative and a multiplication by the next quotient,
    /// ending with the multiplication by W_l / W_{l-1}.
    std::vector<LaurentJet> steps;
    /// Coefficients dropped by monomial extraction while forming quotients.
    std::size_t orders_lost = 0;
    /// A quotient had a pole at 0 (denominator vanishing to higher order
    /// than the numerator).
    bool pole_encountered = false;
};

/// Applies, right to left, the operator
///   (W_l/W_{l-1}) d/dz (W_{l-1}^2 / (W_l W_{l-2})) d/dz ... d/dz (W_1^2/(W_2 W_0)) d/dz (W_0/W_1)
/// to g, where W_s = W(f_1..f_s) and W_0 = 1. Each quotient is formed by
/// extracting the leading power of z from numerator and denominator
/// (div_monomial) and dividing the remaining units (divide).
/// Throws DomainError when some W_s vanishes to truncation.
FrobeniusChain frobenius_chain(std::span<const Jet> fs, const Jet& g, const Tolerance& tol = {});

struct FrobeniusReport {
    /// max |coefficient| of the final Laurent jet over its valid window.
    double residual = 0.0;
    /// max |coefficient| of the (rescaled) g; the magnitude residual is judged against.
    double scale = 0.0;
    /// Variable scaling z -> r z applied before the chain.
    double rescale = 1.0;
    std::size_t orders_lost = 0;
    std::size_t window = 0;
    bool pole_encountered = false;
    std::vector<std::size_t> wronskian_orders;
};

/// frobenius_chain on the jets of f_k(r z), g(r z). The rescaling r keeps the
/// zeros of every Wronskian unit at least twice the unit distance from 0
/// (via the Fujiwara lower bound on root moduli), so quotient coefficients
/// decay. Pass rescale > 0 to force a value instead.
FrobeniusReport frobenius_residual(std::span<const Jet> fs, const Jet& g, const Tolerance& tol = {},
                                   double rescale = 0.0);

}  // namespace cyclab
