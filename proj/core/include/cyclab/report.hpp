#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace cyclab {

using Complex = std::complex<double>;

/// Open disk {z : |z - center| < radius}.
struct Disk {
    Complex center{};
    double radius = 1.0;

    /// Throws DomainError unless radius is positive and finite.
    void validate() const;
    bool contains(Complex z) const { return std::abs(z - center) < radius; }
};

/// Outcome of checking one inequality numerically.
///
/// `margin` is signed so that a positive value means the inequality holds:
/// rhs - lhs for "lhs <= rhs" checks and lhs - rhs for "lhs >= rhs" checks.
struct InequalityReport {
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
    bool satisfied = false;
    std::optional<double> empirical_exponent;
    /// Empirical exponent divided by max(1, c): a lower bound for the
    /// constant in front of the cyclicity.
    std::optional<double> empirical_constant;
    std::optional<std::vector<Disk>> witness;
    std::string note;
};

}  // namespace cyclab
