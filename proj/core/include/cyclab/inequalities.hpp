#pragma once

// Numerical verifiers for the minimum-modulus (Cartan-type) estimate and the
// Remez-type inequality for exponential polynomials, and the classical
// Chebyshev-Remez bound for ordinary polynomials.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "cyclab/exp_poly.hpp"
#include "cyclab/report.hpp"

namespace cyclab {

/// A = exp(((e + 1) / (e - 1))^2).
double cartan_constant();

struct CartanConfig {
    double H = 1.0;
    double d = 1.0;
    Complex w{};
    double R = 0.2;
    std::size_t grid = 101;
    /// Stand-in for the nonconstructive radius factor: R must be below
    /// radius_normalizer(lambda, w) * radius_factor.
    double radius_factor = 0.5;

    void validate() const;
};

/// Builds exclusion disks of equal radius 2 H R (k d)^(-1/d) around the k
/// distinct zeros of f in D_R(w), so that sum r_j^d = (2 H R)^d / d, and
/// checks on a grid x grid lattice of D_{R/e}(w) minus the disks that
///   |f(z)| >= sup_{D_R(w)} |f| * (H / A)^(c_{p,q,m} + 1).
/// When the disks swallow every lattice point the radii are halved (staying
/// within budget) until some point remains. lhs is the sampled minimum of
/// |f|, rhs the bound; the witness holds the disks. A failing check is
/// reported as "witness not found", not as a counterexample.
/// Throws DomainError for polynomial lambda or R outside the admissible
/// range, NumericError when the zero count and its oracle fail.
InequalityReport cartan_verify(const ExpPolyParams& lambda, const CartanConfig& cfg);

/// Closed segment [a, b] in the complex plane.
struct Segment {
    Complex a{};
    Complex b{};
    double length() const { return std::abs(b - a); }
};

struct RemezConfig {
    Segment interval;
    /// Subsegments of `interval` (collinear and inside it); overlaps are merged.
    std::vector<Segment> omega;
    /// Cyclicity used in the exponent; defaults to c_{p,q,m}.
    std::optional<std::size_t> c_exponent;
    double c_hat = 1.0;
    double radius_factor = 0.5;
    std::size_t samples = 4096;
};

/// Checks sup_I |f| <= Phi(2|I|/|omega| - 1)^(c_hat * max(1, c)) * sup_omega |f|
/// and reports the smallest exponent E that would make it hold
/// (empirical_exponent) together with E / max(1, c) (empirical_constant).
/// Throws DomainError for polynomial lambda, an interval outside
/// D_{R_{lambda;w} * radius_factor / e}(w), or sup_omega |f| = 0.
InequalityReport remez_verify(const ExpPolyParams& lambda, const RemezConfig& cfg, Complex w = {});

/// Chebyshev polynomial T_p(x) by the three-term recurrence.
double chebyshev(std::size_t p, double x);

/// Phi(t) = t + sqrt(t^2 - 1); throws DomainError for t < 1.
double phi(double t);

struct Interval {
    double lo = 0.0;
    double hi = 1.0;
    double length() const { return hi - lo; }
};

/// sup_I |f| <= T_p(2|I|/|omega| - 1) sup_omega |f| for a real polynomial f
/// of degree p (coefficients ascending), by dense sampling.
InequalityReport classical_remez_verify(std::span<const double> coeffs, Interval interval,
                                        std::span<const Interval> omega, std::size_t samples = 4096);

}  // namespace cyclab
