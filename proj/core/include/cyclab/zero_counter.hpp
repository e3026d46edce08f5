#pragma once

// Zero counting in disks: the argument principle evaluated by the periodic
// trapezoidal rule, cross-checked against Durand-Kerner roots of a truncated
// Maclaurin polynomial.

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "cyclab/exp_poly.hpp"
#include "cyclab/jet.hpp"
#include "cyclab/report.hpp"

namespace cyclab {

struct RootWithMultiplicity {
    Complex root;
    std::size_t multiplicity = 1;
};

struct WindingOptions {
    std::size_t initial_nodes = 256;
    std::size_t max_nodes = std::size_t{1} << 16;
    /// Converged once the integral is this close to an integer and its
    /// rounding is unchanged by the last node doubling.
    double target = 1e-3;
    /// A count is accepted only when the residual is below this.
    double accept = 0.25;
    /// Relative radius bumps tried, in order, when the quadrature fails.
    std::vector<double> radius_bumps{1e-4, 2e-4, 3e-4};
};

struct WindingResult {
    std::size_t count = 0;
    /// Distance of the raw contour integral to `count`.
    double residual = 0.0;
    std::size_t nodes = 0;
    /// Disk actually integrated over (radius may have been bumped).
    Disk disk;
};

using AnalyticFn = std::function<ValueAndDerivative(Complex)>;

/// (1 / 2 pi i) \oint f'/f dz over the boundary of `disk`, with adaptive node
/// doubling and boundary-zero radius bumps. Throws NumericError when no
/// attempt converges.
WindingResult winding_count(const AnalyticFn& f, Disk disk, const WindingOptions& opts = {});

struct ZeroCountReport {
    Disk disk;
    std::size_t count = 0;
    double quadrature_residual = 0.0;
    std::size_t nodes = 0;
    std::vector<RootWithMultiplicity> oracle_roots;
    bool agreed = false;
    /// Why the oracle could not run, if it did not.
    std::string oracle_note;
};

struct ZeroCountOptions {
    WindingOptions winding;
    bool run_oracle = true;
    std::size_t oracle_truncation = kDefaultTruncation;
    double tail_bound = 1e-14;
    Tolerance tol;
};

/// Zeros of f_lambda in `disk`, counted with multiplicity.
ZeroCountReport count_zeros(const ExpPolyParams& lambda, Disk disk, const ZeroCountOptions& opts = {});

/// Same, for the polynomial given by a jet (the oracle uses the jet itself).
ZeroCountReport count_zeros(const Jet& jet, Disk disk, const ZeroCountOptions& opts = {});

struct OracleOptions {
    std::size_t max_iterations = 500;
    double convergence = 1e-12;
    double cluster_radius = 1e-6;
};

/// Roots inside `disk` of the shortest truncation of `jet` whose discarded
/// tail sum_{k>K} |a_k| rho^k is at most tail_bound * max_k |a_k| rho^k,
/// rho = |center| + radius. Zeros at the origin are split off via the order
/// of vanishing; the rest come from Durand-Kerner iteration. Roots closer
/// than cluster_radius are merged with summed multiplicity.
/// The jet itself is taken as exact; count_zeros on an exp-poly skips the
/// oracle when its last kept term is above the tail bound.
/// Throws DomainError when the jet vanishes identically, NumericError when
/// the iteration does not converge.
std::vector<RootWithMultiplicity> oracle_roots(const Jet& jet, Disk disk, double tail_bound,
                                               const Tolerance& tol = {}, const OracleOptions& opts = {});

/// Durand-Kerner roots of sum_k coeffs[k] z^k (all of them, unmerged).
std::vector<Complex> durand_kerner(std::span<const Complex> coeffs, const OracleOptions& opts = {});

/// sup_{D_R(w)} ln|f| - sup_{D_{R/e}(w)} ln|f|, with both suprema taken on
/// the boundary circles.
double doubling_index(const ExpPolyParams& lambda, Complex w, double radius);

}  // namespace cyclab
