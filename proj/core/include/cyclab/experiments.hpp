#pragma once

// Randomized checks of cyclicity statements for exponential-polynomial
// families: the Rolle-type bound at a point, empirical zero counts near a
// base parameter, and conformance with c_{p,q,m}.
//
// Observed maximal counts are lower bounds for the cyclicity (the
// neighbourhood sizes are user knobs, not the existential thresholds of the
// definition); c_{p,q,m} is an upper bound.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cyclab/exp_poly.hpp"
#include "cyclab/sampling.hpp"
#include "cyclab/wronskian.hpp"

namespace cyclab {

struct RolleReport {
    /// Order of vanishing of f at 0 (nullopt: vanishes to truncation).
    Order ord_sum;
    WronskianTable table;
    /// max over subsets I with finite m_I of m_I + |I| - 1.
    std::optional<std::size_t> bound;
    bool satisfied = false;
    /// lambda lies in the center set; the inequality carries no information.
    bool vacuous = false;
};

/// Compares the multiplicity of the zero of f_lambda at 0 with the
/// Wronskian-subset bound. Throws TruncationError when lambda is not a
/// center point yet nothing resolves within the truncation.
RolleReport rolle_check(const ExpPolyParams& lambda, std::size_t trunc_order = kDefaultTruncation,
                        const Tolerance& tol = {});

struct SweepConfig {
    FamilyShape shape;
    /// Base point mu; when absent the sweep samples the whole unit polydisk.
    std::optional<ExpPolyParams> base_point;
    double epsilon = 1e-2;
    double delta = 0.1;
    std::size_t samples = 100;
    std::uint64_t seed = 0;
    std::size_t workers = 1;
    /// Also run the root-finding oracle on every sample.
    bool with_oracle = false;

    void validate() const;
};

enum class SampleStatus { counted, rejected_center, rejected_near_center, failed };

struct SampleRecord {
    std::size_t index = 0;
    std::uint64_t param_hash = 0;
    SampleStatus status = SampleStatus::counted;
    std::size_t count = 0;
    double residual = 0.0;
    /// Oracle verdict when the oracle ran (otherwise true).
    bool agreed = true;
    std::string message;
};

struct SweepReport {
    FamilyShape shape;
    double epsilon = 0.0;
    double delta = 0.0;
    std::uint64_t seed = 0;
    std::size_t bound = 0;  ///< c_{p,q,m}
    std::size_t max_count = 0;
    std::optional<ExpPolyParams> argmax;
    std::map<std::size_t, std::size_t> histogram;
    std::size_t counted = 0;
    std::size_t rejected = 0;
    std::size_t failed = 0;
    /// Samples whose count exceeds `bound`.
    std::size_t violations = 0;
    std::vector<ExpPolyParams> violating;
    std::vector<SampleRecord> records;
};

/// Draws cfg.samples parameters from the epsilon-polydisk around the base
/// point, rejects center and near-center points, and counts zeros in
/// D_delta(0). Deterministic in cfg.seed regardless of cfg.workers.
/// Throws DomainError when no base point is given or every sample is rejected.
SweepReport empirical_cyclicity(const SweepConfig& cfg);

/// Samples the unit polydisk and checks every zero count in D_radius(0)
/// against c_{p,q,m}. Violations are report content.
SweepReport bound_conformance_sweep(const FamilyShape& shape, std::size_t samples, std::uint64_t seed,
                                    std::size_t workers = 1, double radius = 0.1);

/// True when |a_n(lambda)| < threshold for every n <= c_{p,q,m}.
bool near_center(const ExpPolyParams& lambda, double threshold = 1e-8);

/// A parameter whose f vanishes at 0 to order at least m (p + 1) - 1:
/// d_{k1} equally spaced on the unit circle (random rotation), random higher
/// d_{kj}, and P_k spanning the kernel of the linear map
/// c -> (a_0, ..., a_{m(p+1)-2}).
ExpPolyParams tight_witness(const FamilyShape& shape, Engine& rng);

/// Runs fn(i) for i in [0, n) on up to `workers` threads.
void parallel_for(std::size_t n, std::size_t workers, const std::function<void(std::size_t)>& fn);

}  // namespace cyclab
