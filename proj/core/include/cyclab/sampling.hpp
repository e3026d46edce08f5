#pragma once

// Deterministic random parameter generation. Every sample draws from its own
// engine seeded by derive_seed(seed, index), so results do not depend on how
// samples are distributed across workers.

#include <cstdint>
#include <random>

#include "cyclab/exp_poly.hpp"

namespace cyclab {

using Engine = std::mt19937_64;

/// SplitMix64 mix of (seed, index).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

inline Engine sample_engine(std::uint64_t seed, std::uint64_t index) { return Engine(derive_seed(seed, index)); }

/// Point of the closed unit disk with uniform modulus and uniform argument.
Complex sample_unit_disk(Engine& rng);

/// Every coordinate drawn with sample_unit_disk.
ExpPolyParams sample_params(const FamilyShape& shape, Engine& rng);

/// mu + epsilon * u with u drawn coordinatewise by sample_unit_disk.
ExpPolyParams perturb_params(const ExpPolyParams& mu, double epsilon, Engine& rng);

/// FNV-1a hash of the coordinate bytes; identifies a parameter in CSV output.
std::uint64_t params_hash(const ExpPolyParams& lambda);

}  // namespace cyclab
