#include "cyclab/sampling.hpp"

#include <cstring>
#include <numbers>

namespace cyclab {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

Complex sample_unit_disk(Engine& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double modulus = unit(rng);
    const double arg = 2.0 * std::numbers::pi * unit(rng);
    return std::polar(modulus, arg);
}

ExpPolyParams sample_params(const FamilyShape& shape, Engine& rng) {
    std::vector<Complex> coords(shape.parameter_count());
    for (auto& v : coords) v = sample_unit_disk(rng);
    return ExpPolyParams::from_coordinates(shape, coords);
}

ExpPolyParams perturb_params(const ExpPolyParams& mu, double epsilon, Engine& rng) {
    std::vector<Complex> coords = mu.coordinates();
    for (auto& v : coords) v += epsilon * sample_unit_disk(rng);
    return ExpPolyParams::from_coordinates(mu.shape(), coords);
}

std::uint64_t params_hash(const ExpPolyParams& lambda) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto mix = [&](const void* data, std::size_t n) {
        const auto* bytes = static_cast<const unsigned char*>(data);
        for (std::size_t i = 0; i < n; ++i) {
            h ^= bytes[i];
            h *= 0x100000001b3ULL;
        }
    };
    const auto& sh = lambda.shape();
    const std::uint64_t dims[3] = {sh.m, sh.p, sh.q};
    mix(dims, sizeof dims);
    for (const Complex& v : lambda.coordinates()) {
        const double parts[2] = {v.real(), v.imag()};
        mix(parts, sizeof parts);
    }
    return h;
}

}  // namespace cyclab
