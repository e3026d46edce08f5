#pragma once

// Maxima of |g| over circles and segments by dense sampling followed by
// golden-section refinement around the best sample.

#include <complex>
#include <cstddef>
#include <functional>

namespace cyclab {

using Complex = std::complex<double>;
using ModulusFn = std::function<double(Complex)>;

struct Extremum {
    double value = 0.0;
    Complex location{};
};

inline constexpr std::size_t kDefaultCircleSamples = 1024;
inline constexpr std::size_t kDefaultSegmentSamples = 4096;

/// max_{|z-center|=radius} g(z).
Extremum max_on_circle(const ModulusFn& g, Complex center, double radius,
                       std::size_t samples = kDefaultCircleSamples);

/// max over the closed segment [a, b]; both endpoints are always sampled.
Extremum max_on_segment(const ModulusFn& g, Complex a, Complex b,
                        std::size_t samples = kDefaultSegmentSamples);

}  // namespace cyclab
