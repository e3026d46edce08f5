#include "cyclab/extremum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cyclab/error.hpp"

namespace cyclab {

namespace {

constexpr int kGoldenIterations = 60;

// Golden-section search for the maximum of h on [lo, hi].
template <class H>
std::pair<double, double> golden_max(const H& h, double lo, double hi) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = h(x1);
    double f2 = h(x2);
    for (int it = 0; it < kGoldenIterations && hi - lo > 1e-15 * (1.0 + std::abs(lo)); ++it) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = h(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = h(x1);
        }
    }
    return f1 >= f2 ? std::pair{x1, f1} : std::pair{x2, f2};
}

}  // namespace

Extremum max_on_circle(const ModulusFn& g, Complex center, double radius, std::size_t samples) {
    if (samples < 3) throw DomainError("max_on_circle: need at least 3 samples");
    const double step = 2.0 * std::numbers::pi / static_cast<double>(samples);
    auto at = [&](double theta) { return center + std::polar(radius, theta); };

    Extremum best{-1.0, center};
    double best_theta = 0.0;
    for (std::size_t i = 0; i < samples; ++i) {
        const double theta = step * static_cast<double>(i);
        const Complex z = at(theta);
        const double v = g(z);
        if (v > best.value) {
            best = {v, z};
            best_theta = theta;
        }
    }
    auto h = [&](double theta) { return g(at(theta)); };
    const auto [theta, v] = golden_max(h, best_theta - step, best_theta + step);
    if (v > best.value) best = {v, at(theta)};
    return best;
}

Extremum max_on_segment(const ModulusFn& g, Complex a, Complex b, std::size_t samples) {
    if (samples < 2) throw DomainError("max_on_segment: need at least 2 samples");
    auto at = [&](double t) { return a + t * (b - a); };
    const double step = 1.0 / static_cast<double>(samples - 1);

    Extremum best{-1.0, a};
    std::size_t best_i = 0;
    for (std::size_t i = 0; i < samples; ++i) {
        const double t = i + 1 == samples ? 1.0 : step * static_cast<double>(i);
        const Complex z = at(t);
        const double v = g(z);
        if (v > best.value) {
            best = {v, z};
            best_i = i;
        }
    }
    if (samples > 2) {
        const double t0 = step * static_cast<double>(best_i);
        auto h = [&](double t) { return g(at(t)); };
        const auto [t, v] = golden_max(h, std::max(0.0, t0 - step), std::min(1.0, t0 + step));
        if (v > best.value) best = {v, at(t)};
    }
    return best;
}

}  // namespace cyclab
