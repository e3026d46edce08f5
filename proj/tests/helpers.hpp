#pragma once

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "cyclab/jet.hpp"
#include "cyclab/serialize.hpp"

namespace test {

using cyclab::Complex;
using cyclab::Jet;

inline Jet jet(std::initializer_list<Complex> c) { return Jet(std::vector<Complex>(c)); }

inline std::vector<Complex> to_poly(const Jet& j) { return {j.coeffs().begin(), j.coeffs().end()}; }

/// Coefficients uniform in the unit disk.
inline Jet random_jet(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<Complex> c(n + 1);
    for (auto& x : c) x = std::polar(u(rng), 2.0 * 3.141592653589793 * u(rng));
    return Jet(std::move(c));
}

/// Jet equals `want` on the common prefix, within `tol` of max(1, max |want|).
inline void check_coeffs(const Jet& got, const std::vector<Complex>& want, double tol = 1e-15) {
    REQUIRE(got.trunc_order() + 1 <= want.size() + 0);
    double scale = 1.0;
    for (const auto& w : want) scale = std::max(scale, std::abs(w));
    for (std::size_t k = 0; k <= got.trunc_order(); ++k) {
        INFO("coefficient " << k << ": got " << got[k] << ", want " << want[k]);
        CHECK(std::abs(got[k] - want[k]) <= tol * scale);
    }
}

/// Coefficientwise agreement relative to the larger max coefficient.
inline void check_close(const Jet& got, const Jet& want, double rel) {
    REQUIRE(got.trunc_order() == want.trunc_order());
    const double scale = std::max({got.max_abs(), want.max_abs(), 1e-300});
    for (std::size_t k = 0; k <= got.trunc_order(); ++k) {
        INFO("coefficient " << k << ": got " << got[k] << ", want " << want[k]);
        CHECK(std::abs(got[k] - want[k]) <= rel * scale);
    }
}

inline std::filesystem::path fixture(const std::string& name) {
    return std::filesystem::path(CYCLAB_FIXTURE_DIR) / (name + ".json");
}

inline cyclab::Json load_fixture(const std::string& name) {
    std::ifstream in(fixture(name));
    REQUIRE(in.good());
    return cyclab::Json::parse(in);
}

}  // namespace test
