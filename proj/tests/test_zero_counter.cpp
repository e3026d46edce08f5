#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "cyclab/error.hpp"
#include "cyclab/experiments.hpp"
#include "cyclab/sampling.hpp"
#include "cyclab/serialize.hpp"
#include "cyclab/zero_counter.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace cyclab;
using test::jet;

namespace {

ZeroCountReport count_fixture(const std::string& name) {
    const Json doc = test::load_fixture(name);
    return count_zeros(params_from_json(doc), disk_from_json(doc.at("disk")));
}

std::size_t multiplicity_sum(const std::vector<RootWithMultiplicity>& roots) {
    std::size_t s = 0;
    for (const auto& r : roots) s += r.multiplicity;
    return s;
}

ExpPolyParams monomial_power(std::size_t k) {
    ExpPolyParams l({1, k, 1});
    l.c(0, k) = 1.0;
    return l;
}

}  // namespace

TEST_SUITE("zero_counter") {

TEST_CASE("disk validation") {
    CHECK_THROWS_AS((Disk{0.0, 0.0}.validate()), DomainError);
    CHECK_THROWS_AS((Disk{0.0, -1.0}.validate()), DomainError);
    CHECK_THROWS_AS((Disk{0.0, INFINITY}.validate()), DomainError);
    CHECK((Disk{0.0, 1.0}.contains(0.5)));
    CHECK_FALSE((Disk{0.0, 1.0}.contains(1.0)));
}

TEST_CASE("fixed examples are exact") {
    const ZeroCountReport a = count_fixture("z2_minus_quarter");
    CHECK(a.count == 2);
    CHECK(a.agreed);
    CHECK(a.quadrature_residual < 1e-3);
    const ZeroCountReport b = count_fixture("exp_z");
    CHECK(b.count == 0);
    CHECK(b.agreed);
    const ZeroCountReport c = count_fixture("exp_z_minus_1");
    CHECK(c.count == 1);
    CHECK(c.agreed);
    // e^z has no zeros in any disk.
    const ExpPolyParams e = params_from_json(test::load_fixture("exp_z"));
    CHECK(count_zeros(e, Disk{Complex(3.0, -2.0), 5.0}).count == 0);
}

TEST_CASE("oracle examples") {
    const auto r = oracle_roots(jet({-0.25, 0, 1}), Disk{0.0, 1.0}, 1e-14);
    REQUIRE(r.size() == 2);
    std::vector<double> re{r[0].root.real(), r[1].root.real()};
    std::sort(re.begin(), re.end());
    CHECK(std::abs(re[0] + 0.5) < 1e-12);
    CHECK(std::abs(re[1] - 0.5) < 1e-12);
    CHECK(r[0].multiplicity == 1);

    const auto z3 = oracle_roots(jet({0, 0, 0, 1}), Disk{0.0, 1.0}, 1e-14);
    REQUIRE(z3.size() == 1);
    CHECK(std::abs(z3[0].root) < 1e-12);
    CHECK(z3[0].multiplicity == 3);

    const ExpPolyParams g = params_from_json(test::load_fixture("exp_z_minus_1_minus_z"));
    const auto r2 = oracle_roots(family_jet(g, 12), Disk{0.0, 0.5}, 1e-14);
    REQUIRE(r2.size() == 1);
    CHECK(std::abs(r2[0].root) < 1e-9);
    CHECK(r2[0].multiplicity == 2);

    CHECK_THROWS_AS(oracle_roots(Jet::zero(8), Disk{0.0, 1.0}, 1e-14), DomainError);
}

TEST_CASE("Durand-Kerner matches companion-matrix eigenvalues") {
    for (std::uint64_t s = 0; s < 20; ++s) {
        std::mt19937_64 rng(500 + s);
        const std::size_t deg = 3 + s % 28;
        const auto coeffs = test::to_poly(test::random_jet(rng, deg));
        auto dk = durand_kerner(coeffs);
        auto ref = oracle::companion_roots(coeffs);
        REQUIRE(dk.size() == ref.size());
        for (const Complex z : ref) {
            const auto near = std::min_element(dk.begin(), dk.end(), [&](Complex a, Complex b) {
                return std::abs(a - z) < std::abs(b - z);
            });
            CHECK(std::abs(*near - z) <= 1e-7 * std::max(1.0, std::abs(z)));
        }
    }
}

TEST_CASE("winding count bumps the radius past a boundary zero") {
    // z^2 - 1/4 has zeros on the circle of radius 1/2.
    const ExpPolyParams l = params_from_json(test::load_fixture("z2_minus_quarter"));
    const ZeroCountReport r = count_zeros(l, Disk{0.0, 0.5});
    CHECK(r.disk.radius > 0.5);
    CHECK(r.disk.radius < 0.5 * (1.0 + 4e-4));
    CHECK(r.count == 2);
}

TEST_CASE("winding count on a generic analytic function") {
    const AnalyticFn f = [](Complex z) { return ValueAndDerivative{std::sin(z), std::cos(z)}; };
    CHECK(winding_count(f, Disk{0.0, 4.0}).count == 3);
    CHECK(winding_count(f, Disk{0.0, 7.0}).count == 5);
}

TEST_CASE("property: argument principle agrees with the oracle") {
    std::size_t errors = 0;
    for (std::uint64_t i = 0; i < 60; ++i) {
        Engine rng = sample_engine(31, i);
        const FamilyShape shape{1 + i % 3, i % 3, 1 + (i / 3) % 2};
        const ExpPolyParams l = sample_params(shape, rng);
        const double radius = 0.1 + 0.4 * std::uniform_real_distribution<double>(0.0, 1.0)(rng);
        try {
            const ZeroCountReport r = count_zeros(l, Disk{0.0, radius});
            INFO("sample " << i << " count " << r.count << " note " << r.oracle_note);
            CHECK(r.agreed);
            CHECK(r.quadrature_residual < 0.25);
            if (r.agreed) CHECK(multiplicity_sum(r.oracle_roots) == r.count);
        } catch (const Error&) {
            ++errors;
        }
    }
    CHECK(errors == 0);
}

TEST_CASE("property: counts are monotone in nested disks") {
    for (std::uint64_t i = 0; i < 20; ++i) {
        Engine rng = sample_engine(32, i);
        const ExpPolyParams l = sample_params({2, 2, 1}, rng);
        std::size_t prev = 0;
        for (const double r : {0.2, 0.5, 1.0, 1.5}) {
            const std::size_t c = count_zeros(l, Disk{0.0, r}, {.run_oracle = false}).count;
            CHECK(c >= prev);
            prev = c;
        }
    }
}

TEST_CASE("property: zeros of a product add up") {
    for (std::uint64_t s = 0; s < 20; ++s) {
        std::mt19937_64 rng(600 + s);
        const Jet a = test::random_jet(rng, 6), b = test::random_jet(rng, 6);
        const Jet pad_a = Jet::polynomial(a.coeffs(), 12), pad_b = Jet::polynomial(b.coeffs(), 12);
        const Disk disk{0.0, 0.8};
        ZeroCountOptions opts;
        opts.run_oracle = false;
        try {
            const std::size_t ca = count_zeros(pad_a, disk, opts).count;
            const std::size_t cb = count_zeros(pad_b, disk, opts).count;
            CHECK(count_zeros(pad_a * pad_b, disk, opts).count == ca + cb);
        } catch (const NumericError&) {
            // A zero on the contour of one factor: the counts are undefined there.
        }
    }
}

TEST_CASE("property: the derivative loses at most one zero") {
    for (std::uint64_t i = 0; i < 30; ++i) {
        Engine rng = sample_engine(33, i);
        const ExpPolyParams l = sample_params({2, 2, 2}, rng);
        const double r = 0.9;
        const std::size_t n = count_zeros(l, Disk{0.0, r}, {.run_oracle = false}).count;
        // f' in exp-poly form: (P_k' + P_k Q_k') e^{Q_k}, counted through its own jet.
        const Jet fp = derivative(family_jet(l, 80));
        const std::size_t np = count_zeros(fp, Disk{0.0, 1.1 * r}, {.run_oracle = false}).count;
        CHECK(np + 1 >= n);
    }
}

TEST_CASE("doubling index examples") {
    for (std::size_t k = 0; k <= 5; ++k) {
        CHECK(std::abs(doubling_index(monomial_power(k), 0.0, 0.7) - static_cast<double>(k)) < 1e-6);
    }
    const ExpPolyParams g = params_from_json(test::load_fixture("exp_z_minus_1_minus_z"));
    const double idx = doubling_index(g, 0.0, 0.1);
    CHECK(idx >= 1.95);
    CHECK(idx <= 2.05);
    CHECK_THROWS_AS(doubling_index(ExpPolyParams({1, 0, 1}), 0.0, 1.0), DomainError);
}

TEST_CASE("near-center samples are detected") {
    CHECK(near_center(ExpPolyParams({2, 1, 1})));
    Engine rng = sample_engine(34, 0);
    CHECK_FALSE(near_center(sample_params({2, 1, 1}, rng)));
}

}  // TEST_SUITE
