#include <doctest.h>

#include <bit>
#include <cmath>
#include <random>

#include "cyclab/error.hpp"
#include "cyclab/sampling.hpp"
#include "cyclab/serialize.hpp"
#include "cyclab/wronskian.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace cyclab;
using test::jet;

namespace {

Jet exp_az(Complex a, std::size_t n) { return exp(Jet::monomial(a, 1, n)); }

}  // namespace

TEST_SUITE("wronskian_calculus") {

TEST_CASE("wronskian examples") {
    std::mt19937_64 rng(1);
    const Jet f = test::random_jet(rng, 10);
    test::check_close(wronskian(std::vector<Jet>{f}), f, 0.0);

    const std::vector<Jet> one_z{jet({1, 0, 0, 0}), jet({0, 1, 0, 0})};
    test::check_coeffs(wronskian(one_z), {1, 0, 0});

    const Complex a(0.7, -0.2), b(-0.4, 0.9);
    const Jet w = wronskian(std::vector<Jet>{exp_az(a, 20), exp_az(b, 20)});
    CHECK(w.trunc_order() == 19);
    test::check_close(w, (b - a) * exp_az(a + b, 19), 1e-14);

    CHECK_THROWS_AS(wronskian(std::vector<Jet>{jet({1, 1}), jet({1, 2}), jet({0, 1})}), TruncationError);
}

TEST_CASE("table for e^z - 1 - z") {
    const ExpPolyParams g = params_from_json(test::load_fixture("exp_z_minus_1_minus_z"));
    const WronskianTable t = wronskian_table(g);
    CHECK(t.entries.size() == 3);
    CHECK(t.at(1) == Order(0));
    CHECK(t.at(2) == Order(0));
    CHECK(t.at(3) == Order(1));
    const Jet w = wronskian(std::vector<Jet>{summand_jet(g, 0, 20), summand_jet(g, 1, 20)});
    test::check_close(w, Jet::monomial(1.0, 1, 19) * exp_az(1.0, 19), 1e-15);
}

TEST_CASE("table singletons and center sentinel") {
    ExpPolyParams one({1, 2, 1});
    one.c(0, 2) = 1.0;
    one.d(0, 1) = 0.5;
    CHECK(wronskian_table(one).at(1) == Order(2));
    const ExpPolyParams center({2, 0, 1}, {1, -1}, {1, 1});
    CHECK(wronskian_table(center).at(3) == std::nullopt);
    CHECK_THROWS_AS(wronskian_degree_check(center), DomainError);
}

TEST_CASE("property: table entries match a pointwise determinant oracle") {
    for (std::uint64_t i = 0; i < 15; ++i) {
        Engine rng = sample_engine(21, i);
        const FamilyShape shape{1 + i % 3, i % 3, 1 + i % 2};
        const ExpPolyParams l = sample_params(shape, rng);
        const WronskianTable t = wronskian_table(l, 40);
        CHECK(t.entries.size() == (std::size_t{1} << shape.m) - 1);
        for (const auto& [mask, order] : t.entries) {
            std::vector<Jet> fs;
            for (std::size_t k = 0; k < shape.m; ++k) {
                if (mask & (1u << k)) fs.push_back(summand_jet(l, k, 40));
            }
            const Jet w = wronskian(fs);
            const auto ref = oracle::cauchy_coeffs(
                [&](Complex z) { return oracle::wronskian_at(l, mask, z); }, 0.5, 12);
            const double scale = std::max(w.max_abs(), 1e-300);
            for (std::size_t k = 0; k <= 12; ++k) CHECK(std::abs(w[k] - ref[k]) <= 1e-10 * scale);
            if (fs.size() == 1) {
                const auto k = static_cast<std::size_t>(std::countr_zero(mask));
                CHECK(order == order_of_vanishing(summand_jet(l, k, 40)));
            }
        }
    }
}

TEST_CASE("property: alternating multilinearity") {
    for (std::uint64_t s = 0; s < 20; ++s) {
        std::mt19937_64 rng(400 + s);
        const Jet f = test::random_jet(rng, 16), g = test::random_jet(rng, 16), h = test::random_jet(rng, 16);
        const Jet w = wronskian(std::vector<Jet>{f, g, h});
        test::check_close(wronskian(std::vector<Jet>{g, f, h}), -w, 1e-12);
        const Jet rep = wronskian(std::vector<Jet>{f, g, f});
        CHECK(rep.max_abs() <= 1e-12 * wronskian_scale(std::vector<Jet>{f, g, f}));
        const Complex c(0.3, -1.7);
        test::check_close(wronskian(std::vector<Jet>{c * f, g}), c * wronskian(std::vector<Jet>{f, g}), 1e-12);
        // Dependent tuple: h2 in span(f, g).
        const Jet dep = Complex(0.5, 0.5) * f - Complex(2.0) * g;
        CHECK(wronskian_order(std::vector<Jet>{f, g, dep}) == std::nullopt);
    }
}

TEST_CASE("degree check examples") {
    ExpPolyParams one({1, 2, 1});
    one.c(0, 1) = 1.0;
    one.d(0, 1) = 1.0;
    const InequalityReport r1 = wronskian_degree_check(one);
    CHECK(r1.satisfied);
    CHECK(r1.lhs == 1.0);
    CHECK(r1.rhs == 2.0);

    const ExpPolyParams ab = params_from_json(test::load_fixture("exp_az_plus_exp_bz"));
    const InequalityReport r2 = wronskian_degree_check(ab);
    CHECK(r2.lhs == 0.0);
    CHECK(r2.rhs == 0.0);
    CHECK(r2.satisfied);

    for (std::uint64_t i = 0; i < 30; ++i) {
        Engine rng = sample_engine(22, i);
        const InequalityReport r = wronskian_degree_check(sample_params({2, 1, 2}, rng));
        CHECK(r.rhs == 3.0);
        CHECK(r.satisfied);
    }
}

TEST_CASE("Laurent jet derivative keeps the window") {
    const LaurentJet a{-1, jet({1, 2, 3})};  // z^-1 + 2 + 3z
    const LaurentJet d = derivative(a);
    CHECK(d.valuation == -2);
    CHECK(d.coefficient(-2) == Complex(-1.0));
    CHECK(d.coefficient(-1) == Complex(0.0));
    CHECK(d.coefficient(0) == Complex(3.0));
    CHECK(d.coefficient(-7) == Complex(0.0));
    CHECK_THROWS_AS(d.coefficient(1), TruncationError);
}

TEST_CASE("Frobenius chain by hand: (e^z, -1 - z) annihilates e^z - 1 - z") {
    const std::size_t n = 30;
    const Jet e = exp_az(1.0, n);
    const std::vector<Jet> fs{e, Jet::polynomial(std::vector<Complex>{-1, -1}, n)};
    const Jet g = e - Jet::polynomial(std::vector<Complex>{1, 1}, n);
    const FrobeniusChain chain = frobenius_chain(fs, g);
    REQUIRE(chain.steps.size() == 5);
    CHECK(chain.wronskian_orders == std::vector<std::size_t>{0, 1});

    const auto check_step = [](const LaurentJet& got, const Jet& want, std::size_t upto) {
        for (std::size_t k = 0; k <= upto; ++k) {
            const auto power = static_cast<std::ptrdiff_t>(k);
            INFO("power " << k);
            CHECK(std::abs(got.coefficient(power) - want[k]) <= 1e-9);
        }
        for (std::ptrdiff_t p = got.valuation; p < 0; ++p) CHECK(std::abs(got.coefficient(p)) <= 1e-9);
    };
    const Jet emz = exp_az(-1.0, n);
    // e^{-z} g = 1 - (1 + z) e^{-z}
    check_step(chain.steps[0], Jet::constant(1.0, n) - Jet::polynomial(std::vector<Complex>{1, 1}, n) * emz, 20);
    // derivative: z e^{-z}
    check_step(chain.steps[1], Jet::monomial(1.0, 1, n) * emz, 20);
    // times e^z / z: 1
    check_step(chain.steps[2], Jet::constant(1.0, n), 20);
    // derivative: 0, then times z e^z: 0
    check_step(chain.steps[3], Jet::zero(n), 20);
    check_step(chain.steps[4], Jet::zero(n), 20);

    const FrobeniusReport rep = frobenius_residual(fs, g, {}, 1.0);
    CHECK(rep.residual <= 1e-9);
    CHECK(rep.rescale == 1.0);
}

TEST_CASE("Frobenius with one function: W_0/W_1 g = 1, then 0") {
    std::mt19937_64 rng(5);
    Jet f = test::random_jet(rng, 20);
    f = f + Jet::constant(1.0, 20);
    const FrobeniusReport rep = frobenius_residual(std::vector<Jet>{f}, f, {}, 1.0);
    CHECK(rep.residual <= 1e-12 * rep.scale);
}

TEST_CASE("property: Frobenius annihilates random spans") {
    for (std::uint64_t i = 0; i < 50; ++i) {
        Engine rng = sample_engine(23, i);
        const std::size_t l = 1 + i % 3;
        std::vector<Jet> fs;
        Jet g = Jet::zero(kDefaultTruncation);
        for (std::size_t k = 0; k < l; ++k) {
            const ExpPolyParams lam = sample_params({1, 1 + k % 2, 1 + i % 2}, rng);
            fs.push_back(family_jet(lam));
            g = g + sample_unit_disk(rng) * fs.back();
        }
        const FrobeniusReport rep = frobenius_residual(fs, g);
        INFO("sample " << i << " residual " << rep.residual << " scale " << rep.scale);
        CHECK(rep.residual <= 1e-7 * rep.scale);
        CHECK(rep.window > 0);
    }
}

TEST_CASE("Frobenius rejects a vanishing Wronskian") {
    const Jet e = exp_az(1.0, 20);
    CHECK_THROWS_AS(frobenius_chain(std::vector<Jet>{e, Complex(2.0) * e}, e), DomainError);
}

}  // TEST_SUITE
