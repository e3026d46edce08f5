#include "cyclab/experiments.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <numbers>
#include <random>
#include <thread>

#include "cyclab/error.hpp"
#include "cyclab/zero_counter.hpp"

namespace cyclab {

RolleReport rolle_check(const ExpPolyParams& lambda, std::size_t trunc_order, const Tolerance& tol) {
    RolleReport rep;
    rep.ord_sum = order_of_vanishing(family_jet(lambda, trunc_order), tol, summand_scale(lambda, trunc_order));
    rep.table = wronskian_table(lambda, trunc_order, tol);

    bool some_vanishing = false;
    for (const auto& [mask, order] : rep.table.entries) {
        if (!order) {
            some_vanishing = true;
            continue;
        }
        const std::size_t candidate = *order + static_cast<std::size_t>(std::popcount(mask)) - 1;
        rep.bound = std::max(rep.bound.value_or(0), candidate);
    }

    rep.vacuous = center_membership(lambda, tol).in_center;
    if (!rep.vacuous && (!rep.ord_sum || !rep.bound)) {
        throw TruncationError("rolle_check: truncation order " + std::to_string(trunc_order) +
                              " exhausted before the orders resolved");
    }
    if (!rep.ord_sum) {
        rep.satisfied = some_vanishing;
    } else {
        rep.satisfied = rep.bound && *rep.ord_sum <= *rep.bound;
    }
    return rep;
}

void SweepConfig::validate() const {
    shape.validate();
    if (!(epsilon > 0.0)) throw DomainError("sweep: epsilon must be positive");
    if (!(delta > 0.0)) throw DomainError("sweep: delta must be positive");
    if (samples < 1) throw DomainError("sweep: samples must be at least 1");
    if (base_point && !(base_point->shape() == shape)) {
        throw DomainError("sweep: base point shape differs from the sweep shape");
    }
}

void parallel_for(std::size_t n, std::size_t workers, const std::function<void(std::size_t)>& fn) {
    workers = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(n, 1));
    if (workers == 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < n; i = next++) fn(i);
        });
    }
}

bool near_center(const ExpPolyParams& lambda, double threshold) {
    const std::size_t c = cyclicity_bound(lambda.shape());
    for (std::size_t n = 0; n <= c; ++n) {
        if (std::abs(maclaurin_coeff(lambda, n)) >= threshold) return false;
    }
    return true;
}

namespace {

struct SampleOutcome {
    SampleRecord record;
    std::optional<ExpPolyParams> params;
};

SampleOutcome run_sample(const ExpPolyParams& lambda, std::size_t index, double delta, bool with_oracle) {
    SampleOutcome out;
    out.record.index = index;
    out.record.param_hash = params_hash(lambda);
    if (center_membership(lambda).in_center) {
        out.record.status = SampleStatus::rejected_center;
        return out;
    }
    if (near_center(lambda)) {
        out.record.status = SampleStatus::rejected_near_center;
        return out;
    }
    try {
        ZeroCountOptions opts;
        opts.run_oracle = with_oracle;
        const ZeroCountReport rep = count_zeros(lambda, Disk{0.0, delta}, opts);
        out.record.count = rep.count;
        out.record.residual = rep.quadrature_residual;
        out.record.agreed = !with_oracle || rep.agreed;
        out.record.status = SampleStatus::counted;
        out.params = lambda;
    } catch (const Error& e) {
        out.record.status = SampleStatus::failed;
        out.record.message = e.what();
    }
    return out;
}

SweepReport reduce(std::vector<SampleOutcome>& outcomes, SweepReport rep) {
    // Index order, so the reduction is independent of scheduling.
    for (auto& o : outcomes) {
        switch (o.record.status) {
            case SampleStatus::counted: {
                ++rep.counted;
                ++rep.histogram[o.record.count];
                if (!rep.argmax || o.record.count > rep.max_count) {
                    rep.max_count = o.record.count;
                    rep.argmax = o.params;
                }
                if (o.record.count > rep.bound) {
                    ++rep.violations;
                    rep.violating.push_back(*o.params);
                }
                break;
            }
            case SampleStatus::failed:
                ++rep.failed;
                break;
            default:
                ++rep.rejected;
                break;
        }
        rep.records.push_back(std::move(o.record));
    }
    return rep;
}

}  // namespace

SweepReport empirical_cyclicity(const SweepConfig& cfg) {
    cfg.validate();
    if (!cfg.base_point) throw DomainError("empirical_cyclicity: base point required");

    std::vector<SampleOutcome> outcomes(cfg.samples);
    parallel_for(cfg.samples, cfg.workers, [&](std::size_t i) {
        Engine rng = sample_engine(cfg.seed, i);
        const ExpPolyParams lambda = perturb_params(*cfg.base_point, cfg.epsilon, rng);
        outcomes[i] = run_sample(lambda, i, cfg.delta, cfg.with_oracle);
    });

    SweepReport rep;
    rep.shape = cfg.shape;
    rep.epsilon = cfg.epsilon;
    rep.delta = cfg.delta;
    rep.seed = cfg.seed;
    rep.bound = cyclicity_bound(cfg.shape);
    rep = reduce(outcomes, std::move(rep));
    if (rep.counted + rep.failed == 0) {
        throw DomainError("empirical_cyclicity: every sample was rejected as a center point");
    }
    return rep;
}

SweepReport bound_conformance_sweep(const FamilyShape& shape, std::size_t samples, std::uint64_t seed,
                                    std::size_t workers, double radius) {
    shape.validate();
    std::vector<SampleOutcome> outcomes(samples);
    parallel_for(samples, workers, [&](std::size_t i) {
        Engine rng = sample_engine(seed, i);
        outcomes[i] = run_sample(sample_params(shape, rng), i, radius, false);
    });
    SweepReport rep;
    rep.shape = shape;
    rep.epsilon = 0.0;
    rep.delta = radius;
    rep.seed = seed;
    rep.bound = cyclicity_bound(shape);
    return reduce(outcomes, std::move(rep));
}

ExpPolyParams tight_witness(const FamilyShape& shape, Engine& rng) {
    shape.validate();
    const std::size_t unknowns = shape.m * (shape.p + 1);
    const std::size_t equations = unknowns - 1;

    // Leading coefficients equally spaced on the unit circle: the first
    // surviving Maclaurin coefficient behaves like a power of the Vandermonde
    // of the d_{k1}, and clustered values push it below the zero tolerance.
    ExpPolyParams lambda(shape);
    const double turn = std::uniform_real_distribution<double>(0.0, 2.0 * std::numbers::pi)(rng);
    for (std::size_t k = 0; k < shape.m; ++k) {
        lambda.d(k, 1) = std::polar(1.0, turn + 2.0 * std::numbers::pi * static_cast<double>(k) /
                                                    static_cast<double>(shape.m));
        for (std::size_t j = 2; j <= shape.q; ++j) lambda.d(k, j) = sample_unit_disk(rng);
    }
    if (equations == 0) {
        lambda.c(0, 0) = 1.0;
        return lambda;
    }

    // Column (k, j): coefficients of z^j e^{Q_k}.
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(equations),
                                                static_cast<Eigen::Index>(unknowns));
    for (std::size_t k = 0; k < shape.m; ++k) {
        const Jet e = exp(Jet::polynomial(lambda.q_polynomial(k), equations));
        for (std::size_t j = 0; j <= shape.p; ++j) {
            const auto col = static_cast<Eigen::Index>(k * (shape.p + 1) + j);
            for (std::size_t n = j; n < equations; ++n) a(static_cast<Eigen::Index>(n), col) = e[n - j];
        }
    }
    const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a, Eigen::ComputeFullV);
    Eigen::VectorXcd kernel = svd.matrixV().col(static_cast<Eigen::Index>(unknowns) - 1);
    kernel /= kernel.cwiseAbs().maxCoeff();

    for (std::size_t k = 0; k < shape.m; ++k) {
        for (std::size_t j = 0; j <= shape.p; ++j) {
            lambda.c(k, j) = kernel(static_cast<Eigen::Index>(k * (shape.p + 1) + j));
        }
    }
    return lambda;
}

}  // namespace cyclab
