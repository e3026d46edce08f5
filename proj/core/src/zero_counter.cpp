#include "cyclab/zero_counter.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

#include "cyclab/error.hpp"
#include "cyclab/extremum.hpp"

namespace cyclab {

void Disk::validate() const {
    if (!(radius > 0.0) || !std::isfinite(radius)) throw DomainError("disk: radius must be positive and finite");
    if (!std::isfinite(center.real()) || !std::isfinite(center.imag())) {
        throw DomainError("disk: center must be finite");
    }
}

namespace {

constexpr double kTiny = 1e-300;

struct Attempt {
    bool ok = false;
    Complex integral{};
    std::size_t nodes = 0;
    std::string failure;
};

Attempt integrate(const AnalyticFn& f, const Disk& disk, const WindingOptions& opts) {
    Attempt at;
    Complex sum = 0.0;
    auto add_node = [&](double theta) -> bool {
        const Complex offset = std::polar(disk.radius, theta);
        const ValueAndDerivative v = f(disk.center + offset);
        if (!(std::abs(v.value) > kTiny) || !std::isfinite(std::abs(v.derivative))) return false;
        sum += v.derivative / v.value * offset;
        return true;
    };

    std::size_t n = opts.initial_nodes;
    for (std::size_t i = 0; i < n; ++i) {
        if (!add_node(2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n))) {
            at.failure = "|f| underflow or non-finite value on the contour";
            return at;
        }
    }
    Complex previous = sum / static_cast<double>(n);
    while (2 * n <= opts.max_nodes) {
        // The doubled grid reuses all old nodes; only odd nodes are new.
        for (std::size_t i = 0; i < n; ++i) {
            const double theta = std::numbers::pi * static_cast<double>(2 * i + 1) / static_cast<double>(n);
            if (!add_node(theta)) {
                at.failure = "|f| underflow or non-finite value on the contour";
                return at;
            }
        }
        n *= 2;
        const Complex current = sum / static_cast<double>(n);
        const double rounded = std::round(current.real());
        if (std::abs(current - rounded) <= opts.target && std::round(previous.real()) == rounded) {
            at.ok = true;
            at.integral = current;
            at.nodes = n;
            return at;
        }
        previous = current;
    }
    at.failure = "quadrature did not converge within " + std::to_string(opts.max_nodes) + " nodes";
    return at;
}

}  // namespace

WindingResult winding_count(const AnalyticFn& f, Disk disk, const WindingOptions& opts) {
    disk.validate();
    std::vector<double> radii{disk.radius};
    for (double bump : opts.radius_bumps) radii.push_back(disk.radius * (1.0 + bump));

    std::string last_failure;
    for (double r : radii) {
        const Disk d{disk.center, r};
        const Attempt at = integrate(f, d, opts);
        if (!at.ok) {
            last_failure = at.failure;
            continue;
        }
        const double rounded = std::round(at.integral.real());
        const double residual = std::abs(at.integral - rounded);
        if (rounded < 0.0 || residual >= opts.accept) {
            last_failure = "winding number not acceptable";
            continue;
        }
        return {static_cast<std::size_t>(rounded), residual, at.nodes, d};
    }
    throw NumericError("winding_count: " + last_failure);
}

namespace {

std::vector<RootWithMultiplicity> merge_clusters(std::vector<RootWithMultiplicity> roots, double radius) {
    std::vector<RootWithMultiplicity> merged;
    for (const auto& r : roots) {
        auto it = std::find_if(merged.begin(), merged.end(),
                               [&](const RootWithMultiplicity& m) { return std::abs(m.root - r.root) < radius; });
        if (it == merged.end()) {
            merged.push_back(r);
        } else {
            // Multiplicity-weighted centroid.
            const double a = static_cast<double>(it->multiplicity);
            const double b = static_cast<double>(r.multiplicity);
            it->root = (a * it->root + b * r.root) / (a + b);
            it->multiplicity += r.multiplicity;
        }
    }
    return merged;
}

// The last kept term stands in for the discarded tail of an entire function.
bool tail_unresolved(const Jet& jet, Disk disk, double tail_bound) {
    const auto a = jet.coeffs();
    const double rho = std::abs(disk.center) + disk.radius;
    double rk = 1.0, wmax = 0.0, last = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        last = std::abs(a[k]) * rk;
        wmax = std::max(wmax, last);
        rk *= rho;
    }
    return a.size() > 1 && last > tail_bound * wmax;
}

ZeroCountReport finish_report(const WindingResult& w, const Jet& jet, const ZeroCountOptions& opts) {
    ZeroCountReport rep;
    rep.disk = w.disk;
    rep.count = w.count;
    rep.quadrature_residual = w.residual;
    rep.nodes = w.nodes;
    if (!opts.run_oracle) {
        rep.oracle_note = "oracle disabled";
        return rep;
    }
    try {
        rep.oracle_roots = oracle_roots(jet, w.disk, opts.tail_bound, opts.tol);
        std::size_t total = 0;
        for (const auto& r : rep.oracle_roots) total += r.multiplicity;
        rep.agreed = total == rep.count;
    } catch (const Error& e) {
        rep.oracle_note = e.what();
    }
    return rep;
}

}  // namespace

ZeroCountReport count_zeros(const ExpPolyParams& lambda, Disk disk, const ZeroCountOptions& opts) {
    const WindingResult w =
        winding_count([&](Complex z) { return evaluate_with_derivative(lambda, z); }, disk, opts.winding);
    if (!opts.run_oracle) return finish_report(w, Jet::zero(0), opts);
    const Jet jet = family_jet(lambda, opts.oracle_truncation);
    if (tail_unresolved(jet, w.disk, opts.tail_bound)) {
        ZeroCountOptions off = opts;
        off.run_oracle = false;
        ZeroCountReport rep = finish_report(w, jet, off);
        rep.oracle_note = "truncation order " + std::to_string(jet.trunc_order()) + " too short for tail bound on this disk";
        return rep;
    }
    return finish_report(w, jet, opts);
}

ZeroCountReport count_zeros(const Jet& jet, Disk disk, const ZeroCountOptions& opts) {
    const Jet dj = jet.trunc_order() > 0 ? derivative(jet) : Jet::zero(0);
    const WindingResult w = winding_count(
        [&](Complex z) { return ValueAndDerivative{jet.evaluate(z), dj.evaluate(z)}; }, disk, opts.winding);
    return finish_report(w, jet, opts);
}

std::vector<Complex> durand_kerner(std::span<const Complex> coeffs, const OracleOptions& opts) {
    std::size_t deg = coeffs.size();
    while (deg > 0 && coeffs[deg - 1] == Complex{}) --deg;
    if (deg <= 1) return {};
    const std::size_t n = deg - 1;

    std::vector<Complex> monic(n + 1);
    for (std::size_t k = 0; k <= n; ++k) monic[k] = coeffs[k] / coeffs[n];
    auto eval = [&](Complex z) {
        Complex acc = 0.0;
        for (std::size_t k = n + 1; k-- > 0;) acc = acc * z + monic[k];
        return acc;
    };
    auto eval_abs = [&](double r) {
        double acc = 0.0;
        for (std::size_t k = n + 1; k-- > 0;) acc = acc * r + std::abs(monic[k]);
        return acc;
    };

    // Start on a circle whose radius is the geometric mean of the root moduli.
    const double r0 = std::abs(monic[0]) > 0.0 ? std::pow(std::abs(monic[0]), 1.0 / static_cast<double>(n)) : 1.0;
    std::vector<Complex> z(n);
    for (std::size_t i = 0; i < n; ++i) {
        z[i] = std::polar(r0, 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n) + 0.4);
    }

    std::vector<bool> done(n, false);
    const double eps = std::numeric_limits<double>::epsilon();
    for (std::size_t iter = 0; iter < opts.max_iterations; ++iter) {
        bool all_done = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (done[i]) continue;
            const Complex pz = eval(z[i]);
            // Backward-error stop: p(z) is at rounding level for this z.
            if (std::abs(pz) <= 4.0 * static_cast<double>(n + 1) * eps * eval_abs(std::abs(z[i]))) {
                done[i] = true;
                continue;
            }
            Complex denom = 1.0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j != i) denom *= z[i] - z[j];
            }
            if (denom == Complex{}) denom = eps;
            const Complex step = pz / denom;
            z[i] -= step;
            if (std::abs(step) <= opts.convergence * std::max(1.0, std::abs(z[i]))) {
                done[i] = true;
            } else {
                all_done = false;
            }
        }
        if (all_done && std::all_of(done.begin(), done.end(), [](bool b) { return b; })) return z;
    }
    throw NumericError("durand_kerner: no convergence after " + std::to_string(opts.max_iterations) + " iterations");
}

std::vector<RootWithMultiplicity> oracle_roots(const Jet& jet, Disk disk, double tail_bound, const Tolerance& tol,
                                               const OracleOptions& opts) {
    disk.validate();
    const auto a = jet.coeffs();
    const double rho = std::abs(disk.center) + disk.radius;

    std::vector<double> w(a.size());
    double rk = 1.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        w[k] = std::abs(a[k]) * rk;
        rk *= rho;
    }
    const double wmax = *std::max_element(w.begin(), w.end());
    if (wmax == 0.0) throw DomainError("oracle_roots: jet vanishes identically");
    std::size_t top = a.size() - 1;
    double tail = 0.0;
    while (top > 0 && tail + w[top] <= tail_bound * wmax) tail += w[top--];

    const Jet kept = jet.truncated(top);
    const Order ord = order_of_vanishing(kept, tol);
    if (!ord) throw DomainError("oracle_roots: truncated jet vanishes within tolerance");

    std::vector<RootWithMultiplicity> roots;
    if (*ord > 0) roots.push_back({0.0, *ord});

    // Remaining factor in the scaled variable s = z / rho.
    std::vector<Complex> b;
    double scale = 1.0;
    for (std::size_t k = *ord; k <= top; ++k) {
        b.push_back(a[k] * scale);
        scale *= rho;
    }
    for (const Complex s : durand_kerner(b, opts)) roots.push_back({s * rho, 1});

    roots = merge_clusters(std::move(roots), opts.cluster_radius);
    std::erase_if(roots, [&](const RootWithMultiplicity& r) { return !disk.contains(r.root); });
    return roots;
}

double doubling_index(const ExpPolyParams& lambda, Complex w, double radius) {
    if (!(radius > 0.0)) throw DomainError("doubling_index: radius must be positive");
    const auto g = [&](Complex z) { return std::abs(evaluate(lambda, z)); };
    const double outer = max_on_circle(g, w, radius).value;
    const double inner = max_on_circle(g, w, radius / std::numbers::e).value;
    if (outer == 0.0) throw DomainError("doubling_index: f vanishes on the outer circle");
    if (inner == 0.0) throw NumericError("doubling_index: |f| underflows on the inner circle");
    return std::log(outer) - std::log(inner);
}

}  // namespace cyclab
