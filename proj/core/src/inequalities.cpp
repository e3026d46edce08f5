#include "cyclab/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "cyclab/error.hpp"
#include "cyclab/extremum.hpp"
#include "cyclab/zero_counter.hpp"

namespace cyclab {

double cartan_constant() {
    constexpr double e = std::numbers::e;
    const double ratio = (e + 1.0) / (e - 1.0);
    return std::exp(ratio * ratio);
}

void CartanConfig::validate() const {
    if (!(H > 0.0 && H <= 1.0)) throw DomainError("cartan: H must lie in (0, 1]");
    if (!(d > 0.0)) throw DomainError("cartan: d must be positive");
    if (!(R > 0.0)) throw DomainError("cartan: R must be positive");
    if (grid < 2) throw DomainError("cartan: grid must be at least 2");
    if (!(radius_factor > 0.0)) throw DomainError("cartan: radius factor must be positive");
}

namespace {

void require_nonpolynomial(const ExpPolyParams& lambda, const char* who) {
    if (lambda.is_polynomial()) {
        throw DomainError(std::string(who) + ": f is a polynomial (every Q_k vanishes)");
    }
}

}  // namespace

InequalityReport cartan_verify(const ExpPolyParams& lambda, const CartanConfig& cfg) {
    cfg.validate();
    require_nonpolynomial(lambda, "cartan_verify");
    const double r_norm = radius_normalizer(lambda, cfg.w);
    if (cfg.R >= r_norm * cfg.radius_factor) {
        throw DomainError("cartan_verify: R = " + std::to_string(cfg.R) + " is not below R_{lambda;w} * R_F = " +
                          std::to_string(r_norm * cfg.radius_factor));
    }

    const ZeroCountReport zeros = count_zeros(lambda, Disk{cfg.w, cfg.R});
    if (!zeros.oracle_note.empty()) throw NumericError("cartan_verify: zero oracle failed: " + zeros.oracle_note);
    if (!zeros.agreed) throw NumericError("cartan_verify: argument principle and oracle disagree");

    const std::size_t c = cyclicity_bound(lambda.shape());
    const auto modulus = [&](Complex z) { return std::abs(evaluate(lambda, z)); };
    const double sup = max_on_circle(modulus, cfg.w, cfg.R).value;
    const double rhs = sup * std::pow(cfg.H / cartan_constant(), static_cast<double>(c + 1));

    const std::size_t k = zeros.oracle_roots.size();
    const double budget = std::pow(2.0 * cfg.H * cfg.R, cfg.d) / cfg.d;
    const double full_radius =
        k == 0 ? 0.0 : 2.0 * cfg.H * cfg.R * std::pow(static_cast<double>(k) * cfg.d, -1.0 / cfg.d);

    const double inner = cfg.R / std::numbers::e;
    const double step = 2.0 * inner / static_cast<double>(cfg.grid - 1);

    InequalityReport rep;
    rep.rhs = rhs;
    for (int halvings = 0; halvings <= 60; ++halvings) {
        const double r = std::ldexp(full_radius, -halvings);
        if (static_cast<double>(k) * std::pow(r, cfg.d) > budget * (1.0 + 1e-12)) {
            throw std::logic_error("cartan_verify: exclusion disks exceed the radius budget");
        }
        double min_abs = std::numeric_limits<double>::infinity();
        std::size_t points = 0;
        for (std::size_t i = 0; i < cfg.grid; ++i) {
            for (std::size_t j = 0; j < cfg.grid; ++j) {
                const Complex z = cfg.w + Complex(-inner + step * static_cast<double>(i),
                                                  -inner + step * static_cast<double>(j));
                if (std::abs(z - cfg.w) >= inner) continue;
                const bool excluded = std::any_of(zeros.oracle_roots.begin(), zeros.oracle_roots.end(),
                                                  [&](const RootWithMultiplicity& root) {
                                                      return std::abs(z - root.root) < r;
                                                  });
                if (excluded) continue;
                ++points;
                min_abs = std::min(min_abs, modulus(z));
            }
        }
        if (points == 0) continue;

        rep.lhs = min_abs;
        rep.margin = min_abs - rhs;
        rep.satisfied = min_abs >= rhs;
        std::vector<Disk> disks;
        for (const auto& root : zeros.oracle_roots) disks.push_back({root.root, r});
        rep.witness = std::move(disks);
        rep.note = rep.satisfied ? "witness found" : "witness not found";
        if (halvings > 0) rep.note += " (disk radii halved " + std::to_string(halvings) + " times)";
        rep.note += "; " + std::to_string(points) + " lattice points checked";
        return rep;
    }
    rep.note = "vacuous: no lattice point outside the exclusion disks";
    rep.satisfied = false;
    return rep;
}

double chebyshev(std::size_t p, double x) {
    if (p == 0) return 1.0;
    double prev = 1.0;
    double cur = x;
    for (std::size_t n = 1; n < p; ++n) {
        const double next = 2.0 * x * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

double phi(double t) {
    if (!(t >= 1.0)) throw DomainError("phi: argument must be at least 1");
    return t + std::sqrt(t * t - 1.0);
}

namespace {

// Merge parameter ranges [s, t] within [0, 1].
std::vector<std::pair<double, double>> merge_ranges(std::vector<std::pair<double, double>> ranges) {
    std::sort(ranges.begin(), ranges.end());
    std::vector<std::pair<double, double>> merged;
    for (const auto& r : ranges) {
        if (!merged.empty() && r.first <= merged.back().second) {
            merged.back().second = std::max(merged.back().second, r.second);
        } else {
            merged.push_back(r);
        }
    }
    return merged;
}

// Position of z along [a, b] as a fraction; throws if z is off the segment.
double fraction_along(const Segment& s, Complex z) {
    const Complex dir = s.b - s.a;
    const double t = std::real((z - s.a) / dir);
    const double slack = 1e-12;
    if (std::abs(s.a + t * dir - z) > slack * std::abs(dir) || t < -slack || t > 1.0 + slack) {
        throw DomainError("remez: omega is not contained in the interval");
    }
    return std::clamp(t, 0.0, 1.0);
}

std::size_t proportional_samples(std::size_t total, double fraction) {
    return std::max<std::size_t>(3, static_cast<std::size_t>(std::ceil(static_cast<double>(total) * fraction)));
}

// Smallest E with sup_i <= base^E sup_w.
double minimal_exponent(double sup_i, double sup_w, double base) {
    if (sup_i <= sup_w) return 0.0;
    if (base <= 1.0) return std::numeric_limits<double>::infinity();
    return std::log(sup_i / sup_w) / std::log(base);
}

}  // namespace

InequalityReport remez_verify(const ExpPolyParams& lambda, const RemezConfig& cfg, Complex w) {
    require_nonpolynomial(lambda, "remez_verify");
    const double len = cfg.interval.length();
    if (!(len > 0.0)) throw DomainError("remez_verify: interval has zero length");
    if (cfg.omega.empty()) throw DomainError("remez_verify: omega is empty");
    if (!(cfg.c_hat > 0.0)) throw DomainError("remez_verify: c_hat must be positive");

    const double limit = radius_normalizer(lambda, w) * cfg.radius_factor / std::numbers::e;
    if (std::abs(cfg.interval.a - w) >= limit || std::abs(cfg.interval.b - w) >= limit) {
        throw DomainError("remez_verify: interval leaves D_{R_{lambda;w} R_F / e}(w), radius " +
                          std::to_string(limit));
    }

    std::vector<std::pair<double, double>> ranges;
    for (const auto& piece : cfg.omega) {
        double s = fraction_along(cfg.interval, piece.a);
        double t = fraction_along(cfg.interval, piece.b);
        if (s > t) std::swap(s, t);
        ranges.emplace_back(s, t);
    }
    ranges = merge_ranges(std::move(ranges));
    double omega_fraction = 0.0;
    for (const auto& [s, t] : ranges) omega_fraction += t - s;
    if (!(omega_fraction > 0.0)) throw DomainError("remez_verify: omega has zero length");

    const auto modulus = [&](Complex z) { return std::abs(evaluate(lambda, z)); };
    const double sup_i = max_on_segment(modulus, cfg.interval.a, cfg.interval.b, cfg.samples).value;
    double sup_w = 0.0;
    const Complex dir = cfg.interval.b - cfg.interval.a;
    for (const auto& [s, t] : ranges) {
        sup_w = std::max(sup_w, max_on_segment(modulus, cfg.interval.a + s * dir, cfg.interval.a + t * dir,
                                               proportional_samples(cfg.samples, t - s))
                                    .value);
    }
    if (sup_w == 0.0) throw DomainError("remez_verify: f vanishes on omega (center point)");

    const std::size_t c = cfg.c_exponent.value_or(cyclicity_bound(lambda.shape()));
    const double c_eff = static_cast<double>(std::max<std::size_t>(1, c));
    const double base = phi(std::max(1.0, 2.0 / omega_fraction - 1.0));

    InequalityReport rep;
    rep.lhs = sup_i;
    rep.rhs = std::pow(base, cfg.c_hat * c_eff) * sup_w;
    rep.margin = rep.rhs - rep.lhs;
    // Equality (omega = I) must pass despite rounding in the power.
    rep.satisfied = rep.lhs <= rep.rhs * (1.0 + 1e-12);
    const double e = minimal_exponent(sup_i, sup_w, base);
    rep.empirical_exponent = e;
    rep.empirical_constant = e / c_eff;
    rep.note = "Phi argument " + std::to_string(2.0 / omega_fraction - 1.0) + ", exponent c_hat * max(1, c) = " +
               std::to_string(cfg.c_hat * c_eff);
    return rep;
}

InequalityReport classical_remez_verify(std::span<const double> coeffs, Interval interval,
                                        std::span<const Interval> omega, std::size_t samples) {
    if (!(interval.length() > 0.0)) throw DomainError("classical_remez_verify: empty interval");
    std::vector<std::pair<double, double>> ranges;
    for (const auto& piece : omega) {
        if (piece.lo < interval.lo || piece.hi > interval.hi || piece.lo > piece.hi) {
            throw DomainError("classical_remez_verify: omega is not contained in the interval");
        }
        ranges.emplace_back(piece.lo, piece.hi);
    }
    ranges = merge_ranges(std::move(ranges));
    double omega_len = 0.0;
    for (const auto& [s, t] : ranges) omega_len += t - s;
    if (!(omega_len > 0.0)) throw DomainError("classical_remez_verify: omega has zero length");

    std::size_t degree = coeffs.size();
    while (degree > 0 && coeffs[degree - 1] == 0.0) --degree;
    degree = degree == 0 ? 0 : degree - 1;

    const auto modulus = [&](Complex z) {
        double acc = 0.0;
        for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * z.real() + coeffs[k];
        return std::abs(acc);
    };
    const double sup_i = max_on_segment(modulus, interval.lo, interval.hi, samples).value;
    double sup_w = 0.0;
    for (const auto& [s, t] : ranges) {
        sup_w = std::max(sup_w, max_on_segment(modulus, s, t, proportional_samples(samples, (t - s) / interval.length()))
                                    .value);
    }

    const double t_arg = 2.0 * interval.length() / omega_len - 1.0;
    InequalityReport rep;
    rep.lhs = sup_i;
    rep.rhs = chebyshev(degree, t_arg) * sup_w;
    rep.margin = rep.rhs - rep.lhs;
    rep.satisfied = rep.lhs <= rep.rhs * (1.0 + 1e-12);
    rep.note = "degree " + std::to_string(degree) + ", T_p argument " + std::to_string(t_arg);
    return rep;
}

}  // namespace cyclab
