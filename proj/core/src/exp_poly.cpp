#include "cyclab/exp_poly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "cyclab/error.hpp"
#include "cyclab/extremum.hpp"
#include "cyclab/wronskian.hpp"

namespace cyclab {

void FamilyShape::validate() const {
    if (m < 1) throw DomainError("family shape: m must be at least 1");
    if (q < 1) throw DomainError("family shape: q must be at least 1");
    if (m > 31) throw DomainError("family shape: m > 31 is not supported (subset bitmasks)");
}

ExpPolyParams::ExpPolyParams(FamilyShape shape)
    : shape_(shape), c_(shape.m * (shape.p + 1)), d_(shape.m * shape.q) {
    shape_.validate();
}

ExpPolyParams::ExpPolyParams(FamilyShape shape, std::vector<Complex> c, std::vector<Complex> d)
    : shape_(shape), c_(std::move(c)), d_(std::move(d)) {
    shape_.validate();
    if (c_.size() != shape_.m * (shape_.p + 1)) {
        throw DomainError("params: c must have m*(p+1) = " + std::to_string(shape_.m * (shape_.p + 1)) +
                          " entries, got " + std::to_string(c_.size()));
    }
    if (d_.size() != shape_.m * shape_.q) {
        throw DomainError("params: d must have m*q = " + std::to_string(shape_.m * shape_.q) +
                          " entries, got " + std::to_string(d_.size()));
    }
    for (const auto& v : c_) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) throw DomainError("params: non-finite c");
    }
    for (const auto& v : d_) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) throw DomainError("params: non-finite d");
    }
}

std::size_t ExpPolyParams::check_summand(std::size_t k) const {
    if (k >= shape_.m) throw DomainError("params: summand index out of range");
    return k;
}

Complex& ExpPolyParams::c(std::size_t k, std::size_t i) {
    if (i > shape_.p) throw DomainError("params: c index out of range");
    return c_[check_summand(k) * (shape_.p + 1) + i];
}

Complex ExpPolyParams::c(std::size_t k, std::size_t i) const {
    return const_cast<ExpPolyParams&>(*this).c(k, i);
}

Complex& ExpPolyParams::d(std::size_t k, std::size_t j) {
    if (j < 1 || j > shape_.q) throw DomainError("params: d index out of range (1 <= j <= q)");
    return d_[check_summand(k) * shape_.q + (j - 1)];
}

Complex ExpPolyParams::d(std::size_t k, std::size_t j) const {
    return const_cast<ExpPolyParams&>(*this).d(k, j);
}

std::span<const Complex> ExpPolyParams::p_coeffs(std::size_t k) const {
    return std::span<const Complex>(c_).subspan(check_summand(k) * (shape_.p + 1), shape_.p + 1);
}

std::span<const Complex> ExpPolyParams::q_coeffs(std::size_t k) const {
    return std::span<const Complex>(d_).subspan(check_summand(k) * shape_.q, shape_.q);
}

std::vector<Complex> ExpPolyParams::q_polynomial(std::size_t k) const {
    const auto dk = q_coeffs(k);
    std::vector<Complex> out;
    out.reserve(dk.size() + 1);
    out.push_back(0.0);
    out.insert(out.end(), dk.begin(), dk.end());
    return out;
}

std::vector<Complex> ExpPolyParams::coordinates() const {
    std::vector<Complex> out;
    out.reserve(shape_.parameter_count());
    for (std::size_t k = 0; k < shape_.m; ++k) {
        const auto pk = p_coeffs(k);
        const auto qk = q_coeffs(k);
        out.insert(out.end(), pk.begin(), pk.end());
        out.insert(out.end(), qk.begin(), qk.end());
    }
    return out;
}

ExpPolyParams ExpPolyParams::from_coordinates(FamilyShape shape, std::span<const Complex> coords) {
    shape.validate();
    if (coords.size() != shape.parameter_count()) {
        throw DomainError("params: expected " + std::to_string(shape.parameter_count()) + " coordinates");
    }
    ExpPolyParams out(shape);
    std::size_t pos = 0;
    for (std::size_t k = 0; k < shape.m; ++k) {
        for (std::size_t i = 0; i <= shape.p; ++i) out.c(k, i) = coords[pos++];
        for (std::size_t j = 1; j <= shape.q; ++j) out.d(k, j) = coords[pos++];
    }
    return out;
}

bool ExpPolyParams::is_polynomial(double threshold) const {
    return std::all_of(d_.begin(), d_.end(), [&](Complex v) { return std::abs(v) <= threshold; });
}

ExpPolyParams operator*(Complex z, const ExpPolyParams& lambda) {
    ExpPolyParams out = lambda;
    for (auto& v : out.c_) v *= z;
    for (auto& v : out.d_) v *= z;
    return out;
}

namespace {

Complex horner(std::span<const Complex> ascending, Complex z) {
    Complex acc = 0.0;
    for (auto it = ascending.rbegin(); it != ascending.rend(); ++it) acc = acc * z + *it;
    return acc;
}

// Value and derivative of a polynomial in one Horner pass.
std::pair<Complex, Complex> horner2(std::span<const Complex> ascending, Complex z) {
    Complex v = 0.0;
    Complex dv = 0.0;
    for (auto it = ascending.rbegin(); it != ascending.rend(); ++it) {
        dv = dv * z + v;
        v = v * z + *it;
    }
    return {v, dv};
}

const double kMaxExponent = std::log(std::numeric_limits<double>::max());

Complex checked_exp(Complex w) {
    if (w.real() > kMaxExponent) {
        throw NumericError("evaluate: Re Q_k(z) = " + std::to_string(w.real()) + " overflows the exponent range");
    }
    return std::exp(w);
}

}  // namespace

Complex evaluate(const ExpPolyParams& lambda, Complex z) {
    Complex sum = 0.0;
    for (std::size_t k = 0; k < lambda.shape().m; ++k) {
        const auto qk = lambda.q_polynomial(k);
        sum += horner(lambda.p_coeffs(k), z) * checked_exp(horner(qk, z));
    }
    return sum;
}

ValueAndDerivative evaluate_with_derivative(const ExpPolyParams& lambda, Complex z) {
    ValueAndDerivative out{0.0, 0.0};
    for (std::size_t k = 0; k < lambda.shape().m; ++k) {
        const auto qk = lambda.q_polynomial(k);
        const auto [pv, pd] = horner2(lambda.p_coeffs(k), z);
        const auto [qv, qd] = horner2(qk, z);
        const Complex e = checked_exp(qv);
        out.value += pv * e;
        out.derivative += (pd + pv * qd) * e;
    }
    return out;
}

Jet summand_jet(const ExpPolyParams& lambda, std::size_t k, std::size_t trunc_order) {
    const auto qk = lambda.q_polynomial(k);
    const Jet p = Jet::polynomial(lambda.p_coeffs(k), trunc_order);
    const Jet q = Jet::polynomial(qk, trunc_order);
    return p * exp(q);
}

Jet family_jet(const ExpPolyParams& lambda, std::size_t trunc_order) {
    Jet sum = Jet::zero(trunc_order);
    for (std::size_t k = 0; k < lambda.shape().m; ++k) sum += summand_jet(lambda, k, trunc_order);
    return sum;
}

double summand_scale(const ExpPolyParams& lambda, std::size_t trunc_order) {
    double s = 0.0;
    for (std::size_t k = 0; k < lambda.shape().m; ++k) {
        s = std::max(s, summand_jet(lambda, k, trunc_order).max_abs());
    }
    return s;
}

namespace {

// Sum over (k_1, ..., k_q) with sum_i i k_i = remaining of prod_i d_i^{k_i} / k_i!.
// Depth-first, the highest weight (k_q) outermost.
Complex weighted_compositions(std::span<const Complex> d, std::size_t weight, std::size_t remaining,
                              Complex partial) {
    if (weight == 1) {
        // k_1 is forced to `remaining`.
        Complex term = partial;
        for (std::size_t i = 1; i <= remaining; ++i) term *= d[0] / static_cast<double>(i);
        return term;
    }
    Complex total = 0.0;
    Complex term = partial;  // partial * d_w^{kw} / kw!
    const Complex dw = d[weight - 1];
    for (std::size_t kw = 0; kw * weight <= remaining; ++kw) {
        if (kw > 0) term *= dw / static_cast<double>(kw);
        total += weighted_compositions(d, weight - 1, remaining - kw * weight, term);
    }
    return total;
}

}  // namespace

Complex maclaurin_coeff(const ExpPolyParams& lambda, std::size_t n) {
    const auto& sh = lambda.shape();
    Complex a = 0.0;
    for (std::size_t k = 0; k < sh.m; ++k) {
        const auto dk = lambda.q_coeffs(k);
        const auto ck = lambda.p_coeffs(k);
        for (std::size_t j = 0; j <= std::min(sh.p, n); ++j) {
            if (ck[j] == Complex{}) continue;
            a += ck[j] * weighted_compositions(dk, sh.q, n - j, 1.0);
        }
    }
    return a;
}

CenterVerdict center_membership(const ExpPolyParams& lambda, const Tolerance& tol) {
    tol.validate();
    const auto& sh = lambda.shape();

    double c_scale = 0.0;
    for (const auto& v : lambda.c_all()) c_scale = std::max(c_scale, std::abs(v));
    double d_scale = 0.0;
    for (const auto& v : lambda.d_all()) d_scale = std::max(d_scale, std::abs(v));
    const double c_thr = tol.threshold(c_scale);
    const double d_thr = tol.threshold(d_scale);

    auto same_q = [&](std::size_t a, std::size_t b) {
        const auto qa = lambda.q_coeffs(a);
        const auto qb = lambda.q_coeffs(b);
        for (std::size_t j = 0; j < qa.size(); ++j) {
            if (std::abs(qa[j] - qb[j]) > d_thr) return false;
        }
        return true;
    };

    // Greedy grouping by the first member of each class.
    std::vector<std::vector<std::size_t>> classes;
    for (std::size_t k = 0; k < sh.m; ++k) {
        auto it = std::find_if(classes.begin(), classes.end(),
                               [&](const auto& cls) { return same_q(cls.front(), k); });
        if (it == classes.end()) {
            classes.push_back({k});
        } else {
            it->push_back(k);
        }
    }

    bool structural = true;
    std::uint32_t carrying = 0;
    for (const auto& cls : classes) {
        for (std::size_t i = 0; i <= sh.p; ++i) {
            Complex s = 0.0;
            for (std::size_t k : cls) s += lambda.c(k, i);
            if (std::abs(s) > c_thr) structural = false;
        }
        for (std::size_t k : cls) {
            const auto pk = lambda.p_coeffs(k);
            if (std::any_of(pk.begin(), pk.end(), [&](Complex v) { return std::abs(v) > c_thr; })) {
                carrying |= std::uint32_t{1} << k;
            }
        }
    }

    CenterVerdict verdict;
    if (structural) {
        verdict.in_center = true;
        verdict.reason = CenterReason::structural;
        if (carrying != 0) verdict.witness_subset = carrying;
        return verdict;
    }

    const Jet f = family_jet(lambda);
    if (!order_of_vanishing(f, tol, summand_scale(lambda))) {
        verdict.in_center = true;
        verdict.reason = CenterReason::coefficient_vanishing;
        return verdict;
    }

    verdict.in_center = false;
    verdict.reason = CenterReason::structural;
    if (sh.m > 1) {
        std::vector<Jet> summands;
        for (std::size_t k = 0; k < sh.m; ++k) summands.push_back(summand_jet(lambda, k));
        if (!wronskian_order(summands, tol)) verdict.reason = CenterReason::wronskian_vanishing;
    }
    return verdict;
}

std::size_t cyclicity_bound(const FamilyShape& shape) {
    shape.validate();
    return shape.m - 1 + wronskian_degree_bound(shape);
}

std::size_t wronskian_degree_bound(const FamilyShape& shape) {
    shape.validate();
    const std::size_t m = shape.m;
    // m (m - 1) is even, so the halving is exact.
    return m * shape.p + (m * (m - 1) / 2) * (shape.q - 1);
}

ExpPolyParams psi_map(const ExpPolyParams& lambda) {
    const auto& sh = lambda.shape();
    ExpPolyParams out(sh);
    auto ipow = [](Complex base, std::size_t e) {
        Complex r = 1.0;
        for (std::size_t i = 0; i < e; ++i) r *= base;
        return r;
    };
    for (std::size_t k = 0; k < sh.m; ++k) {
        for (std::size_t i = 0; i <= sh.p; ++i) out.c(k, i) = ipow(lambda.c(k, i), i + 1);
        for (std::size_t j = 1; j <= sh.q; ++j) out.d(k, j) = ipow(lambda.d(k, j), j);
    }
    return out;
}

double radius_normalizer(const ExpPolyParams& lambda, Complex w) {
    if (lambda.is_polynomial()) {
        throw DomainError("radius_normalizer: every Q_k vanishes; f is a polynomial");
    }
    const auto& sh = lambda.shape();
    std::vector<std::vector<Complex>> qs;
    for (std::size_t k = 0; k < sh.m; ++k) qs.push_back(lambda.q_polynomial(k));

    auto sup_q = [&](double radius) {
        double best = 0.0;
        for (const auto& qk : qs) {
            const auto g = [&](Complex z) { return std::abs(horner(qk, z)); };
            best = std::max(best, radius == 0.0 ? g(w) : max_on_circle(g, w, radius).value);
        }
        return best;
    };

    if (sup_q(0.0) >= 1.0) {
        throw DomainError("radius_normalizer: max_k |Q_k(w)| >= 1, no positive radius normalizes");
    }
    double lo = 0.0;
    double hi = 1.0;
    while (sup_q(hi) < 1.0) {
        lo = hi;
        hi *= 2.0;
        if (hi > 1e300) throw NumericError("radius_normalizer: failed to bracket the radius");
    }
    while (hi - lo > 1e-12 * hi) {
        const double mid = 0.5 * (lo + hi);
        (sup_q(mid) < 1.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace cyclab
