#include "cyclab/wronskian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "cyclab/error.hpp"

namespace cyclab {

namespace {

using JetMatrix = std::vector<std::vector<Jet>>;  // [row][column]

// Laplace expansion along `row` over the columns still listed in `cols`.
Jet laplace(const JetMatrix& m, std::size_t row, std::vector<std::size_t>& cols) {
    if (cols.size() == 1) return m[row][cols.front()];
    Jet total = Jet::zero(m[row][cols.front()].trunc_order());
    for (std::size_t pos = 0; pos < cols.size(); ++pos) {
        const std::size_t c = cols[pos];
        cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(pos));
        Jet term = m[row][c] * laplace(m, row + 1, cols);
        cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(pos), c);
        if (pos % 2 == 0) {
            total += term;
        } else {
            total -= term;
        }
    }
    return total;
}

std::size_t min_trunc(std::span<const Jet> fs) {
    std::size_t n = fs.front().trunc_order();
    for (const auto& f : fs) n = std::min(n, f.trunc_order());
    return n;
}

// Rows of derivatives, each truncated to the common output order.
JetMatrix derivative_matrix(std::span<const Jet> fs) {
    if (fs.empty()) throw DomainError("wronskian: empty tuple");
    const std::size_t l = fs.size();
    const std::size_t n = min_trunc(fs);
    if (n < l - 1) {
        throw TruncationError("wronskian: truncation order " + std::to_string(n) + " too short for " +
                              std::to_string(l) + " functions");
    }
    const std::size_t out_order = n - (l - 1);
    JetMatrix m(l);
    for (std::size_t c = 0; c < l; ++c) {
        Jet d = fs[c].truncated(n);
        for (std::size_t r = 0; r < l; ++r) {
            if (r > 0) d = derivative(d);
            m[r].push_back(d.truncated(out_order));
        }
    }
    return m;
}

}  // namespace

Jet wronskian(std::span<const Jet> fs) {
    const JetMatrix m = derivative_matrix(fs);
    std::vector<std::size_t> cols(fs.size());
    for (std::size_t c = 0; c < cols.size(); ++c) cols[c] = c;
    return laplace(m, 0, cols);
}

double wronskian_scale(std::span<const Jet> fs) {
    const JetMatrix m = derivative_matrix(fs);
    double scale = 1.0;
    for (std::size_t c = 0; c < fs.size(); ++c) {
        double col = 0.0;
        for (std::size_t r = 0; r < fs.size(); ++r) col = std::max(col, m[r][c].max_abs());
        scale *= col;
    }
    return scale;
}

Order wronskian_order(std::span<const Jet> fs, const Tolerance& tol) {
    return order_of_vanishing(wronskian(fs), tol, wronskian_scale(fs));
}

Order WronskianTable::at(std::uint32_t subset) const {
    const auto it = entries.find(subset);
    if (it == entries.end()) throw DomainError("wronskian table: no entry for subset " + std::to_string(subset));
    return it->second;
}

WronskianTable wronskian_table(const ExpPolyParams& lambda, std::size_t trunc_order, const Tolerance& tol) {
    const std::size_t m = lambda.shape().m;
    std::vector<Jet> summands;
    for (std::size_t k = 0; k < m; ++k) summands.push_back(summand_jet(lambda, k, trunc_order));

    WronskianTable table{lambda.shape(), {}};
    for (std::uint32_t mask = 1; mask <= table.full_set(); ++mask) {
        std::vector<Jet> subset;
        for (std::size_t k = 0; k < m; ++k) {
            if (mask & (std::uint32_t{1} << k)) subset.push_back(summands[k]);
        }
        table.entries.emplace(mask, wronskian_order(subset, tol));
    }
    return table;
}

InequalityReport wronskian_degree_check(const ExpPolyParams& lambda, std::size_t trunc_order,
                                        const Tolerance& tol) {
    std::vector<Jet> summands;
    for (std::size_t k = 0; k < lambda.shape().m; ++k) summands.push_back(summand_jet(lambda, k, trunc_order));
    const Order full = wronskian_order(summands, tol);
    if (!full) {
        throw DomainError("wronskian_degree_check: full Wronskian vanishes to truncation (center point)");
    }
    InequalityReport rep;
    rep.lhs = static_cast<double>(*full);
    rep.rhs = static_cast<double>(wronskian_degree_bound(lambda.shape()));
    rep.margin = rep.rhs - rep.lhs;
    rep.satisfied = rep.lhs <= rep.rhs;
    rep.note = "order of the full Wronskian at 0 vs m p + m(m-1)(q-1)/2";
    return rep;
}

Complex LaurentJet::coefficient(std::ptrdiff_t power) const {
    if (power < valuation) return 0.0;
    if (power > top_power()) {
        throw TruncationError("laurent jet: power " + std::to_string(power) + " beyond known window");
    }
    return unit[static_cast<std::size_t>(power - valuation)];
}

LaurentJet operator*(const LaurentJet& a, const LaurentJet& b) {
    return {a.valuation + b.valuation, a.unit * b.unit};
}

LaurentJet derivative(const LaurentJet& a) {
    std::vector<Complex> c(a.unit.coeffs().begin(), a.unit.coeffs().end());
    for (std::size_t k = 0; k < c.size(); ++k) c[k] *= static_cast<double>(a.valuation + static_cast<std::ptrdiff_t>(k));
    return {a.valuation - 1, Jet(std::move(c))};
}

namespace {

struct Factored {
    std::size_t order;
    Jet unit;
};

Factored factor_out_leading_power(const Jet& w, double scale, const Tolerance& tol, std::size_t s) {
    const Order ord = order_of_vanishing(w, tol, scale);
    if (!ord) {
        throw DomainError("frobenius: nested Wronskian W_" + std::to_string(s) +
                          " vanishes to truncation; the tuple is linearly dependent");
    }
    return {*ord, div_monomial(w, *ord, tol, scale)};
}

// Fujiwara-type lower bound for the moduli of the zeros of a unit (u_0 != 0).
double root_radius_lower_bound(const Jet& unit) {
    const auto u = unit.coeffs();
    const double u0 = std::abs(u[0]);
    double worst = 0.0;
    for (std::size_t k = 1; k < u.size(); ++k) {
        worst = std::max(worst, std::pow(std::abs(u[k]) / u0, 1.0 / static_cast<double>(k)));
    }
    return worst == 0.0 ? std::numeric_limits<double>::infinity() : 1.0 / (2.0 * worst);
}

}  // namespace

FrobeniusChain frobenius_chain(std::span<const Jet> fs, const Jet& g, const Tolerance& tol) {
    if (fs.empty()) throw DomainError("frobenius: empty tuple");
    const std::size_t l = fs.size();

    std::vector<Factored> w;  // w[s] for W_s, s = 0..l
    w.push_back({0, Jet::constant(1.0, min_trunc(fs))});
    FrobeniusChain chain;
    for (std::size_t s = 1; s <= l; ++s) {
        const auto sub = fs.first(s);
        w.push_back(factor_out_leading_power(wronskian(sub), wronskian_scale(sub), tol, s));
        chain.wronskian_orders.push_back(w.back().order);
    }

    auto quotient = [&](const Jet& num_unit, std::size_t num_order, const Jet& den_unit, std::size_t den_order) {
        const auto val = static_cast<std::ptrdiff_t>(num_order) - static_cast<std::ptrdiff_t>(den_order);
        if (val < 0) chain.pole_encountered = true;
        return LaurentJet{val, divide(num_unit, den_unit, tol)};
    };

    LaurentJet h{0, g};
    h = quotient(w[0].unit, w[0].order, w[1].unit, w[1].order) * h;
    chain.steps.push_back(h);
    for (std::size_t s = 1; s < l; ++s) {
        h = derivative(h);
        chain.steps.push_back(h);
        h = quotient(w[s].unit * w[s].unit, 2 * w[s].order, w[s + 1].unit * w[s - 1].unit,
                     w[s + 1].order + w[s - 1].order) *
            h;
        chain.steps.push_back(h);
    }
    h = derivative(h);
    chain.steps.push_back(h);
    h = quotient(w[l].unit, w[l].order, w[l - 1].unit, w[l - 1].order) * h;
    chain.steps.push_back(h);

    chain.orders_lost = g.trunc_order() - h.unit.trunc_order();
    return chain;
}

FrobeniusReport frobenius_residual(std::span<const Jet> fs, const Jet& g, const Tolerance& tol, double rescale) {
    if (fs.empty()) throw DomainError("frobenius: empty tuple");
    double r = rescale;
    if (r <= 0.0) {
        double bound = std::numeric_limits<double>::infinity();
        for (std::size_t s = 1; s <= fs.size(); ++s) {
            const auto sub = fs.first(s);
            const Factored w = factor_out_leading_power(wronskian(sub), wronskian_scale(sub), tol, s);
            bound = std::min(bound, root_radius_lower_bound(w.unit));
        }
        r = std::min(1.0, 0.5 * bound);
    }

    std::vector<Jet> scaled;
    for (const auto& f : fs) scaled.push_back(rescale_variable(f, r));
    const Jet gs = rescale_variable(g, r);
    const FrobeniusChain chain = frobenius_chain(scaled, gs, tol);

    FrobeniusReport rep;
    rep.residual = chain.steps.back().unit.max_abs();
    rep.scale = gs.max_abs();
    rep.rescale = r;
    rep.orders_lost = chain.orders_lost;
    rep.window = chain.steps.back().unit.trunc_order() + 1;
    rep.pole_encountered = chain.pole_encountered;
    rep.wronskian_orders = chain.wronskian_orders;
    return rep;
}

}  // namespace cyclab
