#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "arcval/errors.hpp"
#include "arcval/numeric.hpp"
#include "arcval/polynomial.hpp"

namespace arcval {

/// One point blow-up: translate the chart by the center, then pass to the
/// chart of the given coordinate (1-based). In that chart the previous
/// coordinates read z_i = c_i + w_j * w_i for i != j and z_j = c_j + w_j,
/// and the exceptional divisor is {w_j = 0}.
struct TowerStep {
    std::vector<Rational> center;
    int chart = 1;
};

inline std::vector<std::string> default_names(std::size_t rank) {
    static const char* xyz[] = {"x", "y", "z"};
    std::vector<std::string> names;
    for (std::size_t i = 0; i < rank; ++i)
        names.push_back(rank <= 3 ? xyz[i] : "x" + std::to_string(i + 1));
    return names;
}

namespace detail {

/// Largest k such that the coordinate divides the polynomial k times, by
/// iterated exact division (each pass checks divisibility and strips one
/// factor). Polynomial must be nonzero and effective.
inline Integer coordinate_order(LaurentPolynomial f, std::size_t var) {
    if (f.is_zero()) throw InternalError("coordinate_order: zero polynomial");
    Integer order = 0;
    for (;;) {
        bool divisible = true;
        for (const auto& [e, c] : f.terms())
            if (e[var] < 1) {
                divisible = false;
                break;
            }
        if (!divisible) return order;
        f = f.shift(var, -1);
        order += 1;
    }
}

inline LaurentPolynomial derivative(const LaurentPolynomial& f, std::size_t var) {
    LaurentPolynomial r(f.rank());
    for (const auto& [e, c] : f.terms()) {
        if (e[var] == 0) continue;
        auto e2 = e;
        e2[var] -= 1;
        r.add_term(std::move(e2), c * Rational(e[var]));
    }
    return r;
}

inline LaurentPolynomial poly_determinant(const std::vector<std::vector<LaurentPolynomial>>& m,
                                          std::vector<std::size_t> cols, std::size_t row,
                                          std::size_t rank) {
    if (cols.size() == 1) return m[row][cols[0]];
    LaurentPolynomial det(rank);
    for (std::size_t k = 0; k < cols.size(); ++k) {
        auto rest = cols;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
        LaurentPolynomial minor = poly_determinant(m, rest, row + 1, rank);
        LaurentPolynomial term = m[row][cols[k]] * minor;
        det = (k % 2 == 0) ? det + term : det - term;
    }
    return det;
}

} // namespace detail

/// An ordered list of point blow-up charts over affine n-space, with the
/// exact substitution expressing every intermediate chart's coordinates as
/// polynomials in the final chart. Immutable after construction.
class BlowupTower {
public:
    BlowupTower(std::size_t rank, std::vector<TowerStep> steps,
                std::vector<std::string> names = {})
        : rank_(rank), steps_(std::move(steps)),
          names_(names.empty() ? default_names(rank) : std::move(names)) {
        if (rank_ < 1) throw InputError("tower: rank must be >= 1");
        if (steps_.empty()) throw InputError("tower: no steps, hence no exceptional divisor");
        if (names_.size() != rank_) throw InputError("tower: wrong number of coordinate names");
        for (const auto& s : steps_) {
            if (s.center.size() != rank_) throw InputError("tower: center has wrong length");
            if (s.chart < 1 || static_cast<std::size_t>(s.chart) > rank_)
                throw InputError("tower: chart index out of range");
        }
        // stages_[k] = coordinates of chart k written in the final chart
        stages_.assign(steps_.size() + 1, {});
        auto& top = stages_[steps_.size()];
        for (std::size_t i = 0; i < rank_; ++i)
            top.push_back(LaurentPolynomial::variable(rank_, i));
        for (std::size_t k = steps_.size(); k-- > 0;) {
            const auto& step = steps_[k];
            const auto& upper = stages_[k + 1];
            std::size_t j = static_cast<std::size_t>(step.chart) - 1;
            auto& lower = stages_[k];
            lower.reserve(rank_);
            for (std::size_t i = 0; i < rank_; ++i) {
                LaurentPolynomial zi = (i == j) ? upper[j] : upper[j] * upper[i];
                lower.push_back(LaurentPolynomial::constant(rank_, step.center[i]) + zi);
            }
        }
    }

    std::size_t rank() const { return rank_; }
    const std::vector<TowerStep>& steps() const { return steps_; }
    const std::vector<std::string>& names() const { return names_; }

    /// Original coordinates as polynomials in the final chart.
    const std::vector<LaurentPolynomial>& composite() const { return stages_[0]; }

    /// Coordinates of chart k (0 = original) in the final chart.
    const std::vector<LaurentPolynomial>& stage(std::size_t k) const { return stages_.at(k); }

    /// 0-based index of the exceptional coordinate of the last step.
    std::size_t exceptional_index() const {
        return static_cast<std::size_t>(steps_.back().chart) - 1;
    }

private:
    std::size_t rank_;
    std::vector<TowerStep> steps_;
    std::vector<std::string> names_;
    std::vector<std::vector<LaurentPolynomial>> stages_;
};

/// v = q * val_E for the exceptional divisor E of the last step of a tower.
struct DivisorialValuation {
    BlowupTower tower;
    Integer q = 1;

    DivisorialValuation(BlowupTower t, Integer mult = 1) : tower(std::move(t)), q(std::move(mult)) {
        if (q < 1) throw InputError("divisorial valuation: multiplicity must be >= 1");
    }
};

/// q times the order of the exceptional coordinate in the pullback of f.
/// f is a polynomial in the original coordinates; the zero polynomial yields
/// nullopt (the "infinite" signal).
inline std::optional<Integer> val_E(const DivisorialValuation& v, const LaurentPolynomial& f) {
    if (f.rank() != v.tower.rank()) throw InputError("val_E: rank mismatch");
    if (f.is_zero()) return std::nullopt;
    if (f.has_negative_exponent())
        throw InputError("val_E: polynomial in the original coordinates required");
    LaurentPolynomial pulled = substitute(f, v.tower.composite());
    if (pulled.is_zero()) throw InternalError("val_E: pullback of a nonzero polynomial vanished");
    return v.q * detail::coordinate_order(pulled, v.tower.exceptional_index());
}

/// Order of the exceptional coordinate in the Jacobian determinant of the
/// composite substitution. For towers over affine space this is the
/// discrepancy of the exceptional divisor of the last step.
inline Integer relative_canonical_order(const BlowupTower& t) {
    std::size_t n = t.rank();
    std::vector<std::vector<LaurentPolynomial>> jac(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            jac[i].push_back(detail::derivative(t.composite()[i], j));
    std::vector<std::size_t> cols(n);
    for (std::size_t j = 0; j < n; ++j) cols[j] = j;
    LaurentPolynomial det = detail::poly_determinant(jac, cols, 0, n);
    if (det.is_zero()) throw InternalError("relative_canonical_order: singular Jacobian");
    return detail::coordinate_order(det, t.exceptional_index());
}

/// One contact condition: a polynomial in the original coordinates together
/// with its value under the valuation.
struct Condition {
    LaurentPolynomial poly;
    Integer value;
};
using GeneratingConditions = std::vector<Condition>;

inline bool condition_less(const Condition& a, const Condition& b) {
    if (a.value != b.value) return a.value < b.value;
    return a.poly.terms() < b.poly.terms();
}

inline bool condition_eq(const Condition& a, const Condition& b) {
    return a.value == b.value && a.poly == b.poly;
}

inline bool operator==(const Condition& a, const Condition& b) { return condition_eq(a, b); }

/// Rewrites conditions given in the chart of a blow-up step as conditions in
/// the coordinates below the step. The step's generators are g_i = z_i - c_i;
/// p[i] = v(g_i) must satisfy p[chart] <= p[i] (chart compatibility). Each
/// upper (f, v) becomes (f * g_chart^a, a*p[chart] + v) with a minimal so the
/// rewrite is polynomial, and the contact conditions (g_i, p[i]) are appended.
inline GeneratingConditions push_conditions(std::size_t rank, const TowerStep& step,
                                            const GeneratingConditions& upper,
                                            const std::vector<Integer>& p) {
    if (step.center.size() != rank) throw InputError("push_conditions: center length mismatch");
    if (p.size() != rank) throw InputError("push_conditions: need one value per generator");
    std::size_t j = static_cast<std::size_t>(step.chart) - 1;
    if (step.chart < 1 || j >= rank) throw InputError("push_conditions: chart index out of range");
    for (std::size_t i = 0; i < rank; ++i)
        if (p[j] > p[i])
            throw InputError("push_conditions: chart compatibility fails, generator " +
                             std::to_string(i + 1) + " has value " + p[i].str() +
                             " below the chart value " + p[j].str());

    // g_i as polynomials in the lower coordinates
    std::vector<LaurentPolynomial> gens;
    for (std::size_t i = 0; i < rank; ++i)
        gens.push_back(LaurentPolynomial::variable(rank, i) -
                       LaurentPolynomial::constant(rank, step.center[i]));

    GeneratingConditions out;
    for (const auto& cond : upper) {
        const LaurentPolynomial& f = cond.poly;
        if (f.rank() != rank) throw InputError("push_conditions: condition rank mismatch");
        if (f.is_zero()) throw InputError("push_conditions: zero condition polynomial");
        if (f.has_negative_exponent())
            throw InputError("push_conditions: condition must be polynomial in the chart");
        // clear denominators: w_i = g_i / g_j for i != j, w_j = g_j
        Integer clear = 0;
        for (const auto& [e, c] : f.terms()) {
            Integer need = 0;
            for (std::size_t i = 0; i < rank; ++i)
                if (i != j) need += e[i];
            need -= e[j];
            if (need > clear) clear = need;
        }
        LaurentPolynomial cleared(rank);
        for (const auto& [e, c] : f.terms()) {
            Integer denom_power = e[j] + clear;
            for (std::size_t i = 0; i < rank; ++i)
                if (i != j) denom_power -= e[i];
            LaurentPolynomial term = LaurentPolynomial::constant(rank, c) *
                                     gens[j].pow(static_cast<std::size_t>(denom_power));
            for (std::size_t i = 0; i < rank; ++i)
                if (i != j && e[i] != 0) term = term * gens[i].pow(static_cast<std::size_t>(e[i]));
            cleared = cleared + term;
        }
        // minimal clearing exponent: strip surplus factors of g_j
        Integer surplus = 0;
        while (surplus < clear) {
            auto quotient = divide_by_linear(cleared, j, step.center[j]);
            if (!quotient) break;
            cleared = *quotient;
            surplus += 1;
        }
        Integer a = clear - surplus;
        out.push_back({cleared, a * p[j] + cond.value});
    }
    for (std::size_t i = 0; i < rank; ++i) out.push_back({gens[i], p[i]});
    return out;
}

/// Contact conditions in the original coordinates that cut out the maximal
/// divisorial set of v: starting from (exceptional coordinate, q) in the top
/// chart, push through every step. The raw set is deduplicated and sorted but
/// not minimized; every pair satisfies val_E(f_i) = v_i.
inline GeneratingConditions extract_generating_conditions(const DivisorialValuation& v) {
    const BlowupTower& t = v.tower;
    std::size_t n = t.rank();
    GeneratingConditions conds;
    conds.push_back({LaurentPolynomial::variable(n, t.exceptional_index()), v.q});

    for (std::size_t k = t.steps().size(); k-- > 0;) {
        const TowerStep& step = t.steps()[k];
        // p_i = v(z_i - c_i) for the chart coordinates above step k
        std::vector<Integer> p;
        for (std::size_t i = 0; i < n; ++i) {
            LaurentPolynomial gi =
                t.stage(k)[i] - LaurentPolynomial::constant(n, step.center[i]);
            if (gi.is_zero())
                throw InternalError("extract_generating_conditions: degenerate generator");
            p.push_back(v.q * detail::coordinate_order(gi, t.exceptional_index()));
        }
        try {
            conds = push_conditions(n, step, conds, p);
        } catch (const InputError& e) {
            throw InputError("extract_generating_conditions: step " + std::to_string(k + 1) +
                             ": " + e.what());
        }
    }
    std::sort(conds.begin(), conds.end(), condition_less);
    conds.erase(std::unique(conds.begin(), conds.end(), condition_eq), conds.end());
    return conds;
}

} // namespace arcval
