#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "arcval/blowup.hpp"
#include "arcval/errors.hpp"
#include "arcval/polynomial.hpp"

namespace arcval {

/// Search budget for the candidate enumeration: blow-up towers of bounded
/// depth with centers on a rational grid (origin-centered, each center on the
/// previous exceptional divisor), plus q-multiples of monomial valuations
/// with bounded weights.
struct OracleBudget {
    std::size_t depth = 4;
    Integer weight_max = 4;
    Integer q_max = 2;
    std::vector<Rational> grid = {Rational(-2), Rational(-1), Rational(0), Rational(1),
                                  Rational(2)};
};

/// A divisorial valuation the oracle can evaluate: either the exceptional
/// valuation of an enumerated tower (kept as its composite substitution) or a
/// scaled monomial valuation.
class Candidate {
public:
    static Candidate from_tower(std::vector<LaurentPolynomial> composite, std::size_t exc,
                                std::string label) {
        Candidate c;
        c.composite_ = std::move(composite);
        c.exceptional_ = exc;
        c.label_ = std::move(label);
        // order of each pulled-back coordinate; a monomial's value is the
        // weighted sum of these, no expansion needed
        for (const auto& comp : c.composite_)
            c.coord_orders_.push_back(detail::coordinate_order(comp, exc));
        return c;
    }

    static Candidate from_monomial(std::vector<Integer> weights, Integer q) {
        Candidate c;
        c.weights_ = std::move(weights);
        c.q_ = std::move(q);
        std::string label = "monomial(";
        for (std::size_t i = 0; i < c.weights_.size(); ++i) {
            if (i) label += ",";
            label += c.weights_[i].str();
        }
        c.label_ = label + ")*" + c.q_.str();
        return c;
    }

    const std::string& label() const { return label_; }

    Integer eval(const LaurentPolynomial& f) const {
        if (f.is_zero()) throw InputError("candidate eval: zero polynomial");
        if (!weights_.empty()) {
            std::optional<Integer> best;
            for (const auto& [e, c] : f.terms()) {
                Integer s = 0;
                for (std::size_t i = 0; i < e.size(); ++i) s += e[i] * weights_[i];
                if (!best || s < *best) best = s;
            }
            return q_ * *best;
        }
        if (f.is_monomial()) {
            const auto& e = f.terms().begin()->first;
            Integer s = 0;
            for (std::size_t i = 0; i < e.size(); ++i) s += e[i] * coord_orders_[i];
            return s;
        }
        auto hit = cache_.find(f.terms());
        if (hit != cache_.end()) return hit->second;
        LaurentPolynomial pulled = substitute(f, composite_);
        if (pulled.is_zero()) throw InternalError("candidate eval: pullback vanished");
        Integer order = detail::coordinate_order(pulled, exceptional_);
        cache_.emplace(f.terms(), order);
        return order;
    }

    /// Cheap exact-for-monomials lower bound: the value of any polynomial is
    /// at least the minimum of its term values.
    Integer eval_lower_bound(const LaurentPolynomial& f) const {
        if (f.is_zero()) throw InputError("candidate eval: zero polynomial");
        std::optional<Integer> best;
        for (const auto& [e, c] : f.terms()) {
            Integer s = 0;
            for (std::size_t i = 0; i < e.size(); ++i)
                s += e[i] * (weights_.empty() ? coord_orders_[i] : q_ * weights_[i]);
            if (!best || s < *best) best = s;
        }
        return *best;
    }

private:
    Candidate() = default;
    std::vector<LaurentPolynomial> composite_; // tower candidates
    std::size_t exceptional_ = 0;
    std::vector<Integer> coord_orders_;
    mutable std::map<LaurentPolynomial::TermMap, Integer> cache_;
    std::vector<Integer> weights_; // monomial candidates
    Integer q_ = 1;
    std::string label_;
};

/// Enumerated candidate family for a given rank and budget. Building the
/// family is the expensive part; it can be shared across oracle runs.
class CandidateFamily {
public:
    CandidateFamily(std::size_t rank, const OracleBudget& budget) : rank_(rank) {
        // monomial valuations: positive weights <= weight_max, q <= q_max
        std::vector<Integer> w(rank, 1);
        auto rec = [&](auto&& self, std::size_t i) -> void {
            if (i == rank) {
                for (Integer q = 1; q <= budget.q_max; ++q)
                    candidates_.push_back(Candidate::from_monomial(w, q));
                return;
            }
            for (Integer v = 1; v <= budget.weight_max; ++v) {
                w[i] = v;
                self(self, i + 1);
            }
        };
        rec(rec, 0);

        // towers: depth-first over steps, reusing the shared composite prefix.
        // First center is the origin; later centers lie on the previous
        // exceptional divisor, with the free coordinates from the grid.
        std::vector<LaurentPolynomial> identity;
        for (std::size_t i = 0; i < rank_; ++i)
            identity.push_back(LaurentPolynomial::variable(rank_, i));
        TowerStep origin;
        origin.center.assign(rank_, Rational(0));
        for (std::size_t chart = 1; chart <= rank_; ++chart) {
            TowerStep step = origin;
            step.chart = static_cast<int>(chart);
            extend(identity, step, 1, budget, "");
        }
    }

    const std::vector<Candidate>& candidates() const { return candidates_; }

private:
    // apply one blow-up step to a composite (original coords in current chart)
    static std::vector<LaurentPolynomial> apply_step(const std::vector<LaurentPolynomial>& comp,
                                                     const TowerStep& step, std::size_t rank) {
        std::size_t j = static_cast<std::size_t>(step.chart) - 1;
        std::vector<LaurentPolynomial> map;
        map.reserve(rank);
        for (std::size_t i = 0; i < rank; ++i) {
            LaurentPolynomial wi = LaurentPolynomial::variable(rank, i);
            LaurentPolynomial zi =
                (i == j) ? wi : LaurentPolynomial::variable(rank, j) * wi;
            map.push_back(LaurentPolynomial::constant(rank, step.center[i]) + zi);
        }
        std::vector<LaurentPolynomial> out;
        out.reserve(comp.size());
        for (const auto& f : comp) out.push_back(substitute(f, map));
        return out;
    }

    void extend(const std::vector<LaurentPolynomial>& comp, const TowerStep& step,
                std::size_t depth, const OracleBudget& budget, const std::string& label) {
        auto next = apply_step(comp, step, rank_);
        std::string here = label + (label.empty() ? "" : ";") + step_label(step);
        std::size_t exc = static_cast<std::size_t>(step.chart) - 1;
        candidates_.push_back(Candidate::from_tower(next, exc, "tower[" + here + "]"));
        if (depth == budget.depth) return;
        // next center: coordinate `exc` stays 0 (on the exceptional divisor)
        std::vector<std::size_t> free_coords;
        for (std::size_t i = 0; i < rank_; ++i)
            if (i != exc) free_coords.push_back(i);
        TowerStep child;
        child.center.assign(rank_, Rational(0));
        auto rec = [&](auto&& self, std::size_t k) -> void {
            if (k == free_coords.size()) {
                for (std::size_t chart = 1; chart <= rank_; ++chart) {
                    child.chart = static_cast<int>(chart);
                    extend(next, child, depth + 1, budget, here);
                }
                return;
            }
            for (const auto& g : budget.grid) {
                child.center[free_coords[k]] = g;
                self(self, k + 1);
            }
        };
        rec(rec, 0);
    }

    static std::string step_label(const TowerStep& s) {
        std::string t = "(";
        for (std::size_t i = 0; i < s.center.size(); ++i) {
            if (i) t += ",";
            t += rational_to_string(s.center[i]);
        }
        return t + ")c" + std::to_string(s.chart);
    }

    std::size_t rank_;
    std::vector<Candidate> candidates_;
};

struct OracleViolation {
    std::string candidate;
    std::string probe;
    Integer got;
    Integer expected;
};

/// Result of a determination check. "ok" means: some candidate matched the
/// conditions and none of the matching candidates went below v on any probe.
/// An empty match set is inconclusive, never a success.
struct OracleReport {
    std::size_t candidates_checked = 0;
    std::size_t matched = 0;
    std::vector<OracleViolation> violations;
    bool conclusive() const { return matched > 0; }
    bool ok() const { return conclusive() && violations.empty(); }
};

/// Desk-scale check that the conditions pin down v: every enumerated
/// divisorial valuation v' with v'(f_i) = v_i for all conditions must satisfy
/// v'(f) >= v(f) on every probe. Violations are reported as a set; "no
/// violation within budget" is not a proof.
inline OracleReport determination_oracle(const GeneratingConditions& conds,
                                         const DivisorialValuation& v,
                                         const std::vector<LaurentPolynomial>& probes,
                                         const CandidateFamily& family) {
    // cheap conditions first so failing candidates exit early
    GeneratingConditions ordered = conds;
    std::sort(ordered.begin(), ordered.end(), [](const Condition& a, const Condition& b) {
        if (a.poly.term_count() != b.poly.term_count())
            return a.poly.term_count() < b.poly.term_count();
        return condition_less(a, b);
    });

    std::vector<Integer> expected;
    for (const auto& probe : probes) {
        auto val = val_E(v, probe);
        if (!val) throw InputError("determination oracle: zero probe polynomial");
        expected.push_back(*val);
    }

    OracleReport report;
    const auto& names = v.tower.names();
    for (const auto& cand : family.candidates()) {
        ++report.candidates_checked;
        bool matches = true;
        for (const auto& cond : ordered) {
            if (cand.eval_lower_bound(cond.poly) > cond.value || // value is below any term
                cand.eval(cond.poly) != cond.value) {
                matches = false;
                break;
            }
        }
        if (!matches) continue;
        ++report.matched;
        for (std::size_t i = 0; i < probes.size(); ++i) {
            if (cand.eval_lower_bound(probes[i]) >= expected[i]) continue; // cannot violate
            Integer got = cand.eval(probes[i]);
            if (got < expected[i])
                report.violations.push_back(
                    {cand.label(), probes[i].str(names), got, expected[i]});
        }
    }
    return report;
}

/// Greedy pruning: walks the list in order and drops any condition that the
/// oracle confirms redundant, i.e. no candidate matching the remaining
/// conditions takes the dropped polynomial below its value. Partial check,
/// limited by the same budget as the oracle.
inline GeneratingConditions prune_conditions(const GeneratingConditions& conds,
                                             const DivisorialValuation& v,
                                             const CandidateFamily& family) {
    GeneratingConditions kept = conds;
    std::size_t i = 0;
    while (i < kept.size()) {
        GeneratingConditions rest;
        for (std::size_t k = 0; k < kept.size(); ++k)
            if (k != i) rest.push_back(kept[k]);
        if (rest.empty()) break;
        OracleReport rep = determination_oracle(rest, v, {kept[i].poly}, family);
        if (rep.ok()) {
            kept = std::move(rest); // redundant within budget
        } else {
            ++i;
        }
    }
    return kept;
}

} // namespace arcval
