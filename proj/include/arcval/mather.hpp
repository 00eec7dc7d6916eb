#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "arcval/cone.hpp"
#include "arcval/errors.hpp"
#include "arcval/lattice.hpp"
#include "arcval/valuation.hpp"

namespace arcval {

/// Mather discrepancy data for a toric valuation: codim = k_mather + q, and
/// argmin_subset is a linearly independent n-subset of the dual semigroup
/// realizing codim as the sum of its pairings with a.
struct MatherReport {
    Integer q;
    Integer k_mather;
    Integer codim;
    std::vector<DualVector> argmin_subset;
};

namespace detail {

// Minimum of sum of weights over linearly independent n-subsets of the given
// ground set. Weights are positive, and independence is a matroid, so the
// greedy minimum-weight basis is optimal. Ground set must span.
inline std::optional<std::vector<std::size_t>> min_weight_basis(
    const std::vector<DualVector>& ground, const std::vector<Integer>& weight, std::size_t n) {
    std::vector<std::size_t> order(ground.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (weight[a] != weight[b]) return weight[a] < weight[b];
        return ground[a] < ground[b]; // deterministic tie-break
    });
    std::vector<std::size_t> chosen;
    std::vector<DualVector> span;
    for (std::size_t i : order) {
        span.push_back(ground[i]);
        if (is_independent(span)) {
            chosen.push_back(i);
            if (chosen.size() == n) return chosen;
        } else {
            span.pop_back();
        }
    }
    return std::nullopt;
}

inline void require_interior(const Cone& c, const LatticeVector& a, const char* who) {
    if (a.rank() != c.rank()) throw InputError(std::string(who) + ": rank mismatch");
    if (a.is_zero()) throw InputError(std::string(who) + ": a must be nonzero");
    if (!c.relint_contains(a))
        throw InputError(std::string(who) + ": a = " + a.str() +
                         " is not in the relative interior of the cone");
}

} // namespace detail

/// Mather discrepancy and codimension of the maximal divisorial set of val_a,
/// minimizing over independent n-subsets of the Hilbert basis. Requires a in
/// the relative interior so that every pairing is positive.
inline MatherReport mather_discrepancy(const Cone& c, const LatticeVector& a,
                                       std::size_t basis_cap = 10000) {
    detail::require_interior(c, a, "mather_discrepancy");
    SemigroupBasis basis = hilbert_basis(c, basis_cap);
    std::vector<Integer> weight;
    weight.reserve(basis.elements.size());
    for (const auto& u : basis.elements) weight.push_back(pairing(u, a));
    auto chosen = detail::min_weight_basis(basis.elements, weight, c.rank());
    if (!chosen) throw InternalError("mather_discrepancy: Hilbert basis does not span");
    MatherReport rep;
    rep.q = content(a);
    rep.codim = 0;
    for (auto i : *chosen) {
        rep.codim += weight[i];
        rep.argmin_subset.push_back(basis.elements[i]);
    }
    std::sort(rep.argmin_subset.begin(), rep.argmin_subset.end());
    rep.k_mather = rep.codim - rep.q;
    return rep;
}

/// Independent check of the same minimum over ALL semigroup elements with
/// pairing <= B (a finite set because a is interior), by plain subset search.
/// B must be at least the Hilbert-basis optimum for the search to be complete.
inline MatherReport mather_bruteforce_oracle(const Cone& c, const LatticeVector& a,
                                             const Integer& B,
                                             std::size_t point_cap = 2000000) {
    detail::require_interior(c, a, "mather_bruteforce_oracle");
    std::size_t n = c.rank();

    // The polytope {u in dual cone : <u,a> <= B} is the convex hull of 0 and
    // the points B/(d_j,a) * d_j, which gives exact coordinate bounds.
    std::vector<Integer> lo(n, 0), hi(n, 0);
    for (const auto& d : c.dual_rays()) {
        Integer p = pairing(d, a);
        for (std::size_t i = 0; i < n; ++i) {
            // bound by ceil(|B * d_i| / p)
            Integer num = B * d[i];
            Integer bound = (abs(num) + p - 1) / p;
            if (num > 0 && bound > hi[i]) hi[i] = bound;
            if (num < 0 && -bound < lo[i]) lo[i] = -bound;
        }
    }
    Integer volume = 1;
    for (std::size_t i = 0; i < n; ++i) volume *= hi[i] - lo[i] + 1;
    if (volume > Integer(point_cap))
        throw CapabilityError("mather oracle: enumeration box too large (" + volume.str() + ")");

    std::vector<DualVector> points;
    std::vector<Integer> weight;
    std::vector<Integer> pt(n);
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == n) {
            DualVector u{pt};
            if (u.is_zero() || !c.dual_contains(u)) return;
            Integer w = pairing(u, a);
            if (w <= B) {
                points.push_back(u);
                weight.push_back(w);
            }
            return;
        }
        for (Integer v = lo[i]; v <= hi[i]; ++v) {
            pt[i] = v;
            self(self, i + 1);
        }
    };
    rec(rec, 0);

    // exhaustive search over independent n-subsets, pruned by partial sums
    std::vector<std::size_t> order(points.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        if (weight[x] != weight[y]) return weight[x] < weight[y];
        return points[x] < points[y];
    });

    std::optional<Integer> best;
    std::vector<std::size_t> best_subset;
    std::vector<std::size_t> current;
    std::vector<DualVector> stack;
    Integer partial = 0;
    auto dfs = [&](auto&& self, std::size_t start) -> void {
        if (current.size() == n) {
            if (!best || partial < *best) {
                best = partial;
                best_subset = current;
            }
            return;
        }
        for (std::size_t k = start; k < order.size(); ++k) {
            std::size_t i = order[k];
            if (best && partial + weight[i] >= *best) return; // sorted: no better completion
            stack.push_back(points[i]);
            if (is_independent(stack)) {
                current.push_back(i);
                partial += weight[i];
                self(self, k + 1);
                partial -= weight[i];
                current.pop_back();
            }
            stack.pop_back();
        }
    };
    dfs(dfs, 0);
    if (!best)
        throw InputError("mather oracle: no independent n-subset within bound B = " + B.str());

    MatherReport rep;
    rep.q = content(a);
    rep.codim = *best;
    for (auto i : best_subset) rep.argmin_subset.push_back(points[i]);
    std::sort(rep.argmin_subset.begin(), rep.argmin_subset.end());
    rep.k_mather = rep.codim - rep.q;
    return rep;
}

/// One checked equality from the conclusion of a criterion theorem.
struct EqualityWitness {
    std::string name;
    Integer lhs;
    Integer rhs;
    bool holds = false;
};

/// Outcome of a monomial-valuation criterion: the two hypotheses, their
/// conjunction, and the equalities the theorem forces when it applies.
struct CriterionReport {
    bool cond_values = false;
    bool cond_codim = false;
    bool concluded = false;
    std::vector<EqualityWitness> equality_witness;
    // consequences, meaningful when concluded
    Integer multiplicity;           // q(v)
    std::vector<Integer> weight_vector; // the weights / the lattice point a
};

/// Smooth-case criterion on affine n-space: given the values v(x_i), a bound
/// k_v + q, and candidate weights a_i >= 1, decide whether v must be the
/// monomial valuation of weights a. Hypotheses: v(x_i) >= a_i for all i and
/// sum(a) >= k_v + q; the conclusion forces equality everywhere and
/// q(v) = gcd(a).
inline CriterionReport criterion_smooth(const std::vector<Integer>& vals,
                                        const Integer& k_plus_q,
                                        const std::vector<Integer>& weights) {
    if (weights.empty()) throw InputError("criterion_smooth: empty weights");
    if (vals.size() != weights.size())
        throw InputError("criterion_smooth: need one value per coordinate");
    for (const auto& w : weights)
        if (w < 1) throw InputError("criterion_smooth: weights must be >= 1");
    if (k_plus_q < 1) throw InputError("criterion_smooth: k_plus_q must be >= 1");

    CriterionReport rep;
    rep.cond_values = true;
    Integer sum = 0, g = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (vals[i] < weights[i]) rep.cond_values = false;
        sum += weights[i];
        g = gcd(g, weights[i]);
    }
    rep.cond_codim = (sum >= k_plus_q);
    rep.concluded = rep.cond_values && rep.cond_codim;
    for (std::size_t i = 0; i < weights.size(); ++i)
        rep.equality_witness.push_back({"v(x" + std::to_string(i + 1) + ") = a" +
                                            std::to_string(i + 1),
                                        vals[i], weights[i], vals[i] == weights[i]});
    rep.equality_witness.push_back({"sum(a) = k+q", sum, k_plus_q, sum == k_plus_q});
    rep.multiplicity = g;
    rep.weight_vector = weights;
    return rep;
}

/// Toric-case criterion: values on every Hilbert basis element of the dual
/// semigroup, a bound k_v + q, and a candidate interior point a. Hypotheses:
/// v(u_j) >= <u_j, a> for all j and k_plus_q <= min over independent
/// n-subsets of sum <x_i, a>; the conclusion identifies v with val_a and
/// forces q(v) = content(a) plus equality everywhere.
inline CriterionReport criterion_toric(const Cone& c, const SemigroupBasis& gens,
                                       const std::vector<std::pair<DualVector, Integer>>& vals,
                                       const Integer& k_plus_q, const LatticeVector& a) {
    detail::require_interior(c, a, "criterion_toric");
    if (gens.rank != c.rank()) throw InputError("criterion_toric: basis rank mismatch");

    auto value_of = [&](const DualVector& u) -> const Integer& {
        for (const auto& [vec, val] : vals)
            if (vec == u) return val;
        throw InputError("criterion_toric: missing value for generator " + u.str());
    };
    if (vals.size() != gens.elements.size())
        throw InputError("criterion_toric: need exactly one value per generator, got " +
                         std::to_string(vals.size()) + " for " +
                         std::to_string(gens.elements.size()));

    CriterionReport rep;
    rep.cond_values = true;
    for (const auto& u : gens.elements) {
        Integer lhs = value_of(u);
        Integer rhs = pairing(u, a);
        if (lhs < rhs) rep.cond_values = false;
        rep.equality_witness.push_back({"v(" + u.str() + ") = <u,a>", lhs, rhs, lhs == rhs});
    }
    MatherReport mather = mather_discrepancy(c, a);
    rep.cond_codim = (k_plus_q <= mather.codim);
    rep.equality_witness.push_back({"k+q = min sum <x_i,a>", k_plus_q, mather.codim,
                                    k_plus_q == mather.codim});
    rep.concluded = rep.cond_values && rep.cond_codim;
    rep.multiplicity = content(a);
    rep.weight_vector = a.coords();
    return rep;
}

} // namespace arcval
