#pragma once

#include <optional>
#include <vector>

#include "arcval/cone.hpp"
#include "arcval/errors.hpp"
#include "arcval/polynomial.hpp"

namespace arcval {

/// Toric valuation val_a attached to a nonzero lattice point a of the cone,
/// together with its multiplicity q = content(a) and primitive part.
struct ToricValuation {
    Cone cone;
    LatticeVector a;
    Integer q;
    LatticeVector a_primitive;

    ToricValuation(Cone c, LatticeVector point)
        : cone(std::move(c)), a(std::move(point)), q(0), a_primitive(a) {
        if (a.rank() != cone.rank()) throw InputError("toric valuation: rank mismatch");
        if (a.is_zero()) throw InputError("toric valuation: a must be nonzero");
        if (!cone.contains(a)) throw InputError("toric valuation: a is not in the cone");
        q = content(a);
        a_primitive = primitive_part(a);
    }
};

/// The monomial valuation on affine n-space with the given positive weights.
inline ToricValuation monomial_valuation(const std::vector<Integer>& weights) {
    std::size_t n = weights.size();
    if (n == 0) throw InputError("monomial valuation: empty weight vector");
    std::vector<LatticeVector> rays;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Integer> e(n, 0);
        e[i] = 1;
        rays.emplace_back(std::move(e));
    }
    for (const auto& w : weights)
        if (w < 1) throw InputError("monomial valuation: weights must be positive");
    return ToricValuation(Cone(n, std::move(rays)), LatticeVector{std::vector<Integer>(weights)});
}

/// val_a(f) = min over the support of <u, a>. The zero polynomial has no
/// finite value and yields nullopt (the "infinite" signal).
inline std::optional<Integer> val_eval(const ToricValuation& v, const LaurentPolynomial& f) {
    if (f.rank() != v.cone.rank()) throw InputError("val_eval: rank mismatch");
    if (f.is_zero()) return std::nullopt;
    std::optional<Integer> best;
    for (const auto& [e, c] : f.terms()) {
        Integer p = pairing(DualVector{e}, v.a);
        if (!best || p < *best) best = p;
    }
    return best;
}

/// True iff every support exponent pairs >= 0 with every ray, i.e. f lies in
/// the semigroup algebra of the cone.
inline bool support_in_semigroup(const Cone& c, const LaurentPolynomial& f) {
    if (f.rank() != c.rank()) throw InputError("support_in_semigroup: rank mismatch");
    for (const auto& [e, coef] : f.terms())
        if (!c.dual_contains(DualVector{e})) return false;
    return true;
}

} // namespace arcval
