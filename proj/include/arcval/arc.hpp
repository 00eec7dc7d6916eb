#pragma once

#include <map>
#include <optional>
#include <vector>

#include "arcval/cone.hpp"
#include "arcval/errors.hpp"
#include "arcval/polynomial.hpp"
#include "arcval/series.hpp"
#include "arcval/valuation.hpp"

namespace arcval {

/// Torus-valued truncated arc: the monomial x^u evaluates to
/// t^<u,a> * prod s_i^{u_i} with every s_i an invertible series, so the order
/// of a monomial is exactly the pairing with the shift a.
class TruncatedArc {
public:
    TruncatedArc(LatticeVector shift, std::vector<TruncatedSeries> units, int truncation)
        : shift_(std::move(shift)), units_(std::move(units)), trunc_(truncation) {
        if (units_.size() != shift_.rank()) throw InputError("arc: one unit series per coordinate");
        if (trunc_ < 0) throw InputError("arc: truncation must be >= 0");
        for (auto& u : units_) {
            if (!u.is_unit()) throw InputError("arc: unit series needs a nonzero constant term");
            u = u.truncate(trunc_);
        }
    }

    std::size_t rank() const { return shift_.rank(); }
    const LatticeVector& shift() const { return shift_; }
    const std::vector<TruncatedSeries>& units() const { return units_; }
    int truncation() const { return trunc_; }

private:
    LatticeVector shift_;
    std::vector<TruncatedSeries> units_;
    int trunc_;
};

/// Exact t-order of f evaluated along the arc when it is visible within the
/// truncation window, a sound lower bound otherwise, and nullopt (infinite)
/// for the zero polynomial.
inline std::optional<OrderBound> ord_arc(const TruncatedArc& arc, const LaurentPolynomial& f) {
    if (f.rank() != arc.rank()) throw InputError("ord_arc: rank mismatch");
    if (f.is_zero()) return std::nullopt;
    int T = arc.truncation();

    std::vector<std::map<Integer, TruncatedSeries>> powers(arc.rank());
    auto unit_power = [&](std::size_t i, const Integer& k) -> const TruncatedSeries& {
        auto it = powers[i].find(k);
        if (it != powers[i].end()) return it->second;
        TruncatedSeries base = (k >= 0) ? arc.units()[i] : arc.units()[i].inverse();
        TruncatedSeries val = base.pow(static_cast<std::size_t>(abs(k)));
        return powers[i].emplace(k, std::move(val)).first->second;
    };

    // window [lo, lo+T] of exactly known coefficients, lo = min pairing
    std::optional<Integer> lo;
    for (const auto& [e, c] : f.terms()) {
        Integer m = pairing(DualVector{e}, arc.shift());
        if (!lo || m < *lo) lo = m;
    }
    std::map<Integer, Rational> window;
    for (const auto& [e, c] : f.terms()) {
        Integer m = pairing(DualVector{e}, arc.shift());
        TruncatedSeries prod = TruncatedSeries::constant(c, T);
        for (std::size_t i = 0; i < arc.rank(); ++i)
            if (e[i] != 0) prod = prod * unit_power(i, e[i]);
        for (int k = 0; k <= T; ++k) {
            Integer deg = m + k;
            if (deg > *lo + T) break;
            if (prod.coeff(k) != 0) window[deg] += prod.coeff(k);
        }
    }
    for (Integer d = *lo; d <= *lo + T; ++d) {
        auto it = window.find(d);
        if (it != window.end() && it->second != 0) return OrderBound::known_order(d);
    }
    return OrderBound::at_least(*lo + T + 1);
}

/// Deterministic-for-seed arc inside the maximal divisorial set of val_a:
/// shift a and random invertible units, so ord of x^{u_j} equals <u_j, a>
/// exactly for every semigroup element. Unit coefficients are drawn from
/// {-5..5} (constant terms nonzero).
inline TruncatedArc sample_arc_in_W(const Cone& c, const LatticeVector& a, int truncation,
                                    std::uint64_t seed) {
    if (a.rank() != c.rank()) throw InputError("sample_arc_in_W: rank mismatch");
    if (a.is_zero()) throw InputError("sample_arc_in_W: a must be nonzero");
    if (!c.contains(a)) throw InputError("sample_arc_in_W: a is not in the cone");
    // one substream per coordinate, so the same seed at a larger truncation
    // extends the same arc instead of producing a different one
    SplitMix64 master(seed);
    std::vector<TruncatedSeries> units;
    for (std::size_t i = 0; i < c.rank(); ++i) {
        SplitMix64 rng(master.next());
        std::vector<Rational> coeffs(static_cast<std::size_t>(truncation) + 1);
        std::int64_t c0 = rng.uniform(-5, 4);
        if (c0 >= 0) c0 += 1; // skip zero
        coeffs[0] = Rational(c0);
        for (std::size_t k = 1; k < coeffs.size(); ++k) coeffs[k] = Rational(rng.uniform(-5, 5));
        units.emplace_back(std::move(coeffs), truncation);
    }
    return TruncatedArc(a, std::move(units), truncation);
}

/// Arc on affine n-space given by one coordinate series per variable
/// (constant terms may vanish). This is the representation used by contact
/// queries on smooth ambient space.
class CoordinateArc {
public:
    explicit CoordinateArc(std::vector<TruncatedSeries> coords) : coords_(std::move(coords)) {
        if (coords_.empty()) throw InputError("coordinate arc: empty");
    }

    std::size_t rank() const { return coords_.size(); }
    const std::vector<TruncatedSeries>& coords() const { return coords_; }

    /// Evaluate an effective polynomial along the arc.
    TruncatedSeries evaluate(const LaurentPolynomial& f) const {
        if (f.rank() != rank()) throw InputError("coordinate arc: rank mismatch");
        if (f.has_negative_exponent())
            throw InputError("coordinate arc: effective polynomial required");
        int T = coords_[0].truncation();
        for (const auto& s : coords_) T = std::min(T, s.truncation());
        TruncatedSeries acc = TruncatedSeries::constant(0, T);
        for (const auto& [e, c] : f.terms()) {
            TruncatedSeries term = TruncatedSeries::constant(c, T);
            for (std::size_t i = 0; i < rank(); ++i)
                if (e[i] != 0) term = term * coords_[i].pow(static_cast<std::size_t>(e[i]));
            acc = acc + term;
        }
        return acc;
    }

private:
    std::vector<TruncatedSeries> coords_;
};

enum class ContactMode { exact, at_least };
enum class Tri { yes, no, unknown };

namespace detail {

// [lo, hi] interval of possible ideal orders; hi absent means unbounded.
struct OrderInterval {
    Integer lo;
    std::optional<Integer> hi;
};

inline OrderInterval interval_of(const OrderBound& b) {
    if (b.is_known()) return {b.value, b.value};
    return {b.value, std::nullopt};
}

inline Tri compare_contact(const OrderInterval& iv, const Integer& m, ContactMode mode) {
    if (mode == ContactMode::at_least) {
        if (iv.lo >= m) return Tri::yes;
        if (iv.hi && *iv.hi < m) return Tri::no;
        return Tri::unknown;
    }
    if (iv.hi && iv.lo == *iv.hi) return (iv.lo == m) ? Tri::yes : Tri::no;
    if (m < iv.lo) return Tri::no;
    if (iv.hi && m > *iv.hi) return Tri::no;
    return Tri::unknown;
}

template <class OrdFn>
Tri contact_from_orders(OrdFn&& ord, std::size_t count, const Integer& m, ContactMode mode) {
    std::optional<detail::OrderInterval> ideal;
    for (std::size_t i = 0; i < count; ++i) {
        std::optional<OrderBound> b = ord(i);
        if (!b) continue; // zero generator contributes nothing to the ideal
        auto iv = interval_of(*b);
        if (!ideal) {
            ideal = iv;
        } else {
            if (iv.lo < ideal->lo) ideal->lo = iv.lo;
            if (iv.hi && (!ideal->hi || *iv.hi < *ideal->hi)) ideal->hi = iv.hi;
        }
    }
    if (!ideal) throw InputError("contact_membership: zero ideal");
    return compare_contact(*ideal, m, mode);
}

} // namespace detail

/// Membership of the arc in the contact locus of the ideal spanned by the
/// generators: order of the ideal (min over generators) compared against m.
/// Unknown when truncation cannot decide.
inline Tri contact_membership(const TruncatedArc& arc,
                              const std::vector<LaurentPolynomial>& gens, const Integer& m,
                              ContactMode mode) {
    if (m < 0) throw InputError("contact_membership: m must be >= 0");
    if (gens.empty()) throw InputError("contact_membership: no generators");
    return detail::contact_from_orders(
        [&](std::size_t i) { return ord_arc(arc, gens[i]); }, gens.size(), m, mode);
}

inline Tri contact_membership(const CoordinateArc& arc,
                              const std::vector<LaurentPolynomial>& gens, const Integer& m,
                              ContactMode mode) {
    if (m < 0) throw InputError("contact_membership: m must be >= 0");
    if (gens.empty()) throw InputError("contact_membership: no generators");
    return detail::contact_from_orders(
        [&](std::size_t i) -> std::optional<OrderBound> {
            if (gens[i].is_zero()) return std::nullopt;
            return arc.evaluate(gens[i]).order();
        },
        gens.size(), m, mode);
}

/// Minimum Known order of f over a batch of sampled arcs. Per-sample seeds
/// are drawn from a deterministic stream, so a (seed, index) pair always
/// names the same arc. Errors when no sample could decide the order.
inline Integer empirical_val(const Cone& c, const LatticeVector& a, const LaurentPolynomial& f,
                             std::size_t samples, int truncation, std::uint64_t seed) {
    if (f.is_zero()) throw InputError("empirical_val: zero polynomial");
    if (!support_in_semigroup(c, f))
        throw InputError("empirical_val: support must lie in the dual semigroup");
    if (samples == 0) throw InputError("empirical_val: need at least one sample");
    SplitMix64 stream(seed);
    std::optional<Integer> best;
    for (std::size_t k = 0; k < samples; ++k) {
        TruncatedArc arc = sample_arc_in_W(c, a, truncation, stream.next());
        auto b = ord_arc(arc, f);
        if (b && b->is_known() && (!best || b->value < *best)) best = b->value;
    }
    if (!best)
        throw InputError("empirical_val: every sample was undecided; increase the truncation");
    return *best;
}

/// Codimension of the m-jet image of the cylinder {ord(x_i) >= a_i} on affine
/// space, by literal coefficient counting: each condition kills the first a_i
/// coefficients of one coordinate. Requires m >= max(a_i) so the count is
/// visible at jet level m.
inline Integer jet_codim_monomial(const std::vector<Integer>& weights, const Integer& m) {
    if (weights.empty()) throw InputError("jet_codim_monomial: empty weight vector");
    for (const auto& w : weights) {
        if (w < 0) throw InputError("jet_codim_monomial: weights must be >= 0");
        if (m < w)
            throw InputError("jet_codim_monomial: m = " + m.str() +
                             " is below the weight " + w.str());
    }
    Integer count = 0;
    for (const auto& w : weights)
        for (Integer j = 0; j < w; ++j) count += 1; // coefficient c_{i,j} forced to vanish
    return count;
}

} // namespace arcval
