#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "arcval/errors.hpp"
#include "arcval/lattice.hpp"
#include "arcval/numeric.hpp"

namespace arcval {

/// Sparse Laurent polynomial: finite support in M with exact rational
/// coefficients. Zero coefficients are never stored; the map key order is
/// lexicographic on exponent vectors, which is also the canonical term order
/// for serialization.
class LaurentPolynomial {
public:
    using TermMap = std::map<std::vector<Integer>, Rational>;

    explicit LaurentPolynomial(std::size_t rank) : rank_(rank) {}

    static LaurentPolynomial zero(std::size_t rank) { return LaurentPolynomial(rank); }

    static LaurentPolynomial constant(std::size_t rank, const Rational& c) {
        LaurentPolynomial p(rank);
        p.add_term(std::vector<Integer>(rank, 0), c);
        return p;
    }

    static LaurentPolynomial monomial(std::size_t rank, std::vector<Integer> exponent,
                                      const Rational& c = 1) {
        if (exponent.size() != rank) throw InputError("monomial: exponent rank mismatch");
        LaurentPolynomial p(rank);
        p.add_term(std::move(exponent), c);
        return p;
    }

    /// The i-th coordinate function (0-based).
    static LaurentPolynomial variable(std::size_t rank, std::size_t i) {
        std::vector<Integer> e(rank, 0);
        e.at(i) = 1;
        return monomial(rank, std::move(e));
    }

    std::size_t rank() const { return rank_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    bool is_monomial() const { return terms_.size() == 1; }

    bool has_negative_exponent() const {
        for (const auto& [e, c] : terms_)
            for (const auto& x : e)
                if (x < 0) return true;
        return false;
    }

    void add_term(std::vector<Integer> exponent, const Rational& c) {
        if (exponent.size() != rank_) throw InputError("add_term: exponent rank mismatch");
        if (c == 0) return;
        auto it = terms_.find(exponent);
        if (it == terms_.end()) {
            terms_.emplace(std::move(exponent), c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    friend LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        check_ranks(a, b);
        LaurentPolynomial r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }

    friend LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        check_ranks(a, b);
        LaurentPolynomial r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
        return r;
    }

    friend LaurentPolynomial operator-(const LaurentPolynomial& a) {
        LaurentPolynomial r(a.rank_);
        for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
        return r;
    }

    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        check_ranks(a, b);
        LaurentPolynomial r(a.rank_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                std::vector<Integer> e(a.rank_);
                for (std::size_t i = 0; i < a.rank_; ++i) e[i] = ea[i] + eb[i];
                r.add_term(std::move(e), ca * cb);
            }
        }
        return r;
    }

    friend LaurentPolynomial operator*(const Rational& k, const LaurentPolynomial& a) {
        LaurentPolynomial r(a.rank_);
        if (k == 0) return r;
        for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, k * c);
        return r;
    }

    friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        return a.rank_ == b.rank_ && a.terms_ == b.terms_;
    }

    LaurentPolynomial pow(std::size_t k) const {
        LaurentPolynomial r = constant(rank_, 1);
        LaurentPolynomial base = *this;
        while (k > 0) {
            if (k & 1) r = r * base;
            base = base * base;
            k >>= 1;
        }
        return r;
    }

    /// Smallest exponent of variable i over the support (the exact order of
    /// divisibility by that coordinate when the polynomial is effective).
    Integer min_exponent(std::size_t i) const {
        if (terms_.empty()) throw InputError("min_exponent: zero polynomial");
        bool first = true;
        Integer m = 0;
        for (const auto& [e, c] : terms_) {
            if (first || e[i] < m) m = e[i];
            first = false;
        }
        return m;
    }

    /// Multiplies every term by x_i^k (k may be negative).
    LaurentPolynomial shift(std::size_t i, const Integer& k) const {
        LaurentPolynomial r(rank_);
        for (const auto& [e, c] : terms_) {
            auto e2 = e;
            e2[i] += k;
            r.terms_.emplace(std::move(e2), c);
        }
        return r;
    }

    std::string str(const std::vector<std::string>& names = {}) const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            Rational a = c;
            if (!first) {
                s += (a < 0) ? " - " : " + ";
                if (a < 0) a = -a;
            }
            first = false;
            std::string mono;
            for (std::size_t i = 0; i < rank_; ++i) {
                if (e[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += (i < names.size()) ? names[i] : "x" + std::to_string(i + 1);
                if (e[i] != 1) mono += "^" + e[i].str();
            }
            if (mono.empty()) {
                s += rational_to_string(a);
            } else {
                if (a != 1) s += rational_to_string(a) + "*";
                s += mono;
            }
        }
        return s;
    }

private:
    static void check_ranks(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        if (a.rank_ != b.rank_) throw InputError("polynomial ranks differ");
    }

    std::size_t rank_;
    TermMap terms_;
};

/// f with each variable replaced by the corresponding polynomial. Negative
/// exponents are substitutable only when the target is a monomial (its inverse
/// is again a monomial); otherwise the call is rejected.
inline LaurentPolynomial substitute(const LaurentPolynomial& f,
                                    const std::vector<LaurentPolynomial>& gs) {
    if (gs.size() != f.rank()) throw InputError("substitute: wrong number of substituents");
    std::size_t out_rank = gs.empty() ? 0 : gs[0].rank();
    for (const auto& g : gs)
        if (g.rank() != out_rank) throw InputError("substitute: substituent ranks differ");

    // per-variable power cache; negative powers only for invertible monomials
    std::vector<std::map<Integer, LaurentPolynomial>> powers(gs.size());
    auto power_of = [&](std::size_t i, const Integer& k) -> const LaurentPolynomial& {
        auto it = powers[i].find(k);
        if (it != powers[i].end()) return it->second;
        LaurentPolynomial val = LaurentPolynomial::zero(out_rank);
        if (k >= 0) {
            val = gs[i].pow(static_cast<std::size_t>(k));
        } else {
            if (!gs[i].is_monomial())
                throw InputError("substitute: negative exponent of variable " +
                                 std::to_string(i + 1) + " needs a monomial substituent");
            const auto& [e, c] = *gs[i].terms().begin();
            std::vector<Integer> einv(out_rank);
            for (std::size_t j = 0; j < out_rank; ++j) einv[j] = -e[j];
            LaurentPolynomial inv = LaurentPolynomial::monomial(out_rank, einv, Rational(1) / c);
            val = inv.pow(static_cast<std::size_t>(-k));
        }
        return powers[i].emplace(k, std::move(val)).first->second;
    };

    LaurentPolynomial result(out_rank);
    for (const auto& [e, c] : f.terms()) {
        LaurentPolynomial term = LaurentPolynomial::constant(out_rank, c);
        for (std::size_t i = 0; i < gs.size(); ++i)
            if (e[i] != 0) term = term * power_of(i, e[i]);
        result = result + term;
    }
    return result;
}

/// Exact division of f by the linear factor (x_i - c), or nullopt when the
/// factor does not divide. Synthetic division along variable i.
inline std::optional<LaurentPolynomial> divide_by_linear(const LaurentPolynomial& f,
                                                         std::size_t i, const Rational& c) {
    if (f.is_zero()) return f;
    if (f.has_negative_exponent()) throw InputError("divide_by_linear: effective support required");
    // group terms by their x_i-degree
    std::map<Integer, LaurentPolynomial> by_degree;
    Integer max_deg = 0;
    for (const auto& [e, coef] : f.terms()) {
        auto base = e;
        Integer d = base[i];
        base[i] = 0;
        auto it = by_degree.find(d);
        if (it == by_degree.end())
            it = by_degree.emplace(d, LaurentPolynomial::zero(f.rank())).first;
        it->second.add_term(std::move(base), coef);
        if (d > max_deg) max_deg = d;
    }
    auto coef_at = [&](const Integer& d) -> LaurentPolynomial {
        auto it = by_degree.find(d);
        return it == by_degree.end() ? LaurentPolynomial::zero(f.rank()) : it->second;
    };
    // Horner: quotient coefficient q_d = f_{d+1} + c * q_{d+1}
    LaurentPolynomial quotient(f.rank());
    LaurentPolynomial carry = LaurentPolynomial::zero(f.rank());
    for (Integer d = max_deg - 1; d >= 0; --d) {
        carry = coef_at(d + 1) + Rational(c) * carry;
        quotient = quotient + carry.shift(i, d);
    }
    LaurentPolynomial remainder = coef_at(0) + Rational(c) * carry;
    if (!remainder.is_zero()) return std::nullopt;
    return quotient;
}

} // namespace arcval
