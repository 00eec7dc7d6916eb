#pragma once

#include <string>
#include <vector>

#include "arcval/errors.hpp"
#include "arcval/numeric.hpp"

namespace arcval {

/// Sound order information for a truncated computation: either the exact
/// order, or a lower bound when truncation cannot decide. Never a wrong
/// finite value.
struct OrderBound {
    enum class Kind { known, at_least };
    Kind kind = Kind::known;
    Integer value;

    static OrderBound known_order(Integer v) { return {Kind::known, std::move(v)}; }
    static OrderBound at_least(Integer v) { return {Kind::at_least, std::move(v)}; }

    bool is_known() const { return kind == Kind::known; }

    friend bool operator==(const OrderBound& a, const OrderBound& b) {
        return a.kind == b.kind && a.value == b.value;
    }

    std::string str() const {
        return is_known() ? value.str() : ">=" + value.str();
    }
};

/// Power series known exactly through degree T: coefficients c_0..c_T.
/// Arithmetic carries the minimum of the operand truncation bounds, so a
/// stored coefficient is always the true one.
class TruncatedSeries {
public:
    TruncatedSeries(std::vector<Rational> coeffs, int truncation)
        : trunc_(truncation), c_(std::move(coeffs)) {
        if (trunc_ < 0) throw InputError("series: truncation order must be >= 0");
        c_.resize(static_cast<std::size_t>(trunc_) + 1, Rational(0));
    }

    static TruncatedSeries constant(const Rational& a, int truncation) {
        return TruncatedSeries({a}, truncation);
    }

    int truncation() const { return trunc_; }
    const Rational& coeff(int k) const { return c_.at(static_cast<std::size_t>(k)); }
    const std::vector<Rational>& coeffs() const { return c_; }

    TruncatedSeries truncate(int t) const {
        if (t >= trunc_) return *this;
        std::vector<Rational> head(c_.begin(), c_.begin() + t + 1);
        return TruncatedSeries(std::move(head), t);
    }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        int t = std::min(a.trunc_, b.trunc_);
        std::vector<Rational> c(static_cast<std::size_t>(t) + 1);
        for (int k = 0; k <= t; ++k)
            c[static_cast<std::size_t>(k)] = a.c_[static_cast<std::size_t>(k)] +
                                             b.c_[static_cast<std::size_t>(k)];
        return TruncatedSeries(std::move(c), t);
    }

    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        int t = std::min(a.trunc_, b.trunc_);
        std::vector<Rational> c(static_cast<std::size_t>(t) + 1);
        for (int k = 0; k <= t; ++k)
            c[static_cast<std::size_t>(k)] = a.c_[static_cast<std::size_t>(k)] -
                                             b.c_[static_cast<std::size_t>(k)];
        return TruncatedSeries(std::move(c), t);
    }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        int t = std::min(a.trunc_, b.trunc_);
        std::vector<Rational> c(static_cast<std::size_t>(t) + 1, Rational(0));
        for (int i = 0; i <= t; ++i) {
            if (a.c_[static_cast<std::size_t>(i)] == 0) continue;
            for (int j = 0; i + j <= t; ++j)
                c[static_cast<std::size_t>(i + j)] +=
                    a.c_[static_cast<std::size_t>(i)] * b.c_[static_cast<std::size_t>(j)];
        }
        return TruncatedSeries(std::move(c), t);
    }

    friend TruncatedSeries operator*(const Rational& k, const TruncatedSeries& a) {
        auto c = a.c_;
        for (auto& x : c) x *= k;
        return TruncatedSeries(std::move(c), a.trunc_);
    }

    TruncatedSeries pow(std::size_t k) const {
        TruncatedSeries r = constant(1, trunc_);
        TruncatedSeries base = *this;
        while (k > 0) {
            if (k & 1) r = r * base;
            base = base * base;
            k >>= 1;
        }
        return r;
    }

    bool is_unit() const { return c_[0] != 0; }

    /// Multiplicative inverse; requires a nonzero constant term.
    TruncatedSeries inverse() const {
        if (!is_unit()) throw InputError("series inverse: constant term is zero");
        std::vector<Rational> b(c_.size(), Rational(0));
        b[0] = Rational(1) / c_[0];
        for (std::size_t k = 1; k < c_.size(); ++k) {
            Rational s = 0;
            for (std::size_t i = 1; i <= k; ++i) s += c_[i] * b[k - i];
            b[k] = -s / c_[0];
        }
        return TruncatedSeries(std::move(b), trunc_);
    }

    /// Exact order when a nonzero coefficient exists within the window,
    /// otherwise the sound bound AtLeast(T+1).
    OrderBound order() const {
        for (std::size_t k = 0; k < c_.size(); ++k)
            if (c_[k] != 0) return OrderBound::known_order(Integer(k));
        return OrderBound::at_least(Integer(trunc_) + 1);
    }

private:
    int trunc_;
    std::vector<Rational> c_;
};

} // namespace arcval
