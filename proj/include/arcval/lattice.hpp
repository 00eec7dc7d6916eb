#pragma once

#include <string>
#include <vector>

#include "arcval/errors.hpp"
#include "arcval/numeric.hpp"

namespace arcval {

/// Exact integer vector tagged by the lattice it lives in. N and M are dual
/// free abelian groups of the same rank; keeping them as distinct types makes
/// pairing(u, a) the only way to mix them.
template <class Tag>
class IntVec {
public:
    IntVec() = default;
    explicit IntVec(std::vector<Integer> coords) : c_(std::move(coords)) {}

    std::size_t rank() const { return c_.size(); }
    const Integer& operator[](std::size_t i) const { return c_[i]; }
    Integer& operator[](std::size_t i) { return c_[i]; }
    const std::vector<Integer>& coords() const { return c_; }

    bool is_zero() const {
        for (const auto& x : c_)
            if (x != 0) return false;
        return true;
    }

    friend IntVec operator+(const IntVec& a, const IntVec& b) {
        IntVec r = a;
        for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
        return r;
    }
    friend IntVec operator-(const IntVec& a, const IntVec& b) {
        IntVec r = a;
        for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] -= b.c_[i];
        return r;
    }
    friend IntVec operator*(const Integer& k, const IntVec& a) {
        IntVec r = a;
        for (auto& x : r.c_) x *= k;
        return r;
    }
    friend bool operator==(const IntVec& a, const IntVec& b) { return a.c_ == b.c_; }
    // Lexicographic; the canonical order used for every serialized list.
    friend bool operator<(const IntVec& a, const IntVec& b) { return a.c_ < b.c_; }

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (i) s += ",";
            s += c_[i].str();
        }
        return s + ")";
    }

private:
    std::vector<Integer> c_;
};

struct NTag {};
struct MTag {};
using LatticeVector = IntVec<NTag>; // element of N
using DualVector = IntVec<MTag>;    // element of M = N^*

/// Exact dot product <u, a>.
inline Integer pairing(const DualVector& u, const LatticeVector& a) {
    if (u.rank() != a.rank())
        throw InputError("pairing: rank mismatch (" + std::to_string(u.rank()) + " vs " +
                         std::to_string(a.rank()) + ")");
    Integer s = 0;
    for (std::size_t i = 0; i < u.rank(); ++i) s += u[i] * a[i];
    return s;
}

/// content(a) = max{k : a in kN}, the gcd of the coordinates. a must be nonzero.
template <class Tag>
Integer content(const IntVec<Tag>& a) {
    if (a.is_zero()) throw InputError("content: zero vector");
    Integer g = 0;
    for (std::size_t i = 0; i < a.rank(); ++i) g = gcd(g, abs(a[i]));
    return g;
}

template <class Tag>
IntVec<Tag> primitive_part(const IntVec<Tag>& a) {
    Integer g = content(a);
    IntVec<Tag> r = a;
    for (std::size_t i = 0; i < a.rank(); ++i) r[i] /= g;
    return r;
}

/// Rank over Q of a list of integer rows, by fraction-free elimination.
inline std::size_t matrix_rank(std::vector<std::vector<Integer>> rows) {
    if (rows.empty()) return 0;
    std::size_t cols = rows[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            if (rows[r][col] == 0) continue;
            Integer a = rows[rank][col], b = rows[r][col];
            for (std::size_t k = col; k < cols; ++k) rows[r][k] = rows[r][k] * a - rows[rank][k] * b;
        }
        ++rank;
    }
    return rank;
}

/// True iff the vectors are linearly independent over Q.
template <class Tag>
bool is_independent(const std::vector<IntVec<Tag>>& vs) {
    if (vs.empty()) return true;
    std::vector<std::vector<Integer>> rows;
    rows.reserve(vs.size());
    for (const auto& v : vs) {
        if (v.rank() != vs[0].rank()) throw InputError("is_independent: rank mismatch");
        rows.push_back(v.coords());
    }
    return matrix_rank(std::move(rows)) == vs.size();
}

/// Determinant of a square integer matrix (Bareiss, exact).
inline Integer determinant(std::vector<std::vector<Integer>> m) {
    std::size_t n = m.size();
    if (n == 0) return 1;
    Integer sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

/// Normal of the hyperplane spanned by n-1 rows in rank n: the generalized
/// cross product with coordinates given by (n-1)-minors, primitive, or the
/// zero vector when the rows do not span a hyperplane.
inline std::vector<Integer> hyperplane_normal(const std::vector<std::vector<Integer>>& rows,
                                              std::size_t n) {
    std::vector<Integer> normal(n, 0);
    for (std::size_t skip = 0; skip < n; ++skip) {
        std::vector<std::vector<Integer>> minor;
        minor.reserve(rows.size());
        for (const auto& r : rows) {
            std::vector<Integer> mr;
            mr.reserve(n - 1);
            for (std::size_t j = 0; j < n; ++j)
                if (j != skip) mr.push_back(r[j]);
            minor.push_back(mr);
        }
        Integer d = determinant(std::move(minor));
        normal[skip] = (skip % 2 == 0) ? d : -d;
    }
    Integer g = 0;
    for (const auto& x : normal) g = gcd(g, abs(x));
    if (g > 1)
        for (auto& x : normal) x /= g;
    return normal;
}

} // namespace arcval
