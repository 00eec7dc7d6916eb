#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "arcval/errors.hpp"
#include "arcval/lattice.hpp"

namespace arcval {

/// Full-dimensional pointed rational polyhedral cone in N, with the dual cone
/// cached as its list of primitive extreme rays in M. Immutable after
/// construction; construction rejects anything outside the supported class
/// (rays must span, and the cone must not contain a line).
class Cone {
public:
    Cone(std::size_t rank, std::vector<LatticeVector> rays)
        : rank_(rank), rays_(std::move(rays)) {
        if (rank_ < 1) throw InputError("cone: rank must be >= 1");
        if (rays_.empty()) throw InputError("cone: no rays");
        for (const auto& r : rays_) {
            if (r.rank() != rank_)
                throw InputError("cone: ray " + r.str() + " does not have rank " +
                                 std::to_string(rank_));
            if (r.is_zero()) throw InputError("cone: zero ray");
        }
        std::vector<std::vector<Integer>> rows;
        for (const auto& r : rays_) rows.push_back(r.coords());
        if (matrix_rank(rows) != rank_)
            throw CapabilityError("cone: rays do not span; only full-dimensional cones are supported");
        dual_rays_ = facet_normals();
        std::vector<std::vector<Integer>> drows;
        for (const auto& d : dual_rays_) drows.push_back(d.coords());
        if (matrix_rank(drows) != rank_)
            throw CapabilityError("cone: contains a line; only pointed cones are supported");
    }

    std::size_t rank() const { return rank_; }
    const std::vector<LatticeVector>& rays() const { return rays_; }
    const std::vector<DualVector>& dual_rays() const { return dual_rays_; }

    /// a in sigma: pairs >= 0 with every dual ray.
    bool contains(const LatticeVector& a) const {
        for (const auto& u : dual_rays_)
            if (pairing(u, a) < 0) return false;
        return true;
    }

    /// u in sigma-dual: pairs >= 0 with every ray.
    bool dual_contains(const DualVector& u) const {
        if (u.rank() != rank_) throw InputError("dual_contains: rank mismatch");
        for (const auto& r : rays_) {
            Integer s = 0;
            for (std::size_t i = 0; i < rank_; ++i) s += u[i] * r[i];
            if (s < 0) return false;
        }
        return true;
    }

    /// a in relint(sigma): pairs > 0 with every dual ray. For a pointed
    /// full-dimensional cone this is equivalent to pairing > 0 against every
    /// nonzero element of the Hilbert basis of the dual semigroup.
    bool relint_contains(const LatticeVector& a) const {
        if (a.rank() != rank_) throw InputError("relint_contains: rank mismatch");
        for (const auto& u : dual_rays_)
            if (pairing(u, a) <= 0) return false;
        return true;
    }

private:
    // Facet enumeration: every facet of cone(rays) is spanned by rays lying on
    // it, so its normal shows up as the kernel of a rank n-1 subset. Collect
    // the normals whose sign can be chosen nonnegative against all rays.
    std::vector<DualVector> facet_normals() const {
        std::set<std::vector<Integer>> found;
        std::vector<std::size_t> idx;
        enumerate_subsets(idx, 0, found);
        std::vector<DualVector> out;
        out.reserve(found.size());
        for (const auto& v : found) out.emplace_back(v);
        return out;
    }

    void enumerate_subsets(std::vector<std::size_t>& idx, std::size_t start,
                           std::set<std::vector<Integer>>& found) const {
        if (idx.size() == rank_ - 1) {
            std::vector<std::vector<Integer>> rows;
            for (auto i : idx) rows.push_back(rays_[i].coords());
            std::vector<Integer> nrm = hyperplane_normal(rows, rank_);
            bool zero = true;
            for (const auto& x : nrm)
                if (x != 0) zero = false;
            if (zero) return; // subset does not span a hyperplane
            for (int sign = 0; sign < 2; ++sign) {
                DualVector u{nrm};
                if (dual_contains(u)) {
                    found.insert(u.coords());
                    break;
                }
                for (auto& x : nrm) x = -x;
            }
            return;
        }
        for (std::size_t i = start; i < rays_.size(); ++i) {
            idx.push_back(i);
            enumerate_subsets(idx, i + 1, found);
            idx.pop_back();
        }
    }

    std::size_t rank_;
    std::vector<LatticeVector> rays_;
    std::vector<DualVector> dual_rays_;
};

/// The dual cone, realized as a Cone generated by the primitive facet normals
/// of c. Applying it twice recovers the primitive extreme rays of c.
inline Cone dual_cone(const Cone& c) {
    std::vector<LatticeVector> rays;
    rays.reserve(c.dual_rays().size());
    for (const auto& d : c.dual_rays()) rays.emplace_back(d.coords());
    return Cone(c.rank(), std::move(rays));
}

inline bool relint_contains(const Cone& c, const LatticeVector& a) {
    return c.relint_contains(a);
}

/// The Hilbert basis of the semigroup of lattice points of the dual cone,
/// deduplicated and lexicographically ordered.
struct SemigroupBasis {
    std::size_t rank = 0;
    std::vector<DualVector> elements;
};

namespace detail {

// Integer points of the half-open parallelepiped spanned by n independent
// integer vectors, by bounding-box enumeration plus an exact Cramer test of
// 0 <= lambda_j < 1.
inline void parallelepiped_points(const std::vector<DualVector>& gens, std::size_t n,
                                  std::set<std::vector<Integer>>& out, std::size_t cap) {
    std::vector<std::vector<Integer>> mat(n, std::vector<Integer>(n));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) mat[i][j] = gens[j][i];
    Integer det = determinant(mat);
    if (det == 0) throw InternalError("parallelepiped: generators not independent");

    std::vector<Integer> lo(n, 0), hi(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (gens[j][i] > 0) hi[i] += gens[j][i];
            if (gens[j][i] < 0) lo[i] += gens[j][i];
        }
    }
    Integer volume = 1;
    for (std::size_t i = 0; i < n; ++i) volume *= hi[i] - lo[i] + 1;
    if (volume > Integer(cap) * 64)
        throw CapabilityError("hilbert basis: parallelepiped enumeration too large (" +
                              volume.str() + " box points)");

    // Cramer: lambda_j = det(mat with column j replaced by x) / det.
    std::vector<Integer> x(n);
    auto accept = [&](const std::vector<Integer>& pt) {
        for (std::size_t j = 0; j < n; ++j) {
            auto m = mat;
            for (std::size_t i = 0; i < n; ++i) m[i][j] = pt[i];
            Integer num = determinant(m);
            // require 0 <= num/det < 1 with the sign of det handled exactly
            if (det > 0) {
                if (num < 0 || num >= det) return false;
            } else {
                if (num > 0 || num <= det) return false;
            }
        }
        return true;
    };
    std::vector<Integer> pt(n);
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == n) {
            if (accept(pt)) out.insert(pt);
            return;
        }
        for (Integer v = lo[i]; v <= hi[i]; ++v) {
            pt[i] = v;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
}

} // namespace detail

/// Unique minimal generating set of the semigroup (dual cone) cap M.
/// Enumerates lattice points of the fundamental parallelepipeds of the
/// independent n-subsets of the dual rays (those cones cover the dual cone),
/// then filters the irreducible elements. Supported for rank <= 4; the basis
/// size is capped and overflow fails loudly.
inline SemigroupBasis hilbert_basis(const Cone& c, std::size_t cap = 10000) {
    std::size_t n = c.rank();
    if (n > 4)
        throw CapabilityError("hilbert basis: rank " + std::to_string(n) +
                              " exceeds the supported limit of 4");
    const auto& dual = c.dual_rays();

    std::set<std::vector<Integer>> candidates;
    for (const auto& d : dual) candidates.insert(d.coords());

    std::vector<std::size_t> idx;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (idx.size() == n) {
            std::vector<DualVector> sub;
            for (auto i : idx) sub.push_back(dual[i]);
            if (is_independent(sub)) detail::parallelepiped_points(sub, n, candidates, cap);
            return;
        }
        for (std::size_t i = start; i < dual.size(); ++i) {
            idx.push_back(i);
            self(self, i + 1);
            idx.pop_back();
        }
    };
    rec(rec, 0);

    candidates.erase(std::vector<Integer>(n, 0));
    if (candidates.size() > cap)
        throw CapabilityError("hilbert basis: generating set exceeds cap of " +
                              std::to_string(cap));

    // x is reducible iff x - g lands back in the semigroup for some nonzero
    // candidate g != x; candidates generate, so testing g among them suffices.
    auto in_semigroup = [&](const std::vector<Integer>& v) {
        DualVector u{v};
        return c.dual_contains(u);
    };
    SemigroupBasis basis;
    basis.rank = n;
    for (const auto& x : candidates) {
        bool reducible = false;
        for (const auto& g : candidates) {
            if (g == x) continue;
            std::vector<Integer> rest(n);
            bool rest_zero = true;
            for (std::size_t i = 0; i < n; ++i) {
                rest[i] = x[i] - g[i];
                if (rest[i] != 0) rest_zero = false;
            }
            if (!rest_zero && in_semigroup(rest)) {
                reducible = true;
                break;
            }
        }
        if (!reducible) basis.elements.emplace_back(x);
    }
    std::sort(basis.elements.begin(), basis.elements.end());
    return basis;
}

} // namespace arcval
