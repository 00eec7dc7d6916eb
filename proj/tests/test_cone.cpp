#include <gtest/gtest.h>

#include <map>
#include <set>

#include "arcval/catalog.hpp"
#include "arcval/cone.hpp"

using namespace arcval;

namespace {

LatticeVector lat(std::vector<long long> v) {
    return LatticeVector{std::vector<Integer>(v.begin(), v.end())};
}

DualVector dual(std::vector<long long> v) {
    return DualVector{std::vector<Integer>(v.begin(), v.end())};
}

std::set<std::vector<Integer>> ray_set(const std::vector<DualVector>& rays) {
    std::set<std::vector<Integer>> s;
    for (const auto& r : rays) s.insert(r.coords());
    return s;
}

std::set<std::vector<Integer>> ray_set(const std::vector<LatticeVector>& rays) {
    std::set<std::vector<Integer>> s;
    for (const auto& r : rays) s.insert(r.coords());
    return s;
}

// test cones used across the suite
std::vector<Cone> test_cones() {
    return {
        catalog::quadrant_cone(1),
        catalog::quadrant_cone(2),
        catalog::quadrant_cone(3),
        catalog::cyclic_quotient_cone(2),
        catalog::cyclic_quotient_cone(3),
        Cone(2, {lat({0, 1}), lat({1, 2})}),
        Cone(2, {lat({2, 1}), lat({1, 3})}),
        Cone(3, {lat({1, 0, 0}), lat({0, 1, 0}), lat({1, 1, 2})}),
    };
}

// Brute-force Hilbert basis oracle: enumerate semigroup points with
// |coordinates| <= bound, strip the ones that split as a sum of two nonzero
// semigroup points in the box, and check that what is left generates every
// boxed point.
std::set<std::vector<Integer>> bruteforce_hilbert(const Cone& c, long long bound) {
    std::size_t n = c.rank();
    std::vector<std::vector<Integer>> points;
    std::vector<Integer> pt(n);
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == n) {
            DualVector u{pt};
            if (!u.is_zero() && c.dual_contains(u)) points.push_back(pt);
            return;
        }
        for (long long v = -bound; v <= bound; ++v) {
            pt[i] = v;
            self(self, i + 1);
        }
    };
    rec(rec, 0);

    std::set<std::vector<Integer>> point_set(points.begin(), points.end());
    std::set<std::vector<Integer>> irreducible;
    for (const auto& x : points) {
        bool red = false;
        for (const auto& y : points) {
            std::vector<Integer> z(n);
            bool zero = true, in_box = true;
            for (std::size_t i = 0; i < n; ++i) {
                z[i] = x[i] - y[i];
                if (z[i] != 0) zero = false;
                if (abs(z[i]) > bound) in_box = false;
            }
            if (zero || !in_box) continue;
            if (point_set.count(z)) {
                red = true;
                break;
            }
        }
        if (!red) irreducible.insert(x);
    }
    return irreducible;
}

// nonnegative integer combination test, for the generation half of the oracle
bool generated_by(const Cone& c, const std::vector<Integer>& target,
                  const std::set<std::vector<Integer>>& gens) {
    // strictly positive functional on the dual cone: sum of the primal rays
    std::vector<Integer> interior(c.rank(), 0);
    for (const auto& r : c.rays())
        for (std::size_t i = 0; i < c.rank(); ++i) interior[i] += r[i];
    auto measure = [&](const std::vector<Integer>& v) {
        Integer s = 0;
        for (std::size_t i = 0; i < v.size(); ++i) s += v[i] * interior[i];
        return s;
    };
    std::map<std::vector<Integer>, bool> memo;
    auto rec = [&](auto&& self, const std::vector<Integer>& v) -> bool {
        bool zero = true;
        for (const auto& x : v)
            if (x != 0) zero = false;
        if (zero) return true;
        auto it = memo.find(v);
        if (it != memo.end()) return it->second;
        bool ok = false;
        for (const auto& g : gens) {
            std::vector<Integer> rest(v.size());
            for (std::size_t i = 0; i < v.size(); ++i) rest[i] = v[i] - g[i];
            DualVector u{rest};
            if (!c.dual_contains(u)) continue;
            if (!u.is_zero() && measure(rest) >= measure(v)) continue;
            if (self(self, rest)) {
                ok = true;
                break;
            }
        }
        memo[v] = ok;
        return ok;
    };
    return rec(rec, target);
}

} // namespace

TEST(DualCone, SelfDualQuadrant) {
    Cone q = catalog::quadrant_cone(2);
    EXPECT_EQ(ray_set(q.dual_rays()),
              (std::set<std::vector<Integer>>{{Integer(1), Integer(0)},
                                              {Integer(0), Integer(1)}}));
}

TEST(DualCone, CyclicQuotient) {
    // frozen from the 2D oracle: both pairings >= 0 and each ray tight on a facet
    Cone c = catalog::cyclic_quotient_cone(2);
    EXPECT_EQ(ray_set(c.dual_rays()),
              (std::set<std::vector<Integer>>{{Integer(1), Integer(0)},
                                              {Integer(1), Integer(2)}}));
    for (const auto& u : c.dual_rays())
        for (const auto& r : c.rays()) EXPECT_GE(pairing(u, r), 0);
}

TEST(DualCone, RankMismatchRejected) {
    EXPECT_THROW(Cone(2, {lat({1, 0}), lat({0, 1, 0})}), InputError);
}

TEST(DualCone, NonFullDimensionalRejected) {
    EXPECT_THROW(Cone(2, {lat({1, 0})}), CapabilityError);
    EXPECT_THROW(Cone(3, {lat({1, 0, 0}), lat({0, 1, 0})}), CapabilityError);
}

TEST(DualCone, NonPointedRejected) {
    EXPECT_THROW(Cone(2, {lat({1, 0}), lat({-1, 0}), lat({0, 1})}), CapabilityError);
    EXPECT_THROW(Cone(1, {lat({1}), lat({-1})}), CapabilityError);
}

TEST(DualCone, RedundantRaysIgnored) {
    Cone c(2, {lat({1, 0}), lat({1, 1}), lat({0, 1})});
    EXPECT_EQ(ray_set(c.dual_rays()),
              ray_set(catalog::quadrant_cone(2).dual_rays()));
}

TEST(DualCone, DualityInvolution) {
    // every test cone is given by its primitive extreme rays, so the double
    // dual must reproduce the input ray set exactly
    for (const auto& c : test_cones()) {
        Cone dd = dual_cone(dual_cone(c));
        EXPECT_EQ(ray_set(dd.rays()), ray_set(c.rays()));
        for (const auto& r : c.rays()) EXPECT_TRUE(dd.contains(r));
    }
    // with redundant and non-primitive input rays the double dual recovers
    // the primitive extreme rays
    Cone fat(2, {lat({2, 0}), lat({1, 1}), lat({0, 3})});
    EXPECT_EQ(ray_set(dual_cone(dual_cone(fat)).rays()),
              (std::set<std::vector<Integer>>{{Integer(1), Integer(0)},
                                              {Integer(0), Integer(1)}}));
}

TEST(DualCone, RankOne) {
    Cone c(1, {lat({3})});
    EXPECT_EQ(ray_set(c.dual_rays()), (std::set<std::vector<Integer>>{{Integer(1)}}));
    Cone neg(1, {lat({-2})});
    EXPECT_EQ(ray_set(neg.dual_rays()), (std::set<std::vector<Integer>>{{Integer(-1)}}));
}

TEST(HilbertBasis, FreeQuadrant) {
    SemigroupBasis b = hilbert_basis(catalog::quadrant_cone(2));
    ASSERT_EQ(b.elements.size(), 2u);
    EXPECT_EQ(b.elements[0], dual({0, 1}));
    EXPECT_EQ(b.elements[1], dual({1, 0}));
}

TEST(HilbertBasis, CyclicQuotientTwo) {
    SemigroupBasis b = hilbert_basis(catalog::cyclic_quotient_cone(2));
    ASSERT_EQ(b.elements.size(), 3u);
    EXPECT_EQ(b.elements[0], dual({1, 0}));
    EXPECT_EQ(b.elements[1], dual({1, 1}));
    EXPECT_EQ(b.elements[2], dual({1, 2}));
}

TEST(HilbertBasis, CyclicQuotientThree) {
    SemigroupBasis b = hilbert_basis(catalog::cyclic_quotient_cone(3));
    ASSERT_EQ(b.elements.size(), 4u);
    EXPECT_EQ(b.elements[0], dual({1, 0}));
    EXPECT_EQ(b.elements[1], dual({1, 1}));
    EXPECT_EQ(b.elements[2], dual({1, 2}));
    EXPECT_EQ(b.elements[3], dual({1, 3}));
}

TEST(HilbertBasis, MatchesBruteforceOracle) {
    for (const auto& c : test_cones()) {
        if (c.rank() > 3) continue;
        SemigroupBasis b = hilbert_basis(c);
        long long bound = 6;
        for (const auto& u : b.elements)
            for (std::size_t i = 0; i < c.rank(); ++i)
                ASSERT_LE(abs(u[i]), bound) << "raise the oracle bound";
        auto oracle = bruteforce_hilbert(c, bound);
        // oracle irreducibles within the box must be exactly the basis
        std::set<std::vector<Integer>> computed;
        for (const auto& u : b.elements) computed.insert(u.coords());
        EXPECT_EQ(computed, oracle) << "cone with " << c.rays().size() << " rays";
    }
}

TEST(HilbertBasis, GenerationUpToBound) {
    for (const auto& c : test_cones()) {
        if (c.rank() > 3) continue;
        SemigroupBasis b = hilbert_basis(c);
        std::set<std::vector<Integer>> gens;
        Integer maxc = 0;
        for (const auto& u : b.elements) {
            gens.insert(u.coords());
            for (std::size_t i = 0; i < c.rank(); ++i)
                if (abs(u[i]) > maxc) maxc = abs(u[i]);
        }
        long long bound = static_cast<long long>(3 * maxc);
        std::size_t n = c.rank();
        std::vector<Integer> pt(n);
        auto rec = [&](auto&& self, std::size_t i) -> void {
            if (i == n) {
                DualVector u{pt};
                if (!c.dual_contains(u)) return;
                EXPECT_TRUE(generated_by(c, pt, gens)) << "point " << u.str();
                return;
            }
            for (long long v = -bound; v <= bound; ++v) {
                pt[i] = v;
                self(self, i + 1);
            }
        };
        if (n <= 2) rec(rec, 0); // the 3D sweep is covered by the oracle test
    }
}

TEST(HilbertBasis, Minimality) {
    for (const auto& c : test_cones()) {
        if (c.rank() > 2) continue;
        SemigroupBasis b = hilbert_basis(c);
        Integer maxc = 0;
        for (const auto& u : b.elements)
            for (std::size_t i = 0; i < c.rank(); ++i)
                if (abs(u[i]) > maxc) maxc = abs(u[i]);
        for (std::size_t drop = 0; drop < b.elements.size(); ++drop) {
            std::set<std::vector<Integer>> gens;
            for (std::size_t i = 0; i < b.elements.size(); ++i)
                if (i != drop) gens.insert(b.elements[i].coords());
            // the dropped element itself must no longer be generated
            EXPECT_FALSE(generated_by(c, b.elements[drop].coords(), gens))
                << "basis element " << b.elements[drop].str() << " is redundant";
        }
    }
}

TEST(HilbertBasis, RankCapability) {
    std::vector<LatticeVector> rays;
    for (std::size_t i = 0; i < 5; ++i) {
        std::vector<Integer> e(5, 0);
        e[i] = 1;
        rays.emplace_back(std::move(e));
    }
    Cone c(5, std::move(rays));
    EXPECT_THROW(hilbert_basis(c), CapabilityError);
}

TEST(RelintContains, QuadrantExamples) {
    Cone q = catalog::quadrant_cone(2);
    EXPECT_TRUE(q.relint_contains(lat({1, 1})));
    EXPECT_FALSE(q.relint_contains(lat({1, 0})));
    EXPECT_FALSE(q.relint_contains(lat({0, 0})));
}

TEST(RelintContains, CyclicQuotient) {
    Cone c = catalog::cyclic_quotient_cone(2);
    EXPECT_TRUE(c.relint_contains(lat({1, 0})));
    // pairings against the Hilbert basis are the defining test
    SemigroupBasis b = hilbert_basis(c);
    for (const auto& u : b.elements) EXPECT_GT(pairing(u, lat({1, 0})), 0);
    EXPECT_FALSE(c.relint_contains(lat({0, 1})));  // lies on a face
    EXPECT_FALSE(c.relint_contains(lat({2, -1}))); // a ray
}

TEST(RelintContains, AgreesWithHilbertCharacterization) {
    SplitMix64 rng(99);
    for (const auto& c : test_cones()) {
        if (c.rank() > 3) continue;
        SemigroupBasis b = hilbert_basis(c);
        for (int round = 0; round < 40; ++round) {
            std::vector<Integer> a(c.rank());
            bool zero = true;
            for (auto& x : a) {
                x = rng.uniform(-4, 4);
                if (x != 0) zero = false;
            }
            if (zero) continue;
            LatticeVector p{a};
            bool via_basis = true;
            for (const auto& u : b.elements)
                if (pairing(u, p) <= 0) via_basis = false;
            EXPECT_EQ(c.relint_contains(p), via_basis);
        }
    }
}
