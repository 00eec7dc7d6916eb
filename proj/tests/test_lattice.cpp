#include <gtest/gtest.h>

#include "arcval/lattice.hpp"
#include "arcval/numeric.hpp"

using namespace arcval;

namespace {

LatticeVector lat(std::vector<long long> v) {
    std::vector<Integer> c(v.begin(), v.end());
    return LatticeVector{std::move(c)};
}

DualVector dual(std::vector<long long> v) {
    std::vector<Integer> c(v.begin(), v.end());
    return DualVector{std::move(c)};
}

} // namespace

TEST(Pairing, BasicValues) {
    EXPECT_EQ(pairing(dual({1, 2}), lat({1, 0})), 1);
    EXPECT_EQ(pairing(dual({0, 0}), lat({7, -3})), 0);
    EXPECT_EQ(pairing(dual({1, 2}), lat({2, -1})), 0);
}

TEST(Pairing, RankMismatch) {
    EXPECT_THROW(pairing(dual({1, 2, 3}), lat({1, 0})), InputError);
}

TEST(Pairing, Bilinearity) {
    SplitMix64 rng(20240601);
    for (int round = 0; round < 200; ++round) {
        std::size_t n = 1 + static_cast<std::size_t>(rng.uniform(0, 3));
        std::vector<Integer> u(n), v(n), a(n), b(n);
        for (std::size_t i = 0; i < n; ++i) {
            u[i] = rng.uniform(-20, 20);
            v[i] = rng.uniform(-20, 20);
            a[i] = rng.uniform(-20, 20);
            b[i] = rng.uniform(-20, 20);
        }
        Integer s = rng.uniform(-5, 5), t = rng.uniform(-5, 5);
        DualVector du{u}, dv{v};
        LatticeVector la{a}, lb{b};
        EXPECT_EQ(pairing(DualVector{(s * du + t * dv).coords()}, la),
                  s * pairing(du, la) + t * pairing(dv, la));
        EXPECT_EQ(pairing(du, s * la + t * lb),
                  s * pairing(du, la) + t * pairing(du, lb));
    }
}

TEST(Content, Values) {
    EXPECT_EQ(content(lat({2, 4})), 2);
    EXPECT_EQ(content(lat({1, 0})), 1);
    EXPECT_EQ(content(lat({6, 10, 15})), 1);
    EXPECT_EQ(content(lat({-4, 6})), 2);
}

TEST(Content, ZeroVectorRejected) {
    EXPECT_THROW(content(lat({0, 0})), InputError);
}

TEST(Content, Homogeneity) {
    SplitMix64 rng(7);
    for (int round = 0; round < 200; ++round) {
        std::size_t n = 1 + static_cast<std::size_t>(rng.uniform(0, 3));
        std::vector<Integer> a(n);
        bool zero = true;
        for (auto& x : a) {
            x = rng.uniform(-9, 9);
            if (x != 0) zero = false;
        }
        if (zero) a[0] = 1;
        Integer k = rng.uniform(1, 12);
        EXPECT_EQ(content(k * LatticeVector{a}), k * content(LatticeVector{a}));
    }
}

TEST(Independence, Basics) {
    EXPECT_TRUE(is_independent<MTag>({dual({1, 0}), dual({0, 1})}));
    EXPECT_FALSE(is_independent<MTag>({dual({1, 1}), dual({2, 2})}));
    EXPECT_FALSE(is_independent<MTag>({dual({1, 0}), dual({1, 1}), dual({1, 2})}));
    EXPECT_TRUE(is_independent<MTag>({}));
    EXPECT_FALSE(is_independent<MTag>({dual({0, 0})}));
}

TEST(Determinant, SmallCases) {
    EXPECT_EQ(determinant({{Integer(1), Integer(2)}, {Integer(3), Integer(4)}}), -2);
    EXPECT_EQ(determinant({{Integer(0), Integer(1)}, {Integer(1), Integer(0)}}), -1);
    EXPECT_EQ(determinant({{Integer(2)}}), 2);
    EXPECT_EQ(determinant({{Integer(1), Integer(1)}, {Integer(2), Integer(2)}}), 0);
}

TEST(HyperplaneNormal, CrossProduct) {
    auto n = hyperplane_normal({{Integer(0), Integer(1), Integer(0)},
                                {Integer(0), Integer(0), Integer(1)}},
                               3);
    EXPECT_EQ(n, (std::vector<Integer>{1, 0, 0}));
    auto z = hyperplane_normal({{Integer(1), Integer(1), Integer(0)},
                                {Integer(2), Integer(2), Integer(0)}},
                               3);
    EXPECT_EQ(z, (std::vector<Integer>(3, 0)));
}

TEST(Rationals, Parsing) {
    EXPECT_EQ(parse_rational("3/4"), Rational(3, 4));
    EXPECT_EQ(parse_rational("-7"), Rational(-7));
    EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
    EXPECT_THROW(parse_rational("1/0"), InputError);
    EXPECT_THROW(parse_rational("x"), InputError);
    EXPECT_THROW(parse_rational(""), InputError);
    EXPECT_EQ(rational_to_string(Rational(-3, 6)), "-1/2");
    EXPECT_EQ(rational_to_string(Rational(8, 4)), "2");
}
