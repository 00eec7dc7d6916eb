#include <gtest/gtest.h>

#include "arcval/series.hpp"

using namespace arcval;

namespace {

TruncatedSeries ts(std::vector<long long> c, int t) {
    std::vector<Rational> r(c.begin(), c.end());
    return TruncatedSeries(std::move(r), t);
}

} // namespace

TEST(Series, OrderQueries) {
    EXPECT_EQ(ts({0, 0, 3, 1}, 5).order(), OrderBound::known_order(2));
    EXPECT_EQ(ts({7}, 3).order(), OrderBound::known_order(0));
    EXPECT_EQ(ts({0, 0, 0}, 2).order(), OrderBound::at_least(3));
}

TEST(Series, ArithmeticCarriesMinimumTruncation) {
    TruncatedSeries a = ts({1, 2, 3, 4, 5}, 4);
    TruncatedSeries b = ts({0, 1, 1}, 2);
    EXPECT_EQ((a + b).truncation(), 2);
    EXPECT_EQ((a * b).truncation(), 2);
    TruncatedSeries p = a * b;
    // (1 + 2t + 3t^2)(t + t^2) = t + 3t^2 + ...
    EXPECT_EQ(p.coeff(0), 0);
    EXPECT_EQ(p.coeff(1), 1);
    EXPECT_EQ(p.coeff(2), 3);
}

TEST(Series, ProductOrderAdds) {
    TruncatedSeries a = ts({0, 0, 1}, 8); // t^2
    TruncatedSeries b = ts({0, 5}, 8);    // 5t
    EXPECT_EQ((a * b).order(), OrderBound::known_order(3));
}

TEST(Series, CancellationStaysSound) {
    TruncatedSeries a = ts({1, 1}, 4);
    TruncatedSeries b = ts({1, 0}, 4);
    TruncatedSeries d = a - a;
    EXPECT_EQ(d.order(), OrderBound::at_least(5));
    EXPECT_EQ((a - b).order(), OrderBound::known_order(1));
}

TEST(Series, InverseOfUnit) {
    TruncatedSeries a = ts({2, 1, -3}, 6);
    TruncatedSeries prod = a * a.inverse();
    EXPECT_EQ(prod.coeff(0), 1);
    for (int k = 1; k <= 6; ++k) EXPECT_EQ(prod.coeff(k), 0);
    EXPECT_THROW(ts({0, 1}, 3).inverse(), InputError);
}

TEST(Series, PowMatchesRepeatedProduct) {
    TruncatedSeries a = ts({1, 1}, 10);
    TruncatedSeries cube = a * a * a;
    EXPECT_EQ(a.pow(3).coeffs(), cube.coeffs());
    EXPECT_EQ(a.pow(0).coeff(0), 1);
}

TEST(Series, TruncationSoundness) {
    // recomputing with a larger window never changes a Known answer
    TruncatedSeries small = ts({0, 0, 0, 4}, 3);
    TruncatedSeries large = ts({0, 0, 0, 4, 9, 9, 9}, 6);
    ASSERT_TRUE(small.order().is_known());
    EXPECT_EQ(small.order(), large.order());
}
