#include <gtest/gtest.h>

#include <algorithm>
#include <vector>

#include <permprod/kset.hpp>

#include "test_support.hpp"

using namespace permprod;

TEST(KSet, StoresMembersSorted) {
    const auto s = parse_kset("(312, 123, 231)");
    EXPECT_EQ(to_string(s), "(123, 231, 312)");
    EXPECT_EQ(s.n(), 3u);
    EXPECT_EQ(s.k(), 3u);
    EXPECT_THROW(parse_kset("12, 123"), error);
}

TEST(EvaluateV, TableValues) {
    EXPECT_EQ(evaluate_v(parse_kset("123, 231, 312")), 18u);
    EXPECT_EQ(evaluate_v(parse_kset("123, 123, 123")), 36u);
    EXPECT_EQ(evaluate_v(parse_kset("12, 21")), 4u);
    for (std::size_t k = 1; k <= 20; ++k)
        EXPECT_EQ(evaluate_v(KSet(std::vector<Permutation>(k, Permutation::identity(1)))), 1u);
}

TEST(EvaluateV, RejectsOutOfRangeInstances) {
    // 15^33 > 2^127
    const KSet big(std::vector<Permutation>(32, Permutation::identity(15)));
    EXPECT_THROW(evaluate_v(big), error);
    const KSet ok(std::vector<Permutation>(31, Permutation::identity(15)));
    EXPECT_EQ(evaluate_v(ok), support::direct_v(ok));
}

TEST(EvaluateV, InvariantUnderReorderingAndSimultaneousComposition) {
    for (int trial = 0; trial < 2000; ++trial) {
        const auto n = support::uniform(1, 6);
        const auto k = support::uniform(1, 5);
        const auto s = support::random_kset(n, k);
        const auto v = evaluate_v(s);
        ASSERT_EQ(v, support::direct_v(s));
        const auto sigma = support::random_permutation(n);
        std::vector<Permutation> moved;
        for (const auto& p : s.perms()) moved.push_back(p.compose(sigma));
        std::shuffle(moved.begin(), moved.end(), support::rng());
        ASSERT_EQ(evaluate_v(KSet(moved)), v);
    }
}

TEST(ProductVector, PositionWiseProducts) {
    const std::vector<Permutation> a{parse_permutation("123"), parse_permutation("231")};
    EXPECT_EQ(product_vector(a, 3), ProductVector({2, 6, 3}));
    EXPECT_EQ(product_vector({}, 3), ProductVector({1, 1, 1}));
    const std::vector<Permutation> b{parse_permutation("1234"), parse_permutation("2143")};
    EXPECT_EQ(product_vector(b, 4), ProductVector({2, 2, 12, 12}));
    EXPECT_THROW(product_vector(a, 4), error);
    EXPECT_THROW(ProductVector({1, 0}), error);
}

TEST(BaseKey, ConcatenatedDigits) {
    EXPECT_EQ(base_key(parse_kset("123")), 27);
    EXPECT_EQ(base_key(parse_kset("12, 21")), 52);
    EXPECT_LT(base_key(parse_kset("123, 231, 312")), base_key(parse_kset("123, 312, 321")));
    // Digits beyond 128 bits: 35 members of degree 3.
    const KSet wide(std::vector<Permutation>(35, parse_permutation("321")));
    EXPECT_GT(base_key(wide), BigInt(1) << 200);
}

TEST(BaseKey, OrderMatchesKSetOrder) {
    for (int trial = 0; trial < 2000; ++trial) {
        const auto n = support::uniform(1, 6);
        const auto k = support::uniform(1, 5);
        const auto a = support::random_kset(n, k);
        const auto b = support::random_kset(n, k);
        ASSERT_EQ(a < b, base_key(a) < base_key(b));
        ASSERT_EQ(a == b, base_key(a) == base_key(b));
    }
}
