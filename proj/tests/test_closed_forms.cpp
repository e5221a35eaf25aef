#include <gtest/gtest.h>

#include <vector>

#include <permprod/closed_forms.hpp>
#include <permprod/kset.hpp>

using namespace permprod;

TEST(ClosedForms, VMax) {
    EXPECT_EQ(vmax(3, 3), 36u);
    EXPECT_EQ(vmax(4, 2), 30u);
    for (std::size_t k = 1; k <= 40; ++k) EXPECT_EQ(vmax(2, k), 1 + (u128{1} << k));
    for (std::size_t n = 1; n <= 15; ++n)
        for (std::size_t k = 1; k <= 15; ++k)
            ASSERT_EQ(vmax(n, k), evaluate_v(KSet(std::vector<Permutation>(k, Permutation::identity(n)))));
}

TEST(ClosedForms, VMin) {
    EXPECT_EQ(vmin_closed(2, 4), (ClosedFormAnswer{8, ClosedFormSource::N2Even}));
    EXPECT_EQ(vmin_closed(2, 5), (ClosedFormAnswer{12, ClosedFormSource::N2Odd}));
    EXPECT_EQ(vmin_closed(5, 2), (ClosedFormAnswer{35, ClosedFormSource::K2Triangular}));
    EXPECT_EQ(vmin_closed(1, 9), (ClosedFormAnswer{1, ClosedFormSource::N1}));
    EXPECT_EQ(vmin_closed(15, 1), (ClosedFormAnswer{120, ClosedFormSource::K1}));
    EXPECT_EQ(vmin_closed(15, 2)->value, 680u);
    EXPECT_EQ(vmin_closed(2, 14)->value, 256u);
    EXPECT_EQ(vmin_closed(2, 15)->value, 384u);
    EXPECT_FALSE(vmin_closed(3, 3).has_value());
    EXPECT_THROW(vmin_closed(0, 3), error);
}

TEST(ClosedForms, TwoPermutationSplits) {
    const auto id = Permutation::identity(2);
    const auto rev = parse_permutation("21");
    for (std::size_t k = 2; k <= 30; ++k) {
        const std::size_t m = k / 2;
        std::vector<Permutation> perms(m, id);
        perms.insert(perms.end(), k - m, rev);
        ASSERT_EQ(evaluate_v(KSet(perms)), vmin_closed(2, k)->value) << k;
    }
}

TEST(ClosedForms, Counts) {
    EXPECT_EQ(nmin_trivial(2, 9), 1u);
    EXPECT_EQ(nmin_trivial(9, 2), 1u);
    EXPECT_FALSE(nmin_trivial(3, 6).has_value());
    EXPECT_EQ(nmax(3, 3), 1u);
    EXPECT_EQ(nmax(1, 1), 1u);
    EXPECT_EQ(nmax(15, 15), 1u);
}
