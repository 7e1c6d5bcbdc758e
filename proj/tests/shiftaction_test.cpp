#include <gtest/gtest.h>

#include "ellmf/error.hpp"
#include "ellmf/shiftaction.hpp"

using namespace ellmf;

TEST(ShiftMatrix, Examples) {
    EXPECT_EQ(shift_rd({1, 0}, 1), (RDPair{-1, 2}));
    EXPECT_EQ(determinant(shift_matrix()), 1);
    const IntMatrix2 m2 = multiply(shift_matrix(), shift_matrix());
    EXPECT_EQ(m2, (IntMatrix2{{{-1, 0}, {0, -1}}}));
    EXPECT_EQ(multiply(m2, m2), (IntMatrix2{{{1, 0}, {0, 1}}}));
}

TEST(ShiftMatrix, OrderFourAndInverse) {
    for (std::int64_t r = -20; r <= 20; ++r)
        for (std::int64_t d = -20; d <= 20; ++d) {
            const RDPair p{r, d};
            EXPECT_EQ(shift_rd(p, 4), p);
            EXPECT_EQ(shift_rd(p, 2), (RDPair{-r, -d}));
            for (int k = -5; k <= 5; ++k) EXPECT_EQ(shift_rd(shift_rd(p, k), -k), p);
        }
}

TEST(Region, Examples) {
    EXPECT_EQ(region({0, 1}), Region::R1);
    EXPECT_EQ(region({1, -2}), Region::Outside);
    EXPECT_EQ(region({3, -7}), Region::R3);
    EXPECT_EQ(region({2, 0}), Region::R2);
    EXPECT_EQ(region({0, 0}), Region::Outside);
    EXPECT_EQ(region({0, -1}), Region::Outside);
}

TEST(Region, StableUnderPositiveScaling) {
    for (std::int64_t r = -10; r <= 10; ++r)
        for (std::int64_t d = -25; d <= 25; ++d)
            for (std::int64_t k = 2; k <= 4; ++k) EXPECT_EQ(region({r, d}), region({k * r, k * d}));
}

TEST(Reduce, Examples) {
    auto red = reduce_to_fundamental({1, 0});
    EXPECT_EQ(red.image, (RDPair{1, 0}));
    EXPECT_EQ(red.k, 0);
    red = reduce_to_fundamental({-1, 2});
    EXPECT_EQ(red.image, (RDPair{1, 0}));
    EXPECT_EQ(red.k, 3);
    red = reduce_to_fundamental({0, -1});
    EXPECT_EQ(red.image, (RDPair{0, 1}));
    EXPECT_EQ(red.k, 2);
    EXPECT_THROW(reduce_to_fundamental({0, 0}), DomainError);
}

TEST(Reduce, OrbitMeetsDomainOnce) {
    for (std::int64_t r = -60; r <= 60; ++r)
        for (std::int64_t d = -60; d <= 60; ++d) {
            if (r == 0 && d == 0) continue;
            int hits = 0;
            for (int k = 0; k < 4; ++k) hits += in_fundamental_domain(shift_rd({r, d}, k)) ? 1 : 0;
            ASSERT_EQ(hits, 1) << r << ',' << d;
            const auto red = reduce_to_fundamental({r, d});
            EXPECT_EQ(shift_rd({r, d}, red.k), red.image);
            EXPECT_GE(red.k, 0);
            EXPECT_LE(red.k, 3);
        }
}
