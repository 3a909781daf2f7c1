#include <gtest/gtest.h>

#include <random>
#include <set>

#include <finitop/subset_mask.hpp>

using finitop::SubsetMask;

TEST(SubsetMask, ComplementIsAnInvolution)
{
    for (unsigned n = 1; n <= 6; ++n)
        finitop::for_each_subset(n, [&](SubsetMask a) {
            EXPECT_EQ(a.complement(n).complement(n), a);
            EXPECT_TRUE(a.complement(n).subset_of(SubsetMask::full(n)));
            EXPECT_FALSE(a.meets(a.complement(n)));
        });
}

TEST(SubsetMask, SetAlgebra)
{
    const SubsetMask a(0b0110), b(0b0011);
    EXPECT_EQ((a | b).bits(), 0b0111u);
    EXPECT_EQ((a & b).bits(), 0b0010u);
    EXPECT_EQ((a - b).bits(), 0b0100u);
    EXPECT_TRUE(SubsetMask(0b0010).subset_of(a));
    EXPECT_EQ(a.count(), 2);
    EXPECT_EQ(a.first(), 1);
    EXPECT_EQ(SubsetMask().first(), -1);
    EXPECT_EQ(a.points(), (std::vector<unsigned>{1, 2}));
    EXPECT_EQ(a.with(0).without(2).bits(), 0b0011u);
}

TEST(SubsetMask, SubsetsComeInNumericOrder)
{
    std::vector<SubsetMask> seen;
    finitop::for_each_subset(4, [&](SubsetMask a) { seen.push_back(a); });
    ASSERT_EQ(seen.size(), 16u);
    for (std::size_t i = 0; i < seen.size(); ++i)
        EXPECT_EQ(seen[i].bits(), i);
    std::sort(seen.begin(), seen.end(), finitop::CanonicalOrder{});
    EXPECT_EQ(seen.front(), SubsetMask());
    EXPECT_EQ(seen.back(), SubsetMask::full(4));
    for (std::size_t i = 1; i < seen.size(); ++i)
        EXPECT_LE(seen[i - 1].count(), seen[i].count());
    EXPECT_EQ(seen[1], SubsetMask(0b0001));
    EXPECT_EQ(seen[5], SubsetMask(0b0011));
}

TEST(SubsetMask, SubmasksAreExactlyTheSubsets)
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const SubsetMask m(rng() & 0xFFu);
        std::set<std::uint32_t> got;
        finitop::for_each_submask(m, [&](SubsetMask s) {
            EXPECT_TRUE(s.subset_of(m));
            got.insert(s.bits());
        });
        EXPECT_EQ(got.size(), std::size_t{1} << m.count());
    }
}
