#include <gtest/gtest.h>

#include <random>
#include <set>

#include <finitop.hpp>

#include "oracles.hpp"

using namespace finitop;

namespace {

std::vector<std::uint32_t> bits_of(const FinSpace& s)
{
    std::vector<std::uint32_t> out;
    for (auto u : s.opens())
        out.push_back(u.bits());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST(Topologies, LabeledCounts)
{
    const std::size_t expected[] = {0, 1, 4, 29, 355, 6942};
    for (unsigned n = 1; n <= 4; ++n)
        EXPECT_EQ(enumerate_topologies(n).size(), expected[n]) << n;
}

TEST(Topologies, LabeledCountAtFive)
{
    EXPECT_EQ(enumerate_topologies(5).size(), 6942u);
}

TEST(Topologies, UnlabeledCounts)
{
    const std::size_t expected[] = {0, 1, 3, 9, 33};
    for (unsigned n = 1; n <= 4; ++n)
        EXPECT_EQ(enumerate_topologies(n, true).size(), expected[n]) << n;
}

TEST(Topologies, MatchBruteForceOverFamilies)
{
    for (unsigned n = 1; n <= 3; ++n) {
        std::set<std::vector<std::uint32_t>> got;
        for (const auto& s : enumerate_topologies(n))
            EXPECT_TRUE(got.insert(bits_of(s)).second) << "duplicate topology";
        EXPECT_EQ(got, oracle::all_topologies(n)) << n;
    }
}

TEST(Topologies, SurviveStrictRevalidation)
{
    for (unsigned n = 1; n <= 4; ++n)
        for (const auto& s : enumerate_topologies(n)) {
            const auto v = validate_topology(n, s.opens().members(), true);
            EXPECT_TRUE(v.added.empty());
            EXPECT_EQ(v.space, s);
        }
}

TEST(Topologies, DedupKeepsOnePerClass)
{
    const auto reps = enumerate_topologies(3, true);
    std::set<std::uint64_t> keys;
    for (const auto& s : reps)
        EXPECT_TRUE(keys.insert(Preorder::of(s).canonical_key()).second);
    for (const auto& s : enumerate_topologies(3))
        EXPECT_TRUE(keys.count(Preorder::of(s).canonical_key()));
}

TEST(Topologies, SizeLimits)
{
    EXPECT_THROW(enumerate_topologies(0), Error);
    EXPECT_THROW(enumerate_topologies(6), Error);
}

TEST(Topologies, RandomTopologiesAreValid)
{
    std::mt19937 rng(12345);
    for (int i = 0; i < 200; ++i) {
        const unsigned n = 1 + i % 6;
        const auto s = random_topology(n, rng);
        ASSERT_EQ(s.size(), n);
        EXPECT_TRUE(validate_topology(n, s.opens().members(), true).added.empty());
    }
}

TEST(Functions, CountsAndOrder)
{
    EXPECT_EQ(function_count(5, 5), 3125u);
    EXPECT_EQ(function_count(3, 1), 1u);
    const auto d5 = FinSpace::discrete(5);
    const auto all = enumerate_functions(d5, d5);
    EXPECT_EQ(all.size(), 3125u);
    EXPECT_EQ(all.front()(4), 0u);
    EXPECT_EQ(all[1](4), 1u);
    EXPECT_EQ(all[1](0), 0u);
    EXPECT_EQ(enumerate_functions(d5, d5, MapFilter::Injective).size(), 120u);
    EXPECT_EQ(enumerate_functions(FinSpace::discrete(3), FinSpace::discrete(2), MapFilter::Surjective).size(), 6u);
    EXPECT_EQ(enumerate_functions(FinSpace::discrete(2), FinSpace::discrete(3), MapFilter::Injective).size(), 6u);
}

TEST(Functions, IndexRoundTrip)
{
    std::uint8_t t[4];
    for (std::uint64_t i = 0; i < function_count(4, 3); ++i) {
        function_at(i, 4, 3, t);
        std::uint64_t back = 0;
        for (unsigned p = 0; p < 4; ++p)
            back = back * 3 + t[p];
        ASSERT_EQ(back, i);
    }
}
