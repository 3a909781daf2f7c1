#include <gtest/gtest.h>

#include <finitop.hpp>

#include "oracles.hpp"

using namespace finitop;

namespace {

SubsetMask set_of(const FinSpace& s, const char* text) { return parse_set(s, text); }

std::vector<SubsetMask> members(const SetFamily& f) { return f.members(); }

std::vector<FinSpace> small_spaces()
{
    std::vector<FinSpace> out;
    for (unsigned n = 1; n <= 3; ++n)
        for (const auto& s : enumerate_topologies(n))
            out.push_back(s);
    out.push_back(examples::tau5());
    out.push_back(examples::sigma5());
    out.push_back(examples::tau4());
    out.push_back(examples::sigma4());
    out.push_back(examples::er_t2_space());
    return out;
}

}  // namespace

TEST(DeltaOperators, Examples)
{
    const auto ind = FinSpace::indiscrete(2);
    EXPECT_EQ(delta_closure(ind, SubsetMask(0b01)), ind.full());
    const auto d = FinSpace::discrete(3);
    for_each_subset(3, [&](SubsetMask a) { EXPECT_EQ(delta_closure(d, a), a); });
    const auto t = examples::tau4();
    EXPECT_EQ(delta_interior(t, set_of(t, "a,b,c")), set_of(t, "a,b"));
}

TEST(ThetaOperators, Examples)
{
    const auto t = examples::tau5();
    EXPECT_EQ(theta_closure(t, SubsetMask()), SubsetMask());
    EXPECT_EQ(theta_closure(t, t.full()), t.full());
    EXPECT_EQ(theta_closure(t, set_of(t, "a")), set_of(t, "a,b,e"));
    const auto s = examples::sigma5();
    EXPECT_EQ(theta_closure(s, set_of(s, "b,c,d")), s.full());
}

TEST(Operators, AgreeWithLiteralQuantifiers)
{
    for (unsigned n = 1; n <= 4; ++n)
        for (const auto& s : enumerate_topologies(n))
            for_each_subset(n, [&](SubsetMask a) {
                ASSERT_EQ(delta_closure(s, a), oracle::delta_closure(s, a));
                ASSERT_EQ(delta_interior(s, a), oracle::delta_interior(s, a));
                ASSERT_EQ(theta_closure(s, a), oracle::theta_closure(s, a));
                ASSERT_EQ(theta_interior(s, a), oracle::theta_interior(s, a));
            });
}

TEST(Families, AgreeWithDefinitionsOnEverySmallSpace)
{
    for (const auto& s : small_spaces())
        for (auto k : kAllKinds) {
            if (k == SetKind::EThetaOpen || k == SetKind::EThetaClosed)
                continue;
            ASSERT_EQ(family(s, k), SetFamily(oracle::family(s, k))) << to_string(k);
        }
}

TEST(Families, EThetaKindsAgreeWithClusterDefinition)
{
    for (const auto& s : small_spaces())
        for_each_subset(s.size(), [&](SubsetMask a) {
            const auto c = oracle::e_theta_closure(s, a);
            ASSERT_EQ(e_theta_closure(s, a), c);
            EXPECT_EQ(is_member(s, SetKind::EThetaClosed, a), c == a);
            EXPECT_EQ(is_member(s, SetKind::EThetaOpen, a),
                      oracle::e_theta_closure(s, a.complement(s.size())) == a.complement(s.size()));
        });
}

TEST(Families, ClosedKindsAreComplementImages)
{
    for (const auto& s : small_spaces())
        for (auto k : kAllKinds)
            for (auto a : family(s, k))
                EXPECT_TRUE(is_member(s, dual(k), a.complement(s.size()))) << to_string(k);
}

TEST(Families, ClopenAndERegularOfTheSeparationExample)
{
    const auto s = examples::er_t2_space();
    EXPECT_EQ(members(family(s, SetKind::Clopen)), (std::vector<SubsetMask>{SubsetMask(), s.full()}));
    std::vector<SubsetMask> expected;
    for_each_subset(4, [&](SubsetMask a) {
        for (const char* gone : {"c", "d", "c,d", "a,b", "a,b,c", "a,b,d"})
            if (a == set_of(s, gone))
                return;
        expected.push_back(a);
    });
    EXPECT_EQ(expected.size(), 10u);
    EXPECT_EQ(family(s, SetKind::ERegular), SetFamily(expected));
}

TEST(Families, RegularOpen)
{
    const auto t = examples::tau4();
    EXPECT_EQ(members(family(t, SetKind::RegularOpen)),
              (std::vector<SubsetMask>{SubsetMask(), set_of(t, "a"), set_of(t, "b"), t.full()}));
}

TEST(Families, DiscreteSpaceHasEverySubsetInEveryKind)
{
    const auto d = FinSpace::discrete(3);
    for (auto k : kAllKinds)
        EXPECT_EQ(family(d, k).size(), 8u) << to_string(k);
}

TEST(Families, EmptyAndFullBelongToEveryKind)
{
    for (const auto& s : small_spaces())
        for (auto k : kAllKinds) {
            EXPECT_TRUE(is_member(s, k, SubsetMask()));
            EXPECT_TRUE(is_member(s, k, s.full()));
        }
}

TEST(Families, SemiopenAndBOpenAreNotInsideEOpen)
{
    // {a,d} in the space with opens ∅, a, b, ab, ac, abc, abd, X.
    const auto s = FinSpace::from_topology(4, {SubsetMask(0), SubsetMask(1), SubsetMask(2), SubsetMask(3),
                                               SubsetMask(5), SubsetMask(7), SubsetMask(11), SubsetMask(15)});
    const SubsetMask a(9);
    EXPECT_TRUE(is_member(s, SetKind::Semiopen, a));
    EXPECT_TRUE(is_member(s, SetKind::BOpen, a));
    EXPECT_FALSE(is_member(s, SetKind::EOpen, a));
}

TEST(KernelClosure, MatchesIntersectionOfClosedSupersets)
{
    for (const auto& s : small_spaces())
        for (auto k : {SetKind::Open, SetKind::Semiopen, SetKind::Preopen, SetKind::BOpen, SetKind::EOpen,
                       SetKind::AOpen})
            for_each_subset(s.size(), [&](SubsetMask a) {
                ASSERT_EQ(kernel_closure(s, k, a), oracle::kernel_closure(s, dual(k), a)) << to_string(k);
                SubsetMask u;
                for (auto o : oracle::family(s, k))
                    if (o.subset_of(a))
                        u |= o;
                ASSERT_EQ(kernel_interior(s, k, a), u) << to_string(k);
            });
}

TEST(KernelClosure, Examples)
{
    const auto t = examples::tau5();
    for_each_subset(5, [&](SubsetMask a) { EXPECT_EQ(kernel_closure(t, SetKind::Open, a), closure(t, a)); });
    EXPECT_EQ(kernel_closure(t, SetKind::EOpen, set_of(t, "b")), set_of(t, "b"));
    const auto d = FinSpace::discrete(3);
    for_each_subset(3, [&](SubsetMask a) { EXPECT_EQ(kernel_closure(d, SetKind::EOpen, a), a); });
}

TEST(EThetaClosure, Examples)
{
    const auto t = examples::tau5();
    EXPECT_EQ(e_theta_closure(t, SubsetMask()), SubsetMask());
    EXPECT_EQ(e_theta_closure(t, t.full()), t.full());
    const auto ind = FinSpace::indiscrete(3);
    EXPECT_EQ(family(ind, SetKind::ERegular).size(), 8u);
    EXPECT_EQ(e_theta_closure(ind, SubsetMask(0b001)), SubsetMask(0b001));
}

TEST(EThetaClosure, IntersectionForm)
{
    for (const auto& s : small_spaces())
        for_each_subset(s.size(), [&](SubsetMask a) {
            SubsetMask meet = s.full();
            for (auto v : family(s, SetKind::ERegular))
                if (a.subset_of(v))
                    meet = meet & v;
            EXPECT_EQ(e_theta_closure(s, a), meet);
            EXPECT_EQ(e_theta_closure_by_cluster(s, a), e_theta_closure(s, a));
        });
}

TEST(SetKind, NamesRoundTrip)
{
    for (auto k : kAllKinds)
        EXPECT_EQ(parse_set_kind(to_string(k)), k);
    try {
        parse_set_kind("fuzzy-open");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::UnknownKind);
    }
}

TEST(Operators, RejectOversizedMasks)
{
    EXPECT_THROW(theta_closure(FinSpace::discrete(2), SubsetMask(0b100)), Error);
}
