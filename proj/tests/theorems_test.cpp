#include <gtest/gtest.h>

#include <finitop.hpp>

using namespace finitop;

TEST(Theorems, EveryIdRunsWithoutViolationOnTwoPoints)
{
    CorpusSpec spec;
    spec.n_max = 2;
    spec.jobs = 2;
    for (const auto& t : theorem_registry()) {
        const auto r = verify_theorem(t.id, spec);
        EXPECT_TRUE(r.passed()) << t.id << ": " << report_to_json(r).dump();
        EXPECT_GT(r.examined, 0u) << t.id;
        EXPECT_LE(r.hypothesis_satisfied, r.examined) << t.id;
    }
}

TEST(Theorems, HoldOnThreePointsExceptTheProduct)
{
    CorpusSpec spec;
    spec.n_max = 3;
    spec.jobs = 4;
    for (const auto& t : theorem_registry()) {
        const auto r = verify_theorem(t.id, spec);
        if (t.id == "product") {
            EXPECT_FALSE(r.passed());
            ASSERT_TRUE(r.first_violation);
        } else {
            EXPECT_TRUE(r.passed()) << t.id << ": " << report_to_json(r).dump();
        }
    }
}

TEST(Theorems, ProductCounterexampleIsGenuine)
{
    const auto x1 = examples::from_labels("abc", {"", "a", "b", "ab", "abc"});
    const auto y = FinSpace::discrete(2);
    const PointMap f1(x1, y, {0, 1, 0});
    const auto s = FinSpace::from_topology(2, {SubsetMask(), SubsetMask(1), SubsetMask(3)});
    const PointMap f2(s, y, {0, 1});
    ASSERT_TRUE(is_in_class(f1, FnClass::WeaklyERContinuous));
    ASSERT_TRUE(is_in_class(f2, FnClass::WeaklyERContinuous));
    const auto dom = product({x1, s});
    const auto cod = product({y, y});
    const auto g = product_map({f1, f2}, dom, cod);
    Witness w;
    EXPECT_FALSE(is_in_class(g, FnClass::WeaklyERContinuous, &w));
}

TEST(Theorems, RandomSamplesAreDeterministic)
{
    CorpusSpec spec;
    spec.n_max = 1;
    spec.samples = 50;
    spec.random_n = 5;
    spec.seed = 7;
    const auto a = verify_theorem("e-theta-closure-laws", spec);
    spec.jobs = 3;
    const auto b = verify_theorem("e-theta-closure-laws", spec);
    EXPECT_EQ(a.examined, b.examined);
    EXPECT_GT(a.examined, 50u);
    EXPECT_TRUE(a.passed());
}

TEST(Theorems, VacuityIsReported)
{
    CorpusSpec spec;
    spec.n_max = 3;
    const auto r = verify_theorem("connectedness", spec);
    EXPECT_EQ(r.hypothesis_satisfied, 1u);
    EXPECT_FALSE(r.vacuous());
    spec.n_max = 1;
    EXPECT_EQ(verify_theorem("clopen-t2-implies-eR-t2", spec).hypothesis_satisfied, 1u);
}

TEST(Theorems, UnknownId)
{
    try {
        verify_theorem("riemann", CorpusSpec{});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::UnknownTheoremId);
    }
}

TEST(Theorems, IdsAreUnique)
{
    std::set<std::string_view> ids;
    for (const auto& t : theorem_registry())
        EXPECT_TRUE(ids.insert(t.id).second) << t.id;
    EXPECT_EQ(ids.size(), 26u);
}
