#include <gtest/gtest.h>

#include <finitop.hpp>

using namespace finitop;

namespace {

ErrorCode code_of(auto&& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error raised";
    return ErrorCode::InvalidArgument;
}

}  // namespace

TEST(JsonIo, SpaceRoundTrip)
{
    for (unsigned n = 1; n <= 3; ++n)
        for (const auto& s : enumerate_topologies(n)) {
            const auto back = space_from_json(space_to_json(s), true);
            EXPECT_EQ(back.space, s);
            EXPECT_EQ(back.space.labels(), s.labels());
        }
    const auto t = examples::tau5();
    EXPECT_EQ(space_to_json(t).dump(),
              R"({"points":["a","b","c","d","e"],"opens":[[],["a"],["c"],["a","c"],["c","d"],["a","c","d"],["a","b","c","d","e"]]})");
}

TEST(JsonIo, MapRoundTrip)
{
    const auto f = examples::swap_ae();
    const auto g = map_from_json(map_to_json(f));
    EXPECT_EQ(g.dom(), f.dom());
    EXPECT_EQ(g.cod(), f.cod());
    for (unsigned x = 0; x < 5; ++x)
        EXPECT_EQ(g(x), f(x));
    EXPECT_EQ(map_to_json(f)["map"]["a"], "e");
}

TEST(JsonIo, LenientSpacesReportAddedSets)
{
    const auto doc = json::parse(R"({"points":["a","b","c"],"opens":[[],["a"],["b"],["a","b","c"]]})");
    const auto v = space_from_json(doc, false);
    ASSERT_EQ(v.added.size(), 1u);
    EXPECT_EQ(v.added[0], parse_set(v.space, "a,b"));
    EXPECT_EQ(code_of([&] { space_from_json(doc, true); }), ErrorCode::NotClosedUnderUnion);
}

TEST(JsonIo, ParseErrors)
{
    EXPECT_EQ(code_of([] { space_from_json(json::parse(R"({"opens":[]})"), false); }), ErrorCode::Parse);
    EXPECT_EQ(code_of([] { space_from_json(json::parse(R"({"points":["a","a"],"opens":[]})"), false); }),
              ErrorCode::Parse);
    EXPECT_EQ(code_of([] { space_from_json(json::parse(R"({"points":["a"],"opens":[["z"]]})"), false); }),
              ErrorCode::Parse);
    EXPECT_EQ(code_of([] { space_from_json(json::parse(R"({"points":[],"opens":[]})"), false); }),
              ErrorCode::Parse);
    EXPECT_EQ(code_of([] { space_from_json(json::parse(R"({"points":"ab","opens":[]})"), false); }),
              ErrorCode::Parse);
    auto doc = map_to_json(examples::swap_ab());
    doc["map"].erase("c");
    EXPECT_EQ(code_of([&] { map_from_json(doc); }), ErrorCode::Parse);
    doc["map"]["c"] = "q";
    EXPECT_EQ(code_of([&] { map_from_json(doc); }), ErrorCode::Parse);
}

TEST(JsonIo, TooManyPoints)
{
    json doc;
    for (unsigned i = 0; i <= mask_ceiling(); ++i)
        doc["points"].push_back("p" + std::to_string(i));
    doc["opens"] = json::array();
    EXPECT_EQ(code_of([&] { space_from_json(doc, false); }), ErrorCode::WidthOverflow);
}

TEST(JsonIo, ParseSet)
{
    const auto t = examples::tau5();
    EXPECT_EQ(parse_set(t, ""), SubsetMask());
    EXPECT_EQ(parse_set(t, "a, c"), SubsetMask(0b101));
    EXPECT_EQ(code_of([&] { parse_set(t, "a,z"); }), ErrorCode::Parse);
}

TEST(JsonIo, Verdicts)
{
    const auto f = examples::swap_ab();
    const auto r = classify_all(f);
    const auto j = verdict_to_json(f, r[FnClass::ERContinuous]);
    EXPECT_EQ(j["class"], std::string(to_string(FnClass::ERContinuous)));
    EXPECT_EQ(j["holds"], false);
    EXPECT_EQ(j["witness"]["V"], json({"b", "c", "d"}));
    EXPECT_FALSE(verdict_to_json(f, r[FnClass::WeaklyERContinuous]).contains("witness"));
}
