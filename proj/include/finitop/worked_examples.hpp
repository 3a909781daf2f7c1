#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

#include "json_io.hpp"
#include "properties.hpp"

namespace finitop {

/// Spaces and maps of the four published examples.
namespace examples {

inline FinSpace from_labels(std::string_view points, const std::vector<std::string_view>& opens)
{
    std::vector<std::string> labels;
    for (char c : points)
        labels.emplace_back(1, c);
    std::vector<SubsetMask> family;
    for (auto o : opens) {
        SubsetMask m;
        for (char c : o)
            m = m.with(static_cast<unsigned>(points.find(c)));
        family.push_back(m);
    }
    return validate_topology(static_cast<unsigned>(points.size()), family, true, labels).space;
}

inline PointMap from_pairs(const FinSpace& dom, const FinSpace& cod, std::string_view images)
{
    std::vector<std::uint8_t> t;
    for (char c : images)
        t.push_back(static_cast<std::uint8_t>(c - 'a'));
    return PointMap(dom, cod, std::move(t));
}

/// τ on {a,b,c,d,e} shared by the first two examples.
inline FinSpace tau5() { return from_labels("abcde", {"", "a", "c", "ac", "cd", "acd", "abcde"}); }
inline FinSpace sigma5() { return from_labels("abcde", {"", "abcde", "bcd"}); }

/// The a↔e swap (τ → σ).
inline PointMap swap_ae() { return from_pairs(tau5(), sigma5(), "ebcda"); }

/// The a↔b swap (τ → σ).
inline PointMap swap_ab() { return from_pairs(tau5(), sigma5(), "bacde"); }

inline FinSpace tau4() { return from_labels("abcd", {"", "a", "b", "ab", "abc", "abcd"}); }
inline FinSpace sigma4() { return from_labels("abcd", {"", "abcd", "a", "bc", "abc"}); }

/// a↦a, b↦c, c↦b, d↦d (τ → σ on four points).
inline PointMap swap_bc() { return from_pairs(tau4(), sigma4(), "acbd"); }

/// The space on {a,b,c,d} that is eR-T2 but not clopen-T2.
inline FinSpace er_t2_space() { return from_labels("abcd", {"", "a", "b", "ab", "abc", "abd", "abcd"}); }

}  // namespace examples

struct ClaimResult {
    std::string claim;
    bool expected = false;
    bool observed = false;
    json detail;  // witness or computed family, when there is one

    bool matches() const noexcept { return expected == observed; }
};

struct ExampleResult {
    std::string id;
    std::vector<ClaimResult> claims;

    bool reproduced() const
    {
        for (const auto& c : claims)
            if (!c.matches())
                return false;
        return true;
    }
};

inline const std::vector<std::string>& example_ids()
{
    static const std::vector<std::string> ids = {"3.7", "3.8", "3.9", "4.4"};
    return ids;
}

namespace detail {

inline ClaimResult class_claim(const PointMap& f, FnClass c, bool expected)
{
    Witness w;
    ClaimResult r{std::string(to_string(c)), expected, is_in_class(f, c, &w), json()};
    if (!r.observed)
        r.detail = witness_to_json(f, w);
    return r;
}

inline json family_to_json(const FinSpace& s, const SetFamily& fam)
{
    json out = json::array();
    for (auto a : fam)
        out.push_back(mask_to_json(s, a));
    return out;
}

}  // namespace detail

inline ExampleResult reproduce_example(std::string_view id)
{
    using namespace examples;
    ExampleResult r{std::string(id), {}};
    if (id == "3.7") {
        const auto f = swap_ae();
        r.claims.push_back(detail::class_claim(f, FnClass::WeaklyERContinuous, true));
        r.claims.push_back(detail::class_claim(f, FnClass::StronglyThetaEContinuous, false));
    } else if (id == "3.8") {
        const auto f = swap_ab();
        r.claims.push_back(detail::class_claim(f, FnClass::WeaklyERContinuous, true));
        r.claims.push_back(detail::class_claim(f, FnClass::ERContinuous, false));
    } else if (id == "3.9") {
        const auto f = swap_bc();
        r.claims.push_back(detail::class_claim(f, FnClass::EContinuous, true));
        r.claims.push_back(detail::class_claim(f, FnClass::WeaklyEContinuous, true));
        r.claims.push_back(detail::class_claim(f, FnClass::ERContinuous, false));
    } else if (id == "4.4") {
        const auto s = er_t2_space();
        const auto& clopen = family(s, SetKind::Clopen);
        const auto& er = family(s, SetKind::ERegular);
        std::vector<SubsetMask> expected_er;
        const std::vector<std::string_view> excluded = {"c", "d", "cd", "ab", "abc", "abd"};
        for_each_subset(s.size(), [&](SubsetMask a) {
            std::string label;
            a.for_each([&](unsigned x) { label += s.label(x); });
            if (std::find(excluded.begin(), excluded.end(), label) == excluded.end())
                expected_er.push_back(a);
        });
        r.claims.push_back({"clopen = {empty, X}", true, clopen == SetFamily({SubsetMask(), s.full()}),
                            detail::family_to_json(s, clopen)});
        r.claims.push_back({"e-regular = 2^X minus six sets", true, er == SetFamily(expected_er),
                            detail::family_to_json(s, er)});
        for (auto [axiom, expected] : {std::pair{SepAxiom::ERT2, true}, std::pair{SepAxiom::ClopenT2, false}}) {
            SepWitness w;
            ClaimResult c{std::string(to_string(axiom)), expected, sep_axiom(s, axiom, &w), json()};
            if (!c.observed)
                c.detail = {{"x", s.label(w.x)}, {"y", s.label(w.y)}};
            r.claims.push_back(std::move(c));
        }
    } else {
        throw Error(ErrorCode::InvalidArgument, "unknown example '" + std::string(id) + "'");
    }
    return r;
}

inline json example_to_json(const ExampleResult& r)
{
    json out;
    out["example"] = r.id;
    out["reproduced"] = r.reproduced();
    json claims = json::array();
    for (const auto& c : r.claims) {
        json j;
        j["claim"] = c.claim;
        j["expected"] = c.expected;
        j["observed"] = c.observed;
        if (!c.detail.is_null())
            j["detail"] = c.detail;
        claims.push_back(std::move(j));
    }
    out["claims"] = std::move(claims);
    return out;
}

}  // namespace finitop
