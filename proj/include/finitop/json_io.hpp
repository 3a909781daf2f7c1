#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "classify.hpp"

namespace finitop {

using json = nlohmann::ordered_json;

inline json mask_to_json(const FinSpace& s, SubsetMask a)
{
    json out = json::array();
    a.for_each([&](unsigned x) { out.push_back(s.label(x)); });
    return out;
}

/// {"points": [...], "opens": [[...], ...]} with opens in canonical order.
inline json space_to_json(const FinSpace& s)
{
    json out;
    out["points"] = s.labels();
    json opens = json::array();
    for (auto u : s.opens())
        opens.push_back(mask_to_json(s, u));
    out["opens"] = std::move(opens);
    return out;
}

namespace detail {

inline std::map<std::string, unsigned> label_index(const std::vector<std::string>& labels)
{
    std::map<std::string, unsigned> idx;
    for (unsigned i = 0; i < labels.size(); ++i)
        if (!idx.emplace(labels[i], i).second)
            throw Error(ErrorCode::Parse, "duplicate point label '" + labels[i] + "'");
    return idx;
}

inline unsigned lookup(const std::map<std::string, unsigned>& idx, const std::string& label)
{
    auto it = idx.find(label);
    if (it == idx.end())
        throw Error(ErrorCode::Parse, "unknown point label '" + label + "'");
    return it->second;
}

}  // namespace detail

inline SubsetMask mask_from_labels(const FinSpace& s, const std::vector<std::string>& labels)
{
    const auto idx = detail::label_index(s.labels());
    SubsetMask m;
    for (const auto& l : labels)
        m = m.with(detail::lookup(idx, l));
    return m;
}

/// Parses "a,c" (empty string is the empty set).
inline SubsetMask parse_set(const FinSpace& s, std::string_view text)
{
    std::vector<std::string> parts;
    std::string cur;
    for (char c : text) {
        if (c == ',') {
            parts.push_back(cur);
            cur.clear();
        } else if (c != ' ') {
            cur += c;
        }
    }
    if (!cur.empty() || !parts.empty())
        parts.push_back(cur);
    return mask_from_labels(s, parts);
}

inline ValidatedSpace space_from_json(const json& doc, bool strict)
{
    try {
        const auto labels = doc.at("points").get<std::vector<std::string>>();
        const auto idx = detail::label_index(labels);
        if (labels.empty())
            throw Error(ErrorCode::Parse, "a space needs at least one point");
        if (labels.size() > mask_ceiling())
            throw Error(ErrorCode::WidthOverflow, "too many points");
        std::vector<SubsetMask> family;
        for (const auto& open : doc.at("opens")) {
            SubsetMask m;
            for (const auto& l : open.get<std::vector<std::string>>())
                m = m.with(detail::lookup(idx, l));
            family.push_back(m);
        }
        return validate_topology(static_cast<unsigned>(labels.size()), family, strict, labels);
    } catch (const json::exception& e) {
        throw Error(ErrorCode::Parse, std::string("malformed space document: ") + e.what());
    }
}

/// {"dom": <space>, "cod": <space>, "map": {"a": "e", ...}}
inline json map_to_json(const PointMap& f)
{
    json out;
    out["dom"] = space_to_json(f.dom());
    out["cod"] = space_to_json(f.cod());
    json m = json::object();
    for (unsigned x = 0; x < f.dom().size(); ++x)
        m[f.dom().label(x)] = f.cod().label(f(x));
    out["map"] = std::move(m);
    return out;
}

inline PointMap map_from_json(const json& doc, bool strict = false)
{
    try {
        auto dom = space_from_json(doc.at("dom"), strict).space;
        auto cod = space_from_json(doc.at("cod"), strict).space;
        const auto di = detail::label_index(dom.labels());
        const auto ci = detail::label_index(cod.labels());
        std::vector<int> t(dom.size(), -1);
        for (const auto& [k, v] : doc.at("map").items())
            t[detail::lookup(di, k)] = static_cast<int>(detail::lookup(ci, v.get<std::string>()));
        std::vector<std::uint8_t> targets;
        for (unsigned x = 0; x < dom.size(); ++x) {
            if (t[x] < 0)
                throw Error(ErrorCode::Parse, "map has no image for point '" + dom.label(x) + "'");
            targets.push_back(static_cast<std::uint8_t>(t[x]));
        }
        return PointMap(std::move(dom), std::move(cod), std::move(targets));
    } catch (const json::exception& e) {
        throw Error(ErrorCode::Parse, std::string("malformed map document: ") + e.what());
    }
}

inline json witness_to_json(const PointMap& f, const Witness& w)
{
    json out = json::object();
    if (w.x)
        out["x"] = f.dom().label(*w.x);
    out["V"] = mask_to_json(f.cod(), w.V);
    return out;
}

/// {"class": ..., "holds": ..., "witness": {...}}
inline json verdict_to_json(const PointMap& f, const Verdict& v)
{
    json out;
    out["class"] = std::string(to_string(v.cls));
    out["holds"] = v.holds;
    if (v.witness)
        out["witness"] = witness_to_json(f, *v.witness);
    return out;
}

}  // namespace finitop
