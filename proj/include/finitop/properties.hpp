#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "classify.hpp"

namespace finitop {

/// A partition witnessing disconnection.
struct Partition {
    SubsetMask first;
    SubsetMask second;
};

namespace detail {
inline std::optional<Partition> split_by(const FinSpace& s, SetKind kind)
{
    const auto& t = tables(s);
    for (auto a : t.families[index_of(kind)]) {
        const auto rest = a.complement(s.size());
        if (a.empty() || rest.empty())
            continue;
        if (t.in(kind, rest))
            return Partition{a, rest};
    }
    return std::nullopt;
}
}  // namespace detail

/// Connected: X is not a union of two disjoint nonempty open sets.
inline bool is_connected(const FinSpace& s, Partition* witness = nullptr)
{
    auto p = detail::split_by(s, SetKind::Open);
    if (p && witness)
        *witness = *p;
    return !p;
}

/// e-connected: X is not a union of two disjoint nonempty e-open sets.
inline bool is_e_connected(const FinSpace& s, Partition* witness = nullptr)
{
    auto p = detail::split_by(s, SetKind::EOpen);
    if (p && witness)
        *witness = *p;
    return !p;
}

enum class SepAxiom : unsigned { T1, Hausdorff, Urysohn, Regular, ClopenT2, ERT1, ERT2 };

inline constexpr std::array<SepAxiom, 7> kAllAxioms = {SepAxiom::T1,      SepAxiom::Hausdorff, SepAxiom::Urysohn,
                                                        SepAxiom::Regular, SepAxiom::ClopenT2,  SepAxiom::ERT1,
                                                        SepAxiom::ERT2};
inline constexpr std::array<std::string_view, 7> kAxiomNames = {"T1",        "Hausdorff", "Urysohn", "regular",
                                                                 "clopen-T2", "eR-T1",     "eR-T2"};

inline std::string_view to_string(SepAxiom a) { return kAxiomNames[static_cast<std::size_t>(a)]; }

inline SepAxiom parse_sep_axiom(std::string_view name)
{
    for (std::size_t i = 0; i < kAllAxioms.size(); ++i)
        if (kAxiomNames[i] == name)
            return kAllAxioms[i];
    throw Error(ErrorCode::InvalidArgument, "unknown separation axiom '" + std::string(name) + "'");
}

/// Offending points of a failed separation check. For `regular` the second
/// entry is unused and `closed` holds the closed set not separated from x.
struct SepWitness {
    unsigned x = 0;
    unsigned y = 0;
    SubsetMask closed;
};

namespace detail {

/// Some U ∈ fu with x ∈ U and V ∈ fv with y ∈ V satisfying ok(U, V).
template <typename Ok>
bool separated(const SetFamily& fu, const SetFamily& fv, unsigned x, unsigned y, Ok&& ok)
{
    for (auto u : fu) {
        if (!u.contains(x))
            continue;
        for (auto v : fv)
            if (v.contains(y) && ok(u, v))
                return true;
    }
    return false;
}

}  // namespace detail

/// Decides a separation axiom by evaluating its quantifiers over the cached
/// families. Pairs are scanned as ordered pairs (x, y), x ≠ y, x ascending.
inline bool sep_axiom(const FinSpace& s, SepAxiom axiom, SepWitness* witness = nullptr)
{
    const auto& t = tables(s);
    const unsigned n = s.size();
    const auto& opens = s.opens();
    const auto& clopen = t.families[index_of(SetKind::Clopen)];
    const auto& er = t.families[index_of(SetKind::ERegular)];
    auto cl = [&](SubsetMask a) { return SubsetMask(t.closure[a.bits()]); };

    if (axiom == SepAxiom::Regular) {
        for (unsigned x = 0; x < n; ++x)
            for (auto f : t.families[index_of(SetKind::Closed)]) {
                if (f.contains(x))
                    continue;
                bool ok = false;
                for (auto u : opens) {
                    if (!u.contains(x) || u.meets(f))
                        continue;
                    // X \ cl(U) is the largest open set disjoint from U.
                    const auto v = cl(u).complement(n);
                    if (f.subset_of(v)) {
                        ok = true;
                        break;
                    }
                }
                if (!ok) {
                    if (witness)
                        *witness = SepWitness{x, x, f};
                    return false;
                }
            }
        return true;
    }

    for (unsigned x = 0; x < n; ++x)
        for (unsigned y = 0; y < n; ++y) {
            if (x == y)
                continue;
            bool ok = false;
            switch (axiom) {
            case SepAxiom::T1:
                ok = detail::separated(opens, opens, x, y,
                                       [&](SubsetMask u, SubsetMask v) { return !u.contains(y) && !v.contains(x); });
                break;
            case SepAxiom::Hausdorff:
                ok = detail::separated(opens, opens, x, y, [](SubsetMask u, SubsetMask v) { return !u.meets(v); });
                break;
            case SepAxiom::Urysohn:
                ok = detail::separated(opens, opens, x, y,
                                       [&](SubsetMask u, SubsetMask v) { return !cl(u).meets(cl(v)); });
                break;
            case SepAxiom::ClopenT2:
                ok = detail::separated(clopen, clopen, x, y, [](SubsetMask u, SubsetMask v) { return !u.meets(v); });
                break;
            case SepAxiom::ERT1:
                ok = detail::separated(er, er, x, y,
                                       [&](SubsetMask u, SubsetMask v) { return !u.contains(y) && !v.contains(x); });
                break;
            case SepAxiom::ERT2:
                ok = detail::separated(er, er, x, y, [](SubsetMask u, SubsetMask v) { return !u.meets(v); });
                break;
            case SepAxiom::Regular: break;
            }
            if (!ok) {
                if (witness)
                    *witness = SepWitness{x, y, SubsetMask()};
                return false;
            }
        }
    return true;
}

/// Off-graph pair (x, y) with no separating (U, V).
struct GraphWitness {
    unsigned x = 0;
    unsigned y = 0;
};

/// er-graph, decided by: for every y ≠ f(x) some U ∈ eR(X, x) and
/// V ∈ O(Y, y) with f[U] ∩ cl(V) = ∅.
inline bool has_er_graph(const PointMap& f, GraphWitness* witness = nullptr)
{
    const auto& tx = tables(f.dom());
    const auto& ty = tables(f.cod());
    const auto& er = tx.families[index_of(SetKind::ERegular)];
    for (unsigned x = 0; x < f.dom().size(); ++x)
        for (unsigned y = 0; y < f.cod().size(); ++y) {
            if (y == f(x))
                continue;
            bool ok = false;
            for (auto u : er) {
                if (!u.contains(x))
                    continue;
                const auto fu = image(f, u);
                for (auto v : f.cod().opens())
                    if (v.contains(y) && !fu.meets(SubsetMask(ty.closure[v.bits()]))) {
                        ok = true;
                        break;
                    }
                if (ok)
                    break;
            }
            if (!ok) {
                if (witness)
                    *witness = GraphWitness{x, y};
                return false;
            }
        }
    return true;
}

/// er-graph, decided on the product X × Y: for every (x, y) off G(f) some
/// U ∈ eR(X, x) and V ∈ O(Y, y) with (U × cl(V)) ∩ G(f) = ∅.
inline bool has_er_graph_in_product(const PointMap& f, const ProductSpace& xy, GraphWitness* witness = nullptr)
{
    const auto& tx = tables(f.dom());
    const auto& ty = tables(f.cod());
    const auto& er = tx.families[index_of(SetKind::ERegular)];
    const auto graph = image(graph_map(f, xy), f.dom().full());
    for (unsigned x = 0; x < f.dom().size(); ++x)
        for (unsigned y = 0; y < f.cod().size(); ++y) {
            const unsigned c[2] = {x, y};
            if (graph.contains(xy.encode(c)))
                continue;
            bool ok = false;
            for (auto u : er) {
                if (!u.contains(x))
                    continue;
                for (auto v : f.cod().opens()) {
                    if (!v.contains(y))
                        continue;
                    const SubsetMask parts[2] = {u, SubsetMask(ty.closure[v.bits()])};
                    if (!xy.box(parts).meets(graph)) {
                        ok = true;
                        break;
                    }
                }
                if (ok)
                    break;
            }
            if (!ok) {
                if (witness)
                    *witness = GraphWitness{x, y};
                return false;
            }
        }
    return true;
}

/// Every cover of a finite space is finite, so eR-compactness always holds.
inline bool eR_compact(const FinSpace&) { return true; }
inline bool eR_compact_relative(const FinSpace&, SubsetMask) { return true; }

struct CoverResult {
    bool found = false;
    std::vector<SubsetMask> subcover;
};

/// Literal cover path: cover K by one smallest e-regular neighbourhood per
/// point (canonical order), prune to an irredundant subcover, and accept it
/// when it has at most `max_size` members.
inline CoverResult eR_cover(const FinSpace& s, SubsetMask k, std::size_t max_size)
{
    const auto& er = tables(s).families[index_of(SetKind::ERegular)];
    std::vector<SubsetMask> cover;
    k.for_each([&](unsigned x) {
        for (auto u : er)
            if (u.contains(x)) {
                if (std::find(cover.begin(), cover.end(), u) == cover.end())
                    cover.push_back(u);
                break;
            }
    });
    auto covers = [&](const std::vector<SubsetMask>& c) {
        SubsetMask all;
        for (auto u : c)
            all |= u;
        return k.subset_of(all);
    };
    for (std::size_t i = cover.size(); i-- > 0;) {
        auto trial = cover;
        trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
        if (covers(trial))
            cover = std::move(trial);
    }
    CoverResult r;
    r.found = covers(cover) && cover.size() <= max_size;
    r.subcover = std::move(cover);
    return r;
}

/// Points where f and g agree.
inline SubsetMask equalizer(const PointMap& f, const PointMap& g)
{
    if (!(f.dom() == g.dom()) || !(f.cod() == g.cod()))
        throw Error(ErrorCode::SpaceMismatch, "equalizer needs maps with the same domain and codomain");
    SubsetMask out;
    for (unsigned x = 0; x < f.dom().size(); ++x)
        if (f(x) == g(x))
            out = out.with(x);
    return out;
}

/// Whether f[K] is θ-closed in the codomain.
inline bool theta_closed_image_check(const PointMap& f, SubsetMask k)
{
    const auto img = image(f, k);
    return theta_closure(f.cod(), img) == img;
}

}  // namespace finitop
