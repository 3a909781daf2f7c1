#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "point_map.hpp"

namespace finitop {

inline constexpr unsigned kDefaultEnumerationLimit = 5;

/// A reflexive, transitive relation on n points; rows[i] holds every j with i ≤ j.
struct Preorder {
    unsigned n = 0;
    std::vector<SubsetMask> rows;

    bool leq(unsigned i, unsigned j) const { return rows[i].contains(j); }

    bool valid() const
    {
        for (unsigned i = 0; i < n; ++i) {
            if (!rows[i].contains(i))
                return false;
            bool ok = true;
            rows[i].for_each([&](unsigned j) { ok = ok && rows[j].subset_of(rows[i]); });
            if (!ok)
                return false;
        }
        return true;
    }

    /// Topology of up-sets: the up-set of x is its minimal neighbourhood.
    FinSpace topology() const { return FinSpace::from_neighbourhoods(n, rows); }

    static Preorder of(const FinSpace& s) { return Preorder{s.size(), s.neighbourhoods()}; }

    /// Row-major bit key of the relation matrix (n ≤ 8).
    std::uint64_t key() const
    {
        std::uint64_t k = 0;
        for (unsigned i = 0; i < n; ++i)
            k = (k << n) | rows[i].bits();
        return k;
    }

    Preorder relabel(const std::vector<unsigned>& perm) const
    {
        Preorder p{n, std::vector<SubsetMask>(n)};
        for (unsigned i = 0; i < n; ++i) {
            SubsetMask row;
            rows[i].for_each([&](unsigned j) { row = row.with(perm[j]); });
            p.rows[perm[i]] = row;
        }
        return p;
    }

    /// Smallest key over all relabelings; equal for homeomorphic spaces.
    std::uint64_t canonical_key() const
    {
        std::vector<unsigned> perm(n);
        std::iota(perm.begin(), perm.end(), 0u);
        std::uint64_t best = key();
        while (std::next_permutation(perm.begin(), perm.end()))
            best = std::min(best, relabel(perm).key());
        return best;
    }
};

/// Every preorder on n labeled points, rows chosen in ascending bit order.
/// Transitivity is checked among the rows assigned so far, which prunes
/// whole subtrees.
inline std::vector<Preorder> enumerate_preorders(unsigned n)
{
    std::vector<Preorder> out;
    Preorder cur{n, std::vector<SubsetMask>(n)};
    const SubsetMask::word_type limit = SubsetMask::full(n).bits();

    auto consistent = [&](unsigned upto) {
        for (unsigned a = 0; a <= upto; ++a)
            for (unsigned b = 0; b <= upto; ++b)
                if (cur.rows[a].contains(b) && !cur.rows[b].subset_of(cur.rows[a]))
                    return false;
        return true;
    };
    auto rec = [&](auto&& self, unsigned i) -> void {
        if (i == n) {
            out.push_back(cur);
            return;
        }
        for (SubsetMask::word_type r = 0; r <= limit; ++r) {
            const SubsetMask row(r);
            if (!row.contains(i))
                continue;
            cur.rows[i] = row;
            if (consistent(i))
                self(self, i + 1);
        }
    };
    rec(rec, 0);
    return out;
}

/// All topologies on n labeled points in preorder order, optionally one per
/// homeomorphism class (the first labeled representative is kept).
inline std::vector<FinSpace> enumerate_topologies(unsigned n, bool dedup = false,
                                                  unsigned limit = kDefaultEnumerationLimit)
{
    if (n < 1 || n > limit)
        throw Error(ErrorCode::SizeUnsupported,
                    "topology enumeration supports 1 <= n <= " + std::to_string(limit));
    std::vector<FinSpace> out;
    std::set<std::uint64_t> seen;
    for (const auto& p : enumerate_preorders(n)) {
        if (dedup && !seen.insert(p.canonical_key()).second)
            continue;
        out.push_back(p.topology());
    }
    return out;
}

/// A random topology on n points: a random relation (each off-diagonal pair
/// kept with a density drawn per call) closed to a preorder.
template <typename Rng>
FinSpace random_topology(unsigned n, Rng& rng)
{
    std::uniform_real_distribution<double> density(0.05, 0.6);
    std::bernoulli_distribution keep(density(rng));
    std::vector<SubsetMask> rows(n);
    for (unsigned i = 0; i < n; ++i) {
        rows[i] = SubsetMask::singleton(i);
        for (unsigned j = 0; j < n; ++j)
            if (j != i && keep(rng))
                rows[i] = rows[i].with(j);
    }
    for (unsigned k = 0; k < n; ++k)
        for (unsigned i = 0; i < n; ++i)
            if (rows[i].contains(k))
                rows[i] |= rows[k];
    return Preorder{n, rows}.topology();
}

/// k^m, the number of total maps from m points to k points.
inline std::uint64_t function_count(unsigned m, unsigned k)
{
    std::uint64_t c = 1;
    for (unsigned i = 0; i < m; ++i)
        c *= k;
    return c;
}

/// The index-th map from m points to k points in lexicographic order
/// (point 0 is the most significant digit).
inline void function_at(std::uint64_t index, unsigned m, unsigned k, std::uint8_t* out)
{
    for (unsigned i = m; i-- > 0;) {
        out[i] = static_cast<std::uint8_t>(index % k);
        index /= k;
    }
}

enum class MapFilter { All, Injective, Surjective };

/// All maps dom → cod in lexicographic order, optionally filtered.
inline std::vector<PointMap> enumerate_functions(const FinSpace& dom, const FinSpace& cod,
                                                 MapFilter filter = MapFilter::All)
{
    std::vector<PointMap> out;
    const unsigned m = dom.size();
    const unsigned k = cod.size();
    std::vector<std::uint8_t> t(m);
    for (std::uint64_t i = 0, c = function_count(m, k); i < c; ++i) {
        function_at(i, m, k, t.data());
        PointMap f(dom, cod, t);
        if (filter == MapFilter::Injective && !f.injective())
            continue;
        if (filter == MapFilter::Surjective && !f.surjective())
            continue;
        out.push_back(std::move(f));
    }
    return out;
}

}  // namespace finitop
