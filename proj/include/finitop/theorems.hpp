#pragma once

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json_io.hpp"
#include "properties.hpp"
#include "search.hpp"

namespace finitop {

/// Which objects a theorem is checked on.
///
/// Space-level laws run over every labeled topology on 1..n_max points;
/// map-level statements over every map of MapCorpus(n_max). `samples` adds
/// that many random instances with at most `random_n` points, drawn from
/// `seed`. n_max = 0 skips the exhaustive part.
struct CorpusSpec {
    unsigned n_max = 3;
    unsigned samples = 0;
    unsigned random_n = 5;
    std::uint64_t seed = 1;
    unsigned jobs = 1;
};

struct TheoremReport {
    std::string id;
    std::string statement;
    CorpusSpec corpus;
    std::uint64_t examined = 0;
    std::uint64_t hypothesis_satisfied = 0;
    std::uint64_t violations = 0;
    std::optional<json> first_violation;
    double wall_seconds = 0;

    bool passed() const noexcept { return violations == 0; }
    bool vacuous() const noexcept { return hypothesis_satisfied == 0; }
};

inline json report_to_json(const TheoremReport& r)
{
    json out;
    out["theorem"] = r.id;
    out["statement"] = r.statement;
    out["corpus"] = {{"n_max", r.corpus.n_max}, {"samples", r.corpus.samples}, {"random_n", r.corpus.random_n},
                     {"seed", r.corpus.seed}};
    out["examined"] = r.examined;
    out["hypothesis_satisfied"] = r.hypothesis_satisfied;
    out["violations"] = r.violations;
    if (r.first_violation)
        out["first_violation"] = *r.first_violation;
    return out;
}

namespace detail {

struct Tally {
    std::uint64_t examined = 0;
    std::uint64_t satisfied = 0;
    std::uint64_t violations = 0;
    std::optional<json> first;

    template <typename Describe>
    void record(bool hypothesis, bool conclusion, Describe&& describe)
    {
        ++examined;
        if (!hypothesis)
            return;
        ++satisfied;
        if (conclusion)
            return;
        if (violations++ == 0)
            first = describe();
    }

    /// Appends a tally covering later candidates.
    void merge(Tally&& later)
    {
        examined += later.examined;
        satisfied += later.satisfied;
        violations += later.violations;
        if (!first && later.first)
            first = std::move(later.first);
    }
};

inline std::vector<FinSpace> space_corpus(const CorpusSpec& spec)
{
    std::vector<FinSpace> out;
    for (unsigned n = 1; n <= spec.n_max; ++n) {
        auto s = enumerate_topologies(n);
        out.insert(out.end(), s.begin(), s.end());
    }
    std::mt19937_64 rng(spec.seed);
    for (unsigned i = 0; i < spec.samples; ++i)
        out.push_back(random_topology(spec.random_n, rng));
    return out;
}

/// Runs check(space, tally) over the space corpus.
template <typename Check>
Tally over_spaces(const CorpusSpec& spec, Check&& check)
{
    const auto spaces = space_corpus(spec);
    std::vector<Tally> parts(std::max(1u, spec.jobs));
    parallel_ranges(0, spaces.size(), spec.jobs, [&](std::uint64_t a, std::uint64_t b, unsigned j) {
        for (auto i = a; i < b; ++i)
            check(spaces[i], parts[j]);
    });
    Tally total;
    for (auto& p : parts)
        total.merge(std::move(p));
    return total;
}

inline PointMap map_of(const MapEvaluator& ev, std::span<const std::uint8_t> t)
{
    return PointMap(ev.dom(), ev.cod(), std::vector<std::uint8_t>(t.begin(), t.end()));
}

/// Runs a fresh make_check() per worker; check(evaluator, targets, tally)
/// sees every map of the corpus, then the random samples in order.
template <typename Factory>
Tally over_maps(const CorpusSpec& spec, Factory&& make_check)
{
    Tally total;
    if (spec.n_max > 0) {
        const MapCorpus corpus(spec.n_max);
        std::vector<Tally> parts(std::max(1u, spec.jobs));
        parallel_ranges(0, corpus.total(), spec.jobs, [&](std::uint64_t a, std::uint64_t b, unsigned j) {
            auto check = make_check();
            walk_corpus(corpus, a, b, [&](std::uint64_t, MapEvaluator& ev, std::span<const std::uint8_t> t) {
                ev.bind(t);
                check(ev, t, parts[j]);
            });
        });
        for (auto& p : parts)
            total.merge(std::move(p));
    }
    if (spec.samples > 0) {
        std::mt19937_64 rng(spec.seed);
        std::uniform_int_distribution<unsigned> size(1, spec.random_n);
        auto check = make_check();
        Tally t;
        for (unsigned i = 0; i < spec.samples; ++i) {
            const auto x = random_topology(size(rng), rng);
            const auto y = random_topology(size(rng), rng);
            std::uniform_int_distribution<unsigned> point(0, y.size() - 1);
            std::vector<std::uint8_t> targets(x.size());
            for (auto& v : targets)
                v = static_cast<std::uint8_t>(point(rng));
            MapEvaluator ev(x, y);
            ev.bind(targets);
            check(ev, std::span<const std::uint8_t>(targets), t);
        }
        total.merge(std::move(t));
    }
    return total;
}

/// Memoized separation verdicts for the spaces a worker meets.
class AxiomCache {
public:
    bool operator()(const FinSpace& s, SepAxiom a)
    {
        const auto key = std::make_pair(static_cast<const void*>(&s.data()), static_cast<unsigned>(a));
        auto it = cache_.find(key);
        if (it == cache_.end())
            it = cache_.emplace(key, sep_axiom(s, a)).first;
        return it->second;
    }

private:
    std::map<std::pair<const void*, unsigned>, bool> cache_;
};

inline json space_violation(const FinSpace& s, std::string_view law)
{
    json out;
    out["law"] = std::string(law);
    out["space"] = space_to_json(s);
    return out;
}

inline json subset_violation(const FinSpace& s, std::string_view law, SubsetMask a)
{
    auto out = space_violation(s, law);
    out["A"] = mask_to_json(s, a);
    return out;
}

inline json map_violation(const PointMap& f, std::string_view law = {})
{
    json out;
    if (!law.empty())
        out["law"] = std::string(law);
    out["map"] = map_to_json(f);
    return out;
}

// ---------------------------------------------------------------------------
// Space-level laws

/// Literal e-θ-interior: x with some e-open U ∋ x whose e-closure lies in A.
inline SubsetMask e_theta_interior_literal(const FinSpace& s, SubsetMask a)
{
    const auto& t = tables(s);
    const auto& ecl = t.kernel_closure(SetKind::EOpen);
    SubsetMask out;
    for (auto u : t.families[index_of(SetKind::EOpen)])
        if (SubsetMask(ecl[u.bits()]).subset_of(a))
            out |= u;
    return out;
}

inline Tally e_theta_closure_laws(const CorpusSpec& spec)
{
    return over_spaces(spec, [](const FinSpace& s, Tally& tally) {
        const auto& t = tables(s);
        const unsigned n = s.size();
        const auto& ecl = t.kernel_closure(SetKind::EOpen);
        const auto& er = t.families[index_of(SetKind::ERegular)];
        const auto& etc = t.families[index_of(SetKind::EThetaClosed)];
        auto fast = [&](SubsetMask a) { return SubsetMask(t.e_theta_closure[a.bits()]); };
        auto cluster = [&](SubsetMask a) { return e_theta_closure_by_cluster(s, a); };
        auto cluster_closed = [&](SubsetMask a) { return cluster(a) == a; };
        auto meet_supersets = [&](const SetFamily& fam, SubsetMask a) {
            SubsetMask m = s.full();
            for (auto v : fam)
                if (a.subset_of(v))
                    m = m & v;
            return m;
        };

        for_each_subset(n, [&](SubsetMask a) {
            const auto c = fast(a);
            const char* law = nullptr;
            SubsetMask by_neighbourhoods;
            for (unsigned x = 0; x < n; ++x) {
                bool all_meet = true;
                for (auto u : er)
                    if (u.contains(x) && !u.meets(a)) {
                        all_meet = false;
                        break;
                    }
                if (all_meet)
                    by_neighbourhoods = by_neighbourhoods.with(x);
            }
            bool neighbourhood_form = true;
            for (auto x : a.points()) {
                bool found = false;
                for (auto u : er)
                    if (u.contains(x) && u.subset_of(a)) {
                        found = true;
                        break;
                    }
                neighbourhood_form = neighbourhood_form && found;
            }
            const bool e_theta_open = e_theta_interior_literal(s, a) == a;

            if (!(a.subset_of(SubsetMask(ecl[a.bits()])) && SubsetMask(ecl[a.bits()]).subset_of(c)))
                law = "extensive";
            else if (!cluster_closed(c))
                law = "closure-is-e-theta-closed";
            else if (cluster_closed(a) && c != a)
                law = "e-theta-closed-is-fixed";
            else if (fast(c) != c)
                law = "idempotent";
            else if (cluster(a.complement(n)) != e_theta_interior_literal(s, a).complement(n))
                law = "complement-duality";
            else if (cluster(a) != c || by_neighbourhoods != c)
                law = "e-regular-neighbourhoods";
            else if (meet_supersets(er, a) != c || meet_supersets(etc, a) != c)
                law = "intersection-forms";
            else if (e_theta_open != neighbourhood_form)
                law = "open-by-neighbourhoods";
            if (!law)
                for_each_submask(a, [&](SubsetMask b) {
                    if (!law && !fast(b).subset_of(c))
                        law = "monotone";
                });
            tally.record(true, law == nullptr, [&] { return subset_violation(s, law, a); });
        });

        const auto& eto = t.families[index_of(SetKind::EThetaOpen)];
        bool lattice = true;
        for (auto a : etc)
            for (auto b : etc)
                lattice = lattice && t.in(SetKind::EThetaClosed, a & b);
        for (auto a : eto)
            for (auto b : eto)
                lattice = lattice && t.in(SetKind::EThetaOpen, a | b);
        tally.record(true, lattice, [&] { return space_violation(s, "lattice"); });
    });
}

inline Tally open_theta_closure(const CorpusSpec& spec)
{
    return over_spaces(spec, [](const FinSpace& s, Tally& tally) {
        for (auto a : s.opens()) {
            SubsetMask literal;
            for (unsigned x = 0; x < s.size(); ++x) {
                bool all_meet = true;
                for (auto u : s.opens())
                    if (u.contains(x) && !closure(s, u).meets(a)) {
                        all_meet = false;
                        break;
                    }
                if (all_meet)
                    literal = literal.with(x);
            }
            tally.record(true, closure(s, a) == literal && theta_closure(s, a) == literal,
                         [&] { return subset_violation(s, "open-theta-closure", a); });
        }
    });
}

inline Tally a_open_meet_e_open(const CorpusSpec& spec)
{
    return over_spaces(spec, [](const FinSpace& s, Tally& tally) {
        const auto& t = tables(s);
        for (auto a : t.families[index_of(SetKind::AOpen)])
            for (auto b : t.families[index_of(SetKind::EOpen)])
                tally.record(true, t.in(SetKind::EOpen, a & b), [&] {
                    auto out = subset_violation(s, "a-open-meet-e-open", a);
                    out["B"] = mask_to_json(s, b);
                    return out;
                });
    });
}

/// Inclusions between kind families that hold on every space.
inline constexpr std::array<std::pair<SetKind, SetKind>, 14> kFamilyChains = {{
    {SetKind::RegularOpen, SetKind::Open},
    {SetKind::Open, SetKind::Semiopen},
    {SetKind::Open, SetKind::Preopen},
    {SetKind::Semiopen, SetKind::BOpen},
    {SetKind::Preopen, SetKind::BOpen},
    {SetKind::Preopen, SetKind::EOpen},
    {SetKind::AOpen, SetKind::EOpen},
    {SetKind::DeltaOpen, SetKind::Open},
    {SetKind::ThetaOpen, SetKind::DeltaOpen},
    {SetKind::ERegular, SetKind::EThetaOpen},
    {SetKind::EThetaOpen, SetKind::EOpen},
    {SetKind::Clopen, SetKind::ERegular},
    {SetKind::Clopen, SetKind::BRegular},
    {SetKind::RegularOpen, SetKind::DeltaOpen},
}};

inline Tally family_chains(const CorpusSpec& spec)
{
    return over_spaces(spec, [](const FinSpace& s, Tally& tally) {
        const auto& t = tables(s);
        for_each_subset(s.size(), [&](SubsetMask a) {
            std::string law;
            for (auto [sub, sup] : kFamilyChains)
                if (law.empty() && t.in(sub, a) && !t.in(sup, a))
                    law = std::string(to_string(sub)) + " within " + std::string(to_string(sup));
            for (auto k : kAllKinds)
                if (law.empty() && t.in(k, a) != t.in(dual(k), a.complement(s.size())))
                    law = std::string(to_string(k)) + " complement duality";
            tally.record(true, law.empty(), [&] { return subset_violation(s, law, a); });
        });
        bool ends = true;
        for (auto k : kAllKinds)
            ends = ends && t.in(k, SubsetMask()) && t.in(k, s.full());
        tally.record(true, ends, [&] { return space_violation(s, "every family holds the empty and full sets"); });
    });
}

inline Tally clopen_t2_implies_er_t2(const CorpusSpec& spec)
{
    return over_spaces(spec, [](const FinSpace& s, Tally& tally) {
        tally.record(sep_axiom(s, SepAxiom::ClopenT2), sep_axiom(s, SepAxiom::ERT2),
                     [&] { return space_violation(s, "clopen-T2 without eR-T2"); });
    });
}

// ---------------------------------------------------------------------------
// Map-level statements

inline Tally class_implication(const CorpusSpec& spec, FnClass premise, FnClass conclusion)
{
    return over_maps(spec, [=] {
        return [=](MapEvaluator& ev, std::span<const std::uint8_t> t, Tally& tally) {
            const bool hyp = ev.holds(premise);
            tally.record(hyp, !hyp || ev.holds(conclusion), [&] { return map_violation(map_of(ev, t)); });
        };
    });
}

inline Tally diagram(const CorpusSpec& spec)
{
    return over_maps(spec, [] {
        return [](MapEvaluator& ev, std::span<const std::uint8_t> t, Tally& tally) {
            std::array<bool, kClassCount> h{};
            for (auto c : kAllClasses)
                h[index_of(c)] = ev.holds(c);
            for (const auto& a : kDiagramArrows) {
                const bool hyp = h[index_of(a.from)];
                tally.record(hyp, h[index_of(a.to)], [&] {
                    return map_violation(map_of(ev, t),
                                         std::string(to_string(a.from)) + " => " + std::string(to_string(a.to)));
                });
            }
        };
    });
}

inline Tally char_equivalence(const CorpusSpec& spec)
{
    return over_maps(spec, [] {
        return [](MapEvaluator& ev, std::span<const std::uint8_t> t, Tally& tally) {
            const auto f = map_of(ev, t);
            const bool v1 = weR_characterization(f, 1);
            int bad = 0;
            for (int v = 2; v <= kCharacterizationCount && !bad; ++v)
                if (weR_characterization(f, v) != v1)
                    bad = v;
            const bool direct = ev.holds(FnClass::WeaklyERContinuous);
            tally.record(true, bad == 0 && direct == v1, [&] {
                auto out = map_violation(f, "variants disagree");
                out["variant_1"] = v1;
                out["disagreeing_variant"] = bad ? bad : 1;
                return out;
            });
        };
    });
}

inline Tally pointwise_char(const CorpusSpec& spec)
{
    return over_maps(spec, [] {
        return [](MapEvaluator& ev, std::span<const std::uint8_t> t, Tally& tally) {
            const auto f = map_of(ev, t);
            const auto& ty = ev.cod_tables();
            for (unsigned x = 0; x < f.dom().size(); ++x) {
                bool membership = true;
                for (auto v : f.cod().opens())
                    if (v.contains(f(x)) &&
                        !e_theta_interior(f.dom(), preimage(f, SubsetMask(ty.closure[v.bits()]))).contains(x))
                        membership = false;
                tally.record(true, weakly_eR_continuous_at(f, x) == membership, [&] {
                    auto out = map_violation(f);
                    out["x"] = f.dom().label(x);
                    return out;
                });
            }
        };
    });
}

inline Tally nonempty_e_open(const CorpusSpec& spec)
{
    return over_maps(spec, [] {
        return [](MapEvaluator& ev, std::span<const std::uint8_t> t, Tally& tally) {
            const auto f = map_of(ev, t);
            const auto& tx = ev.dom_tables();
            const auto& ty = ev.cod_tables();
            for (unsigned x = 0; x < f.dom().size(); ++x) {
                const bool hyp = weakly_eR_continuous_at(f, x);
                bool ok = true;
                if (hyp)
                    for (auto v : f.cod().opens()) {
                        if (!v.contains(f(x)))
                            continue;
                        const auto bound =
                            e_theta_closure(f.dom(), preimage(f, SubsetMask(ty.closure[v.bits()])));
                        for (auto h : tx.families[index_of(SetKind::AOpen)]) {
                            if (!h.contains(x))
                                continue;
                            bool found = false;
                            for (auto u : tx.families[index_of(SetKind::EOpen)])
                                if (!u.empty() && u.subset_of(h) && u.subset_of(bound)) {
                                    found = true;
                                    break;
                                }
                            ok = ok && found;
                        }
                    }
                tally.record(hyp, ok, [&] {
                    auto out = map_violation(f);
                    out["x"] = f.dom().label(x);
                    return out;
                });
            }
        };
    });
}

inline Tally sufficient_condition(const CorpusSpec& spec)
{
    return over_maps(spec, [] {
        return [](MapEvaluator& ev, std::span<const std::uint8_t> t, Tally& tally) {
            const auto& tx = ev.dom_tables();
            const auto& ty = ev.cod_tables();
            bool hyp = true;
            for_each_subset(ev.cod().size(), [&](SubsetMask u) {
                hyp = hyp && tx.in(SetKind::EThetaClosed, SubsetMask(ev.preimage(ty.theta_closure[u.bits()])));
            });
            tally.record(hyp, ev.holds(FnClass::WeaklyERContinuous), [&] { return map_violation(map_of(ev, t)); });
        };
    });
}

inline Tally theta_open_preimages(const CorpusSpec& spec)
{
    return over_maps(spec, [] {
        return [](MapEvaluator& ev, std::span<const std::uint8_t> t, Tally& tally) {
            const auto& tx = ev.dom_tables();
            const auto& ty = ev.cod_tables();
            const bool hyp = ev.holds(FnClass::WeaklyERContinuous);
            std::string law;
            if (hyp) {
                for (auto u : ty.families[index_of(SetKind::ThetaOpen)])
                    if (law.empty() && !tx.in(SetKind::EThetaOpen, SubsetMask(ev.preimage(u.bits()))))
                        law = "theta-open preimage";
                for (auto v : ty.families[index_of(SetKind::ThetaClosed)])
                    if (law.empty() && !tx.in(SetKind::EThetaClosed, SubsetMask(ev.preimage(v.bits()))))
                        law = "theta-closed preimage";
            }
            tally.record(hyp, law.empty(), [&] { return map_violation(map_of(ev, t), law); });
        };
    });
}

inline Tally regular_codomain(const CorpusSpec& spec)
{
    return over_maps(spec, [] {
        return [axioms = AxiomCache()](MapEvaluator& ev, std::span<const std::uint8_t> t, Tally& tally) mutable {
            const bool hyp = axioms(ev.cod(), SepAxiom::Regular);
            tally.record(hyp,
                         !hyp || ev.holds(FnClass::WeaklyERContinuous) ==
                                     ev.holds(FnClass::StronglyThetaEContinuous),
                         [&] { return map_violation(map_of(ev, t)); });
        };
    });
}

inline Tally strong_theta_e_char(const CorpusSpec& spec)
{
    return over_maps(spec, [] {
        return [](MapEvaluator& ev, std::span<const std::uint8_t> t, Tally& tally) {
            const auto f = map_of(ev, t);
            const bool by_closure = ev.holds(FnClass::StronglyThetaEContinuous);
            tally.record(true, by_closure == strongly_theta_e_by_regular(f), [&] {
                auto out = map_violation(f);
                out["by_e_closure"] = by_closure;
                return out;
            });
        };
    });
}

inline Tally injection_axiom(const CorpusSpec& spec, SepAxiom on_codomain, SepAxiom on_domain)
{
    return over_maps(spec, [=] {
        return [=, axioms = AxiomCache()](MapEvaluator& ev, std::span<const std::uint8_t> t, Tally& tally) mutable {
            const auto f = map_of(ev, t);
            const bool hyp =
                f.injective() && axioms(ev.cod(), on_codomain) && ev.holds(FnClass::WeaklyERContinuous);
            tally.record(hyp, !hyp || axioms(ev.dom(), on_domain), [&] { return map_violation(f); });
        };
    });
}

inline Tally connectedness(const CorpusSpec& spec)
{
    return over_maps(spec, [] {
        return [](MapEvaluator& ev, std::span<const std::uint8_t> t, Tally& tally) {
            const auto f = map_of(ev, t);
            const bool hyp = f.surjective() && is_e_connected(ev.dom()) && ev.holds(FnClass::WeaklyERContinuous);
            tally.record(hyp, !hyp || is_connected(ev.cod()), [&] { return map_violation(f); });
        };
    });
}

/// Every pair (f, g) of maps between each pair of corpus spaces.
inline Tally equalizer_theorem(const CorpusSpec& spec)
{
    Tally tally;
    if (spec.n_max == 0)
        return tally;
    std::vector<std::vector<FinSpace>> spaces(spec.n_max + 1);
    for (unsigned n = 1; n <= spec.n_max; ++n)
        spaces[n] = enumerate_topologies(n);
    for (unsigned m = 1; m <= spec.n_max; ++m)
        for (unsigned k = 1; k <= spec.n_max; ++k)
            for (const auto& x : spaces[m])
                for (const auto& y : spaces[k]) {
                    const auto maps = enumerate_functions(x, y);
                    if (!sep_axiom(y, SepAxiom::Urysohn)) {
                        tally.examined += maps.size() * maps.size();
                        continue;
                    }
                    MapEvaluator ev(x, y);
                    std::vector<bool> weak_er, weak_a;
                    for (const auto& f : maps) {
                        ev.bind(f.targets());
                        weak_er.push_back(ev.holds(FnClass::WeaklyERContinuous));
                        weak_a.push_back(ev.holds(FnClass::WeaklyAContinuous));
                    }
                    for (std::size_t i = 0; i < maps.size(); ++i)
                        for (std::size_t j = 0; j < maps.size(); ++j) {
                            const bool hyp = weak_er[i] && weak_a[j];
                            tally.record(hyp, !hyp || is_member(x, SetKind::EClosed, equalizer(maps[i], maps[j])), [&] {
                                auto out = map_violation(maps[i]);
                                out["g"] = map_to_json(maps[j]);
                                return out;
                            });
                        }
                }
    return tally;
}

/// Weakly eR-continuous maps of a corpus, in corpus order.
inline std::vector<PointMap> weakly_er_maps(unsigned n_max)
{
    std::vector<PointMap> out;
    const MapCorpus corpus(n_max);
    walk_corpus(corpus, 0, corpus.total(), [&](std::uint64_t, MapEvaluator& ev, std::span<const std::uint8_t> t) {
        ev.bind(t);
        if (ev.holds(FnClass::WeaklyERContinuous))
            out.push_back(map_of(ev, t));
    });
    return out;
}

/// Product spaces built once per ordered factor list.
class ProductCache {
public:
    const ProductSpace& operator()(const std::vector<FinSpace>& factors)
    {
        std::vector<const void*> key;
        for (const auto& f : factors)
            key.push_back(&f.data());
        auto it = cache_.find(key);
        if (it == cache_.end())
            it = cache_.emplace(key, product(factors)).first;
        return it->second;
    }

private:
    std::map<std::vector<const void*>, ProductSpace> cache_;
};

/// Two factors: first over MapCorpus(n_max), second over MapCorpus(min(n_max, 2)).
/// Three factors: every factor over MapCorpus(min(n_max, 2)).
inline Tally product_theorem(const CorpusSpec& spec)
{
    Tally tally;
    if (spec.n_max == 0)
        return tally;
    const unsigned small = std::min(spec.n_max, 2u);
    const auto big_maps = weakly_er_maps(spec.n_max);
    const auto small_maps = weakly_er_maps(small);
    const std::uint64_t big_total = MapCorpus(spec.n_max).total();
    const std::uint64_t small_total = MapCorpus(small).total();

    auto check = [](ProductCache& cache, const std::vector<PointMap>& parts, Tally& t) {
        std::vector<FinSpace> doms, cods;
        for (const auto& p : parts) {
            doms.push_back(p.dom());
            cods.push_back(p.cod());
        }
        const auto& dom = cache(doms);
        const auto& cod = cache(cods);
        const auto f = product_map(parts, dom, cod);
        t.record(true, is_in_class(f, FnClass::WeaklyERContinuous), [&] {
            json out;
            out["factors"] = json::array();
            for (const auto& p : parts)
                out["factors"].push_back(map_to_json(p));
            return out;
        });
    };

    std::vector<Tally> parts(std::max(1u, spec.jobs));
    parallel_ranges(0, big_maps.size(), spec.jobs, [&](std::uint64_t a, std::uint64_t b, unsigned j) {
        ProductCache cache;
        for (auto i = a; i < b; ++i)
            for (const auto& g : small_maps)
                check(cache, {big_maps[i], g}, parts[j]);
    });
    std::vector<Tally> triples(std::max(1u, spec.jobs));
    parallel_ranges(0, small_maps.size(), spec.jobs, [&](std::uint64_t a, std::uint64_t b, unsigned j) {
        ProductCache cache;
        for (auto i = a; i < b; ++i)
            for (const auto& g : small_maps)
                for (const auto& h : small_maps)
                    check(cache, {small_maps[i], g, h}, triples[j]);
    });
    for (auto& p : parts)
        tally.merge(std::move(p));
    for (auto& p : triples)
        tally.merge(std::move(p));
    // Candidates outside the hypothesis were never materialized.
    tally.examined = big_total * small_total + small_total * small_total * small_total;
    return tally;
}

inline Tally graph_function(const CorpusSpec& spec)
{
    return over_maps(spec, [] {
        return [cache = ProductCache()](MapEvaluator& ev, std::span<const std::uint8_t> t, Tally& tally) mutable {
            const auto f = map_of(ev, t);
            const auto g = graph_map(f, cache({ev.dom(), ev.cod()}));
            const bool hyp = is_in_class(g, FnClass::WeaklyERContinuous);
            tally.record(hyp, !hyp || ev.holds(FnClass::WeaklyERContinuous), [&] { return map_violation(f); });
        };
    });
}

inline Tally er_graph_forms(const CorpusSpec& spec)
{
    return over_maps(spec, [] {
        return [cache = ProductCache()](MapEvaluator& ev, std::span<const std::uint8_t> t, Tally& tally) mutable {
            const auto f = map_of(ev, t);
            const bool lemma = has_er_graph(f);
            tally.record(true, lemma == has_er_graph_in_product(f, cache({ev.dom(), ev.cod()})), [&] {
                auto out = map_violation(f);
                out["lemma_form"] = lemma;
                return out;
            });
        };
    });
}

inline Tally er_graph_urysohn(const CorpusSpec& spec)
{
    return over_maps(spec, [] {
        return [axioms = AxiomCache()](MapEvaluator& ev, std::span<const std::uint8_t> t, Tally& tally) mutable {
            const auto f = map_of(ev, t);
            const bool hyp = axioms(ev.cod(), SepAxiom::Urysohn) && ev.holds(FnClass::WeaklyERContinuous);
            tally.record(hyp, !hyp || has_er_graph(f), [&] { return map_violation(f); });
        };
    });
}

inline Tally er_graph_er_t2(const CorpusSpec& spec)
{
    return over_maps(spec, [] {
        return [axioms = AxiomCache()](MapEvaluator& ev, std::span<const std::uint8_t> t, Tally& tally) mutable {
            const auto f = map_of(ev, t);
            const bool hyp = f.injective() && ev.holds(FnClass::WeaklyERContinuous) && has_er_graph(f);
            tally.record(hyp, !hyp || axioms(ev.dom(), SepAxiom::ERT2), [&] { return map_violation(f); });
        };
    });
}

inline Tally theta_closed_images(const CorpusSpec& spec)
{
    return over_maps(spec, [] {
        return [](MapEvaluator& ev, std::span<const std::uint8_t> t, Tally& tally) {
            const auto f = map_of(ev, t);
            const bool hyp = has_er_graph(f);
            std::optional<SubsetMask> bad;
            if (hyp)
                for_each_subset(f.dom().size(), [&](SubsetMask k) {
                    if (!bad && eR_compact_relative(f.dom(), k) && !theta_closed_image_check(f, k))
                        bad = k;
                });
            tally.record(hyp, !bad, [&] {
                auto out = map_violation(f);
                out["K"] = mask_to_json(f.dom(), *bad);
                return out;
            });
        };
    });
}

}  // namespace detail

struct TheoremInfo {
    std::string_view id;
    std::string_view statement;
    detail::Tally (*run)(const CorpusSpec&);
};

inline const std::vector<TheoremInfo>& theorem_registry()
{
    using namespace detail;
    static const std::vector<TheoremInfo> registry = {
        {"e-theta-closure-laws",
         "e-cl_theta is extensive over e-cl, monotone, idempotent, dual to e-int_theta, equal to its e-regular and "
         "cluster forms; e-theta-closed/open sets form a lattice",
         e_theta_closure_laws},
        {"open-theta-closure", "cl(A) = cl_theta(A) for open A", open_theta_closure},
        {"a-open-meet-e-open", "A in aO(X), B in eO(X) => A & B in eO(X)", a_open_meet_e_open},
        {"family-chains", "inclusions between set families and complement duality of every kind", family_chains},
        {"eR-implies-weakly-eR", "eR-continuous => weakly eR-continuous",
         [](const CorpusSpec& s) {
             return class_implication(s, FnClass::ERContinuous, FnClass::WeaklyERContinuous);
         }},
        {"eR-implies-e-continuous", "eR-continuous => e-continuous",
         [](const CorpusSpec& s) { return class_implication(s, FnClass::ERContinuous, FnClass::EContinuous); }},
        {"contra-implies-weakly-eR", "contra e-theta-continuous => weakly eR-continuous",
         [](const CorpusSpec& s) {
             return class_implication(s, FnClass::ContraEThetaContinuous, FnClass::WeaklyERContinuous);
         }},
        {"diagram", "every arrow of the implication diagram", diagram},
        {"char-equivalence", "the eleven characterizations of weak eR-continuity agree", char_equivalence},
        {"pointwise-char", "weakly eR-continuous at x <=> x in e-int_theta(f^-1[cl V]) for every open V ∋ f(x)",
         pointwise_char},
        {"nonempty-e-open",
         "weakly eR-continuous at x => for open V ∋ f(x) and a-open H ∋ x some nonempty e-open U ⊆ H lies in "
         "e-cl_theta(f^-1[cl V])",
         nonempty_e_open},
        {"sufficient-condition", "f^-1[cl_theta U] e-theta-closed for every U => weakly eR-continuous",
         sufficient_condition},
        {"theta-open-preimages",
         "weakly eR-continuous => theta-open preimages are e-theta-open, theta-closed preimages e-theta-closed",
         theta_open_preimages},
        {"regular-codomain", "Y regular => (weakly eR-continuous <=> strongly theta-e-continuous)", regular_codomain},
        {"strong-theta-e-char",
         "strongly theta-e-continuous <=> every open V ∋ f(x) has U in eR(X, x) with f[U] ⊆ V", strong_theta_e_char},
        {"clopen-t2-implies-eR-t2", "clopen-T2 => eR-T2", clopen_t2_implies_er_t2},
        {"injection-eR-t1", "weakly eR-continuous injection into a Hausdorff space => domain eR-T1",
         [](const CorpusSpec& s) { return injection_axiom(s, SepAxiom::Hausdorff, SepAxiom::ERT1); }},
        {"injection-eR-t2", "weakly eR-continuous injection into an Urysohn space => domain eR-T2",
         [](const CorpusSpec& s) { return injection_axiom(s, SepAxiom::Urysohn, SepAxiom::ERT2); }},
        {"connectedness", "weakly eR-continuous surjection from an e-connected space => codomain connected",
         connectedness},
        {"equalizer", "f weakly eR-continuous, g weakly a-continuous, Y Urysohn => {f = g} e-closed",
         equalizer_theorem},
        {"product", "weakly eR-continuous factors => weakly eR-continuous product map", product_theorem},
        {"graph-function", "weakly eR-continuous graph function => weakly eR-continuous f", graph_function},
        {"er-graph-forms", "er-graph on the product agrees with the image form", er_graph_forms},
        {"er-graph-urysohn", "weakly eR-continuous into an Urysohn space => er-graph", er_graph_urysohn},
        {"er-graph-eR-t2", "er-graph and weakly eR-continuous injection => domain eR-T2", er_graph_er_t2},
        {"theta-closed-images", "er-graph => f[K] theta-closed for every eR-compact K", theta_closed_images},
    };
    return registry;
}

inline TheoremReport verify_theorem(std::string_view id, const CorpusSpec& spec)
{
    const auto& reg = theorem_registry();
    auto it = std::find_if(reg.begin(), reg.end(), [&](const TheoremInfo& t) { return t.id == id; });
    if (it == reg.end())
        throw Error(ErrorCode::UnknownTheoremId, "unknown theorem id '" + std::string(id) + "'");
    const auto t0 = std::chrono::steady_clock::now();
    auto tally = it->run(spec);
    TheoremReport r;
    r.id = std::string(it->id);
    r.statement = std::string(it->statement);
    r.corpus = spec;
    r.examined = tally.examined;
    r.hypothesis_satisfied = tally.satisfied;
    r.violations = tally.violations;
    r.first_violation = std::move(tally.first);
    r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

}  // namespace finitop
