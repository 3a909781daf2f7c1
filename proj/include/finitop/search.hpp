#pragma once

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "classify.hpp"
#include "enumerate.hpp"
#include "json_io.hpp"

namespace finitop {

/// Every (domain, codomain, map) triple with both spaces on 1..n_max points.
///
/// Candidates are ordered by max(|X|, |Y|), then |X|, then |Y|, then domain
/// and codomain enumeration index, then maps lexicographically. A search up
/// to n is therefore a prefix of the search up to n + 1.
class MapCorpus {
public:
    explicit MapCorpus(unsigned n_max, unsigned enumeration_limit = kDefaultEnumerationLimit) : n_max_(n_max)
    {
        if (n_max < 1 || n_max > enumeration_limit)
            throw Error(ErrorCode::SizeUnsupported,
                        "corpus supports 1 <= n <= " + std::to_string(enumeration_limit));
        spaces_.resize(n_max + 1);
        for (unsigned n = 1; n <= n_max; ++n)
            spaces_[n] = enumerate_topologies(n, false, enumeration_limit);
        for (unsigned top = 1; top <= n_max; ++top)
            for (unsigned m = 1; m <= top; ++m)
                for (unsigned k = 1; k <= top; ++k) {
                    if (std::max(m, k) != top)
                        continue;
                    Block b{m, k, total_, function_count(m, k)};
                    total_ += static_cast<std::uint64_t>(spaces_[m].size()) * spaces_[k].size() * b.maps;
                    blocks_.push_back(b);
                }
    }

    unsigned n_max() const noexcept { return n_max_; }
    std::uint64_t total() const noexcept { return total_; }
    const std::vector<FinSpace>& spaces(unsigned n) const { return spaces_.at(n); }

    struct Location {
        unsigned m = 0, k = 0;
        std::size_t dom = 0, cod = 0;
        std::uint64_t map = 0;
        std::uint64_t group_begin = 0;  // index of the first map of this space pair
        std::uint64_t group_end = 0;
    };

    Location locate(std::uint64_t index) const
    {
        auto it = std::upper_bound(blocks_.begin(), blocks_.end(), index,
                                   [](std::uint64_t i, const Block& b) { return i < b.offset; });
        const Block& b = *std::prev(it);
        const std::uint64_t rel = index - b.offset;
        const std::uint64_t pair = rel / b.maps;
        Location loc;
        loc.m = b.m;
        loc.k = b.k;
        loc.dom = static_cast<std::size_t>(pair / spaces_[b.k].size());
        loc.cod = static_cast<std::size_t>(pair % spaces_[b.k].size());
        loc.map = rel % b.maps;
        loc.group_begin = index - loc.map;
        loc.group_end = loc.group_begin + b.maps;
        return loc;
    }

    PointMap map_at(std::uint64_t index) const
    {
        const auto loc = locate(index);
        std::vector<std::uint8_t> t(loc.m);
        function_at(loc.map, loc.m, loc.k, t.data());
        return PointMap(spaces_[loc.m][loc.dom], spaces_[loc.k][loc.cod], std::move(t));
    }

private:
    struct Block {
        unsigned m, k;
        std::uint64_t offset;
        std::uint64_t maps;
    };

    unsigned n_max_;
    std::vector<std::vector<FinSpace>> spaces_;
    std::vector<Block> blocks_;
    std::uint64_t total_ = 0;
};

/// Per-candidate outcome reported by a scan predicate.
struct CandidateOutcome {
    std::uint8_t calls = 0;
    bool witness = false;
};

struct ScanResult {
    std::uint64_t examined = 0;
    std::uint64_t calls = 0;
    std::optional<std::uint64_t> witness;
    std::optional<std::uint64_t> cursor;  // set when the budget stopped the scan
};

inline constexpr std::uint64_t kUnlimited = std::numeric_limits<std::uint64_t>::max();

/// Calls fn(index, evaluator, targets) for every candidate in [lo, hi),
/// reusing one evaluator per space pair.
template <typename Fn>
void walk_corpus(const MapCorpus& corpus, std::uint64_t lo, std::uint64_t hi, Fn&& fn)
{
    std::optional<MapEvaluator> ev;
    std::uint64_t group_end = 0;
    std::array<std::uint8_t, 32> t{};
    for (std::uint64_t i = lo; i < hi; ++i) {
        if (!ev || i >= group_end) {
            const auto loc = corpus.locate(i);
            ev.emplace(corpus.spaces(loc.m)[loc.dom], corpus.spaces(loc.k)[loc.cod]);
            group_end = loc.group_end;
            function_at(loc.map, loc.m, loc.k, t.data());
        } else {
            // Lexicographic successor.
            const unsigned m = ev->dom().size();
            const unsigned k = ev->cod().size();
            for (unsigned p = m; p-- > 0;) {
                if (++t[p] < k)
                    break;
                t[p] = 0;
            }
        }
        fn(i, *ev, std::span<const std::uint8_t>(t.data(), ev->dom().size()));
    }
}

/// Splits [lo, hi) into at most `jobs` contiguous ranges and runs
/// fn(a, b, part) on each, in parallel. Part numbers follow index order.
template <typename Fn>
void parallel_ranges(std::uint64_t lo, std::uint64_t hi, unsigned jobs, Fn&& fn)
{
    jobs = std::max(1u, jobs);
    if (jobs == 1 || hi - lo < jobs) {
        fn(lo, hi, 0u);
        return;
    }
    std::vector<std::thread> threads;
    const std::uint64_t per = (hi - lo + jobs - 1) / jobs;
    for (unsigned j = 0; j < jobs; ++j) {
        const std::uint64_t a = lo + j * per;
        const std::uint64_t b = std::min(hi, a + per);
        if (a >= b)
            break;
        threads.emplace_back([&fn, a, b, j] { fn(a, b, j); });
    }
    for (auto& th : threads)
        th.join();
}

/// Walks [lo, hi) split across `jobs` threads.
template <typename Fn>
void parallel_walk(const MapCorpus& corpus, std::uint64_t lo, std::uint64_t hi, unsigned jobs, Fn fn)
{
    parallel_ranges(lo, hi, jobs, [&](std::uint64_t a, std::uint64_t b, unsigned) { walk_corpus(corpus, a, b, fn); });
}

/// Scans candidates from `start` until a witness, the end, or the budget.
///
/// Candidates are evaluated in blocks split across `jobs` threads; outcomes
/// are merged in index order, so the result does not depend on `jobs`.
/// `eval(MapEvaluator&, targets)` decides one candidate.
template <typename Eval>
ScanResult scan_corpus(const MapCorpus& corpus, std::uint64_t start, std::uint64_t budget, unsigned jobs, Eval eval)
{
    ScanResult r;
    if (start > corpus.total())
        throw Error(ErrorCode::InvalidArgument, "resume cursor beyond the end of the corpus");
    jobs = std::max(1u, jobs);
    constexpr std::uint64_t kChunk = std::uint64_t{1} << 15;
    std::vector<CandidateOutcome> outcomes;

    std::uint64_t pos = start;
    while (pos < corpus.total()) {
        const std::uint64_t block = std::min<std::uint64_t>(kChunk * jobs, corpus.total() - pos);
        outcomes.assign(block, {});
        parallel_walk(corpus, pos, pos + block, jobs,
                      [&](std::uint64_t i, MapEvaluator& ev, std::span<const std::uint8_t> t) {
                          outcomes[i - pos] = eval(ev, t);
                      });
        for (std::uint64_t i = 0; i < block; ++i) {
            const auto& o = outcomes[i];
            if (budget != kUnlimited && r.calls + o.calls > budget) {
                r.cursor = pos + i;
                return r;
            }
            r.calls += o.calls;
            ++r.examined;
            if (o.witness) {
                r.witness = pos + i;
                return r;
            }
        }
        pos += block;
    }
    return r;
}

enum class SearchStatus { Completed, WitnessFound, BudgetExceeded };

inline const char* to_string(SearchStatus s)
{
    switch (s) {
    case SearchStatus::Completed: return "completed";
    case SearchStatus::WitnessFound: return "witness";
    case SearchStatus::BudgetExceeded: return "budget-exceeded";
    }
    return "completed";
}

/// Process exit code for a finished search: 0 completed, 2 witness, 3 budget.
inline int exit_code(SearchStatus s)
{
    switch (s) {
    case SearchStatus::Completed: return 0;
    case SearchStatus::WitnessFound: return 2;
    case SearchStatus::BudgetExceeded: return 3;
    }
    return 0;
}

struct SearchOptions {
    unsigned n_max = 3;
    std::uint64_t budget = kUnlimited;  // classifier calls
    std::uint64_t resume = 0;
    unsigned jobs = 1;
};

struct SearchReport {
    std::string question;
    FnClass premise = FnClass::WeaklyEContinuous;
    FnClass conclusion = FnClass::WeaklyERContinuous;
    unsigned n_max = 0;
    std::uint64_t start = 0;
    std::uint64_t examined = 0;
    std::uint64_t classifier_calls = 0;
    std::uint64_t corpus_size = 0;
    SearchStatus status = SearchStatus::Completed;
    std::optional<std::uint64_t> witness_index;
    std::optional<PointMap> witness;
    std::optional<std::uint64_t> resumable_cursor;
    double wall_seconds = 0;
};

/// Looks for a map in `premise` but not in `conclusion`. Each candidate costs
/// one classifier call, plus one more when the premise holds.
inline SearchReport verify_implication(FnClass premise, FnClass conclusion, const SearchOptions& opt,
                                       std::string question = {})
{
    const auto t0 = std::chrono::steady_clock::now();
    const MapCorpus corpus(opt.n_max);
    SearchReport rep;
    rep.question = question.empty()
                       ? std::string(to_string(premise)) + " => " + std::string(to_string(conclusion))
                       : std::move(question);
    rep.premise = premise;
    rep.conclusion = conclusion;
    rep.n_max = opt.n_max;
    rep.start = opt.resume;
    rep.corpus_size = corpus.total();

    const auto r = scan_corpus(corpus, opt.resume, opt.budget, opt.jobs,
                               [&](MapEvaluator& ev, std::span<const std::uint8_t> t) {
                                   ev.bind(t);
                                   CandidateOutcome o{1, false};
                                   if (ev.holds(premise)) {
                                       o.calls = 2;
                                       o.witness = !ev.holds(conclusion);
                                   }
                                   return o;
                               });
    rep.examined = r.examined;
    rep.classifier_calls = r.calls;
    if (r.witness) {
        rep.status = SearchStatus::WitnessFound;
        rep.witness_index = r.witness;
        rep.witness = corpus.map_at(*r.witness);
    } else if (r.cursor) {
        rep.status = SearchStatus::BudgetExceeded;
        rep.resumable_cursor = r.cursor;
    }
    rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

/// Searches for a weakly e-continuous map that is not weakly eR-continuous.
inline SearchReport open_question_search(const SearchOptions& opt)
{
    return verify_implication(FnClass::WeaklyEContinuous, FnClass::WeaklyERContinuous, opt, "open-question");
}

/// Re-checks a reported witness from scratch.
inline bool reverify(const SearchReport& rep)
{
    if (!rep.witness)
        return false;
    const auto report = classify_all(*rep.witness);
    return report.holds(rep.premise) && !report.holds(rep.conclusion);
}

inline json search_report_to_json(const SearchReport& r)
{
    json out;
    out["question"] = r.question;
    out["premise"] = std::string(to_string(r.premise));
    out["conclusion"] = std::string(to_string(r.conclusion));
    out["searched"] = {{"n_max", r.n_max}, {"start", r.start}, {"corpus_size", r.corpus_size}};
    out["status"] = to_string(r.status);
    out["examined"] = r.examined;
    out["classifier_calls"] = r.classifier_calls;
    if (r.witness) {
        out["witness_index"] = *r.witness_index;
        out["witness"] = map_to_json(*r.witness);
        out["reverified"] = reverify(r);
    }
    if (r.resumable_cursor)
        out["resumable_cursor"] = *r.resumable_cursor;
    return out;
}

/// An arrow of the implication diagram among continuity classes.
struct Arrow {
    FnClass from;
    FnClass to;
};

/// Arrows drawn in the implication diagram.
inline constexpr std::array<Arrow, 19> kDiagramArrows = {{
    {FnClass::StronglyThetaContinuous, FnClass::StronglyThetaSemicontinuous},
    {FnClass::StronglyThetaContinuous, FnClass::StronglyThetaPrecontinuous},
    {FnClass::StronglyThetaSemicontinuous, FnClass::StronglyThetaBContinuous},
    {FnClass::StronglyThetaPrecontinuous, FnClass::StronglyThetaBContinuous},
    {FnClass::StronglyThetaPrecontinuous, FnClass::StronglyThetaEContinuous},
    {FnClass::StronglyThetaBContinuous, FnClass::WeaklyBRContinuous},
    {FnClass::StronglyThetaEContinuous, FnClass::WeaklyERContinuous},
    {FnClass::BRContinuous, FnClass::WeaklyBContinuous},
    {FnClass::BRContinuous, FnClass::WeaklyBRContinuous},
    {FnClass::WeaklyBRContinuous, FnClass::WeaklyBContinuous},
    {FnClass::WeaklyClopen, FnClass::WeaklyBContinuous},
    {FnClass::WeaklyClopen, FnClass::WeaklyBRContinuous},
    {FnClass::WeaklyClopen, FnClass::WeaklyERContinuous},
    {FnClass::WeaklyClopen, FnClass::WeaklyEContinuous},
    {FnClass::WeaklyERContinuous, FnClass::WeaklyEContinuous},
    {FnClass::ERContinuous, FnClass::WeaklyERContinuous},
    {FnClass::ERContinuous, FnClass::WeaklyEContinuous},
    {FnClass::ERContinuous, FnClass::EContinuous},
    {FnClass::EContinuous, FnClass::WeaklyEContinuous},
}};

/// Arrows proved as separate theorems, checked one size further.
inline constexpr std::array<Arrow, 3> kTheoremArrows = {{
    {FnClass::ERContinuous, FnClass::WeaklyERContinuous},
    {FnClass::ERContinuous, FnClass::EContinuous},
    {FnClass::ContraEThetaContinuous, FnClass::WeaklyERContinuous},
}};

/// For every ordered class pair (a, b), the first corpus index with a ∧ ¬b.
struct ImplicationMatrix {
    std::uint64_t maps = 0;
    std::array<std::array<std::optional<std::uint64_t>, kClassCount>, kClassCount> first_counterexample{};
};

inline ImplicationMatrix implication_matrix(unsigned n_max, unsigned jobs = 1)
{
    const MapCorpus corpus(n_max);
    std::vector<std::uint32_t> bits(corpus.total());
    parallel_walk(corpus, 0, corpus.total(), jobs,
                  [&](std::uint64_t i, MapEvaluator& ev, std::span<const std::uint8_t> t) {
                      ev.bind(t);
                      std::uint32_t b = 0;
                      for (auto c : kAllClasses)
                          if (ev.holds(c))
                              b |= std::uint32_t{1} << index_of(c);
                      bits[i] = b;
                  });
    ImplicationMatrix m;
    m.maps = corpus.total();
    for (std::uint64_t i = 0; i < corpus.total(); ++i)
        for (std::size_t a = 0; a < kClassCount; ++a) {
            if (!((bits[i] >> a) & 1u))
                continue;
            for (std::size_t b = 0; b < kClassCount; ++b)
                if (!((bits[i] >> b) & 1u) && !m.first_counterexample[a][b])
                    m.first_counterexample[a][b] = i;
        }
    return m;
}

}  // namespace finitop
