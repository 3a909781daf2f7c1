// Acceptance run: one PASS/FAIL line per criterion. Exit status is nonzero
// when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <thread>

#include <finitop.hpp>

#include "oracles.hpp"

using namespace finitop;

namespace {

constexpr double kExampleSeconds = 1.0;
constexpr double kLawsSeconds = 60.0;
constexpr double kCharSeconds = 600.0;
constexpr double kOpenQuestionSeconds = 1800.0;
constexpr double kSuiteSeconds = 1800.0;
constexpr double kEnumerationSeconds = 60.0;
constexpr std::uint64_t kArrowBudget = 100'000'000;
constexpr std::uint64_t kPredictedCorpus = 24872;
constexpr unsigned kRandomSpaces = 500;

unsigned jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

struct Outcome {
    bool ok = false;
    std::string detail;
};

int failures = 0;

void criterion(int number, const char* name, double limit_seconds, const std::function<Outcome()>& body)
{
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = s < limit_seconds;
    const bool pass = o.ok && in_time;
    if (!pass)
        ++failures;
    std::printf("%s  %2d %-28s %9.3f s (limit %.0f s)%s  %s\n", pass ? "PASS" : "FAIL", number, name, s,
                limit_seconds, in_time ? "" : " TIMEOUT", o.detail.c_str());
    std::fflush(stdout);
}

Outcome example(const char* id, bool need_witness)
{
    const auto r = reproduce_example(id);
    std::string detail;
    bool ok = r.reproduced();
    for (const auto& c : r.claims) {
        detail += c.claim + "=" + (c.observed ? "true" : "false") + (c.matches() ? "" : "(expected " + std::string(c.expected ? "true" : "false") + ")") + " ";
        if (need_witness && !c.expected && c.detail.is_null())
            ok = false;
    }
    return {ok, detail};
}

Outcome theorem_suite(const std::vector<std::string>& ids, const CorpusSpec& spec)
{
    bool ok = true;
    std::string detail;
    for (const auto& id : ids) {
        const auto r = verify_theorem(id, spec);
        ok = ok && r.passed();
        detail += id + "[" + std::to_string(r.violations) + " viol, hyp " + std::to_string(r.hypothesis_satisfied) +
                  "/" + std::to_string(r.examined) + "] ";
    }
    return {ok, detail};
}

}  // namespace

int main()
{
    criterion(1, "example a<->e swap", kExampleSeconds, [] { return example("3.7", true); });
    criterion(2, "example a<->b swap", kExampleSeconds, [] { return example("3.8", true); });
    criterion(3, "example four-point swap", kExampleSeconds, [] { return example("3.9", false); });
    criterion(4, "example separation space", kExampleSeconds, [] { return example("4.4", false); });

    criterion(5, "e-theta-closure laws", kLawsSeconds, [] {
        CorpusSpec spec;
        spec.n_max = 3;
        spec.samples = kRandomSpaces;
        spec.random_n = 5;
        spec.jobs = jobs();
        return theorem_suite({"e-theta-closure-laws"}, spec);
    });

    criterion(6, "characterization agreement", kCharSeconds, [] {
        CorpusSpec spec;
        spec.n_max = 3;
        spec.jobs = jobs();
        return theorem_suite({"char-equivalence"}, spec);
    });

    criterion(7, "implication diagram", kSuiteSeconds, [] {
        SearchOptions opt;
        opt.n_max = 3;
        opt.jobs = jobs();
        bool ok = true;
        int clean = 0;
        for (const auto& a : kDiagramArrows) {
            const auto r = verify_implication(a.from, a.to, opt);
            ok = ok && r.status == SearchStatus::Completed;
            clean += r.status == SearchStatus::Completed;
        }
        std::string detail = std::to_string(clean) + "/" + std::to_string(kDiagramArrows.size()) + " arrows at n<=3; ";
        opt.n_max = 4;
        for (const auto& a : kTheoremArrows) {
            opt.budget = kArrowBudget;
            const auto r = verify_implication(a.from, a.to, opt);
            ok = ok && r.status == SearchStatus::Completed;
            detail += std::string(to_string(a.from)) + "=>" + std::string(to_string(a.to)) + " n<=4 " + to_string(r.status) + " (" +
                      std::to_string(r.classifier_calls) + " calls) ";
        }
        return Outcome{ok, detail};
    });

    criterion(8, "open-question search", kOpenQuestionSeconds, [] {
        SearchOptions opt;
        opt.n_max = 3;
        opt.jobs = jobs();
        const auto r = open_question_search(opt);
        bool ok = r.examined == kPredictedCorpus && r.corpus_size == kPredictedCorpus;
        std::string detail = "examined " + std::to_string(r.examined) + " of predicted " +
                             std::to_string(kPredictedCorpus) + "; ";
        if (r.status == SearchStatus::WitnessFound) {
            ok = ok && reverify(r);
            detail += "witness at " + std::to_string(*r.witness_index) + (reverify(r) ? " re-verified" : " NOT re-verified");
        } else {
            ok = ok && r.status == SearchStatus::Completed;
            detail += "witness none";
        }
        return Outcome{ok, detail};
    });

    criterion(9, "map theorem suite", kSuiteSeconds, [] {
        CorpusSpec spec;
        spec.n_max = 3;
        spec.jobs = jobs();
        return theorem_suite({"connectedness", "equalizer", "injection-eR-t1", "injection-eR-t2", "product",
                              "graph-function", "er-graph-forms", "er-graph-urysohn", "er-graph-eR-t2",
                              "theta-closed-images"},
                             spec);
    });

    criterion(10, "topology enumeration", kEnumerationSeconds, [] {
        const std::size_t expected[] = {1, 4, 29, 355};
        bool ok = true;
        std::string detail = "counts";
        for (unsigned n = 1; n <= 4; ++n) {
            const auto got = enumerate_topologies(n).size();
            ok = ok && got == expected[n - 1];
            detail += " " + std::to_string(got);
        }
        for (unsigned n = 1; n <= 3; ++n) {
            std::set<std::vector<std::uint32_t>> mine;
            for (const auto& s : enumerate_topologies(n)) {
                std::vector<std::uint32_t> b;
                for (auto u : s.opens())
                    b.push_back(u.bits());
                std::sort(b.begin(), b.end());
                mine.insert(b);
            }
            ok = ok && mine == oracle::all_topologies(n);
        }
        detail += ok ? "; brute-force oracle agrees at n<=3" : "; oracle mismatch";
        return Outcome{ok, detail};
    });

    std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
