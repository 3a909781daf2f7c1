#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include <finitop.hpp>

namespace {

using namespace finitop;

constexpr int kExitViolation = 1;
constexpr int kExitUsage = 64;
constexpr int kExitParse = 65;
constexpr int kExitDomain = 70;

/// Unreadable input files; mapped to the parse exit code.
struct FileError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

bool g_pretty = false;

void emit(const json& doc)
{
    std::cout << (g_pretty ? doc.dump(2) : doc.dump()) << '\n';
}

json read_json(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw FileError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::Parse, "'" + path + "': " + e.what());
    }
}

unsigned default_jobs()
{
    return std::max(1u, std::thread::hardware_concurrency());
}

int check_space(const std::string& file, bool strict)
{
    const auto v = space_from_json(read_json(file), strict);
    json out;
    out["valid"] = true;
    out["space"] = space_to_json(v.space);
    json added = json::array();
    for (auto a : v.added)
        added.push_back(mask_to_json(v.space, a));
    out["added"] = std::move(added);
    emit(out);
    return 0;
}

int families(const std::string& file, const std::vector<std::string>& kinds)
{
    const auto s = space_from_json(read_json(file), false).space;
    for (const auto& name : kinds) {
        const auto kind = parse_set_kind(name);
        json members = json::array();
        for (auto a : family(s, kind))
            members.push_back(mask_to_json(s, a));
        json out;
        out["kind"] = std::string(to_string(kind));
        out["count"] = members.size();
        out["members"] = std::move(members);
        emit(out);
    }
    return 0;
}

SubsetMask apply_operator(const FinSpace& s, const std::string& which, SubsetMask a, const std::string& kind)
{
    if (which == "interior") return interior(s, a);
    if (which == "closure") return closure(s, a);
    if (which == "delta-interior") return delta_interior(s, a);
    if (which == "delta-closure") return delta_closure(s, a);
    if (which == "theta-interior") return theta_interior(s, a);
    if (which == "theta-closure") return theta_closure(s, a);
    if (which == "e-theta-interior") return e_theta_interior(s, a);
    if (which == "e-theta-closure") return e_theta_closure(s, a);
    if (which == "kernel-closure" || which == "kernel-interior") {
        if (kind.empty())
            throw Error(ErrorCode::InvalidArgument, which + " needs --kind");
        const auto k = parse_set_kind(kind);
        return which == "kernel-closure" ? kernel_closure(s, k, a) : kernel_interior(s, k, a);
    }
    throw Error(ErrorCode::InvalidArgument, "unknown operator '" + which + "'");
}

int op(const std::string& file, const std::string& which, const std::string& set, const std::string& kind)
{
    const auto s = space_from_json(read_json(file), false).space;
    const auto a = parse_set(s, set);
    json out;
    out["op"] = which;
    if (!kind.empty())
        out["kind"] = kind;
    out["set"] = mask_to_json(s, a);
    out["result"] = mask_to_json(s, apply_operator(s, which, a, kind));
    emit(out);
    return 0;
}

int classify(const std::string& file, const std::vector<std::string>& classes)
{
    const auto f = map_from_json(read_json(file));
    if (classes.empty()) {
        for (const auto& v : classify_all(f).verdicts)
            emit(verdict_to_json(f, v));
        return 0;
    }
    for (const auto& name : classes) {
        const auto c = parse_fn_class(name);
        Verdict v{c, true, std::nullopt};
        Witness w;
        v.holds = is_in_class(f, c, &w);
        if (!v.holds)
            v.witness = w;
        emit(verdict_to_json(f, v));
    }
    return 0;
}

int verify(const std::vector<std::string>& ids, const CorpusSpec& spec)
{
    int code = 0;
    std::vector<std::string> run = ids;
    if (run.size() == 1 && run[0] == "all") {
        run.clear();
        for (const auto& t : theorem_registry())
            run.emplace_back(t.id);
    }
    for (const auto& id : run) {
        const auto r = verify_theorem(id, spec);
        emit(report_to_json(r));
        std::cerr << id << ": " << r.wall_seconds << " s\n";
        if (!r.passed())
            code = exit_code(SearchStatus::WitnessFound);
    }
    return code;
}

int reproduce(const std::vector<std::string>& ids)
{
    bool all = true;
    for (const auto& id : ids) {
        const auto r = reproduce_example(id);
        emit(example_to_json(r));
        all = all && r.reproduced();
    }
    return all ? 0 : kExitViolation;
}

int search(bool open_question, const std::string& implies, const SearchOptions& opt)
{
    SearchReport r;
    if (open_question) {
        r = open_question_search(opt);
    } else {
        const auto comma = implies.find(',');
        if (comma == std::string::npos)
            throw Error(ErrorCode::InvalidArgument, "--implies expects A,B");
        r = verify_implication(parse_fn_class(implies.substr(0, comma)), parse_fn_class(implies.substr(comma + 1)),
                               opt);
    }
    emit(search_report_to_json(r));
    std::cerr << r.question << ": " << r.wall_seconds << " s\n";
    return exit_code(r.status);
}

int enumerate(unsigned n, bool dedup)
{
    for (const auto& s : enumerate_topologies(n, dedup))
        emit(space_to_json(s));
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Finite topology verification engine"};
    app.require_subcommand(1);
    app.add_flag("--pretty", g_pretty, "Indent JSON output");

    std::string file, which, set, kind, implies;
    std::vector<std::string> kinds, classes, theorems, examples_run;
    bool strict = false, all = false, dedup = false, open_question = false;
    unsigned n = 1;
    CorpusSpec corpus;
    corpus.jobs = default_jobs();
    SearchOptions search_opt;
    search_opt.jobs = default_jobs();

    auto* c_check = app.add_subcommand("check-space", "Validate a space document");
    c_check->add_option("file", file, "Space document")->required();
    c_check->add_flag("--strict", strict, "Reject families that are not already topologies");

    auto* c_fam = app.add_subcommand("families", "List the members of set families");
    c_fam->add_option("file", file, "Space document")->required();
    c_fam->add_option("--kind", kinds, "Set kind, e.g. e-regular")->required();

    auto* c_op = app.add_subcommand("op", "Apply an operator to a subset");
    c_op->add_option("file", file, "Space document")->required();
    c_op->add_option("--which", which, "interior, closure, delta-*, theta-*, e-theta-*, kernel-*")->required();
    c_op->add_option("--set", set, "Comma-separated point labels")->required();
    c_op->add_option("--kind", kind, "Set kind for kernel operators");

    auto* c_cls = app.add_subcommand("classify", "Decide continuity classes of a map");
    c_cls->add_option("file", file, "Map document")->required();
    auto* o_class = c_cls->add_option("--class", classes, "Class name (repeatable)");
    auto* o_all = c_cls->add_flag("--all", all, "Every class (default)");
    o_class->excludes(o_all);

    auto* c_ver = app.add_subcommand("verify", "Check a theorem over a corpus");
    c_ver->add_option("--theorem", theorems, "Theorem id, or all");
    c_ver->add_option("--nmax", corpus.n_max, "Exhaustive corpus size")->check(CLI::Range(0u, 5u));
    c_ver->add_option("--sample", corpus.samples, "Additional random instances");
    c_ver->add_option("--random-n", corpus.random_n, "Points of random instances")->check(CLI::Range(1u, 8u));
    c_ver->add_option("--seed", corpus.seed, "Random seed");
    c_ver->add_option("--jobs", corpus.jobs, "Worker threads")->check(CLI::PositiveNumber);
    bool list = false;
    c_ver->add_flag("--list", list, "Print the theorem ids instead");

    auto* c_rep = app.add_subcommand("reproduce", "Reproduce the published examples");
    auto* o_ex = c_rep->add_option("--example", examples_run, "3.7, 3.8, 3.9 or 4.4")
                     ->check(CLI::IsMember({"3.7", "3.8", "3.9", "4.4"}));
    auto* o_rep_all = c_rep->add_flag("--all", all, "All four examples");
    o_ex->excludes(o_rep_all);
    c_rep->require_option(1);

    auto* c_search = app.add_subcommand("search", "Search for counterexamples");
    auto* o_oq = c_search->add_flag("--open-question", open_question, "weakly e-c but not weakly eR-c");
    auto* o_imp = c_search->add_option("--implies", implies, "A,B: look for maps in A but not in B");
    o_oq->excludes(o_imp);
    c_search->add_option("--nmax", search_opt.n_max, "Largest space size")->check(CLI::Range(1u, 5u));
    c_search->add_option("--budget", search_opt.budget, "Classifier-call budget");
    c_search->add_option("--resume", search_opt.resume, "Cursor from a budget-exceeded report");
    c_search->add_option("--jobs", search_opt.jobs, "Worker threads")->check(CLI::PositiveNumber);

    auto* c_enum = app.add_subcommand("enumerate", "List every topology on n points");
    c_enum->add_option("--n", n, "Point count")->required();
    c_enum->add_flag("--dedup", dedup, "One space per homeomorphism class");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    const auto t0 = std::chrono::steady_clock::now();
    int code = 0;
    try {
        if (*c_check) {
            code = check_space(file, strict);
        } else if (*c_fam) {
            code = families(file, kinds);
        } else if (*c_op) {
            code = op(file, which, set, kind);
        } else if (*c_cls) {
            code = classify(file, classes);
        } else if (*c_ver) {
            if (list) {
                for (const auto& t : theorem_registry())
                    emit(json{{"theorem", t.id}, {"statement", t.statement}});
            } else if (theorems.empty()) {
                std::cerr << "verify needs --theorem or --list\n";
                return kExitUsage;
            } else {
                code = verify(theorems, corpus);
            }
        } else if (*c_rep) {
            code = reproduce(all ? example_ids() : examples_run);
        } else if (*c_search) {
            if (!open_question && implies.empty()) {
                std::cerr << "search needs --open-question or --implies\n";
                return kExitUsage;
            }
            code = search(open_question, implies, search_opt);
        } else if (*c_enum) {
            code = enumerate(n, dedup);
        }
    } catch (const FileError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.code() == ErrorCode::Parse ? kExitParse : kExitDomain;
    }
    std::cerr << "wall time: " << std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()
              << " s\n";
    return code;
}
