#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <finitop.hpp>

using namespace finitop;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args)
{
    const std::string cmd = std::string(FINITOP_CLI) + " " + args + " 2>/dev/null";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p)
        return r;
    std::array<char, 4096> buf{};
    while (auto n = fread(buf.data(), 1, buf.size(), p))
        r.out.append(buf.data(), n);
    const int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::vector<json> lines(const std::string& out)
{
    std::vector<json> docs;
    std::istringstream in(out);
    for (std::string line; std::getline(in, line);)
        if (!line.empty())
            docs.push_back(json::parse(line));
    return docs;
}

class Cli : public ::testing::Test {
protected:
    static void SetUpTestSuite()
    {
        dir_ = std::filesystem::temp_directory_path() / ("finitop_cli_" + std::to_string(::getpid()));
        std::filesystem::create_directories(dir_);
        write("tau.json", space_to_json(examples::tau5()).dump());
        write("lenient.json", R"({"points":["a","b","c"],"opens":[[],["a"],["b"],["a","b","c"]]})");
        write("broken.json", R"({"points":["a","b"],"opens":[[)");
        write("swap_ab.json", map_to_json(examples::swap_ab()).dump());
        write("swap_ae.json", map_to_json(examples::swap_ae()).dump());
    }

    static void TearDownTestSuite() { std::filesystem::remove_all(dir_); }

    static void write(const std::string& name, const std::string& text) { std::ofstream(dir_ / name) << text; }
    static std::string file(const std::string& name) { return (dir_ / name).string(); }

    static inline std::filesystem::path dir_;
};

}  // namespace

TEST_F(Cli, CheckSpace)
{
    auto r = run("check-space " + file("tau.json"));
    ASSERT_EQ(r.code, 0);
    const auto doc = json::parse(r.out);
    EXPECT_EQ(doc["valid"], true);
    EXPECT_EQ(doc["space"], space_to_json(examples::tau5()));

    r = run("check-space " + file("lenient.json"));
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(json::parse(r.out)["added"], json::parse(R"([["a","b"]])"));
    EXPECT_EQ(run("check-space --strict " + file("lenient.json")).code, 70);
}

TEST_F(Cli, ExitCodesForBadInput)
{
    EXPECT_EQ(run("check-space " + file("broken.json")).code, 65);
    EXPECT_EQ(run("check-space " + file("missing.json")).code, 65);
    EXPECT_EQ(run("no-such-command").code, 64);
    EXPECT_EQ(run("families " + file("tau.json")).code, 64);
    EXPECT_EQ(run("families " + file("tau.json") + " --kind fuzzy-open").code, 70);
    EXPECT_EQ(run("verify").code, 64);
    EXPECT_EQ(run("verify --theorem riemann").code, 70);
    EXPECT_EQ(run("search").code, 64);
    EXPECT_EQ(run("enumerate --n 9").code, 70);
}

TEST_F(Cli, FamiliesAndOperators)
{
    auto r = run("families " + file("tau.json") + " --kind e-regular --kind clopen");
    ASSERT_EQ(r.code, 0);
    const auto docs = lines(r.out);
    ASSERT_EQ(docs.size(), 2u);
    EXPECT_EQ(docs[0]["count"], 14);
    EXPECT_EQ(docs[1]["count"], 2);

    r = run("op " + file("tau.json") + " --which theta-closure --set a");
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(json::parse(r.out)["result"], json({"a", "b", "e"}));
    EXPECT_EQ(run("op " + file("tau.json") + " --which kernel-closure --set a").code, 70);
    EXPECT_EQ(run("op " + file("tau.json") + " --which kernel-closure --kind e-open --set b").code, 0);
}

TEST_F(Cli, Classify)
{
    auto r = run("classify " + file("swap_ab.json") + " --class eR-continuous --class weakly-eR-continuous");
    ASSERT_EQ(r.code, 0);
    const auto docs = lines(r.out);
    ASSERT_EQ(docs.size(), 2u);
    EXPECT_EQ(docs[0]["holds"], false);
    EXPECT_EQ(docs[0]["witness"]["V"], json({"b", "c", "d"}));
    EXPECT_EQ(docs[1]["holds"], true);
    EXPECT_EQ(lines(run("classify " + file("swap_ab.json") + " --all").out).size(), kClassCount);
}

TEST_F(Cli, Reproduce)
{
    EXPECT_EQ(run("reproduce --example 3.8").code, 0);
    EXPECT_EQ(run("reproduce --example 3.7").code, 1);
    const auto r = run("reproduce --all");
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(lines(r.out).size(), 4u);
    EXPECT_EQ(run("reproduce --example 5.1").code, 64);
}

TEST_F(Cli, Verify)
{
    auto r = run("verify --theorem e-theta-closure-laws --nmax 3");
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(json::parse(r.out)["violations"], 0);
    EXPECT_EQ(run("verify --theorem product --nmax 3").code, 2);
    EXPECT_EQ(lines(run("verify --list").out).size(), theorem_registry().size());
    EXPECT_EQ(run("verify --theorem diagram --nmax 9").code, 64);
}

TEST_F(Cli, SearchExitCodesAndResume)
{
    auto r = run("search --open-question --nmax 2");
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(json::parse(r.out)["status"], "completed");

    r = run("search --implies weakly-eR-continuous,eR-continuous --nmax 3");
    ASSERT_EQ(r.code, 2);
    EXPECT_EQ(json::parse(r.out)["reverified"], true);

    r = run("search --open-question --nmax 3 --budget 5000 --jobs 3");
    ASSERT_EQ(r.code, 3);
    const auto cursor = json::parse(r.out)["resumable_cursor"].get<std::uint64_t>();
    r = run("search --open-question --nmax 3 --resume " + std::to_string(cursor));
    ASSERT_EQ(r.code, 0);
    const auto rest = json::parse(r.out);
    EXPECT_EQ(rest["examined"].get<std::uint64_t>() + cursor, 24872u);
}

TEST_F(Cli, SearchOutputIsIndependentOfJobs)
{
    const auto a = run("search --implies e-continuous,continuous --nmax 3 --jobs 1");
    const auto b = run("search --implies e-continuous,continuous --nmax 3 --jobs 6");
    EXPECT_EQ(a.code, 2);
    EXPECT_EQ(a.out, b.out);
}

TEST_F(Cli, Enumerate)
{
    EXPECT_EQ(lines(run("enumerate --n 3").out).size(), 29u);
    const auto r = run("enumerate --n 4 --dedup");
    ASSERT_EQ(r.code, 0);
    const auto docs = lines(r.out);
    ASSERT_EQ(docs.size(), 33u);
    for (const auto& d : docs)
        EXPECT_TRUE(space_from_json(d, true).added.empty());
}
