#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace fs = std::filesystem;
using namespace kuramoto;

namespace {

struct Run {
    int code = 0;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    Run r;
    r.code = cli::run(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::size_t line_count(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

class CliFiles : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("kuramoto_cli_" + std::to_string(::getpid()) + "_" +
                ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }
    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    fs::path dir_;
};

} // namespace

TEST(Cli, VerifyAllPasses) {
    const auto r = run({"verify"});
    EXPECT_EQ(r.code, 0) << r.out << r.err;
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
    EXPECT_EQ(line_count(r.out), 6u);
}

TEST(Cli, ParseErrorsAreInvalidInput) {
    EXPECT_EQ(run({}).code, cli::InvalidInput);
    EXPECT_EQ(run({"bogus"}).code, cli::InvalidInput);
    EXPECT_EQ(run({"analyze", "--builtin", "linear:4", "--graph", "x"}).code, cli::InvalidInput);
    EXPECT_EQ(run({"search", "--builtin", "linear:5"}).code, cli::InvalidInput);
    EXPECT_EQ(run({"search", "--builtin", "nope"}).code, cli::InvalidInput);
    EXPECT_EQ(run({"verify", "--example", "nope"}).code, cli::InvalidInput);
}

TEST(Cli, MissingFileIsIoFailure) {
    EXPECT_EQ(run({"search", "--graph", "/nonexistent/graph.txt"}).code, cli::IoFailure);
}

TEST(Cli, SimulateArgumentRules) {
    const std::vector<std::string> base{"simulate", "--builtin", "cycle:4", "--alpha", "0.5", "--t-end", "1"};
    auto with = [&](std::vector<std::string> extra) {
        auto args = base;
        args.insert(args.end(), extra.begin(), extra.end());
        return run(args).code;
    };
    EXPECT_EQ(with({"--init-equal", "0"}), cli::Ok);
    EXPECT_EQ(with({}), cli::InvalidInput);
    EXPECT_EQ(with({"--init-equal", "0", "--init-random", "--seed", "1"}), cli::InvalidInput);
    EXPECT_EQ(with({"--init-random"}), cli::InvalidInput);
    EXPECT_EQ(with({"--init-equal", "0", "--dt", "0.1"}), cli::InvalidInput);
    EXPECT_EQ(with({"--init-equal", "0", "--method", "rk4", "--dt", "0.1"}), cli::Ok);
    EXPECT_EQ(with({"--init-equal", "0", "--alpha", "2"}), cli::InvalidInput);
    EXPECT_EQ(with({"--init-cert"}), cli::InvalidInput);
}

TEST(Cli, ZeroDurationWritesOneRow) {
    const auto r = run({"simulate", "--builtin", "path:3", "--alpha", "0.3", "--init-equal", "1.5", "--t-end", "0"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "t,theta_1,theta_2,theta_3\n0,1.5,1.5,1.5\n");
}

TEST(Cli, SeededRunsAreReproducible) {
    const std::vector<std::string> args{"simulate", "--builtin", "petersen", "--alpha", "0.4",
                                        "--init-random", "--seed", "7", "--t-end", "2"};
    const auto a = run(args);
    const auto b = run(args);
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
    auto other = args;
    other[7] = "8";
    EXPECT_NE(run(other).out, a.out);
}

TEST(Cli, AnalyzeReports) {
    const auto lin = run({"analyze", "--builtin", "linear:4"});
    ASSERT_EQ(lin.code, 0) << lin.err;
    const auto j = nlohmann::json::parse(lin.out);
    EXPECT_EQ(j["classification"], "Condition2Unique");
    EXPECT_EQ(j["mu1"], "-1/2");
    const auto star = nlohmann::json::parse(run({"analyze", "--builtin", "star:4"}).out);
    EXPECT_EQ(star["classification"], "Equitable");
    EXPECT_EQ(run({"analyze", "--builtin", "cycle:4"}).code, cli::InvalidInput);
}

TEST_F(CliFiles, GraphAndPartitionFiles) {
    cli::write_file_atomic(path("g.txt"), "# C6\n1 2\n2 3\n3 4\n4 5\n5 6\n6 1\n");
    cli::write_file_atomic(path("p.json"), R"({"blocks": [[1, 4], [2, 3, 5, 6]]})");
    const auto r = run({"analyze", "--graph", path("g.txt"), "--partition", path("p.json")});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(nlohmann::json::parse(r.out)["classification"], "Equitable");
    cli::write_file_atomic(path("q.json"), R"({"blocks": [[1], [2], [3, 4, 5, 6]]})");
    const auto three = run({"analyze", "--graph", path("g.txt"), "--partition", path("q.json")});
    EXPECT_EQ(nlohmann::json::parse(three.out)["equitable"], false);
}

TEST_F(CliFiles, OutputFilesAreComplete) {
    const auto r = run({"simulate", "--builtin", "latoro", "--alpha-from-cert", "--init-cert", "--t-end", "5",
                        "--out", path("traj.csv"), "--report", path("report.json")});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(r.out.empty());
    std::ifstream csv(path("traj.csv"));
    const auto traj = read_trajectory_csv(csv);
    EXPECT_EQ(traj.times.back(), 5.0);
    const auto report = nlohmann::json::parse(cli::read_file(path("report.json")));
    EXPECT_EQ(report["sync"]["exact_partition"], nlohmann::json::parse("[[1],[2,3,4,5,6,7]]"));
    for (const auto& entry : fs::directory_iterator(dir_))
        EXPECT_EQ(entry.path().filename().string().find(".tmp."), std::string::npos);
}

TEST_F(CliFiles, SearchOutputIndependentOfJobs) {
    ASSERT_EQ(run({"search", "--builtin", "linear:4", "--jobs", "1", "--out", path("a.jsonl")}).code, 0);
    ASSERT_EQ(run({"search", "--builtin", "linear:4", "--jobs", "4", "--out", path("b.jsonl")}).code, 0);
    const auto a = cli::read_file(path("a.jsonl"));
    EXPECT_EQ(a, cli::read_file(path("b.jsonl")));
    EXPECT_EQ(line_count(a), 256u);
}

TEST(Cli, SearchCap) {
    EXPECT_EQ(run({"search", "--builtin", "path:8", "--cap", "6"}).code, cli::InvalidInput);
    EXPECT_EQ(run({"search", "--builtin", "path:8", "--cap", "6", "--force"}).code, cli::Ok);
}
