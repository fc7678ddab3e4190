#include <kcb/cli.hh>

#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {
struct Outcome {
    int code;
    std::string out;
    std::string err;
};

auto run(std::vector<std::string> args) -> Outcome
{
    args.insert(args.begin(), "kcb");
    std::vector<const char *> argv;
    for (const auto & a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = kcb::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

auto scratch(const std::string & name) -> std::string
{
    auto dir = std::filesystem::temp_directory_path() / "kcb-cli-test";
    std::filesystem::create_directories(dir);
    return (dir / name).string();
}

auto write_file(const std::string & path, const std::string & text) -> std::string
{
    std::ofstream(path) << text;
    return path;
}
}

TEST_CASE("usage errors exit 2")
{
    CHECK(run({}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({"construct", "--kind", "g9", "--n", "6", "--m", "3"}).code == 2);
    CHECK(run({"construct", "--kind", "g2", "--n", "5", "--m", "3"}).code == 2);
    CHECK(run({"params", "enum", "--from", "xy", "4"}).code == 2);
    CHECK(run({"verify", "--in", scratch("missing.txt")}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("params")
{
    auto m = run({"params", "enum", "--from", "m", "7"});
    CHECK(m.code == 0);
    CHECK(m.out.find("     14      7") != std::string::npos);
    CHECK(m.out.find("     42      7") != std::string::npos);

    auto derive = run({"params", "derive", "--n", "12", "--m", "9"});
    CHECK(derive.code == 0);
    CHECK(derive.out.find("     12      9      3      3      4      3      1      4      3      2") != std::string::npos);

    auto report = run({"params", "n1-report", "--n-max", "100"});
    CHECK(report.code == 0);
    CHECK(report.out.find("# candidates 521, satisfying b = n-m+1: 0") != std::string::npos);
}

TEST_CASE("construct then verify")
{
    auto path = scratch("g2_12_9.txt");
    auto built = run({"construct", "--kind", "g2", "--n", "12", "--m", "9", "--out", path});
    REQUIRE(built.code == 0);
    auto verified = run({"verify", "--in", path});
    CHECK(verified.code == 0);
    CHECK(verified.out.find("result      k-critical") != std::string::npos);

    auto bad = scratch("neg_10_5.txt");
    REQUIRE(run({"construct", "--kind", "negative", "--n", "10", "--m", "5", "--out", bad}).code == 0);
    auto rejected = run({"verify", "--in", bad, "--method", "deficiency"});
    CHECK(rejected.code == 1);
    CHECK(rejected.out.find("witness B={v0,v4} |N(B)|=6") != std::string::npos);
}

TEST_CASE("construct formats")
{
    auto edges = run({"construct", "--kind", "g2", "--n", "6", "--m", "3"});
    CHECK(edges.out.starts_with("6 3\n0 0\n0 1\n"));
    auto dot = run({"construct", "--kind", "g1", "--n", "6", "--m", "3", "--format", "dot"});
    CHECK(dot.out.starts_with("graph G {"));
    auto json = run({"construct", "--kind", "conjecture", "--n", "5", "--m", "3", "--format", "json"});
    CHECK(json.out.find("\"kind\": \"conjecture\"") != std::string::npos);

    CHECK(run({"construct", "--kind", "g2-step", "--n", "12", "--m", "9", "--s", "3"}).code == 2);
    auto unchecked = run({"construct", "--kind", "g2-step", "--n", "12", "--m", "9", "--s", "3", "--unchecked"});
    CHECK(unchecked.code == 0);
    CHECK(unchecked.err.find("UNVERIFIED") != std::string::npos);
}

TEST_CASE("verify json is reproducible")
{
    auto path = scratch("g2_6_3.txt");
    REQUIRE(run({"construct", "--kind", "g2", "--n", "6", "--m", "3", "--out", path}).code == 0);
    auto first = run({"verify", "--in", path, "--json"});
    auto second = run({"verify", "--in", path, "--json"});
    CHECK(first.code == 0);
    CHECK(first.out == second.out);
    CHECK(first.out.find("\"k_critical\": true") != std::string::npos);
}

TEST_CASE("verify skips what does not apply")
{
    auto square = write_file(scratch("square.txt"), "2 2\n0 0\n1 1\n");
    auto result = run({"verify", "--in", square});
    CHECK(result.code == 0);
    CHECK(result.out.find("tilde       skipped") != std::string::npos);

    auto malformed = write_file(scratch("bad.txt"), "3 2\n0 zero\n");
    CHECK(run({"verify", "--in", malformed}).code == 2);
}

TEST_CASE("solve")
{
    auto biregular = run({"solve", "--n", "6", "--m", "3"});
    CHECK(biregular.code == 0);
    CHECK(biregular.out.find("objective (12, 2, 4)") != std::string::npos);
    CHECK(biregular.out.find("certificate BiregularOptimal") != std::string::npos);

    auto exhaustive = run({"solve", "--n", "4", "--m", "3", "--mode", "exhaustive", "--json"});
    CHECK(exhaustive.code == 0);
    CHECK(exhaustive.out.find("\"certificate\": \"ExhaustiveOptimal\"") != std::string::npos);
    CHECK(run({"solve", "--n", "5", "--m", "3"}).code == 2);
}

TEST_CASE("conjecture")
{
    auto report = run({"conjecture", "--n-max", "8"});
    CHECK(report.code == 0);
    CHECK(report.out.find("empirical evidence only") != std::string::npos);
    CHECK(report.out.find("counterexamples 0") != std::string::npos);
}

TEST_CASE("the g2 (6,3) edge list has 12 edge lines and passes every method")
{
    auto built = run({"construct", "--kind", "g2", "--n", "6", "--m", "3", "--format", "edges"});
    CHECK(std::count(built.out.begin(), built.out.end(), '\n') == 13);
    auto path = write_file(scratch("g2_6_3_all.txt"), built.out);
    auto verified = run({"verify", "--in", path, "--method", "all"});
    CHECK(verified.code == 0);
    CHECK(verified.out.find("deficiency  k-critical") != std::string::npos);
    CHECK(verified.out.find("deletion    k-critical") != std::string::npos);
    CHECK(verified.out.find("tilde       k-critical") != std::string::npos);
}
