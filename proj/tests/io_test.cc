#include "support.hh"

#include <kcb/construct.hh>
#include <kcb/io.hh>

#include <doctest.h>

#include <sstream>

using namespace kcb;
using kcb::test::error_code;

namespace {
auto edge_text(const BipartiteGraph & g) -> std::string
{
    std::ostringstream out;
    io::write_edge_list(out, g);
    return out.str();
}

auto parse(const std::string & text) -> BipartiteGraph
{
    std::istringstream in(text);
    return io::read_edge_list(in);
}
}

TEST_CASE("edge list format")
{
    auto g = test::graph(3, 2, {{2, 1}, {0, 0}, {1, 1}});
    CHECK(edge_text(g) == "3 2\n0 0\n1 1\n2 1\n");
    CHECK(edge_text(test::graph(2, 1, {})) == "2 1\n");
}

TEST_CASE("edge list round trip")
{
    for (const auto & p : params::all_up_to(30)) {
        auto g = construct::construct_g2(p);
        auto text = edge_text(g);
        auto back = parse(text);
        REQUIRE(back == g);
        REQUIRE(edge_text(back) == text);
    }
}

TEST_CASE("edge list reader")
{
    CHECK(parse("2 2\n1 1\n\n0 0\n0 0\n") == test::graph(2, 2, {{0, 0}, {1, 1}}));
    CHECK(parse("2 2\r\n1 1\r\n").size() == 1);
    CHECK(error_code([] { parse(""); }) == ErrorCode::ParseError);
    CHECK(error_code([] { parse("2\n"); }) == ErrorCode::ParseError);
    CHECK(error_code([] { parse("2 2\n0 x\n"); }) == ErrorCode::ParseError);
    CHECK(error_code([] { parse("2 2\n0 1 2\n"); }) == ErrorCode::ParseError);
    CHECK(error_code([] { parse("2 2\n-1 0\n"); }) == ErrorCode::ParseError);
    CHECK(error_code([] { parse("2 2\n0 2\n"); }) == ErrorCode::OutOfRange);
}

TEST_CASE("dot output")
{
    std::ostringstream out;
    io::write_dot(out, test::graph(2, 1, {{1, 0}}));
    auto text = out.str();
    CHECK(text.starts_with("graph G {\n"));
    CHECK(text.find("  u1 -- v0;\n") != std::string::npos);
    CHECK(text.find("u0;") != std::string::npos);
    CHECK(text.ends_with("}\n"));
}

TEST_CASE("json")
{
    auto p = params::derive_params(6, 3);
    auto doc = io::to_json(p);
    CHECK(doc["a"] == 2);
    CHECK(doc.dump() == R"({"n":6,"m":3,"k":3,"a":2,"b":4,"c":3,"d":2,"x":2,"y":1,"p":1})");

    auto g = construct::construct_g2(p);
    auto gj = io::to_json(g);
    CHECK(gj["size"] == 12);
    CHECK(gj["edges"].size() == 12);
    CHECK(gj["edges"][0] == nlohmann::ordered_json{0, 0});

    auto verdict = verify::is_k_critical_deficiency(construct::construct_negative(params::derive_params(10, 5)));
    auto vj = io::to_json(verdict);
    CHECK(vj["k_critical"] == false);
    CHECK(vj["witness"]["b"] == nlohmann::ordered_json{0, 4});
    CHECK(vj["witness"]["neighbourhood_size"] == 6);
}

TEST_CASE("verdicts survive an edge-list round trip")
{
    std::vector<BipartiteGraph> corpus;
    for (const auto & p : params::all_up_to(16)) {
        corpus.push_back(construct::construct_g1(p));
        corpus.push_back(construct::construct_g2(p));
        if (p.c == p.m && p.a < p.m - 1)
            corpus.push_back(construct::construct_negative(p));
    }
    for (params::Int n = 3; n <= 10; ++n)
        for (params::Int m = 2; m < n; ++m)
            if (m * (n - m + 1) % n != 0)
                corpus.push_back(construct::construct_conjecture(n, m));

    for (const auto & g : corpus) {
        auto back = parse(edge_text(g));
        for (auto method : {verify::Method::Deficiency, verify::Method::Deletion, verify::Method::Tilde})
            REQUIRE(verify::is_k_critical(back, method) == verify::is_k_critical(g, method));
    }
}
