#include <kcb/error.hh>
#include <kcb/io.hh>

#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>

namespace kcb::io {

using nlohmann::ordered_json;

namespace {
    auto parse_pair(const std::string & line, std::size_t line_number) -> std::pair<std::size_t, std::size_t>
    {
        std::istringstream fields(line);
        long long first = -1, second = -1;
        std::string trailing;
        if (! (fields >> first >> second) || (fields >> trailing) || first < 0 || second < 0)
            throw Error(ErrorCode::ParseError, "line " + std::to_string(line_number) + ": expected two non-negative integers, got '" + line + "'");
        return {static_cast<std::size_t>(first), static_cast<std::size_t>(second)};
    }
}

void write_edge_list(std::ostream & out, const BipartiteGraph & graph)
{
    out << graph.n() << ' ' << graph.m() << '\n';
    for (auto [u, v] : graph.edges())
        out << u << ' ' << v << '\n';
}

auto read_edge_list(std::istream & in) -> BipartiteGraph
{
    std::string line;
    std::size_t line_number = 1;
    if (! std::getline(in, line))
        throw Error(ErrorCode::ParseError, "empty input, expected header 'n m'");
    auto [n, m] = parse_pair(line, line_number);

    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++line_number;
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        edges.push_back(parse_pair(line, line_number));
    }
    return BipartiteGraph::build(n, m, edges);
}

void write_dot(std::ostream & out, const BipartiteGraph & graph)
{
    out << "graph G {\n";
    out << "  subgraph cluster_u {\n    label=\"U\";\n";
    for (Vertex u = 0; u < graph.n(); ++u)
        out << "    u" << u << ";\n";
    out << "  }\n";
    out << "  subgraph cluster_v {\n    label=\"V\";\n";
    for (Vertex v = 0; v < graph.m(); ++v)
        out << "    v" << v << ";\n";
    out << "  }\n";
    for (auto [u, v] : graph.edges())
        out << "  u" << u << " -- v" << v << ";\n";
    out << "}\n";
}

auto to_json(const BipartiteGraph & graph) -> ordered_json
{
    ordered_json edges = ordered_json::array();
    for (auto [u, v] : graph.edges())
        edges.push_back({u, v});
    auto profile = graph.degree_profile();
    return {
        {"n", graph.n()},
        {"m", graph.m()},
        {"size", graph.size()},
        {"degrees", {{"min_u", profile.min_u}, {"max_u", profile.max_u}, {"min_v", profile.min_v}, {"max_v", profile.max_v}}},
        {"edges", edges},
    };
}

auto to_json(const params::ParamSet & p) -> ordered_json
{
    return {{"n", p.n}, {"m", p.m}, {"k", p.k}, {"a", p.a}, {"b", p.b}, {"c", p.c}, {"d", p.d}, {"x", p.x}, {"y", p.y}, {"p", p.p}};
}

auto to_json(const verify::Verdict & verdict) -> ordered_json
{
    ordered_json out{
        {"method", verify::to_string(verdict.method)},
        {"k_critical", verdict.is_k_critical},
        {"witness", nullptr},
    };
    if (verdict.witness)
        out["witness"] = {{"b", verdict.witness->b}, {"neighbourhood_size", verdict.witness->neighbourhood_size}};
    if (verdict.deleted)
        out["deleted"] = *verdict.deleted;
    return out;
}

auto to_json(const search::SolveResult & result) -> ordered_json
{
    return {
        {"objective", {result.objective.edges, result.objective.max_u, result.objective.max_v}},
        {"certificate", search::to_string(result.certificate)},
        {"optimal_count", result.optimal_count},
        {"candidates_examined", result.candidates_examined},
        {"graph", to_json(result.graph)},
    };
}

auto to_json(const search::ConjectureReport & report) -> ordered_json
{
    ordered_json entries = ordered_json::array();
    for (const auto & entry : report.entries) {
        ordered_json row{
            {"n", entry.n},
            {"m", entry.m},
            {"degree", entry.degree},
            {"size", entry.edges},
            {"holds", entry.holds()},
            {"deficiency", to_json(entry.deficiency)},
            {"deletion", entry.deletion ? to_json(*entry.deletion) : ordered_json(nullptr)},
        };
        entries.push_back(std::move(row));
    }
    return {
        {"n_max", report.n_max},
        {"note", "empirical evidence only, not a proof"},
        {"counterexamples", report.counterexamples().size()},
        {"entries", entries},
    };
}

} // namespace kcb::io
