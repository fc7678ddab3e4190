#pragma once

#include <kcb/graph.hh>
#include <kcb/params.hh>
#include <kcb/search.hh>
#include <kcb/verify.hh>

#include <json.hpp>

#include <iosfwd>

namespace kcb::io {

// Edge-list format: a first line "n m", then one "i j" line per edge in
// ascending (i, j) order, every line newline-terminated, no comments.

void write_edge_list(std::ostream & out, const BipartiteGraph & graph);

/// Accepts edges in any order; duplicates collapse. Throws ParseError on
/// malformed input and OutOfRange on bad indices.
auto read_edge_list(std::istream & in) -> BipartiteGraph;

/// Undirected DOT with nodes u<i> and v<j>, one cluster per side.
void write_dot(std::ostream & out, const BipartiteGraph & graph);

auto to_json(const BipartiteGraph & graph) -> nlohmann::ordered_json;
auto to_json(const params::ParamSet & params) -> nlohmann::ordered_json;
auto to_json(const verify::Verdict & verdict) -> nlohmann::ordered_json;
auto to_json(const search::SolveResult & result) -> nlohmann::ordered_json;
auto to_json(const search::ConjectureReport & report) -> nlohmann::ordered_json;

} // namespace kcb::io
