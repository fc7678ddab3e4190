#pragma once

#include <kcb/error.hh>
#include <kcb/graph.hh>

#include <optional>
#include <vector>

namespace kcb::test {

template <typename Fn>
auto error_code(Fn && fn) -> std::optional<ErrorCode>
{
    try {
        fn();
    }
    catch (const Error & e) {
        return e.code();
    }
    return std::nullopt;
}

inline auto graph(std::size_t n, std::size_t m, std::vector<Edge> edges) -> BipartiteGraph
{
    return BipartiteGraph::build(n, m, edges);
}

} // namespace kcb::test
