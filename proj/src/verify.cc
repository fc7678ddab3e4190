#include <kcb/construct.hh>
#include <kcb/error.hh>
#include <kcb/verify.hh>

#include <algorithm>
#include <bit>
#include <limits>
#include <queue>
#include <string>

namespace kcb::verify {

namespace {
    constexpr auto none = std::numeric_limits<Vertex>::max();

    void require_shape(const BipartiteGraph & graph)
    {
        if (graph.n() < graph.m())
            throw Error(ErrorCode::ShapeError, "need n >= m, got n=" + std::to_string(graph.n()) + " m=" + std::to_string(graph.m()));
    }

    // Augmenting-path matcher that saturates V, optionally ignoring some of U.
    class Augmenter {
    public:
        explicit Augmenter(const BipartiteGraph & graph, const std::vector<char> * deleted_u = nullptr) :
            _graph(graph),
            _deleted(deleted_u),
            _mate_of_u(graph.n(), none),
            _mate_of_v(graph.m(), none),
            _visited(graph.n(), 0)
        {
        }

        // Attempts to match v; on failure visited() marks N_H(B) of the
        // alternating tree rooted at v.
        auto augment(Vertex v) -> bool
        {
            std::fill(_visited.begin(), _visited.end(), 0);
            return grow(v);
        }

        [[nodiscard]] auto visited() const -> const std::vector<char> & { return _visited; }
        [[nodiscard]] auto mate_of_u(Vertex u) const -> Vertex { return _mate_of_u[u]; }

        [[nodiscard]] auto matching() const -> Matching
        {
            Matching out;
            for (Vertex u = 0; u < _graph.n(); ++u)
                if (_mate_of_u[u] != none)
                    out.pairs.emplace_back(u, _mate_of_u[u]);
            return out;
        }

    private:
        auto grow(Vertex v) -> bool
        {
            for (Vertex u : _graph.neighbours_of_v(v)) {
                if (_visited[u] || (_deleted && (*_deleted)[u]))
                    continue;
                _visited[u] = 1;
                if (_mate_of_u[u] == none || grow(_mate_of_u[u])) {
                    _mate_of_u[u] = v;
                    _mate_of_v[v] = u;
                    return true;
                }
            }
            return false;
        }

        const BipartiteGraph & _graph;
        const std::vector<char> * _deleted;
        std::vector<Vertex> _mate_of_u;
        std::vector<Vertex> _mate_of_v;
        std::vector<char> _visited;
    };

    auto surplus_violated(std::size_t neighbourhood, std::size_t size, std::size_t k) -> bool
    {
        return size > 0 && neighbourhood < size + k;
    }

    // Lexicographic depth-first scan over nonempty subsets of V, carrying N(B)
    // as a bitset over U.
    class DeficiencyScan {
    public:
        explicit DeficiencyScan(const BipartiteGraph & graph) :
            _m(graph.m()),
            _k(graph.n() - graph.m()),
            _words((graph.n() + 63) / 64),
            _v_masks(_m * _words, 0),
            _levels((_m + 1) * _words, 0)
        {
            for (Vertex v = 0; v < _m; ++v)
                for (Vertex u : graph.neighbours_of_v(v))
                    _v_masks[v * _words + u / 64] |= std::uint64_t{1} << (u % 64);
        }

        auto run() -> std::optional<VertexSet>
        {
            if (dfs(0, 0))
                return _chosen;
            return std::nullopt;
        }

    private:
        auto dfs(std::size_t depth, Vertex first) -> bool
        {
            const std::uint64_t * parent = &_levels[depth * _words];
            std::uint64_t * child = &_levels[(depth + 1) * _words];
            for (Vertex v = first; v < _m; ++v) {
                const std::uint64_t * mask = &_v_masks[v * _words];
                std::size_t count = 0;
                for (std::size_t w = 0; w < _words; ++w) {
                    child[w] = parent[w] | mask[w];
                    count += static_cast<std::size_t>(std::popcount(child[w]));
                }
                _chosen.push_back(v);
                std::size_t size = depth + 1;
                if (surplus_violated(count, size, _k))
                    return true;
                // Supersets in this subtree have at most `remaining` more elements
                // and no smaller neighbourhood.
                std::size_t remaining = _m - v - 1;
                if (count < size + remaining + _k && dfs(depth + 1, v + 1))
                    return true;
                _chosen.pop_back();
            }
            return false;
        }

        std::size_t _m, _k, _words;
        std::vector<std::uint64_t> _v_masks;
        std::vector<std::uint64_t> _levels;
        VertexSet _chosen;
    };

    auto witness_from(const BipartiteGraph & graph, VertexSet b) -> HallWitness
    {
        auto size = graph.neighbourhood_of_v_set(b).size();
        return HallWitness{std::move(b), size};
    }

    // Advances a sorted k-combination of [n]; false once exhausted.
    auto next_combination(VertexSet & combo, std::size_t n) -> bool
    {
        std::size_t k = combo.size();
        for (std::size_t i = k; i-- > 0;) {
            if (combo[i] < n - k + i) {
                ++combo[i];
                for (std::size_t j = i + 1; j < k; ++j)
                    combo[j] = combo[j - 1] + 1;
                return true;
            }
        }
        return false;
    }

    auto first_combination(std::size_t k) -> VertexSet
    {
        VertexSet combo(k);
        for (std::size_t i = 0; i < k; ++i)
            combo[i] = i;
        return combo;
    }

    // Residual network for unit-capacity vertex-disjoint path counting.
    class FlowNetwork {
    public:
        explicit FlowNetwork(std::size_t nodes) : _adj(nodes) {}

        void add_arc(std::size_t from, std::size_t to, int capacity)
        {
            _adj[from].push_back({to, _adj[to].size(), capacity});
            _adj[to].push_back({from, _adj[from].size() - 1, 0});
        }

        // Augments along shortest paths until `limit` units or no path remain.
        auto max_flow(std::size_t source, std::size_t sink, int limit) -> int
        {
            int flow = 0;
            std::vector<std::pair<std::size_t, std::size_t>> parent(_adj.size());
            while (flow < limit) {
                std::fill(parent.begin(), parent.end(), std::pair{none, none});
                parent[source] = {source, none};
                std::queue<std::size_t> queue;
                queue.push(source);
                while (! queue.empty() && parent[sink].first == none) {
                    auto at = queue.front();
                    queue.pop();
                    for (std::size_t i = 0; i < _adj[at].size(); ++i) {
                        const auto & arc = _adj[at][i];
                        if (arc.capacity > 0 && parent[arc.to].first == none) {
                            parent[arc.to] = {at, i};
                            queue.push(arc.to);
                        }
                    }
                }
                if (parent[sink].first == none)
                    break;
                for (auto at = sink; at != source; at = parent[at].first) {
                    auto & arc = _adj[parent[at].first][parent[at].second];
                    arc.capacity -= 1;
                    _adj[at][arc.reverse].capacity += 1;
                }
                ++flow;
            }
            return flow;
        }

    private:
        struct Arc {
            std::size_t to;
            std::size_t reverse;
            int capacity;
        };
        std::vector<std::vector<Arc>> _adj;
    };

    // Max number of internally vertex-disjoint s->t paths in a digraph, capped at limit.
    auto disjoint_paths(const std::vector<std::vector<std::size_t>> & arcs, std::size_t s, std::size_t t, int limit) -> int
    {
        std::size_t q = arcs.size();
        FlowNetwork network(2 * q);
        for (std::size_t w = 0; w < q; ++w) {
            network.add_arc(2 * w, 2 * w + 1, (w == s || w == t) ? limit : 1);
            for (std::size_t to : arcs[w])
                network.add_arc(2 * w + 1, 2 * to, 1);
        }
        return network.max_flow(2 * s + 1, 2 * t, limit);
    }

    auto is_perfect(const BipartiteGraph & graph, const Matching & matching) -> bool
    {
        return graph.n() == graph.m() && matching.size() == graph.n() && matching.is_valid_in(graph);
    }
}

auto to_string(Method method) -> std::string_view
{
    switch (method) {
        case Method::Deficiency: return "deficiency";
        case Method::Deletion: return "deletion";
        case Method::Tilde: return "tilde";
    }
    return "unknown";
}

auto max_matching(const BipartiteGraph & graph) -> Matching
{
    Augmenter augmenter(graph);
    for (Vertex v = 0; v < graph.m(); ++v)
        augmenter.augment(v);
    return augmenter.matching();
}

auto has_complete_matching(const BipartiteGraph & graph) -> bool
{
    if (graph.m() == 0)
        return true;
    return max_matching(graph).size() == graph.m();
}

auto is_hall_witness(const BipartiteGraph & graph, const VertexSet & b) -> bool
{
    require_shape(graph);
    return surplus_violated(graph.neighbourhood_of_v_set(b).size(), b.size(), graph.n() - graph.m());
}

auto minimize_witness(const BipartiteGraph & graph, VertexSet b) -> HallWitness
{
    if (! is_hall_witness(graph, b))
        throw Error(ErrorCode::InvalidParams, "not a Hall witness");

    for (std::size_t i = 0; i < b.size();) {
        VertexSet smaller = b;
        smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(i));
        if (is_hall_witness(graph, smaller))
            b = std::move(smaller);
        else
            ++i;
    }

    // A smallest violating subset of b is inclusion-minimal.
    for (std::size_t size = 1; size < b.size(); ++size) {
        auto pick = first_combination(size);
        do {
            VertexSet candidate;
            for (auto index : pick)
                candidate.push_back(b[index]);
            if (is_hall_witness(graph, candidate))
                return witness_from(graph, std::move(candidate));
        } while (next_combination(pick, b.size()));
    }
    return witness_from(graph, std::move(b));
}

auto is_k_critical_deficiency(const BipartiteGraph & graph) -> Verdict
{
    require_shape(graph);
    Verdict out{true, Method::Deficiency, std::nullopt, std::nullopt};
    if (auto violation = DeficiencyScan(graph).run()) {
        out.is_k_critical = false;
        out.witness = minimize_witness(graph, std::move(*violation));
    }
    return out;
}

auto binomial(std::uint64_t n, std::uint64_t k) -> std::uint64_t
{
    if (k > n)
        return 0;
    k = std::min(k, n - k);
    std::uint64_t out = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        // out * (n - k + i) / i stays exact since out = C(n-k+i-1, i-1).
        __extension__ using Wide = unsigned __int128;
        Wide wide = static_cast<Wide>(out) * (n - k + i) / i;
        if (wide > std::numeric_limits<std::uint64_t>::max())
            return std::numeric_limits<std::uint64_t>::max();
        out = static_cast<std::uint64_t>(wide);
    }
    return out;
}

auto is_k_critical_deletion(const BipartiteGraph & graph, const Options & options) -> Verdict
{
    require_shape(graph);
    const std::size_t n = graph.n(), m = graph.m(), k = n - m;
    auto subsets = binomial(n, k);
    if (subsets > options.deletion_budget)
        throw Error(ErrorCode::BudgetExceeded, "C(" + std::to_string(n) + "," + std::to_string(k) + ") = "
                + std::to_string(subsets) + " exceeds budget " + std::to_string(options.deletion_budget));

    Verdict out{true, Method::Deletion, std::nullopt, std::nullopt};
    auto deletion = first_combination(k);
    std::vector<char> deleted(n, 0);
    do {
        std::fill(deleted.begin(), deleted.end(), 0);
        for (auto u : deletion)
            deleted[u] = 1;

        Augmenter augmenter(graph, &deleted);
        for (Vertex v = 0; v < m; ++v) {
            if (augmenter.augment(v))
                continue;
            // The failed alternating tree: v plus the mates of every reached
            // u is a set B with |N_H(B)| = |B| - 1, hence |N_G(B)| < |B| + k.
            VertexSet b{v};
            for (Vertex u = 0; u < n; ++u)
                if (augmenter.visited()[u])
                    b.push_back(augmenter.mate_of_u(u));
            std::sort(b.begin(), b.end());
            out.is_k_critical = false;
            out.deleted = deletion;
            out.witness = minimize_witness(graph, std::move(b));
            return out;
        }
    } while (next_combination(deletion, n));
    return out;
}

auto is_k_extendable(const BipartiteGraph & graph, std::size_t k) -> bool
{
    if (graph.n() != graph.m())
        throw Error(ErrorCode::Unbalanced, "k-extendability needs a balanced graph");
    return is_k_extendable(graph, k, max_matching(graph));
}

auto is_k_extendable(const BipartiteGraph & graph, std::size_t k, const Matching & perfect) -> bool
{
    if (graph.n() != graph.m())
        throw Error(ErrorCode::Unbalanced, "k-extendability needs a balanced graph");
    if (k < 1)
        throw Error(ErrorCode::InvalidParams, "k-extendability is tested for k >= 1");
    if (! is_perfect(graph, perfect))
        throw Error(ErrorCode::NoPerfectMatching, "graph of order " + std::to_string(graph.n()) + " has no perfect matching");

    // D(G,M): node w is the matched pair (u_w, M(u_w)); a non-matching edge
    // u v becomes the arc u -> (node of v's partner).
    const std::size_t q = graph.n();
    std::vector<Vertex> partner_of_v(q);
    for (auto [u, v] : perfect.pairs)
        partner_of_v[v] = u;

    std::vector<std::vector<std::size_t>> arcs(q);
    for (auto [u, v] : graph.edges())
        if (partner_of_v[v] != u)
            arcs[u].push_back(partner_of_v[v]);

    if (q < k + 1)
        return false;
    const int need = static_cast<int>(k);
    for (std::size_t s = 0; s < q; ++s)
        for (std::size_t t = 0; t < q; ++t)
            if (s != t && disjoint_paths(arcs, s, t, need) < need)
                return false;
    return true;
}

auto alternative_perfect_matching(const BipartiteGraph & graph, const Matching & perfect) -> std::optional<Matching>
{
    if (! is_perfect(graph, perfect))
        throw Error(ErrorCode::NoPerfectMatching, "reference matching is not perfect");
    auto edges = graph.edges();
    for (const auto & banned : perfect.pairs) {
        std::vector<Edge> kept;
        std::copy_if(edges.begin(), edges.end(), std::back_inserter(kept), [&](const Edge & e) { return e != banned; });
        auto reduced = BipartiteGraph::build(graph.n(), graph.m(), kept);
        auto other = max_matching(reduced);
        if (other.size() == graph.n())
            return other;
    }
    return std::nullopt;
}

auto is_k_critical_tilde(const BipartiteGraph & graph) -> Verdict
{
    if (graph.n() <= graph.m())
        throw Error(ErrorCode::ShapeError, "tilde route needs n > m");
    auto augmented = construct::tilde(graph);
    auto perfect = max_matching(augmented);
    bool critical = perfect.size() == augmented.n() && is_k_extendable(augmented, graph.n() - graph.m(), perfect);
    return Verdict{critical, Method::Tilde, std::nullopt, std::nullopt};
}

auto check_tilde_equivalence(const BipartiteGraph & graph, const Options & options) -> bool
{
    if (graph.n() <= graph.m())
        throw Error(ErrorCode::ShapeError, "tilde equivalence needs n > m");
    return is_k_critical_deletion(graph, options).is_k_critical == is_k_critical_tilde(graph).is_k_critical;
}

auto is_k_critical(const BipartiteGraph & graph, Method method, const Options & options) -> Verdict
{
    switch (method) {
        case Method::Deficiency: return is_k_critical_deficiency(graph);
        case Method::Deletion: return is_k_critical_deletion(graph, options);
        case Method::Tilde: return is_k_critical_tilde(graph);
    }
    throw Error(ErrorCode::InvalidParams, "unknown method");
}

} // namespace kcb::verify
