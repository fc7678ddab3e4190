#include <kcb/construct.hh>
#include <kcb/error.hh>
#include <kcb/search.hh>

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>
#include <string>

namespace kcb::search {

using numth::ceil_div;
using numth::checked_mul;

namespace {
    using Columns = std::vector<std::uint32_t>;

    // Column masks store row r at bit (n-1-r), so integer order on a column
    // is lexicographic order on its 0/1 vector read from row 0 down.
    auto row_bit(std::size_t n, std::size_t r) -> std::uint32_t { return std::uint32_t{1} << (n - 1 - r); }

    auto graph_from_columns(std::size_t n, const Columns & columns) -> BipartiteGraph
    {
        std::vector<Edge> edges;
        for (Vertex v = 0; v < columns.size(); ++v)
            for (Vertex u = 0; u < n; ++u)
                if (columns[v] & row_bit(n, u))
                    edges.emplace_back(u, v);
        return BipartiteGraph::build(n, columns.size(), edges);
    }

    // Alternately sorts rows and columns into non-increasing lexicographic
    // order until stable. Row/column-permuted copies often, not always, meet.
    auto sorted_form(std::size_t n, Columns columns) -> Columns
    {
        for (int round = 0; round < 64; ++round) {
            auto before = columns;
            std::sort(columns.begin(), columns.end(), std::greater<>());

            std::vector<std::uint64_t> rows(n, 0);
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t t = 0; t < columns.size(); ++t)
                    if (columns[t] & row_bit(n, r))
                        rows[r] |= std::uint64_t{1} << (columns.size() - 1 - t);
            std::sort(rows.begin(), rows.end(), std::greater<>());
            for (std::size_t t = 0; t < columns.size(); ++t) {
                columns[t] = 0;
                for (std::size_t r = 0; r < n; ++r)
                    if (rows[r] & (std::uint64_t{1} << (columns.size() - 1 - t)))
                        columns[t] |= row_bit(n, r);
            }
            if (columns == before)
                break;
        }
        return columns;
    }

    class DoubleLexSearch {
    public:
        DoubleLexSearch(std::size_t n, std::size_t m, Objective bounds, std::uint64_t budget, std::uint64_t & examined) :
            _n(n),
            _m(m),
            _min_v(n - m + 1),
            _bounds(bounds),
            _budget(budget),
            _examined(examined),
            _row_degree(n, 0),
            _ties(n > 0 ? n - 1 : 0, 1)
        {
            for (std::uint32_t mask = (std::uint32_t{1} << n) - 1;; --mask) {
                auto pop = static_cast<std::size_t>(std::popcount(mask));
                if (pop >= _min_v && pop <= bounds.max_v)
                    _masks.push_back(mask);
                if (mask == 0)
                    break;
            }
        }

        auto run() -> std::vector<Columns>
        {
            dfs(0, ~std::uint32_t{0});
            return std::move(_found);
        }

    private:
        void dfs(std::size_t column, std::uint32_t ceiling)
        {
            if (column == _m) {
                if (_used != _bounds.edges)
                    return;
                if (++_examined > _budget)
                    throw Error(ErrorCode::BudgetExceeded, "exhaustive search examined more than " + std::to_string(_budget) + " candidates");
                auto graph = graph_from_columns(_n, _columns);
                if (verify::is_k_critical_deletion(graph, {.deletion_budget = ~std::uint64_t{0}}).is_k_critical)
                    _found.push_back(_columns);
                return;
            }

            const std::size_t columns_left = _m - column - 1;
            for (std::uint32_t mask : _masks) {
                if (mask > ceiling)
                    continue;
                auto pop = static_cast<std::size_t>(std::popcount(mask));
                if (_used + pop > _bounds.edges)
                    continue;
                std::size_t rest = _bounds.edges - _used - pop;
                if (rest < columns_left * _min_v || rest > columns_left * _bounds.max_v)
                    continue;
                if (! fits_rows(mask, rest))
                    continue;

                auto saved_ties = _ties;
                if (! update_ties(mask)) {
                    _ties = std::move(saved_ties);
                    continue;
                }
                place(mask, +1);
                _columns.push_back(mask);
                dfs(column + 1, mask);
                _columns.pop_back();
                place(mask, -1);
                _ties = std::move(saved_ties);
            }
        }

        auto fits_rows(std::uint32_t mask, std::size_t rest) const -> bool
        {
            std::size_t spare = 0;
            for (std::size_t r = 0; r < _n; ++r) {
                std::size_t degree = _row_degree[r] + ((mask & row_bit(_n, r)) ? 1 : 0);
                if (degree > _bounds.max_u)
                    return false;
                spare += _bounds.max_u - degree;
            }
            return spare >= rest;
        }

        // Rows must stay in non-increasing lexicographic order.
        auto update_ties(std::uint32_t mask) -> bool
        {
            for (std::size_t r = 0; r + 1 < _n; ++r) {
                if (! _ties[r])
                    continue;
                bool upper = mask & row_bit(_n, r), lower = mask & row_bit(_n, r + 1);
                if (lower && ! upper)
                    return false;
                if (upper && ! lower)
                    _ties[r] = 0;
            }
            return true;
        }

        void place(std::uint32_t mask, int sign)
        {
            for (std::size_t r = 0; r < _n; ++r)
                if (mask & row_bit(_n, r))
                    _row_degree[r] = static_cast<std::size_t>(static_cast<long>(_row_degree[r]) + sign);
            _used = static_cast<std::size_t>(static_cast<long>(_used) + sign * std::popcount(mask));
        }

        std::size_t _n, _m, _min_v;
        Objective _bounds;
        std::uint64_t _budget;
        std::uint64_t & _examined;
        std::vector<std::uint32_t> _masks;
        std::vector<std::size_t> _row_degree;
        std::vector<char> _ties;
        std::size_t _used = 0;
        Columns _columns;
        std::vector<Columns> _found;
    };

    void require_order(Int n, Int m)
    {
        if (! (1 < m && m < n))
            throw Error(ErrorCode::InvalidParams, "need n > m > 1, got n=" + std::to_string(n) + " m=" + std::to_string(m));
    }
}

auto objective_of(const BipartiteGraph & graph) -> Objective
{
    auto profile = graph.degree_profile();
    return {graph.size(), profile.max_u, profile.max_v};
}

auto to_string(Certificate certificate) -> std::string_view
{
    switch (certificate) {
        case Certificate::ExhaustiveOptimal: return "ExhaustiveOptimal";
        case Certificate::BiregularOptimal: return "BiregularOptimal";
        case Certificate::FeasibleOnly: return "FeasibleOnly";
    }
    return "Unknown";
}

auto ConjectureReport::counterexamples() const -> std::vector<ConjectureEntry>
{
    std::vector<ConjectureEntry> out;
    std::copy_if(entries.begin(), entries.end(), std::back_inserter(out), [](const ConjectureEntry & e) { return ! e.holds(); });
    return out;
}

auto lower_bound_edges(Int n, Int m) -> Int
{
    require_order(n, m);
    return checked_mul(m, n - m + 1);
}

auto solve_biregular(Int n, Int m) -> SolveResult
{
    auto params = params::derive_params(n, m);
    auto graph = construct::construct_g2(params);
    if (! verify::is_k_critical_deficiency(graph).is_k_critical)
        throw std::logic_error("interval construction failed verification at n=" + std::to_string(n) + " m=" + std::to_string(m));

    SolveResult out;
    out.objective = objective_of(graph);
    out.graph = std::move(graph);
    out.certificate = Certificate::BiregularOptimal;
    return out;
}

auto solve_exhaustive(Int n, Int m, std::uint64_t budget) -> SolveResult
{
    require_order(n, m);
    if (n > 16)
        throw Error(ErrorCode::InvalidParams, "exhaustive search supports n <= 16");

    const auto nu = static_cast<std::size_t>(n), mu = static_cast<std::size_t>(m);
    const std::size_t k = nu - mu;
    std::uint64_t examined = 0;

    for (auto edges = static_cast<std::size_t>(lower_bound_edges(n, m)); edges <= nu * mu; ++edges) {
        for (std::size_t max_u = (edges + nu - 1) / nu; max_u <= mu; ++max_u) {
            for (std::size_t max_v = std::max((edges + mu - 1) / mu, k + 1); max_v <= nu; ++max_v) {
                Objective bounds{edges, max_u, max_v};
                auto found = DoubleLexSearch(nu, mu, bounds, budget, examined).run();
                if (found.empty())
                    continue;

                // Earlier tuples were all infeasible, so every graph found
                // here attains the bounds exactly.
                std::set<Columns> forms;
                for (const auto & columns : found)
                    forms.insert(sorted_form(nu, columns));

                SolveResult out;
                out.graph = graph_from_columns(nu, *forms.begin());
                out.objective = objective_of(out.graph);
                if (out.objective != bounds)
                    throw std::logic_error("exhaustive optimum does not attain its own bounds");
                out.certificate = Certificate::ExhaustiveOptimal;
                out.optimal_count = forms.size();
                out.candidates_examined = examined;
                return out;
            }
        }
    }
    throw std::logic_error("complete bipartite graph should always be feasible");
}

auto for_each_labeled_biregular(std::size_t n, std::size_t m, std::size_t a, std::size_t b,
    const std::function<void(const BipartiteGraph &)> & visit) -> std::uint64_t
{
    if (a > m || b > n || a * n != b * m)
        return 0;

    std::vector<VertexSet> choices;
    VertexSet combo(a);
    for (std::size_t i = 0; i < a; ++i)
        combo[i] = i;
    while (true) {
        choices.push_back(combo);
        std::size_t i = a;
        while (i > 0 && combo[i - 1] == m - a + i - 1)
            --i;
        if (i == 0)
            break;
        ++combo[i - 1];
        for (std::size_t j = i; j < a; ++j)
            combo[j] = combo[j - 1] + 1;
    }

    std::uint64_t count = 0;
    std::vector<std::size_t> column_degree(m, 0);
    std::vector<Edge> edges;
    std::function<void(Vertex)> row = [&](Vertex u) {
        if (u == n) {
            ++count;
            visit(BipartiteGraph::build(n, m, edges));
            return;
        }
        // Columns must still be able to reach degree b with the rows left.
        for (const auto & choice : choices) {
            bool ok = std::all_of(choice.begin(), choice.end(), [&](Vertex v) { return column_degree[v] < b; });
            if (! ok)
                continue;
            for (Vertex v : choice) {
                ++column_degree[v];
                edges.emplace_back(u, v);
            }
            std::size_t rows_left = n - u - 1;
            bool reachable = std::all_of(column_degree.begin(), column_degree.end(),
                [&](std::size_t d) { return d + rows_left >= b; });
            if (reachable)
                row(u + 1);
            for (Vertex v : choice) {
                --column_degree[v];
                edges.pop_back();
            }
        }
    };
    row(0);
    return count;
}

auto conjecture_scan(Int n_max, const verify::Options & options) -> ConjectureReport
{
    if (n_max < 3)
        throw Error(ErrorCode::InvalidParams, "conjecture scan needs n_max >= 3");

    ConjectureReport report;
    report.n_max = n_max;
    for (Int n = 3; n <= n_max; ++n) {
        for (Int m = 2; m < n; ++m) {
            if (checked_mul(m, n - m + 1) % n == 0)
                continue;
            ConjectureEntry entry;
            entry.n = n;
            entry.m = m;
            entry.degree = construct::conjecture_degree(n, m);
            auto graph = construct::construct_conjecture(n, m);
            entry.edges = graph.size();
            entry.deficiency = verify::is_k_critical_deficiency(graph);
            if (verify::binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(n - m)) <= options.deletion_budget)
                entry.deletion = verify::is_k_critical_deletion(graph, options);
            report.entries.push_back(std::move(entry));
        }
    }
    return report;
}

} // namespace kcb::search
