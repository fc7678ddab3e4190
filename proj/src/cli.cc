#include <kcb/acceptance.hh>
#include <kcb/cli.hh>
#include <kcb/construct.hh>
#include <kcb/error.hh>
#include <kcb/io.hh>

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace kcb::cli {

using params::Int;

namespace {
    constexpr int exit_ok = 0;
    constexpr int exit_failed = 1;
    constexpr int exit_usage = 2;

    auto format_set(const VertexSet & set, char prefix) -> std::string
    {
        std::string out = "{";
        for (std::size_t i = 0; i < set.size(); ++i)
            out += (i ? "," : "") + std::string(1, prefix) + std::to_string(set[i]);
        return out + "}";
    }

    void print_param_table(std::ostream & out, const std::vector<params::ParamSet> & rows)
    {
        auto cell = [&](auto value) { out << std::setw(7) << value; };
        for (const char * name : {"n", "m", "k", "a", "b", "c", "d", "x", "y", "p"})
            cell(name);
        out << '\n';
        for (const auto & p : rows) {
            for (Int value : {p.n, p.m, p.k, p.a, p.b, p.c, p.d, p.x, p.y, p.p})
                cell(value);
            out << '\n';
        }
    }

    class Timer {
    public:
        [[nodiscard]] auto elapsed_ms() const -> double
        {
            return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - _start).count();
        }

    private:
        std::chrono::steady_clock::time_point _start = std::chrono::steady_clock::now();
    };

    struct ParamsArgs {
        std::string from;
        std::vector<Int> values;
        Int l_max = 0;
        Int n = 0, m = 0;
        Int n_max = 100;
    };

    auto run_params_enum(const ParamsArgs & args, std::ostream & out) -> int
    {
        const auto & v = args.values;
        std::size_t want = (args.from == "xy" || args.from == "cd") ? 2 : 1;
        if (v.size() != want)
            throw Error(ErrorCode::InvalidParams, "--from " + args.from + " takes " + std::to_string(want) + " value(s)");

        std::vector<params::ParamSet> rows;
        if (args.from == "xy")
            rows = params::enumerate_from_xy(v[0], v[1], args.l_max);
        else if (args.from == "cd")
            rows = params::enumerate_from_cd(v[0], v[1], args.l_max);
        else if (args.from == "m")
            rows = params::enumerate_from_m(v[0]);
        else if (args.from == "a")
            rows = params::enumerate_from_a(v[0]);
        else if (args.from == "b")
            rows = params::enumerate_from_b(v[0]);
        else
            rows = params::enumerate_from_n(v[0]);
        print_param_table(out, rows);
        return exit_ok;
    }

    auto run_n1_report(const ParamsArgs & args, std::ostream & out) -> int
    {
        auto candidates = params::n_plus_one_candidates(args.n_max);
        std::size_t consistent = 0;
        out << "# recipe: n = c*x, n+1 = y*z, z >= c+1, d = z-c, m = c*y, a = d*y, b = d*x\n";
        for (const char * name : {"n", "m", "c", "x", "y", "z", "d", "a", "b", "n-m+1"})
            out << std::setw(7) << name;
        out << "  b=n-m+1\n";
        for (const auto & c : candidates) {
            for (Int value : {c.n, c.m, c.c, c.x, c.y, c.z, c.d, c.a, c.b, c.n - c.m + 1})
                out << std::setw(7) << value;
            out << "  " << (c.consistent ? "yes" : "no") << '\n';
            consistent += c.consistent ? 1 : 0;
        }
        out << "# candidates " << candidates.size() << ", satisfying b = n-m+1: " << consistent << '\n';
        return exit_ok;
    }

    struct ConstructArgs {
        std::string kind;
        Int n = 0, m = 0, step = 1;
        std::string out_path;
        std::string format = "edges";
        bool unchecked = false;
    };

    auto run_construct(const ConstructArgs & args, std::ostream & out, std::ostream & err) -> int
    {
        BipartiteGraph graph;
        std::optional<params::ParamSet> params;
        bool verified_shape = true;
        if (args.kind == "conjecture") {
            graph = construct::construct_conjecture(args.n, args.m);
        }
        else {
            params = params::derive_params(args.n, args.m);
            if (args.kind == "g1")
                graph = construct::construct_g1(*params);
            else if (args.kind == "g2")
                graph = construct::construct_g2(*params);
            else if (args.kind == "negative")
                graph = construct::construct_negative(*params);
            else if (args.unchecked && params->x % args.step != 0) {
                graph = construct::construct_g2_step_unchecked(*params, args.step);
                verified_shape = false;
                err << "warning: step " << args.step << " does not divide x=" << params->x
                    << "; the graph is UNVERIFIED and in general not biregular\n";
            }
            else
                graph = construct::construct_g2_step(*params, args.step);
        }

        std::ostringstream text;
        if (args.format == "edges")
            io::write_edge_list(text, graph);
        else if (args.format == "dot")
            io::write_dot(text, graph);
        else {
            nlohmann::ordered_json doc{{"kind", args.kind}, {"params", params ? io::to_json(*params) : nlohmann::ordered_json(nullptr)}};
            if (args.kind == "g2-step")
                doc["step"] = args.step;
            doc["verified_shape"] = verified_shape;
            doc["graph"] = io::to_json(graph);
            text << doc.dump(2) << '\n';
        }

        if (args.out_path.empty())
            out << text.str();
        else {
            std::ofstream file(args.out_path, std::ios::binary);
            if (! file)
                throw Error(ErrorCode::ParseError, "cannot open " + args.out_path + " for writing");
            file << text.str();
        }
        return exit_ok;
    }

    struct VerifyArgs {
        std::string in_path;
        std::string method = "all";
        std::uint64_t budget = verify::Options{}.deletion_budget;
        bool json = false;
        bool timing = false;
    };

    auto run_verify(const VerifyArgs & args, std::ostream & out) -> int
    {
        std::ifstream file(args.in_path, std::ios::binary);
        if (! file)
            throw Error(ErrorCode::ParseError, "cannot open " + args.in_path);
        auto graph = io::read_edge_list(file);
        if (graph.n() < graph.m())
            throw Error(ErrorCode::ShapeError, "need n >= m, got n=" + std::to_string(graph.n()) + " m=" + std::to_string(graph.m()));

        std::vector<verify::Method> methods;
        if (args.method == "all" || args.method == "deficiency")
            methods.push_back(verify::Method::Deficiency);
        if (args.method == "all" || args.method == "deletion")
            methods.push_back(verify::Method::Deletion);
        if (args.method == "all" || args.method == "tilde")
            methods.push_back(verify::Method::Tilde);

        Timer timer;
        std::vector<verify::Verdict> verdicts;
        std::vector<std::pair<verify::Method, std::string>> skipped;
        for (auto method : methods) {
            try {
                verdicts.push_back(verify::is_k_critical(graph, method, {.deletion_budget = args.budget}));
            }
            catch (const Error & e) {
                bool skippable = (e.code() == ErrorCode::BudgetExceeded || e.code() == ErrorCode::ShapeError) && args.method == "all";
                if (! skippable)
                    throw;
                skipped.emplace_back(method, e.what());
            }
        }
        bool critical = ! verdicts.empty()
            && std::all_of(verdicts.begin(), verdicts.end(), [](const verify::Verdict & v) { return v.is_k_critical; });

        if (args.json) {
            nlohmann::ordered_json doc{
                {"parameters", {{"n", graph.n()}, {"m", graph.m()}, {"k", graph.n() - graph.m()}}},
                {"objective", {graph.size(), graph.degree_profile().max_u, graph.degree_profile().max_v}},
                {"k_critical", critical},
                {"verdicts", nlohmann::ordered_json::array()},
                {"skipped", nlohmann::ordered_json::array()},
            };
            for (const auto & verdict : verdicts)
                doc["verdicts"].push_back(io::to_json(verdict));
            for (const auto & [method, reason] : skipped)
                doc["skipped"].push_back({{"method", verify::to_string(method)}, {"reason", reason}});
            if (args.timing)
                doc["timing_ms"] = timer.elapsed_ms();
            out << doc.dump(2) << '\n';
        }
        else {
            out << "graph n=" << graph.n() << " m=" << graph.m() << " k=" << graph.n() - graph.m() << " size=" << graph.size() << '\n';
            for (const auto & verdict : verdicts) {
                out << std::left << std::setw(12) << verify::to_string(verdict.method) << std::right
                    << (verdict.is_k_critical ? "k-critical" : "NOT k-critical");
                if (verdict.witness)
                    out << "  witness B=" << format_set(verdict.witness->b, 'v') << " |N(B)|=" << verdict.witness->neighbourhood_size;
                if (verdict.deleted)
                    out << "  deleted S=" << format_set(*verdict.deleted, 'u');
                out << '\n';
            }
            for (const auto & [method, reason] : skipped)
                out << std::left << std::setw(12) << verify::to_string(method) << std::right << "skipped (" << reason << ")\n";
            out << "result      " << (critical ? "k-critical" : "NOT k-critical") << '\n';
            if (args.timing)
                out << "timing_ms   " << timer.elapsed_ms() << '\n';
        }
        return critical ? exit_ok : exit_failed;
    }

    struct SolveArgs {
        Int n = 0, m = 0;
        std::string mode = "biregular";
        std::uint64_t budget = 50'000'000;
        bool json = false;
        bool timing = false;
    };

    auto run_solve(const SolveArgs & args, std::ostream & out) -> int
    {
        Timer timer;
        auto result = args.mode == "biregular" ? search::solve_biregular(args.n, args.m)
                                               : search::solve_exhaustive(args.n, args.m, args.budget);
        if (args.json) {
            auto doc = io::to_json(result);
            doc["parameters"] = {{"n", args.n}, {"m", args.m}, {"k", args.n - args.m}, {"mode", args.mode}};
            if (args.timing)
                doc["timing_ms"] = timer.elapsed_ms();
            out << doc.dump(2) << '\n';
            return exit_ok;
        }
        const auto & o = result.objective;
        out << "n=" << args.n << " m=" << args.m << " k=" << args.n - args.m << '\n';
        out << "objective (" << o.edges << ", " << o.max_u << ", " << o.max_v << ")\n";
        out << "certificate " << search::to_string(result.certificate) << '\n';
        if (result.certificate == search::Certificate::ExhaustiveOptimal)
            out << "optimal_count " << result.optimal_count << "\ncandidates_examined " << result.candidates_examined << '\n';
        if (args.timing)
            out << "timing_ms " << timer.elapsed_ms() << '\n';
        out << "graph\n";
        io::write_edge_list(out, result.graph);
        return exit_ok;
    }

    struct ConjectureArgs {
        Int n_max = 0;
        std::uint64_t budget = verify::Options{}.deletion_budget;
        bool json = false;
    };

    auto run_conjecture(const ConjectureArgs & args, std::ostream & out) -> int
    {
        auto report = search::conjecture_scan(args.n_max, {.deletion_budget = args.budget});
        auto counterexamples = report.counterexamples();
        if (args.json) {
            out << io::to_json(report).dump(2) << '\n';
            return counterexamples.empty() ? exit_ok : exit_failed;
        }
        out << "# empirical evidence only, not a proof\n";
        for (const char * name : {"n", "m", "a'", "size"})
            out << std::setw(6) << name;
        out << "  deficiency  deletion\n";
        for (const auto & e : report.entries) {
            out << std::setw(6) << e.n << std::setw(6) << e.m << std::setw(6) << e.degree << std::setw(6) << e.edges << "  "
                << std::left << std::setw(10) << (e.deficiency.is_k_critical ? "pass" : "FAIL") << "  "
                << (e.deletion ? (e.deletion->is_k_critical ? "pass" : "FAIL") : "skipped") << std::right << '\n';
        }
        for (const auto & e : counterexamples) {
            out << "COUNTEREXAMPLE n=" << e.n << " m=" << e.m;
            const auto & verdict = ! e.deficiency.is_k_critical ? e.deficiency : *e.deletion;
            if (verdict.witness)
                out << " witness B=" << format_set(verdict.witness->b, 'v') << " |N(B)|=" << verdict.witness->neighbourhood_size;
            if (verdict.deleted)
                out << " deleted S=" << format_set(*verdict.deleted, 'u');
            out << '\n';
        }
        out << "# checked " << report.entries.size() << " pairs, counterexamples " << counterexamples.size() << '\n';
        return counterexamples.empty() ? exit_ok : exit_failed;
    }
}

auto run(int argc, const char * const * argv, std::ostream & out, std::ostream & err) -> int
{
    CLI::App app{"Construct, enumerate and verify minimum k-critical bipartite graphs", "kcb"};
    app.require_subcommand(1);

    ParamsArgs params_args;
    auto * params_cmd = app.add_subcommand("params", "Parameter sets (n,m,k,a,b,c,d,x,y,p) of biregular candidates");
    params_cmd->require_subcommand(1);
    auto * params_enum = params_cmd->add_subcommand("enum", "Enumerate parameter sets from a partial key");
    params_enum->add_option("--from", params_args.from, "Key kind")
        ->required()
        ->check(CLI::IsMember({"xy", "cd", "m", "a", "b", "n"}));
    params_enum->add_option("values", params_args.values, "Key value(s): two for xy and cd, one otherwise")->required();
    params_enum->add_option("--l-max", params_args.l_max, "Last family index for xy and cd")->capture_default_str();
    auto * params_derive = params_cmd->add_subcommand("derive", "Derive the parameter set of (n, m)");
    params_derive->add_option("--n", params_args.n, "Size of U")->required();
    params_derive->add_option("--m", params_args.m, "Size of V")->required();
    auto * params_n1 = params_cmd->add_subcommand("n1-report", "Audit the n/(n+1) factorization recipe against b = n-m+1");
    params_n1->add_option("--n-max", params_args.n_max, "Largest n")->capture_default_str();

    ConstructArgs construct_args;
    auto * construct_cmd = app.add_subcommand("construct", "Build a graph");
    construct_cmd->add_option("--kind", construct_args.kind, "Construction")
        ->required()
        ->check(CLI::IsMember({"g1", "g2", "g2-step", "negative", "conjecture"}));
    construct_cmd->add_option("--n", construct_args.n, "Size of U")->required();
    construct_cmd->add_option("--m", construct_args.m, "Size of V")->required();
    construct_cmd->add_option("--s", construct_args.step, "Neighbour spacing for g2-step")->capture_default_str();
    construct_cmd->add_option("--out", construct_args.out_path, "Output file (default stdout)");
    construct_cmd->add_option("--format", construct_args.format, "Output format")
        ->check(CLI::IsMember({"edges", "dot", "json"}))
        ->capture_default_str();
    construct_cmd->add_flag("--unchecked", construct_args.unchecked, "g2-step: emit even when s does not divide x (unverified)");

    VerifyArgs verify_args;
    auto * verify_cmd = app.add_subcommand("verify", "Decide k-criticality of an edge-list file");
    verify_cmd->add_option("--in", verify_args.in_path, "Edge-list file")->required();
    verify_cmd->add_option("--method", verify_args.method, "Verification method")
        ->check(CLI::IsMember({"deficiency", "deletion", "tilde", "all"}))
        ->capture_default_str();
    verify_cmd->add_option("--budget", verify_args.budget, "Largest C(n,k) the deletion oracle may enumerate")->capture_default_str();
    verify_cmd->add_flag("--json", verify_args.json, "JSON report");
    verify_cmd->add_flag("--timing", verify_args.timing, "Include wall-clock timing (output is then not reproducible)");

    SolveArgs solve_args;
    auto * solve_cmd = app.add_subcommand("solve", "Lexicographically minimum k-critical bipartite graph of order (n, m)");
    solve_cmd->add_option("--n", solve_args.n, "Size of U")->required();
    solve_cmd->add_option("--m", solve_args.m, "Size of V")->required();
    solve_cmd->add_option("--mode", solve_args.mode, "Solver")
        ->check(CLI::IsMember({"biregular", "exhaustive"}))
        ->capture_default_str();
    solve_cmd->add_option("--budget", solve_args.budget, "Exhaustive mode: candidate graph limit")->capture_default_str();
    solve_cmd->add_flag("--json", solve_args.json, "JSON report");
    solve_cmd->add_flag("--timing", solve_args.timing, "Include wall-clock timing (output is then not reproducible)");

    ConjectureArgs conjecture_args;
    auto * conjecture_cmd = app.add_subcommand("conjecture", "Check the irregular construction for all non-integral (n, m)");
    conjecture_cmd->add_option("--n-max", conjecture_args.n_max, "Largest n")->required();
    conjecture_cmd->add_option("--budget", conjecture_args.budget, "Largest C(n,k) for the deletion oracle")->capture_default_str();
    conjecture_cmd->add_flag("--json", conjecture_args.json, "JSON report");

    auto * selftest_cmd = app.add_subcommand("selftest", "Run every acceptance criterion and invariant check");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        return app.exit(e, out, err) == 0 ? exit_ok : exit_usage;
    }

    try {
        if (params_enum->parsed())
            return run_params_enum(params_args, out);
        if (params_derive->parsed()) {
            print_param_table(out, {params::derive_params(params_args.n, params_args.m)});
            return exit_ok;
        }
        if (params_n1->parsed())
            return run_n1_report(params_args, out);
        if (construct_cmd->parsed())
            return run_construct(construct_args, out, err);
        if (verify_cmd->parsed())
            return run_verify(verify_args, out);
        if (solve_cmd->parsed())
            return run_solve(solve_args, out);
        if (conjecture_cmd->parsed())
            return run_conjecture(conjecture_args, out);
        if (selftest_cmd->parsed())
            return acceptance::run_all(out) ? exit_ok : exit_failed;
    }
    catch (const Error & e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

} // namespace kcb::cli
