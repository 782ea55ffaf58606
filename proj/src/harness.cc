/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include "harness.hh"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

using std::ostream;
using std::string;
using std::vector;

using nlohmann::json;

namespace cliquelab
{
    namespace
    {
        auto sorted_labels(const Graph & g, const vector<int> & vertices) -> vector<int>
        {
            vector<int> result;
            for (auto & v : vertices)
                result.push_back(g.label(v));
            std::sort(result.begin(), result.end());
            return result;
        }

        auto brace_set(const vector<int> & labels) -> string
        {
            string result = "{";
            for (unsigned i = 0 ; i < labels.size() ; ++i) {
                if (i)
                    result += ",";
                result += std::to_string(labels[i]);
            }
            return result + "}";
        }

        auto class_list(const Graph & g, const Colouring & colouring) -> string
        {
            string result;
            for (unsigned k = 0 ; k < colouring.classes.size() ; ++k) {
                if (k)
                    result += " ";
                result += "[";
                for (unsigned i = 0 ; i < colouring.classes[k].size() ; ++i) {
                    if (i)
                        result += ",";
                    result += std::to_string(g.label(colouring.classes[k][i]));
                }
                result += "]";
            }
            return result;
        }

        auto fixed_ms(double value) -> string
        {
            std::ostringstream out;
            out << std::fixed << std::setprecision(3) << value;
            return out.str();
        }

        auto row_for(const string & instance, const Graph & g, const string & variant,
                const SearchOutcome & outcome) -> ExperimentRow
        {
            return ExperimentRow{ instance, g.size(), g.edge_count(), variant,
                outcome.omega, outcome.nodes, outcome.misleading_events, outcome.elapsed_ms };
        }
    }

    auto run_experiment(const vector<NamedGraph> & instances, const SearchConfig & cfg) -> ExperimentResult
    {
        if (cfg.threads != 1)
            throw std::invalid_argument("experiments are defined on single-threaded runs");

        ExperimentResult result;
        result.summary.instances = int(instances.size());

        int delta_zero = 0;
        for (auto & instance : instances) {
            auto report = compare_variants(instance.graph, cfg, instance.id);
            result.rows.push_back(row_for(instance.id, instance.graph, "baseline", report.baseline));
            result.rows.push_back(row_for(instance.id, instance.graph, "inherited", report.inherited));

            auto & summary = result.summary;
            summary.events_total += report.baseline.misleading_events + report.inherited.misleading_events;
            if (report.inherited.misleading_events > 0)
                ++summary.instances_with_events;
            if (report.nodes_delta != 0)
                ++summary.instances_with_nodes_delta;
            else
                ++delta_zero;
            summary.nodes_total_baseline += report.baseline.nodes;
            summary.nodes_total_inherited += report.inherited.nodes;
            summary.bound_breaches_total += report.baseline.bound_breaches + report.inherited.bound_breaches;

            result.reports.push_back(std::move(report));
        }

        result.summary.nodes_delta_zero_fraction = instances.empty()
            ? 1.0
            : double(delta_zero) / double(instances.size());
        return result;
    }

    auto run_experiment_files(const vector<string> & paths, const SearchConfig & cfg) -> ExperimentResult
    {
        vector<NamedGraph> instances;
        for (auto & path : paths)
            instances.push_back(NamedGraph{ path, read_dimacs_file(path).graph });
        return run_experiment(instances, cfg);
    }

    auto write_csv(const vector<ExperimentRow> & rows, ostream & out, bool zero_elapsed) -> void
    {
        out << "instance,n,m,variant,omega,nodes,events,elapsed_ms\n";
        for (auto & row : rows)
            out << row.instance << "," << row.n << "," << row.m << "," << row.variant << ","
                << row.omega << "," << row.nodes << "," << row.events << ","
                << fixed_ms(zero_elapsed ? 0.0 : row.elapsed_ms) << "\n";
    }

    namespace
    {
        auto print_warnings(const DimacsResult & parsed, const string & path, ostream & err) -> void
        {
            for (auto & warning : parsed.warnings)
                err << "warning: " << path << ": " << warning << "\n";
        }

        auto outcome_json(const Graph & g, const SearchOutcome & outcome) -> json
        {
            return json{
                { "omega", outcome.omega },
                { "clique", sorted_labels(g, outcome.clique) },
                { "nodes", outcome.nodes },
                { "misleading_events", outcome.misleading_events },
                { "max_depth", outcome.max_depth },
                { "nodes_by_depth", outcome.nodes_by_depth },
                { "elapsed_ms", outcome.elapsed_ms },
            };
        }

        auto summary_json(const ExperimentSummary & summary) -> json
        {
            return json{
                { "instances", summary.instances },
                { "events_total", summary.events_total },
                { "instances_with_events", summary.instances_with_events },
                { "instances_with_nodes_delta", summary.instances_with_nodes_delta },
                { "nodes_total_baseline", summary.nodes_total_baseline },
                { "nodes_total_inherited", summary.nodes_total_inherited },
                { "nodes_delta_zero_fraction", summary.nodes_delta_zero_fraction },
            };
        }

        struct CommonArgs
        {
            string file;
            string order = "natural";
            bool as_json = false;

            auto ordering() const -> OrderingPolicy
            {
                return "degree" == order ? OrderingPolicy::degree_desc : OrderingPolicy::natural;
            }
        };

        auto add_order_option(CLI::App * sub, CommonArgs & args) -> void
        {
            sub->add_option("--order", args.order, "initial vertex ordering")
                ->check(CLI::IsMember({ "natural", "degree" }));
        }

        auto run_solve(const CommonArgs & args, const string & variant, bool variant_given,
                int threads, bool literal_bound, bool would_be_events, ostream & out, ostream & err) -> int
        {
            auto parsed = read_dimacs_file(args.file);
            print_warnings(parsed, args.file, err);
            auto & g = parsed.graph;

            SearchConfig cfg;
            cfg.ordering = args.ordering();
            cfg.threads = threads;
            // a non-misleading bound is the safe default once workers race
            cfg.variant = variant_given
                ? ("inherited" == variant ? Variant::inherited : Variant::baseline)
                : (threads > 1 ? Variant::inherited : Variant::baseline);
            cfg.inheritance = literal_bound ? Inheritance::literal : Inheritance::tight;
            cfg.count_would_be_events = would_be_events;

            auto outcome = threads > 1 ? solve_parallel(g, cfg) : solve_max_clique(g, cfg);

            if (args.as_json) {
                json j = outcome_json(g, outcome);
                j["instance"] = args.file;
                j["variant"] = (Variant::inherited == cfg.variant) ? "inherited" : "baseline";
                j["order"] = args.order;
                j["threads"] = threads;
                out << j.dump() << "\n";
            }
            else
                out << "omega=" << outcome.omega
                    << " clique=" << brace_set(sorted_labels(g, outcome.clique))
                    << " nodes=" << outcome.nodes
                    << " events=" << outcome.misleading_events << "\n";
            return 0;
        }

        auto run_colour(const CommonArgs & args, ostream & out, ostream & err) -> int
        {
            auto parsed = read_dimacs_file(args.file);
            print_warnings(parsed, args.file, err);
            auto & g = parsed.graph;

            auto colouring = greedy_colour_vertexwise(g, Bitset::filled(g.size()),
                    make_ordering(g, args.ordering()));

            if (args.as_json) {
                json classes = json::array();
                for (auto & cls : colouring.classes) {
                    json labels = json::array();
                    for (auto & v : cls)
                        labels.push_back(g.label(v));
                    classes.push_back(labels);
                }
                json j{
                    { "instance", args.file },
                    { "order", args.order },
                    { "num_colours", colouring.num_colours() },
                    { "classes", classes },
                };
                out << j.dump() << "\n";
            }
            else
                out << colouring.num_colours() << " colours: " << class_list(g, colouring) << "\n";
            return 0;
        }

        auto run_compare(const CommonArgs & args, bool literal_bound, ostream & out, ostream & err) -> int
        {
            auto parsed = read_dimacs_file(args.file);
            print_warnings(parsed, args.file, err);
            auto & g = parsed.graph;

            SearchConfig cfg;
            cfg.ordering = args.ordering();
            cfg.inheritance = literal_bound ? Inheritance::literal : Inheritance::tight;
            auto report = compare_variants(g, cfg, args.file);

            if (args.as_json) {
                json j{
                    { "instance", args.file },
                    { "order", args.order },
                    { "baseline", outcome_json(g, report.baseline) },
                    { "inherited", outcome_json(g, report.inherited) },
                    { "omega_equal", report.omega_equal },
                    { "nodes_equal", report.nodes_equal },
                    { "nodes_delta", report.nodes_delta },
                };
                out << j.dump() << "\n";
            }
            else {
                out << "baseline:  omega=" << report.baseline.omega << " nodes=" << report.baseline.nodes
                    << " events=" << report.baseline.misleading_events << "\n";
                out << "inherited: omega=" << report.inherited.omega << " nodes=" << report.inherited.nodes
                    << " events=" << report.inherited.misleading_events << "\n";
                out << "omega_equal=" << (report.omega_equal ? "true" : "false")
                    << " nodes_equal=" << (report.nodes_equal ? "true" : "false")
                    << " nodes_delta=" << report.nodes_delta << "\n";
            }
            return 0;
        }

        auto run_detect(const CommonArgs & args, bool all, ostream & out, ostream & err) -> int
        {
            auto parsed = read_dimacs_file(args.file);
            print_warnings(parsed, args.file, err);
            auto & g = parsed.graph;
            auto order = make_ordering(g, args.ordering());

            bool found = false;
            if (all) {
                auto everything = Bitset::filled(g.size());
                int before = greedy_colour_vertexwise(g, everything, order).num_colours();
                for (int v = 0 ; v < g.size() ; ++v) {
                    auto domain = everything;
                    domain.reset(v);
                    int after = greedy_colour_vertexwise(g, domain, order).num_colours();
                    if (after > before) {
                        out << "vertex " << g.label(v) << ": " << before << " -> " << after << " colours\n";
                        found = true;
                    }
                }
            }
            else if (auto witness = find_misleading_vertex(g, order)) {
                out << "vertex " << g.label(witness->vertex) << ": " << witness->colours_before
                    << " -> " << witness->colours_after << " colours\n";
                found = true;
            }

            if (! found)
                out << "no misleading vertex\n";
            return 0;
        }

        auto run_gen(int n, double p, std::uint64_t seed, const string & output, ostream & out) -> int
        {
            auto g = random_graph(n, p, seed);
            if (output.empty())
                out << to_dimacs(g);
            else {
                std::ofstream file{ output };
                if (! file)
                    throw DimacsError(output + ": cannot open file for writing");
                file << to_dimacs(g);
            }
            return 0;
        }

        auto run_oracle(const string & file, int limit, ostream & out, ostream & err) -> int
        {
            auto parsed = read_dimacs_file(file);
            print_warnings(parsed, file, err);
            auto [ size, clique ] = brute_force_omega(parsed.graph, limit);
            out << "omega=" << size << " clique=" << brace_set(sorted_labels(parsed.graph, clique)) << "\n";
            return 0;
        }

        auto run_experiment_cli(const vector<string> & files, int gen_n, double gen_p, int gen_count,
                std::uint64_t gen_seed0, const string & order, const string & csv_path,
                bool as_json, bool zero_elapsed, ostream & out, ostream & err) -> int
        {
            vector<NamedGraph> instances;
            for (auto & path : files) {
                auto parsed = read_dimacs_file(path);
                print_warnings(parsed, path, err);
                instances.push_back(NamedGraph{ path, std::move(parsed.graph) });
            }
            for (int s = 0 ; s < gen_count ; ++s) {
                auto seed = gen_seed0 + std::uint64_t(s);
                std::ostringstream id;
                id << "gen-n" << gen_n << "-p" << gen_p << "-s" << seed;
                instances.push_back(NamedGraph{ id.str(), random_graph(gen_n, gen_p, seed) });
            }

            SearchConfig cfg;
            cfg.ordering = "degree" == order ? OrderingPolicy::degree_desc : OrderingPolicy::natural;
            auto result = run_experiment(instances, cfg);

            ostream * summary_out = &out;
            if (csv_path.empty()) {
                write_csv(result.rows, out, zero_elapsed);
                summary_out = &err;
            }
            else {
                std::ofstream file{ csv_path };
                if (! file)
                    throw DimacsError(csv_path + ": cannot open file for writing");
                write_csv(result.rows, file, zero_elapsed);
            }

            auto & summary = result.summary;
            if (as_json)
                *summary_out << summary_json(summary).dump() << "\n";
            else
                *summary_out << "instances=" << summary.instances
                    << " events_total=" << summary.events_total
                    << " instances_with_events=" << summary.instances_with_events
                    << " instances_with_nodes_delta=" << summary.instances_with_nodes_delta
                    << " nodes_delta_zero_fraction=" << std::fixed << std::setprecision(4)
                    << summary.nodes_delta_zero_fraction << "\n";
            return 0;
        }
    }

    auto run_cli(int argc, const char * const * argv, ostream & out, ostream & err) -> int
    {
        CLI::App app{ "cliquelab: exact maximum clique with greedy colouring bounds" };
        app.require_subcommand(1);

        CommonArgs solve_args;
        string solve_variant = "baseline";
        int solve_threads = 1;
        bool solve_literal = false, solve_would_be = false;
        auto * solve = app.add_subcommand("solve", "exact maximum clique on a DIMACS instance");
        solve->add_option("file", solve_args.file, "DIMACS instance")->required();
        auto * variant_option = solve->add_option("--variant", solve_variant, "bound variant")
            ->check(CLI::IsMember({ "baseline", "inherited" }));
        add_order_option(solve, solve_args);
        solve->add_option("--threads", solve_threads, "worker count")->check(CLI::Range(1, 1024));
        solve->add_flag("--json", solve_args.as_json, "emit a JSON object");
        solve->add_flag("--literal-bound", solve_literal, "inherit the parent's raw colour count");
        solve->add_flag("--would-be-events", solve_would_be, "count events in baseline runs too");

        CommonArgs colour_args;
        auto * colour = app.add_subcommand("colour", "greedy colouring of a DIMACS instance");
        colour->add_option("file", colour_args.file, "DIMACS instance")->required();
        add_order_option(colour, colour_args);
        colour->add_flag("--json", colour_args.as_json, "emit a JSON object");

        CommonArgs compare_args;
        bool compare_literal = false;
        auto * compare = app.add_subcommand("compare", "run both bound variants and report node counts");
        compare->add_option("file", compare_args.file, "DIMACS instance")->required();
        add_order_option(compare, compare_args);
        compare->add_flag("--json", compare_args.as_json, "emit a JSON object");
        compare->add_flag("--literal-bound", compare_literal, "inherit the parent's raw colour count");

        CommonArgs detect_args;
        bool detect_all = false;
        auto * detect = app.add_subcommand("detect", "find a vertex whose removal worsens the greedy colouring");
        detect->add_option("file", detect_args.file, "DIMACS instance")->required();
        add_order_option(detect, detect_args);
        detect->add_flag("--all", detect_all, "list every such vertex");

        int gen_n = 0;
        double gen_p = 0.0;
        std::uint64_t gen_seed = 0;
        string gen_output;
        auto * gen = app.add_subcommand("gen", "write a seeded random instance as DIMACS");
        gen->add_option("--n", gen_n, "vertex count")->required()->check(CLI::NonNegativeNumber);
        gen->add_option("--p", gen_p, "edge probability")->required()->check(CLI::Range(0.0, 1.0));
        gen->add_option("--seed", gen_seed, "generator seed")->required();
        gen->add_option("-o,--output", gen_output, "output file (default stdout)");

        string oracle_file;
        int oracle_limit = 30;
        auto * oracle = app.add_subcommand("oracle", "exact omega by exhaustive enumeration");
        oracle->add_option("file", oracle_file, "DIMACS instance")->required();
        oracle->add_option("--limit", oracle_limit, "largest vertex count accepted")->check(CLI::PositiveNumber);

        vector<string> experiment_files;
        int exp_gen_n = 0, exp_gen_count = 0;
        double exp_gen_p = 0.0;
        std::uint64_t exp_gen_seed0 = 0;
        string experiment_order = "natural", experiment_csv;
        bool experiment_json = false, experiment_zero_elapsed = false;
        auto * experiment = app.add_subcommand("experiment", "compare variants over a set of instances, emit CSV");
        experiment->add_option("files", experiment_files, "DIMACS instances");
        auto * opt_gen_n = experiment->add_option("--gen-n", exp_gen_n, "vertex count for generated instances")
            ->check(CLI::NonNegativeNumber);
        auto * opt_gen_p = experiment->add_option("--gen-p", exp_gen_p, "edge probability for generated instances")
            ->check(CLI::Range(0.0, 1.0));
        auto * opt_gen_count = experiment->add_option("--gen-count", exp_gen_count, "number of generated instances")
            ->check(CLI::NonNegativeNumber);
        experiment->add_option("--gen-seed0", exp_gen_seed0, "first seed for generated instances");
        opt_gen_n->needs(opt_gen_p)->needs(opt_gen_count);
        opt_gen_p->needs(opt_gen_n);
        opt_gen_count->needs(opt_gen_n);
        experiment->add_option("--order", experiment_order, "initial vertex ordering")
            ->check(CLI::IsMember({ "natural", "degree" }));
        experiment->add_option("--csv", experiment_csv, "write rows to a file instead of stdout");
        experiment->add_flag("--json", experiment_json, "emit the summary as JSON");
        experiment->add_flag("--zero-elapsed", experiment_zero_elapsed,
                "write 0.000 in the elapsed column, for reproducible output");

        try {
            app.parse(argc, argv);
        }
        catch (const CLI::CallForHelp & e) {
            app.exit(e, out, err);
            return 0;
        }
        catch (const CLI::CallForAllHelp & e) {
            app.exit(e, out, err);
            return 0;
        }
        catch (const CLI::ParseError & e) {
            app.exit(e, out, err);
            return 1;
        }

        try {
            if (app.got_subcommand(solve))
                return run_solve(solve_args, solve_variant, variant_option->count() > 0,
                        solve_threads, solve_literal, solve_would_be, out, err);
            else if (app.got_subcommand(colour))
                return run_colour(colour_args, out, err);
            else if (app.got_subcommand(compare))
                return run_compare(compare_args, compare_literal, out, err);
            else if (app.got_subcommand(detect))
                return run_detect(detect_args, detect_all, out, err);
            else if (app.got_subcommand(gen))
                return run_gen(gen_n, gen_p, gen_seed, gen_output, out);
            else if (app.got_subcommand(oracle))
                return run_oracle(oracle_file, oracle_limit, out, err);
            else if (app.got_subcommand(experiment))
                return run_experiment_cli(experiment_files, exp_gen_n, exp_gen_p, exp_gen_count,
                        exp_gen_seed0, experiment_order, experiment_csv,
                        experiment_json, experiment_zero_elapsed, out, err);
        }
        catch (const std::exception & e) {
            err << "error: " << e.what() << "\n";
            return 2;
        }

        return 1;
    }
}
