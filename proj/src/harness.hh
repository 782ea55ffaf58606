/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef CLIQUELAB_GUARD_SRC_HARNESS_HH
#define CLIQUELAB_GUARD_SRC_HARNESS_HH 1

#include "search.hh"

#include <iosfwd>
#include <string>
#include <vector>

namespace cliquelab
{
    struct ExperimentRow
    {
        std::string instance;
        int n = 0;
        long long m = 0;
        std::string variant;
        int omega = 0;
        long long nodes = 0;
        long long events = 0;
        double elapsed_ms = 0.0;
    };

    struct ExperimentSummary
    {
        int instances = 0;
        long long events_total = 0;
        int instances_with_events = 0;
        int instances_with_nodes_delta = 0;
        long long nodes_total_baseline = 0;
        long long nodes_total_inherited = 0;
        long long bound_breaches_total = 0;
        double nodes_delta_zero_fraction = 1.0;
    };

    struct ExperimentResult
    {
        std::vector<ExperimentRow> rows;              // two per instance, baseline then inherited
        std::vector<ComparisonReport> reports;        // one per instance
        ExperimentSummary summary;
    };

    struct NamedGraph
    {
        std::string id;
        Graph graph;
    };

    // compare_variants over every instance; requires cfg.threads == 1
    auto run_experiment(const std::vector<NamedGraph> & instances, const SearchConfig & cfg) -> ExperimentResult;

    // parses each path first; a file that fails to parse aborts the whole
    // run with an error naming it
    auto run_experiment_files(const std::vector<std::string> & paths, const SearchConfig & cfg) -> ExperimentResult;

    // header then one line per row: instance,n,m,variant,omega,nodes,events,elapsed_ms
    auto write_csv(const std::vector<ExperimentRow> & rows, std::ostream & out, bool zero_elapsed = false) -> void;

    // entry point behind the cliquelab binary; returns the process exit
    // status (0 ok, 1 usage error, 2 input error)
    auto run_cli(int argc, const char * const * argv, std::ostream & out, std::ostream & err) -> int;
}

#endif
