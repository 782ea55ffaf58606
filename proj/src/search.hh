/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef CLIQUELAB_GUARD_SRC_SEARCH_HH
#define CLIQUELAB_GUARD_SRC_SEARCH_HH 1

#include "colouring.hh"
#include "graph.hh"

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace cliquelab
{
    enum class Variant
    {
        baseline,    // bound is the subproblem's own greedy colour count
        inherited    // bound also capped by what the parent already knew
    };

    /* What flows down to a child subproblem in the inherited variant.
       `tight` passes min(c, b) - 1, where c is the branching vertex's
       colour index and b the bound inherited so far; this dominates the
       plain parent-colour-count reading and makes the effective bound
       strictly decreasing along any branch. `literal` passes the parent's
       own colour count, kept for experiment parity. */
    enum class Inheritance
    {
        tight,
        literal
    };

    struct SearchConfig
    {
        Variant variant = Variant::baseline;
        OrderingPolicy ordering = OrderingPolicy::natural;
        int threads = 1;
        int oracle_limit = 30;
        Inheritance inheritance = Inheritance::tight;
        bool count_would_be_events = false;   // let baseline runs report events too
    };

    struct SearchOutcome
    {
        int omega = 0;
        std::vector<int> clique;                 // internal vertex ids, ascending
        long long nodes = 0;                     // vertices pushed onto the growing clique
        long long misleading_events = 0;         // nodes whose own colour count beat the inherited bound
        int max_depth = 0;
        std::vector<long long> nodes_by_depth;   // [d - 1] = nodes at depth d
        long long bound_breaches = 0;            // tight-inherited monotonicity check, always 0
        double elapsed_ms = 0.0;
    };

    // per-node view offered to an observer, valid only during the call
    struct SearchNode
    {
        int depth;
        const Bitset & candidates;
        int colour_count;
        int inherited_bound;
        int effective_bound;
    };

    using NodeObserver = std::function<void (const SearchNode &)>;

    /* Exact maximum clique, sequential, deterministic: identical inputs
       give identical outcomes, node counts included. Candidates are
       recoloured greedily at every node (vertexwise, original order) and
       branched in reverse colour order. cfg.threads is ignored here; use
       solve_parallel for a threaded run. */
    auto solve_max_clique(const Graph & g, const SearchConfig & cfg) -> SearchOutcome;
    auto solve_max_clique(const Graph & g, const SearchConfig & cfg, const NodeObserver & observer) -> SearchOutcome;

    /* Exact omega by enumerating every clique, no colouring and no shared
       pruning logic with the branch and bound: this is the oracle the
       solver is checked against. Refuses graphs with more than `limit`
       vertices. */
    auto brute_force_omega(const Graph & g, int limit = 30) -> std::pair<int, std::vector<int>>;

    struct ComparisonReport
    {
        std::string instance;
        SearchOutcome baseline;
        SearchOutcome inherited;
        bool omega_equal = false;
        bool nodes_equal = false;
        long long nodes_delta = 0;               // baseline.nodes - inherited.nodes
    };

    // both variants on the same ordering; throws if the omegas disagree
    auto compare_variants(const Graph & g, const SearchConfig & cfg, const std::string & instance = "") -> ComparisonReport;

    /* Top-level branches distributed over cfg.threads workers sharing a
       monotone incumbent: a worker may read a stale size but never a
       decreased one, and witness updates happen atomically with the size.
       omega matches the sequential result; nodes and event counts are
       aggregated across workers and are not run-to-run deterministic. */
    auto solve_parallel(const Graph & g, const SearchConfig & cfg) -> SearchOutcome;
}

#endif
