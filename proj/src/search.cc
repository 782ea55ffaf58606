/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include "search.hh"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <stdexcept>
#include <thread>

using std::atomic;
using std::mutex;
using std::pair;
using std::string;
using std::vector;

using std::chrono::duration;
using std::chrono::steady_clock;

namespace cliquelab
{
    namespace
    {
        /* Best clique found so far. Updates only ever raise the size, and
           the witness changes under the same lock as the size, so readers
           see a size that is never an overestimate. */
        struct Incumbent
        {
            atomic<int> size{ 0 };
            mutex witness_mutex;
            vector<int> witness;

            auto try_raise(const vector<int> & clique) -> void
            {
                if (int(clique.size()) <= size.load(std::memory_order_relaxed))
                    return;
                std::lock_guard<mutex> guard{ witness_mutex };
                if (int(clique.size()) > size.load(std::memory_order_relaxed)) {
                    witness = clique;
                    size.store(int(clique.size()), std::memory_order_release);
                }
            }

            auto current() const -> int
            {
                return size.load(std::memory_order_acquire);
            }
        };

        // candidates listed class by class, in colouring order; colour[i]
        // is the 1-based class index of vertex[i], non-decreasing in i
        struct ColourSequence
        {
            vector<int> vertex;
            vector<int> colour;
        };

        struct Stats
        {
            long long nodes = 0;
            long long events = 0;
            long long breaches = 0;
            int max_depth = 0;
            vector<long long> nodes_by_depth;
        };

        struct Searcher
        {
            const Graph & graph;
            const SearchConfig & config;
            const vector<int> & scan_order;
            Incumbent & incumbent;
            const NodeObserver * observer = nullptr;

            Stats stats;
            vector<int> current;

            Searcher(const Graph & g, const SearchConfig & cfg, const vector<int> & order, Incumbent & inc) :
                graph(g),
                config(cfg),
                scan_order(order),
                incumbent(inc)
            {
            }

            // greedy vertexwise colouring of `candidates`, scan order
            // restricted from the root ordering; returns the colour count
            auto colour_candidates(const Bitset & candidates, ColourSequence & out) const -> int
            {
                vector<Bitset> class_bits;
                vector<vector<int>> class_members;

                for (auto & v : scan_order) {
                    if (! candidates.test(v))
                        continue;
                    unsigned k = 0;
                    while (k < class_bits.size() && class_bits[k].intersects(graph.neighbourhood(v)))
                        ++k;
                    if (k == class_bits.size()) {
                        class_bits.emplace_back(graph.size());
                        class_members.emplace_back();
                    }
                    class_bits[k].set(v);
                    class_members[k].push_back(v);
                }

                out.vertex.clear();
                out.colour.clear();
                for (unsigned k = 0 ; k < class_members.size() ; ++k)
                    for (auto & v : class_members[k]) {
                        out.vertex.push_back(v);
                        out.colour.push_back(int(k) + 1);
                    }
                return int(class_members.size());
            }

            auto expand(const Bitset & candidates, int inherited_bound, int parent_effective) -> void
            {
                if (candidates.empty())
                    return;

                ColourSequence seq;
                int colour_count = colour_candidates(candidates, seq);

                bool use_inherited = (Variant::inherited == config.variant);
                int effective = use_inherited ? std::min(colour_count, inherited_bound) : colour_count;

                if (use_inherited && Inheritance::tight == config.inheritance && effective > parent_effective - 1)
                    ++stats.breaches;

                if (colour_count > inherited_bound && (use_inherited || config.count_would_be_events))
                    ++stats.events;

                if (observer && *observer)
                    (*observer)(SearchNode{ int(current.size()), candidates, colour_count, inherited_bound, effective });

                Bitset rest = candidates;
                for (int i = int(seq.vertex.size()) - 1 ; i >= 0 ; --i) {
                    int v = seq.vertex[i];
                    int vertex_colour = seq.colour[i];
                    int vertex_bound = use_inherited ? std::min(vertex_colour, inherited_bound) : vertex_colour;

                    // every remaining vertex has a colour index no bigger
                    // than this one, so the whole loop is dead
                    if (int(current.size()) + vertex_bound <= incumbent.current())
                        return;

                    rest.reset(v);
                    current.push_back(v);
                    ++stats.nodes;
                    if (int(current.size()) > stats.max_depth)
                        stats.max_depth = int(current.size());
                    if (int(current.size()) > int(stats.nodes_by_depth.size()))
                        stats.nodes_by_depth.resize(current.size(), 0);
                    ++stats.nodes_by_depth[current.size() - 1];
                    incumbent.try_raise(current);

                    Bitset child = rest & graph.neighbourhood(v);
                    int child_bound = (Inheritance::literal == config.inheritance)
                        ? colour_count
                        : std::min(vertex_colour, inherited_bound) - 1;
                    expand(child, child_bound, effective);

                    current.pop_back();
                }
            }
        };

        auto merge(SearchOutcome & outcome, const Stats & stats) -> void
        {
            outcome.nodes += stats.nodes;
            outcome.misleading_events += stats.events;
            outcome.bound_breaches += stats.breaches;
            outcome.max_depth = std::max(outcome.max_depth, stats.max_depth);
            if (stats.nodes_by_depth.size() > outcome.nodes_by_depth.size())
                outcome.nodes_by_depth.resize(stats.nodes_by_depth.size(), 0);
            for (unsigned d = 0 ; d < stats.nodes_by_depth.size() ; ++d)
                outcome.nodes_by_depth[d] += stats.nodes_by_depth[d];
        }

        auto finish(SearchOutcome & outcome, Incumbent & incumbent, steady_clock::time_point start) -> void
        {
            outcome.omega = incumbent.current();
            outcome.clique = incumbent.witness;
            std::sort(outcome.clique.begin(), outcome.clique.end());
            outcome.elapsed_ms = duration<double, std::milli>(steady_clock::now() - start).count();
        }
    }

    auto solve_max_clique(const Graph & g, const SearchConfig & cfg, const NodeObserver & observer) -> SearchOutcome
    {
        auto start = steady_clock::now();
        auto ordering = make_ordering(g, cfg.ordering);

        Incumbent incumbent;
        Searcher searcher{ g, cfg, ordering.order, incumbent };
        if (observer)
            searcher.observer = &observer;

        searcher.expand(Bitset::filled(g.size()), g.size(), g.size() + 1);

        SearchOutcome outcome;
        merge(outcome, searcher.stats);
        finish(outcome, incumbent, start);
        return outcome;
    }

    auto solve_max_clique(const Graph & g, const SearchConfig & cfg) -> SearchOutcome
    {
        return solve_max_clique(g, cfg, NodeObserver{});
    }

    namespace
    {
        auto enumerate_cliques(const Graph & g, const vector<int> & candidates,
                vector<int> & current, vector<int> & best) -> void
        {
            for (unsigned i = 0 ; i < candidates.size() ; ++i) {
                int v = candidates[i];
                current.push_back(v);
                if (current.size() > best.size())
                    best = current;
                vector<int> next;
                for (unsigned j = i + 1 ; j < candidates.size() ; ++j)
                    if (g.adjacent(v, candidates[j]))
                        next.push_back(candidates[j]);
                if (! next.empty())
                    enumerate_cliques(g, next, current, best);
                current.pop_back();
            }
        }
    }

    auto brute_force_omega(const Graph & g, int limit) -> pair<int, vector<int>>
    {
        if (g.size() > limit)
            throw std::invalid_argument("oracle: graph has " + std::to_string(g.size())
                    + " vertices but the size guard is " + std::to_string(limit));

        vector<int> all(g.size());
        for (int v = 0 ; v < g.size() ; ++v)
            all[v] = v;

        vector<int> current, best;
        enumerate_cliques(g, all, current, best);
        return { int(best.size()), best };
    }

    auto compare_variants(const Graph & g, const SearchConfig & cfg, const string & instance) -> ComparisonReport
    {
        if (cfg.threads != 1)
            throw std::invalid_argument("compare_variants is defined on deterministic single-threaded counts");

        auto baseline_cfg = cfg;
        baseline_cfg.variant = Variant::baseline;
        auto inherited_cfg = cfg;
        inherited_cfg.variant = Variant::inherited;

        ComparisonReport report;
        report.instance = instance;
        report.baseline = solve_max_clique(g, baseline_cfg);
        report.inherited = solve_max_clique(g, inherited_cfg);
        report.omega_equal = (report.baseline.omega == report.inherited.omega);
        report.nodes_equal = (report.baseline.nodes == report.inherited.nodes);
        report.nodes_delta = report.baseline.nodes - report.inherited.nodes;

        if (! report.omega_equal)
            throw std::logic_error("variants disagree on omega for instance '" + instance + "'");

        return report;
    }

    auto solve_parallel(const Graph & g, const SearchConfig & cfg) -> SearchOutcome
    {
        if (cfg.threads < 2)
            throw std::invalid_argument("solve_parallel requires at least two threads");

        auto start = steady_clock::now();
        auto ordering = make_ordering(g, cfg.ordering);

        Incumbent incumbent;

        // the root node is coloured once, then its branches are claimed by
        // workers in reverse colour order
        ColourSequence root_seq;
        int root_colours = 0;
        {
            Searcher root{ g, cfg, ordering.order, incumbent };
            root_colours = root.colour_candidates(Bitset::filled(g.size()), root_seq);
        }

        bool use_inherited = (Variant::inherited == cfg.variant);
        int root_effective = use_inherited ? std::min(root_colours, g.size()) : root_colours;

        atomic<int> next_branch{ int(root_seq.vertex.size()) - 1 };
        vector<Stats> worker_stats(cfg.threads);
        vector<std::thread> workers;

        for (int t = 0 ; t < cfg.threads ; ++t)
            workers.emplace_back([&, t] () {
                    Searcher searcher{ g, cfg, ordering.order, incumbent };
                    for ( ; ; ) {
                        int i = next_branch.fetch_sub(1, std::memory_order_relaxed);
                        if (i < 0)
                            break;

                        int v = root_seq.vertex[i];
                        int vertex_colour = root_seq.colour[i];
                        int vertex_bound = use_inherited ? std::min(vertex_colour, g.size()) : vertex_colour;
                        if (vertex_bound <= incumbent.current())
                            continue;

                        Bitset rest(g.size());
                        for (int j = 0 ; j < i ; ++j)
                            rest.set(root_seq.vertex[j]);

                        searcher.current.assign(1, v);
                        ++searcher.stats.nodes;
                        searcher.stats.max_depth = std::max(searcher.stats.max_depth, 1);
                        if (searcher.stats.nodes_by_depth.empty())
                            searcher.stats.nodes_by_depth.resize(1, 0);
                        ++searcher.stats.nodes_by_depth[0];
                        incumbent.try_raise(searcher.current);

                        Bitset child = rest & g.neighbourhood(v);
                        int child_bound = (Inheritance::literal == cfg.inheritance)
                            ? root_colours
                            : std::min(vertex_colour, g.size()) - 1;
                        searcher.expand(child, child_bound, root_effective);
                    }
                    worker_stats[t] = searcher.stats;
                    });

        for (auto & w : workers)
            w.join();

        SearchOutcome outcome;
        for (auto & stats : worker_stats)
            merge(outcome, stats);
        finish(outcome, incumbent, start);
        return outcome;
    }
}
