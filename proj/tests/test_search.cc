/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "samples.hh"
#include "search.hh"
#include "test_helpers.hh"

#include <random>

using namespace cliquelab;
using namespace cliquelab::test;

using std::vector;

namespace
{
    auto config(Variant variant, OrderingPolicy ordering = OrderingPolicy::natural) -> SearchConfig
    {
        SearchConfig cfg;
        cfg.variant = variant;
        cfg.ordering = ordering;
        return cfg;
    }
}

TEST_CASE("oracle finds the fig1 maximum clique")
{
    auto g = fig1_graph();
    auto [ omega, clique ] = brute_force_omega(g);
    CHECK(omega == 4);
    CHECK(sorted_labels(g, clique) == vector<int>{ 1, 3, 6, 8 });
}

TEST_CASE("oracle on a path picks an edge")
{
    auto g = path_graph(4);
    auto [ omega, clique ] = brute_force_omega(g);
    CHECK(omega == 2);
    CHECK(is_clique(g, clique));
}

TEST_CASE("oracle refuses graphs above its size guard")
{
    CHECK_THROWS_AS(brute_force_omega(Graph{ 31 }, 30), std::invalid_argument);
    CHECK_NOTHROW(brute_force_omega(Graph{ 30 }, 30));
}

TEST_CASE("solver and oracle agree on a seeded instance")
{
    auto g = random_graph(18, 0.5, 7);
    auto [ omega, clique ] = brute_force_omega(g);
    CHECK(solve_max_clique(g, config(Variant::baseline)).omega == omega);
    CHECK(solve_max_clique(g, config(Variant::inherited)).omega == omega);
}

TEST_CASE("fig1 is solved exactly by both variants")
{
    auto g = fig1_graph();
    for (auto variant : { Variant::baseline, Variant::inherited }) {
        auto outcome = solve_max_clique(g, config(variant));
        CHECK(outcome.omega == 4);
        CHECK(sorted_labels(g, outcome.clique) == vector<int>{ 1, 3, 6, 8 });
        CHECK(outcome.max_depth == 4);
        // pinned from the first deterministic run
        CHECK(outcome.nodes == 4);
        CHECK(outcome.misleading_events == 0);
    }
}

TEST_CASE("complete graph node count")
{
    auto k5 = complete_graph(5);
    for (auto variant : { Variant::baseline, Variant::inherited }) {
        auto outcome = solve_max_clique(k5, config(variant));
        CHECK(outcome.omega == 5);
        CHECK(outcome.clique == vector<int>{ 0, 1, 2, 3, 4 });
        CHECK(outcome.nodes == 5);   // pinned
    }
}

TEST_CASE("degenerate inputs")
{
    auto none = solve_max_clique(Graph{ 0 }, config(Variant::baseline));
    CHECK(none.omega == 0);
    CHECK(none.clique.empty());
    CHECK(none.nodes == 0);

    auto edgeless = solve_max_clique(Graph{ 7 }, config(Variant::inherited));
    CHECK(edgeless.omega == 1);
    CHECK(edgeless.clique.size() == 1);
    CHECK(edgeless.nodes == 1);   // pinned
}

TEST_CASE("solver matches the oracle on random instances")
{
    std::mt19937_64 rng{ 123 };
    for (int trial = 0 ; trial < 150 ; ++trial) {
        int n = 1 + int(rng() % 22);
        double p = 0.1 * double(1 + int(rng() % 9));
        auto g = random_graph(n, p, rng());
        auto [ omega, oracle_clique ] = brute_force_omega(g);

        for (auto variant : { Variant::baseline, Variant::inherited }) {
            for (auto policy : { OrderingPolicy::natural, OrderingPolicy::degree_desc }) {
                auto outcome = solve_max_clique(g, config(variant, policy));
                CHECK(outcome.omega == omega);
                CHECK(int(outcome.clique.size()) == omega);
                CHECK(is_clique(g, outcome.clique));
                CHECK(outcome.nodes + 1 >= outcome.omega);
                if (Variant::baseline == variant)
                    CHECK(outcome.misleading_events == 0);
            }
        }
    }
}

TEST_CASE("inherited bound never explores more, and agrees when no events fire")
{
    std::mt19937_64 rng{ 456 };
    for (int trial = 0 ; trial < 100 ; ++trial) {
        int n = 10 + int(rng() % 21);
        auto g = random_graph(n, 0.5, rng());
        auto report = compare_variants(g, SearchConfig{});
        CHECK(report.omega_equal);
        CHECK(report.nodes_delta >= 0);
        if (0 == report.inherited.misleading_events)
            CHECK(report.nodes_equal);
    }
}

TEST_CASE("effective bound is valid at every sampled node")
{
    std::mt19937_64 rng{ 789 };
    for (int trial = 0 ; trial < 12 ; ++trial) {
        int n = 6 + int(rng() % 9);
        auto g = random_graph(n, 0.5, rng());
        auto order = make_ordering(g, OrderingPolicy::natural);
        for (auto variant : { Variant::baseline, Variant::inherited }) {
            long long node_index = 0;
            NodeObserver observer = [&] (const SearchNode & node) {
                if (node_index++ % 5 != 0)
                    return;
                auto sub = induced_subgraph(g, node.candidates);
                auto [ best_extension, clique ] = brute_force_omega(sub);
                CHECK(node.effective_bound >= best_extension);
                // the in-search colouring is the vertexwise procedure
                CHECK(node.colour_count == greedy_colour_vertexwise(g, node.candidates, order).num_colours());
            };
            auto outcome = solve_max_clique(g, config(variant), observer);
            CHECK(outcome.omega >= 1);
        }
    }
}

TEST_CASE("inherited effective bounds strictly decrease down every branch")
{
    std::mt19937_64 rng{ 31 };
    for (int trial = 0 ; trial < 40 ; ++trial) {
        auto g = random_graph(10 + int(rng() % 26), 0.5, rng());
        auto outcome = solve_max_clique(g, config(Variant::inherited));
        CHECK(outcome.bound_breaches == 0);
    }
}

TEST_CASE("sequential runs are deterministic")
{
    auto g = random_graph(30, 0.6, 5);
    for (auto variant : { Variant::baseline, Variant::inherited }) {
        auto first = solve_max_clique(g, config(variant));
        auto second = solve_max_clique(g, config(variant));
        CHECK(first.omega == second.omega);
        CHECK(first.clique == second.clique);
        CHECK(first.nodes == second.nodes);
        CHECK(first.misleading_events == second.misleading_events);
        CHECK(first.nodes_by_depth == second.nodes_by_depth);
    }
}

TEST_CASE("literal inheritance stays correct and still dominates the baseline")
{
    std::mt19937_64 rng{ 21 };
    for (int trial = 0 ; trial < 40 ; ++trial) {
        int n = 1 + int(rng() % 20);
        auto g = random_graph(n, 0.5, rng());
        auto [ omega, clique ] = brute_force_omega(g);

        auto literal_cfg = config(Variant::inherited);
        literal_cfg.inheritance = Inheritance::literal;
        auto literal = solve_max_clique(g, literal_cfg);
        CHECK(literal.omega == omega);
        CHECK(literal.nodes <= solve_max_clique(g, config(Variant::baseline)).nodes);
    }
}

TEST_CASE("baseline reports events only in instrumentation mode")
{
    // seed 1 gives a known misleading instance
    auto g = random_graph(20, 0.5, 1);

    auto plain = solve_max_clique(g, config(Variant::baseline));
    CHECK(plain.misleading_events == 0);

    auto instrumented_cfg = config(Variant::baseline);
    instrumented_cfg.count_would_be_events = true;
    auto instrumented = solve_max_clique(g, instrumented_cfg);
    CHECK(instrumented.nodes == plain.nodes);
    CHECK(instrumented.misleading_events >= solve_max_clique(g, config(Variant::inherited)).misleading_events);
}

TEST_CASE("compare_variants fills the report and rejects threads")
{
    auto g = fig1_graph();
    auto report = compare_variants(g, SearchConfig{}, "fig1");
    CHECK(report.instance == "fig1");
    CHECK(report.baseline.omega == 4);
    CHECK(report.inherited.omega == 4);
    CHECK(report.omega_equal);
    CHECK(report.nodes_equal);
    CHECK(report.nodes_delta == 0);

    SearchConfig threaded;
    threaded.threads = 2;
    CHECK_THROWS_AS(compare_variants(g, threaded), std::invalid_argument);
}

TEST_CASE("parallel solve on the sample instances")
{
    auto g = fig1_graph();
    SearchConfig cfg;
    cfg.variant = Variant::inherited;
    cfg.threads = 2;
    auto outcome = solve_parallel(g, cfg);
    CHECK(outcome.omega == 4);
    CHECK(sorted_labels(g, outcome.clique) == vector<int>{ 1, 3, 6, 8 });

    auto k8 = complete_graph(8);
    cfg.threads = 4;
    CHECK(solve_parallel(k8, cfg).omega == 8);

    cfg.threads = 1;
    CHECK_THROWS_AS(solve_parallel(g, cfg), std::invalid_argument);
}

TEST_CASE("parallel omega matches sequential omega")
{
    std::mt19937_64 rng{ 654 };
    for (int trial = 0 ; trial < 10 ; ++trial) {
        auto g = random_graph(35, 0.5, rng());
        SearchConfig cfg;
        cfg.variant = Variant::inherited;
        int sequential = solve_max_clique(g, cfg).omega;
        for (int threads : { 2, 4 }) {
            auto parallel_cfg = cfg;
            parallel_cfg.threads = threads;
            auto outcome = solve_parallel(g, parallel_cfg);
            CHECK(outcome.omega == sequential);
            CHECK(is_clique(g, outcome.clique));
        }
    }
}
