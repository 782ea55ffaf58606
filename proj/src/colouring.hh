/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef CLIQUELAB_GUARD_SRC_COLOURING_HH
#define CLIQUELAB_GUARD_SRC_COLOURING_HH 1

#include "graph.hh"

#include <optional>
#include <vector>

namespace cliquelab
{
    /* A greedy colouring of a vertex subset. Classes are numbered by
       creation order; each class lists its vertices in the order they were
       coloured. The class count is the bound used by the clique search: any
       clique inside the domain has at most num_colours vertices. */
    struct Colouring
    {
        Bitset domain;
        std::vector<std::vector<int>> classes;
        std::vector<int> class_of;        // -1 outside the domain
        long long adjacency_tests = 0;    // work counter, both procedures are quadratic

        auto num_colours() const -> int { return int(classes.size()); }
    };

    // scan domain vertices in `order`, give each the lowest class holding
    // none of its neighbours
    auto greedy_colour_vertexwise(const Graph & g, const Bitset & domain, const VertexOrdering & order) -> Colouring;

    // repeatedly open a class and sweep the uncoloured vertices in `order`,
    // admitting each that has no neighbour already in the class; produces
    // the same colouring as the vertexwise procedure
    auto greedy_colour_classwise(const Graph & g, const Bitset & domain, const VertexOrdering & order) -> Colouring;

    /* Vertices every clique of exactly `clique_size` vertices inside the
       coloured domain must contain. A k-clique takes one vertex from each
       of k classes, so when k equals the class count the singleton classes
       are forced. Returns an empty set when k is below the class count, and
       nullopt when k exceeds it (no such clique exists). */
    auto forced_members(const Colouring & colouring, int clique_size) -> std::optional<Bitset>;

    struct MisleadingVertex
    {
        int vertex;
        int colours_before;
        int colours_after;
    };

    // first vertex (ascending) whose removal makes the greedy colouring of
    // the rest, in the same relative order, use strictly more colours
    auto find_misleading_vertex(const Graph & g, const VertexOrdering & order) -> std::optional<MisleadingVertex>;
}

#endif
