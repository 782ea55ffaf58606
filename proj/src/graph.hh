/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef CLIQUELAB_GUARD_SRC_GRAPH_HH
#define CLIQUELAB_GUARD_SRC_GRAPH_HH 1

#include "bitset.hh"

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cliquelab
{
    class DimacsError : public std::runtime_error
    {
        public:
            explicit DimacsError(const std::string & message) :
                std::runtime_error(message)
            {
            }
    };

    /* Simple undirected graph over vertices 0..n-1, adjacency stored as one
       fixed-width bitset per vertex. Immutable once constructed, so
       instances may be shared freely between threads. Each vertex carries a
       display label (1-based, following DIMACS conventions) which survives
       induced subgraphs. */
    class Graph
    {
        private:
            int size_ = 0;
            long long edges_ = 0;
            std::vector<Bitset> adj_;
            std::vector<int> labels_;

        public:
            explicit Graph(int size);

            // edges are 0-based vertex pairs; duplicates are idempotent,
            // self-loops and out-of-range endpoints throw
            Graph(int size, const std::vector<std::pair<int, int>> & edges);
            Graph(int size, const std::vector<std::pair<int, int>> & edges, std::vector<int> labels);

            auto size() const -> int { return size_; }
            auto edge_count() const -> long long { return edges_; }
            auto adjacent(int u, int v) const -> bool { return adj_[u].test(v); }
            auto neighbourhood(int v) const -> const Bitset & { return adj_[v]; }
            auto degree(int v) const -> int { return adj_[v].count(); }
            auto label(int v) const -> int { return labels_[v]; }
    };

    // same vertex count and edge set, labels ignored
    auto structurally_equal(const Graph & a, const Graph & b) -> bool;

    // symmetry and no-self-loop invariants; exercised by tests
    auto validate_graph(const Graph & g) -> bool;

    struct DimacsResult
    {
        Graph graph;
        std::vector<std::string> warnings;
    };

    /* Accepts `c` comments, exactly one `p edge n m` (or `p col n m`)
       line, and `e u v` lines with 1-based endpoints. Duplicate edges are
       tolerated; a declared edge count that disagrees with the number of
       distinct edges parsed produces a warning, not an error. Throws
       DimacsError, with a line number, on anything malformed. */
    auto parse_dimacs(std::istream & input) -> DimacsResult;
    auto parse_dimacs(const std::string & text) -> DimacsResult;

    // parse_dimacs on a file, errors prefixed with the file name
    auto read_dimacs_file(const std::string & path) -> DimacsResult;

    // canonical form: `p edge n m`, then `e u v` with u < v, sorted, 1-based
    auto to_dimacs(const Graph & g) -> std::string;

    auto induced_subgraph(const Graph & g, const Bitset & keep) -> Graph;
    auto induced_subgraph(const Graph & g, const std::vector<int> & keep) -> Graph;

    /* Erdos-Renyi G(n, p). The generator is part of the external contract:
       pairs (u, v) with u < v are visited in lexicographic order, each
       draws one word from a std::mt19937_64 seeded with `seed`, and the
       edge is present iff (word >> 11) * 2^-53 < p. Identical arguments
       give an identical graph on every platform. */
    auto random_graph(int size, double edge_probability, std::uint64_t seed) -> Graph;

    enum class OrderingPolicy
    {
        natural,
        degree_desc
    };

    struct VertexOrdering
    {
        std::vector<int> order;   // position -> vertex
        OrderingPolicy policy;
    };

    // natural: identity. degree_desc: non-increasing degree, ties by index.
    auto make_ordering(const Graph & g, OrderingPolicy policy) -> VertexOrdering;
}

#endif
