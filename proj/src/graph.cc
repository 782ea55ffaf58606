/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include "graph.hh"

#include <algorithm>
#include <fstream>
#include <istream>
#include <random>
#include <sstream>

using std::pair;
using std::string;
using std::to_string;
using std::vector;

namespace cliquelab
{
    Graph::Graph(int size) :
        size_(size),
        adj_(size, Bitset(size)),
        labels_(size)
    {
        for (int v = 0 ; v < size ; ++v)
            labels_[v] = v + 1;
    }

    Graph::Graph(int size, const vector<pair<int, int>> & edges) :
        Graph(size)
    {
        for (auto & [ u, v ] : edges) {
            if (u < 0 || u >= size_ || v < 0 || v >= size_)
                throw std::invalid_argument("edge endpoint out of range");
            if (u == v)
                throw std::invalid_argument("self-loop");
            if (! adj_[u].test(v)) {
                adj_[u].set(v);
                adj_[v].set(u);
                ++edges_;
            }
        }
    }

    Graph::Graph(int size, const vector<pair<int, int>> & edges, vector<int> labels) :
        Graph(size, edges)
    {
        labels_ = std::move(labels);
    }

    auto structurally_equal(const Graph & a, const Graph & b) -> bool
    {
        if (a.size() != b.size())
            return false;
        for (int v = 0 ; v < a.size() ; ++v)
            if (! (a.neighbourhood(v) == b.neighbourhood(v)))
                return false;
        return true;
    }

    auto validate_graph(const Graph & g) -> bool
    {
        for (int v = 0 ; v < g.size() ; ++v) {
            if (g.adjacent(v, v))
                return false;
            for (int u = 0 ; u < g.size() ; ++u)
                if (g.adjacent(v, u) != g.adjacent(u, v))
                    return false;
        }
        return true;
    }

    namespace
    {
        auto parse_error(long line, const string & what) -> DimacsError
        {
            return DimacsError("line " + to_string(line) + ": " + what);
        }

        auto reject_trailing(std::istringstream & tokens, long line) -> void
        {
            string extra;
            if (tokens >> extra)
                throw parse_error(line, "unexpected token '" + extra + "'");
        }
    }

    auto parse_dimacs(std::istream & input) -> DimacsResult
    {
        long line_number = 0;
        bool seen_problem = false;
        int size = 0;
        long long declared_edges = 0;
        vector<pair<int, int>> edges;

        string line;
        while (std::getline(input, line)) {
            ++line_number;
            std::istringstream tokens{ line };
            string kind;
            if (! (tokens >> kind))
                continue;

            if ("c" == kind)
                continue;
            else if ("p" == kind) {
                if (seen_problem)
                    throw parse_error(line_number, "duplicate problem line");
                string format;
                if (! (tokens >> format >> size >> declared_edges) || (format != "edge" && format != "col"))
                    throw parse_error(line_number, "malformed problem line (expected 'p edge n m')");
                if (size < 0 || declared_edges < 0)
                    throw parse_error(line_number, "negative count in problem line");
                reject_trailing(tokens, line_number);
                seen_problem = true;
            }
            else if ("e" == kind) {
                if (! seen_problem)
                    throw parse_error(line_number, "edge before problem line");
                int u, v;
                if (! (tokens >> u >> v))
                    throw parse_error(line_number, "malformed edge line");
                if (u < 1 || u > size)
                    throw parse_error(line_number, "edge endpoint " + to_string(u) + " out of range 1.." + to_string(size));
                if (v < 1 || v > size)
                    throw parse_error(line_number, "edge endpoint " + to_string(v) + " out of range 1.." + to_string(size));
                if (u == v)
                    throw parse_error(line_number, "self-loop at vertex " + to_string(u));
                reject_trailing(tokens, line_number);
                edges.emplace_back(u - 1, v - 1);
            }
            else
                throw parse_error(line_number, "unrecognised line type '" + kind + "'");
        }

        if (! seen_problem)
            throw DimacsError("missing problem line");

        DimacsResult result{ Graph{ size, edges }, {} };
        if (result.graph.edge_count() != declared_edges)
            result.warnings.push_back("declared " + to_string(declared_edges) + " edges but found "
                    + to_string(result.graph.edge_count()) + " distinct edges");
        return result;
    }

    auto parse_dimacs(const string & text) -> DimacsResult
    {
        std::istringstream input{ text };
        return parse_dimacs(input);
    }

    auto read_dimacs_file(const string & path) -> DimacsResult
    {
        std::ifstream input{ path };
        if (! input)
            throw DimacsError(path + ": cannot open file");
        try {
            return parse_dimacs(input);
        }
        catch (const DimacsError & e) {
            throw DimacsError(path + ": " + e.what());
        }
    }

    auto to_dimacs(const Graph & g) -> string
    {
        std::ostringstream out;
        out << "p edge " << g.size() << " " << g.edge_count() << "\n";
        for (int u = 0 ; u < g.size() ; ++u)
            g.neighbourhood(u).for_each([&] (int v) {
                    if (u < v)
                        out << "e " << u + 1 << " " << v + 1 << "\n";
                    });
        return out.str();
    }

    auto induced_subgraph(const Graph & g, const Bitset & keep) -> Graph
    {
        vector<int> old_of_new = keep.to_vector();
        vector<int> new_of_old(g.size(), -1);
        for (unsigned i = 0 ; i < old_of_new.size() ; ++i)
            new_of_old[old_of_new[i]] = int(i);

        vector<pair<int, int>> edges;
        vector<int> labels(old_of_new.size());
        for (unsigned i = 0 ; i < old_of_new.size() ; ++i) {
            labels[i] = g.label(old_of_new[i]);
            g.neighbourhood(old_of_new[i]).for_each([&] (int w) {
                    if (new_of_old[w] > int(i))
                        edges.emplace_back(int(i), new_of_old[w]);
                    });
        }
        return Graph{ int(old_of_new.size()), edges, std::move(labels) };
    }

    auto induced_subgraph(const Graph & g, const vector<int> & keep) -> Graph
    {
        Bitset bits(g.size());
        for (auto & v : keep) {
            if (v < 0 || v >= g.size())
                throw std::invalid_argument("vertex " + to_string(v) + " out of range");
            bits.set(v);
        }
        return induced_subgraph(g, bits);
    }

    auto random_graph(int size, double edge_probability, std::uint64_t seed) -> Graph
    {
        if (! (edge_probability >= 0.0 && edge_probability <= 1.0))
            throw std::invalid_argument("edge probability must be in [0, 1]");

        std::mt19937_64 rng{ seed };
        vector<pair<int, int>> edges;
        for (int u = 0 ; u < size ; ++u)
            for (int v = u + 1 ; v < size ; ++v) {
                double coin = double(rng() >> 11) * 0x1.0p-53;
                if (coin < edge_probability)
                    edges.emplace_back(u, v);
            }
        return Graph{ size, edges };
    }

    auto make_ordering(const Graph & g, OrderingPolicy policy) -> VertexOrdering
    {
        VertexOrdering result{ vector<int>(g.size()), policy };
        for (int v = 0 ; v < g.size() ; ++v)
            result.order[v] = v;

        if (OrderingPolicy::degree_desc == policy)
            std::sort(result.order.begin(), result.order.end(), [&] (int a, int b) {
                    return std::make_pair(-g.degree(a), a) < std::make_pair(-g.degree(b), b);
                    });

        return result;
    }
}
