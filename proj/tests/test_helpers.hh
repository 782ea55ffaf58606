/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef CLIQUELAB_GUARD_TESTS_TEST_HELPERS_HH
#define CLIQUELAB_GUARD_TESTS_TEST_HELPERS_HH 1

#include "colouring.hh"
#include "graph.hh"

#include <algorithm>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace cliquelab::test
{
    inline auto instance_path(const std::string & name) -> std::string
    {
        return std::string{ CLIQUELAB_INSTANCE_DIR } + "/" + name;
    }

    inline auto is_clique(const Graph & g, const std::vector<int> & vertices) -> bool
    {
        for (unsigned i = 0 ; i < vertices.size() ; ++i)
            for (unsigned j = i + 1 ; j < vertices.size() ; ++j)
                if (! g.adjacent(vertices[i], vertices[j]))
                    return false;
        return true;
    }

    inline auto sorted_labels(const Graph & g, const std::vector<int> & vertices) -> std::vector<int>
    {
        std::vector<int> result;
        for (auto & v : vertices)
            result.push_back(g.label(v));
        std::sort(result.begin(), result.end());
        return result;
    }

    // classes in order, vertices mapped to labels, insertion order preserved
    inline auto class_labels(const Graph & g, const Colouring & c) -> std::vector<std::vector<int>>
    {
        std::vector<std::vector<int>> result;
        for (auto & cls : c.classes) {
            result.emplace_back();
            for (auto & v : cls)
                result.back().push_back(g.label(v));
        }
        return result;
    }

    /* Every Colouring invariant at once: classes partition the domain with
       no empty class, no two adjacent vertices share a class, class_of
       agrees with the classes, and the colouring is greedy-canonical (a
       vertex in class i has a neighbour in every class below i). */
    inline auto colouring_invariants_hold(const Graph & g, const Bitset & domain, const Colouring & c) -> bool
    {
        if (! (c.domain == domain))
            return false;

        Bitset seen(g.size());
        int total = 0;
        for (unsigned k = 0 ; k < c.classes.size() ; ++k) {
            if (c.classes[k].empty())
                return false;
            for (auto & v : c.classes[k]) {
                if (! domain.test(v) || seen.test(v) || c.class_of[v] != int(k))
                    return false;
                seen.set(v);
                ++total;
            }
        }
        if (total != domain.count())
            return false;

        for (int v = 0 ; v < g.size() ; ++v)
            if (! domain.test(v) && c.class_of[v] != -1)
                return false;

        for (auto & cls : c.classes)
            for (unsigned i = 0 ; i < cls.size() ; ++i)
                for (unsigned j = i + 1 ; j < cls.size() ; ++j)
                    if (g.adjacent(cls[i], cls[j]))
                        return false;

        for (int v = 0 ; v < g.size() ; ++v) {
            if (c.class_of[v] < 1)
                continue;
            for (int k = 0 ; k < c.class_of[v] ; ++k) {
                bool neighbour_found = false;
                for (auto & u : c.classes[k])
                    if (g.adjacent(u, v)) {
                        neighbour_found = true;
                        break;
                    }
                if (! neighbour_found)
                    return false;
            }
        }

        return true;
    }

    // Fisher-Yates driven by raw mt19937_64 words, identical on every
    // platform (the distribution classes are not)
    inline auto random_permutation(int size, std::mt19937_64 & rng) -> std::vector<int>
    {
        std::vector<int> result(size);
        for (int i = 0 ; i < size ; ++i)
            result[i] = i;
        for (int i = size - 1 ; i > 0 ; --i) {
            int j = int(rng() % std::uint64_t(i + 1));
            std::swap(result[i], result[j]);
        }
        return result;
    }

    inline auto complete_graph(int size) -> Graph
    {
        std::vector<std::pair<int, int>> edges;
        for (int u = 0 ; u < size ; ++u)
            for (int v = u + 1 ; v < size ; ++v)
                edges.emplace_back(u, v);
        return Graph{ size, edges };
    }

    inline auto path_graph(int size) -> Graph
    {
        std::vector<std::pair<int, int>> edges;
        for (int v = 0 ; v + 1 < size ; ++v)
            edges.emplace_back(v, v + 1);
        return Graph{ size, edges };
    }
}

#endif
