/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include "colouring.hh"

using std::optional;
using std::vector;

namespace cliquelab
{
    auto greedy_colour_vertexwise(const Graph & g, const Bitset & domain, const VertexOrdering & order) -> Colouring
    {
        Colouring result{ domain, {}, vector<int>(g.size(), -1), 0 };

        for (auto & v : order.order) {
            if (! domain.test(v))
                continue;

            int assigned = -1;
            for (unsigned k = 0 ; k < result.classes.size() && -1 == assigned ; ++k) {
                bool conflict = false;
                for (auto & u : result.classes[k]) {
                    ++result.adjacency_tests;
                    if (g.adjacent(u, v)) {
                        conflict = true;
                        break;
                    }
                }
                if (! conflict)
                    assigned = int(k);
            }

            if (-1 == assigned) {
                result.classes.emplace_back();
                assigned = int(result.classes.size()) - 1;
            }
            result.classes[assigned].push_back(v);
            result.class_of[v] = assigned;
        }

        return result;
    }

    auto greedy_colour_classwise(const Graph & g, const Bitset & domain, const VertexOrdering & order) -> Colouring
    {
        Colouring result{ domain, {}, vector<int>(g.size(), -1), 0 };

        Bitset uncoloured = domain;
        int remaining = uncoloured.count();
        while (remaining > 0) {
            result.classes.emplace_back();
            auto & current = result.classes.back();
            int current_index = int(result.classes.size()) - 1;

            for (auto & v : order.order) {
                if (! uncoloured.test(v))
                    continue;
                bool conflict = false;
                for (auto & u : current) {
                    ++result.adjacency_tests;
                    if (g.adjacent(u, v)) {
                        conflict = true;
                        break;
                    }
                }
                if (! conflict) {
                    current.push_back(v);
                    result.class_of[v] = current_index;
                    uncoloured.reset(v);
                    --remaining;
                }
            }
        }

        return result;
    }

    auto forced_members(const Colouring & colouring, int clique_size) -> optional<Bitset>
    {
        if (clique_size > colouring.num_colours())
            return std::nullopt;

        Bitset result(colouring.domain.width());
        if (clique_size == colouring.num_colours())
            for (auto & cls : colouring.classes)
                if (1 == cls.size())
                    result.set(cls.front());
        return result;
    }

    auto find_misleading_vertex(const Graph & g, const VertexOrdering & order) -> optional<MisleadingVertex>
    {
        auto everything = Bitset::filled(g.size());
        int colours_before = greedy_colour_vertexwise(g, everything, order).num_colours();

        for (int v = 0 ; v < g.size() ; ++v) {
            auto domain = everything;
            domain.reset(v);
            int colours_after = greedy_colour_vertexwise(g, domain, order).num_colours();
            if (colours_after > colours_before)
                return MisleadingVertex{ v, colours_before, colours_after };
        }

        return std::nullopt;
    }
}
