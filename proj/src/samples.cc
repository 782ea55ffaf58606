/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include "samples.hh"

using std::pair;
using std::vector;

namespace cliquelab
{
    namespace
    {
        auto from_one_based(int size, const vector<pair<int, int>> & edges) -> Graph
        {
            vector<pair<int, int>> zero_based;
            for (auto & [ u, v ] : edges)
                zero_based.emplace_back(u - 1, v - 1);
            return Graph{ size, zero_based };
        }
    }

    auto fig1_graph() -> Graph
    {
        return from_one_based(9, {
                { 1, 3 }, { 1, 5 }, { 1, 6 }, { 1, 8 }, { 1, 9 },
                { 2, 5 }, { 2, 6 }, { 2, 8 },
                { 3, 4 }, { 3, 6 }, { 3, 7 }, { 3, 8 },
                { 4, 8 }, { 5, 6 }, { 6, 8 }, { 7, 8 }, { 8, 9 } });
    }

    auto fig2_graph() -> Graph
    {
        return from_one_based(7, {
                { 1, 2 }, { 2, 5 }, { 5, 4 }, { 4, 3 }, { 3, 6 }, { 6, 7 }, { 7, 2 } });
    }
}
