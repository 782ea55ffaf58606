/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef CLIQUELAB_GUARD_SRC_SAMPLES_HH
#define CLIQUELAB_GUARD_SRC_SAMPLES_HH 1

#include "graph.hh"

namespace cliquelab
{
    /* The two small instances shipped in instances/ as fig1.clq and
       fig2.clq, hardcoded here so tests can regenerate the files. */

    // nine vertices, unique maximum clique {1, 3, 6, 8}, and a natural-order
    // greedy colouring that needs exactly four colours
    auto fig1_graph() -> Graph;

    // seven vertices that greedy-colour with two colours, but removing
    // vertex 1 pushes the same-order colouring up to three
    auto fig2_graph() -> Graph;
}

#endif
