/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include "harness.hh"

#include <iostream>

auto main(int argc, char * argv[]) -> int
{
    return cliquelab::run_cli(argc, argv, std::cout, std::cerr);
}
