#include <kcb/cli.hh>

#include <iostream>

auto main(int argc, char ** argv) -> int
{
    return kcb::cli::run(argc, argv, std::cout, std::cerr);
}
