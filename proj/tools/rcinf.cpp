#include <iostream>

#include "rcinf/cli.hpp"

int main(int argc, char** argv)
{
    return rcinf::cli::run(argc, argv, std::cin, std::cout, std::cerr);
}
