#include <iostream>

#include "hubrank_cli/cli.hpp"

int main(int argc, char** argv)
{
    return hubrank::cli::run({argv, argv + argc}, std::cout, std::cerr);
}
