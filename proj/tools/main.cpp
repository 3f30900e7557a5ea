#include <iostream>

#include "commands.hpp"

int main(int argc, char** argv)
{
    return parkhedron::cli::run_cli(argc, argv, std::cout, std::cerr);
}
