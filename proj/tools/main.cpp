#include "torinv/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return torinv::cli::run(argc, argv, std::cout, std::cerr);
}
