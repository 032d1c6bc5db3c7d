#include <iostream>

#include "wrightlab/cli.hpp"

int main(int argc, char** argv)
{
    return wrightlab::cli::run(argc, argv, std::cout, std::cerr);
}
