#include "mvsbm/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return mvsbm::run_cli(argc, argv, std::cout, std::cerr);
}
