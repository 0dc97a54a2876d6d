#include <iostream>
#include <string>
#include <vector>

#include "partbij/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv, argv + argc);
    return partbij::cli::run(args, std::cout, std::cerr);
}
