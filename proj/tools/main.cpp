#include <iostream>
#include <string>
#include <vector>

#include "cat2vect/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return cat2vect::cli::run(args, std::cout);
}
