#include <iostream>
#include <vector>

#include "seqacc/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return seqacc::cli::run(args, std::cout, std::cerr);
}
