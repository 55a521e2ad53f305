#include <iostream>
#include <string>
#include <vector>

#include "jramsey/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return jramsey::cli::run(args, std::cin, std::cout);
}
