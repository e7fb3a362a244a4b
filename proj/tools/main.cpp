#include <iostream>
#include <vector>

#include "cycdec/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return cycdec::cli_main(args, std::cout, std::cerr);
}
