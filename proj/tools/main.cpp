#include <iostream>
#include <string>
#include <vector>

#include "pdgm/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return pdgm::run_cli(args, std::cout, std::cerr);
}
