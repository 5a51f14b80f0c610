#include <iostream>

#include "qcl/cli.hpp"

int main(int argc, char** argv) {
    return qcl::run_command(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
