#include <iostream>

#include "repstab/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    const repstab::CliResult r = repstab::run_cli(args);
    std::cout << r.out;
    std::cerr << r.err;
    return r.exit_code;
}
