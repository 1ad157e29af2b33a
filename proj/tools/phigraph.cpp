#include <iostream>
#include <string>
#include <vector>

#include "phigraph/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    phigraph::cli::CommandResult result = phigraph::cli::run(args, &std::cin);
    std::cout << result.output;
    std::cerr << result.diagnostics;
    return result.exit_code;
}
