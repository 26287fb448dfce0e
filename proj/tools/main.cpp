#include <vector>

#include "fqgraphs/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return fqg::run_cli(args);
}
