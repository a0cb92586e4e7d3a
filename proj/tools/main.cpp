#include <vector>

#include "cylpack/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return cylpack::run_cli(std::move(args));
}
