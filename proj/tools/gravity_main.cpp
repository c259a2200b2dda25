#include <vector>

#include "gravity/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return gravity::run_cli(args);
}
