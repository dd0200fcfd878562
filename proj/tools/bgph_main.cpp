#include <vector>

#include "bgph/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return bgph::run_cli(args);
}
