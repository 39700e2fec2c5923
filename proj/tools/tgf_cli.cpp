#include <string>
#include <vector>

#include "tgf/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return tgf::cli::run(args);
}
