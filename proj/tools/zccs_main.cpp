#include <string>
#include <vector>

#include "zccs/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return zccs::run_command(args);
}
