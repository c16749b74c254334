#include <vector>

#include "fingertrace/cli.hpp"

int main(int argc, char** argv) {
    return fingertrace::run_cli(std::vector<std::string>(argv + 1, argv + argc));
}
