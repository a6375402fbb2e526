#include <iostream>
#include <string>
#include <vector>

#include "ltmv_cli/app.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return ltmv::cli::run(args, std::cout, std::cerr);
}
