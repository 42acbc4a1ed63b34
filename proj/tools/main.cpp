#include <iostream>
#include <vector>

#include "levigon/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return levigon::cli_dispatch(std::move(args), std::cout, std::cerr);
}
