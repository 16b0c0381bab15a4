#include <iostream>
#include <string>
#include <vector>

#include "defobs/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return defobs::dispatch(args, std::cout, std::cerr);
}
