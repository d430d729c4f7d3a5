#include <iostream>

#include "rectcarto/cli.hpp"

int main(int argc, char** argv) {
    return rectcarto::run_cli(argc, argv, std::cout, std::cerr);
}
