#include <iostream>

#include "qplane/cli.hpp"

int main(int argc, char** argv) {
    return qplane::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
