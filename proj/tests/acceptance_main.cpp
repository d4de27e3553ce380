#include <cstring>
#include <iostream>

#include "minorforge/acceptance.hpp"

int main(int argc, char** argv) {
    bool quick = false;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--quick") == 0) quick = true;
    return minorforge::run_acceptance(quick, std::cout) ? 0 : 1;
}
