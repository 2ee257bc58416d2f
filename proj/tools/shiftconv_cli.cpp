#include "shiftconv/zeta.hpp"

#include <cstdio>

int main() {
    std::puts("shiftconv: subcommands land with the evaluator modules");
    return 0;
}
