#include <cstdio>

#include "pfaffell/pfaffell.hpp"

int main() {
    std::puts("pfaffell: placeholder");
    return 0;
}
