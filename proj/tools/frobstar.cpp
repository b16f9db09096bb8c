#include <cstdio>

int main() {
    std::puts("frobstar: placeholder");
    return 0;
}
