// Command-line front end; subcommands are wired up once the library settles.
#include <cstdio>

int main() {
    std::puts("walks: placeholder");
    return 0;
}
