// placeholder entry point; the full command-line tool lands with the
// scenario catalogue
#include <iostream>

int main() {
    std::cout << "freepairs: scenario catalogue not wired up yet\n";
    return 1;
}
