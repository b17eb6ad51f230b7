// Runs every acceptance criterion and prints one line each.

#include <iostream>

#include "digitopo/suite.hpp"

int main() {
    bool all = true;
    for (const auto& r : digitopo::suite::run_all()) {
        std::cout << digitopo::suite::format_line(r) << std::endl;
        all = all && r.passed;
    }
    return all ? 0 : 1;
}
