#include <iostream>

#include "taskecon/acceptance.hpp"

int main(int argc, char** argv) {
    taskecon::AcceptanceOptions opts;
    if (argc > 1) opts.only = argv[1];
    bool all = true;
    for (const auto& r : taskecon::run_acceptance(opts)) {
        std::cout << taskecon::format_check(r) << '\n';
        all = all && r.pass;
    }
    return all ? 0 : 1;
}
