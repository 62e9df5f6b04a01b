#include "subzeta/acceptance.hpp"
#include "subzeta/errors.hpp"

#include <cstdio>
#include <iostream>
#include <string>

// Runs the acceptance criteria and prints one line per criterion; exit status 0 iff all pass.
int main(int argc, char** argv) {
    std::string suite = argc > 1 ? argv[1] : "all";
    std::vector<int> ids;
    try {
        ids = subzeta::suite_members(suite);
    } catch (const subzeta::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    int failed = 0;
    for (int id : ids) {
        subzeta::CriterionResult r = subzeta::run_criterion(id);
        char timing[64];
        if (r.budget > 0)
            std::snprintf(timing, sizeof timing, "%.2f s / %.0f s", r.seconds, r.budget);
        else
            std::snprintf(timing, sizeof timing, "%.2f s", r.seconds);
        std::cout << (r.ok ? "PASS" : "FAIL") << "  [" << (id < 10 ? " " : "") << id << "] " << r.title << " ("
                  << timing << "): " << r.detail << std::endl;
        failed += !r.ok;
    }
    std::cout << (failed ? "FAILED " : "ALL PASSED ") << ids.size() - failed << "/" << ids.size() << std::endl;
    return failed ? 1 : 0;
}
