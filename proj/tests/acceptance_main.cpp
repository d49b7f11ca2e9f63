// Acceptance gate: runs the twelve criteria and prints one pass/fail line
// per criterion.  Exit status is nonzero when any criterion fails.

#include <cstdio>
#include <cstdlib>
#include <cstring>

#include "acceptance/acceptance.hpp"
#include "wittcore/wittlaw.hpp"

int main(int argc, char** argv) {
    bool quick = false;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--quick") == 0) quick = true;
    if (!std::getenv("WITTLAU_CACHE_DIR"))
        wittcore::set_cache_dir(".witt_cache");

    auto results = acceptance::run_all(quick);
    bool all = true;
    for (const auto& r : results) {
        std::printf("criterion %2d: %s — %s (%s; %.2fs)\n", r.id,
                    r.passed ? "PASS" : "FAIL", r.title.c_str(),
                    r.detail.c_str(), r.seconds);
        all = all && r.passed;
    }
    std::printf("acceptance: %s\n", all ? "ALL PASSED" : "FAILURES PRESENT");
    return all ? 0 : 1;
}
