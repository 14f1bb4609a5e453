// Prints one PASS/FAIL line per acceptance criterion; exits non-zero on any failure.
#include <cstdio>
#include <cstring>

#include "thetakit/acceptance.hpp"

int main(int argc, char** argv) {
    thetakit::AcceptanceOptions opt;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--slow") == 0) opt.include_slow = true;
    int failed = 0;
    for (const auto& r : thetakit::run_acceptance(opt)) {
        std::printf("%s [%2d] %s (%.2f s): %s\n", r.passed ? "PASS" : "FAIL", r.id, r.title.c_str(), r.seconds,
                    r.detail.c_str());
        std::fflush(stdout);
        failed += r.passed ? 0 : 1;
    }
    return failed == 0 ? 0 : 1;
}
