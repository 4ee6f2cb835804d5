// Acceptance runner: one line per criterion, nonzero exit if any fails.
//   acceptance            every criterion
//   acceptance --only A4  just one

#include "monocat/acceptance.hpp"

#include <cstdio>
#include <cstring>
#include <string>

using namespace monocat;

int main(int argc, char** argv) {
    std::string only;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) {
            only = argv[++i];
        } else {
            std::fprintf(stderr, "usage: %s [--only NAME]\n", argv[0]);
            return 2;
        }
    }
    acceptance::Options opt;
    int failed = 0, ran = 0;
    for (const auto& c : acceptance::criteria()) {
        if (!only.empty() && c.name != only) continue;
        const auto r = acceptance::run(c, opt);
        std::printf("%s\n", acceptance::format(r).c_str());
        std::fflush(stdout);
        failed += !r.pass;
        ++ran;
    }
    if (ran == 0) {
        std::fprintf(stderr, "no criterion named '%s'\n", only.c_str());
        return 2;
    }
    std::printf("%d/%d criteria passed\n", ran - failed, ran);
    return failed == 0 ? 0 : 1;
}
