#pragma once

// Named acceptance criteria. Each one runs to a pass/fail verdict with a
// one-line detail; the wall-clock limit is part of the verdict.

#include "monocat/enumerate.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace monocat::acceptance {

struct Options {
    std::uint64_t seed = 1;
    std::uint64_t budget = default_budget();
    /// Used by rad2-count; defaults to linear A3 over F_2[x]/x^2.
    QuiverPtr quiver;
    BasePtr base;
    /// Directory holding the shipped tables; empty means data_dir().
    std::string data_dir;
};

struct Outcome {
    bool pass = false;
    std::string detail;
};

struct Criterion {
    std::string name;
    std::string summary;
    double limit_seconds;
    std::function<Outcome(const Options&)> run;
};

struct Result {
    std::string name;
    bool pass = false;
    bool budget_exceeded = false;
    double seconds = 0;
    double limit_seconds = 0;
    std::string detail;
};

/// MONOCAT_DATA_DIR from the environment, else the source tree's data/.
std::string data_dir();

const std::vector<Criterion>& criteria();
/// nullptr for an unknown name.
const Criterion* find(const std::string& name);
/// Runs one criterion; exceptions become failures with the message as detail.
Result run(const Criterion& c, const Options& opt);

/// "PASS A1   2.1s/300s  detail".
std::string format(const Result& r);

}  // namespace monocat::acceptance
