#pragma once

#include "chordal/graph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace chordal {

struct PropertyResult {
    std::string name;
    int pass = 0;
    int fail = 0;
    std::string note;                  ///< first failure description
    std::optional<Graph> failing;      ///< first failing instance, for replay
};

struct VerifyOptions {
    std::vector<std::string> families;  ///< subset of {qt, chordal, kt-split, threshold}; empty = all
    int count = 100;
    int max_n = 120;
    std::uint64_t seed = 1;
};

/// Randomized property suites over the generators: recognizer round-trips,
/// structural invariants, and spectrum predictions checked against the
/// dense solver.
std::vector<PropertyResult> run_verify(const VerifyOptions& opt);

} // namespace chordal
