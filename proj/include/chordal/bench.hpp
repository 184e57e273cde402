#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace chordal {

struct BenchRow {
    int n = 0;
    int m = 0;
    double structural_ms = 0.0;  ///< decompose + structural spectrum
    double oracle_ms = 0.0;      ///< dense eigensolve
    bool oracle_ran = false;
};

/// Times the structural pipeline (decomposition plus the clique/separator
/// spectrum) and optionally the dense solver on one seeded quasi-threshold
/// instance. Structural timings are averaged over repeated runs until a
/// minimum wall-time budget is reached.
BenchRow bench_point(int n, std::uint64_t seed, bool with_oracle);

/// Geometric sweep of instance sizes up to max_n; the oracle runs only on
/// points with n <= oracle_max_n.
std::vector<BenchRow> run_bench(int max_n, int points, int oracle_max_n, std::uint64_t seed);

/// CSV with header "n,m,t_structural_ms,t_oracle_ms"; the oracle column is
/// empty on rows where it did not run.
void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows);

} // namespace chordal
