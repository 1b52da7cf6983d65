#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qgrover/density.hpp"
#include "qgrover/entanglement.hpp"
#include "qgrover/grover.hpp"
#include "qgrover/statevector.hpp"

namespace qgrover {

struct SweepRow {
    std::int64_t k = 0;
    double A2 = 0.0;
    double C_analytic = 0.0;
    std::optional<double> C_numeric;
    std::optional<double> abs_err;
};

// Success probability and concurrence for k = 0..k_max. With no partition the
// prefactor is fixed at eta = 1 (the large-N idealization); with a partition
// the exact eta is used and, when the statevector fits, a numeric column and
// its absolute error are attached. Partition mode requires r = 1.
std::vector<SweepRow> figure1_sweep(std::uint64_t N, std::uint64_t r, std::int64_t k_max,
                                    std::optional<PartitionSpec> partition);

struct Figure2Row {
    std::int64_t k = 0;
    double oracle_gain = 0.0;
    double reflection_drop = 0.0;
};

// Per-step entanglement gained by the sign flip vs. removed by the reflection,
// at eta = 1. Rows stop where k+1 would leave the first quadrant.
std::vector<Figure2Row> figure2_sweep(std::uint64_t N, std::uint64_t r, std::int64_t k_max);

struct ValidationCell {
    std::int64_t k = 0;
    int l = 0;
    double analytic = 0.0;
    double numeric = 0.0;
    double abs_err = 0.0;
};

struct ValidationReport {
    std::vector<ValidationCell> cells;
    double max_abs_err = 0.0;
    double threshold = 0.0;
    bool pass = false;
};

// Closed-form concurrence (single- or multi-target as r dictates) against the
// statevector engine, for every requested first-l partition and k = 0..k_max.
// An empty partition list means every l in [1, n-1].
ValidationReport cross_validate(int n, const std::vector<std::uint64_t>& marked,
                                std::int64_t k_max, std::vector<int> partitions,
                                double threshold = 1e-9);

struct OptimalityRow {
    int n = 0;
    std::int64_t T = 0;
    double lhs = 0.0;
    double rhs = 0.0;
    bool satisfied = false;
};

struct BoundReport {
    int n = 0;
    std::vector<OptimalityRow> rows;
    std::int64_t T_star = -1;  // first T whose worst-case probability gap reaches 1/2
    double ratio = 0.0;        // T_star / sqrt(N)
};

// For each n: run a single-target search for every possible target, total the
// per-target deviation of the success probability from the oracle-free value
// 1/N, and compare against sqrt(2) * T * sqrt(N) for T = 0..T_max
// (T_max <= 0 selects 2 * optimal_iterations).
std::vector<BoundReport> optimality_experiment(int n_lo, int n_hi, std::int64_t T_max);

struct ParallelDemoResult {
    std::vector<double> register_distances;
    std::int64_t k_used = 0;
};

// Run the multi-register protocol for optimal_iterations steps and report each
// register's trace distance to the equal mixture of marked basis states.
ParallelDemoResult parallel_demo(int n, int l, const std::vector<std::uint64_t>& marked,
                                 ReflectionVariant variant);

struct QuarterCaseResult {
    int n = 0;
    std::vector<std::uint64_t> marked;
    double success_after_one = 0.0;
    double post_oracle_concurrence = 0.0;   // across the (n-1)|1 split, after the flip
    double search_component = 0.0;          // of the k = 1 state
    double byproduct_component = 0.0;
    double target_concurrence = 0.0;
};

// The r = N/4 showcase: a marked set paired so the target superposition is
// entangled across the (n-1)|1 split; one iteration then succeeds exactly.
QuarterCaseResult quarter_case_demo(int n);

// Max deviation of the integrated success probability from sin^2((2k+1) phi)
// over k = 0..k_max (k_max <= 0 selects the first probability maximum).
double speedup_condition_check(double A0, std::int64_t k_max, double h = 1e-3);

}  // namespace qgrover
