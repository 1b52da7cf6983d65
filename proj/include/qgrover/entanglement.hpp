#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "qgrover/grover.hpp"

namespace qgrover {

// Bipartition of n qubits into the first l (most significant) and the rest.
struct PartitionSpec {
    int l = 0;
    int n = 0;
};

// The two squared Schmidt coefficients of a rank-2 marginal.
struct SchmidtPair {
    double lambda_plus = 0.0;
    double lambda_minus = 0.0;
    bool degenerate = false;  // true when the pair coincides within 1e-12
};

// Squared Schmidt coefficients (descending) with optional biorthogonal vectors.
struct SchmidtData {
    std::vector<double> coefficients;
    std::vector<std::vector<std::complex<double>>> vectors_left;
    std::vector<std::vector<std::complex<double>>> vectors_right;
    bool degenerate = false;
};

// Pattern counts of a marked set across a bipartition: p distinct left-block
// patterns, q distinct right-block patterns, and the concurrence of the
// normalized marked superposition across the same split.
struct MultiTargetSplit {
    std::uint64_t p = 0;
    std::uint64_t q = 0;
    double target_concurrence = 0.0;
};

// The five closed-form representations of the concurrence, exact first:
//   exact     = 2 eta B (A - B tan theta)
//   form2     = 2 eta sec(theta) sin(2k theta) cos((2k+1) theta)   [identical]
//   rate_form = rewrite of form2 through the success-probability derivative
//   approx4   = rate_form without the sine-ratio factor
//   approx5   = derivative / (2 A0), the partition-independent approximation
struct ConcurrenceChain {
    double exact = 0.0;
    double form2 = 0.0;
    double rate_form = 0.0;
    double approx4 = 0.0;
    double approx5 = 0.0;
};

// Concurrence of the k-step state split into the amplification component and
// the component inherited from an entangled target, plus a diagnostic:
//   search    = 2 eta' |A - B tan theta| |B|     amplification component
//   byproduct = |A^2 - B^2 tan^2 theta| C(t)     inherited from the target
//   total     = concurrence of the full state, closed form, valid at every
//               k and for every marked set; hypot(search, byproduct) equals
//               it exactly when the marked set is a product set p*q = r,
//               and only approximates it otherwise (a fully covered block
//               forces eta' = 0 while amplification entanglement persists)
//   byproduct_tan_variant = first-power-of-tan byproduct, kept for
//               arbitration; nonzero at k = 0 where the true value is 0
struct MultiTargetRecord {
    double search = 0.0;
    double byproduct = 0.0;
    double total = 0.0;
    double byproduct_tan_variant = 0.0;
};

// Partition prefactor sqrt((2^l - 1)(2^{n-l} - 1)/(N - 1)) for a single target.
double eta(PartitionSpec spec);

// Multi-target prefactor sqrt((2^l - p)(2^{n-l} - q)/(N - r)).
double eta_prime(PartitionSpec spec, std::uint64_t p, std::uint64_t q, std::uint64_t r);

double concurrence_from_spectrum(std::span<const double> mu);

SchmidtPair schmidt_coefficients(std::int64_t k, const SearchParams& params,
                                 PartitionSpec spec);
SchmidtPair schmidt_coefficients_eta(std::int64_t k, double eta_value, double theta);

// Closed-form Schmidt vectors in the full 2^l and 2^{n-l} spaces.
SchmidtData schmidt_vectors(std::int64_t k, const SearchParams& params, PartitionSpec spec);

// Spread (c0, c1) over a basis block: c0 on the given pattern, c1 uniformly
// over the remaining 2^qubits - 1 patterns.
std::vector<std::complex<double>> expand_block_vector(double c0, double c1,
                                                      std::uint64_t pattern, int qubits);

// |concurrence| of the k-step single-target state across the split; the
// product form 2 eta sec(theta) |sin(2k theta) cos((2k+1) theta)| is used so
// k = 0 yields exactly zero. Valid for every k >= 0.
double concurrence_state(std::int64_t k, const SearchParams& params, PartitionSpec spec);
double concurrence_state_eta(std::int64_t k, double eta_value, double theta);

// Signed closed forms; restricted to the first quadrant (2k+1) theta <= pi/2.
ConcurrenceChain concurrence_chain(std::int64_t k, const SearchParams& params,
                                   PartitionSpec spec);
ConcurrenceChain concurrence_chain_eta(std::int64_t k, double eta_value, double theta);

// Concurrence right after the sign flip, before the reflection:
// 2 eta (A + B tan theta) B. First quadrant only.
double concurrence_post_oracle(std::int64_t k, const SearchParams& params,
                               PartitionSpec spec);
double concurrence_post_oracle_eta(std::int64_t k, double eta_value, double theta);

// Entanglement added by one sign flip: 4 eta B_k^2 tan theta. First quadrant only.
double oracle_entanglement_gain(std::int64_t k, const SearchParams& params,
                                PartitionSpec spec);
double oracle_entanglement_gain_eta(std::int64_t k, double eta_value, double theta);

// Entanglement change across the reflection: C(k+1 state) - C(post-flip k state).
// Requires k and k+1 in the first quadrant; non-positive there.
double reflection_entanglement_change(std::int64_t k, const SearchParams& params,
                                      PartitionSpec spec);
double reflection_entanglement_change_eta(std::int64_t k, double eta_value, double theta);

// Pattern counts and target concurrence, computed from the marked set.
MultiTargetSplit derive_split(const SearchParams& params, PartitionSpec spec);

MultiTargetRecord multi_target_concurrence(std::int64_t k, const SearchParams& params,
                                           const MultiTargetSplit& split,
                                           PartitionSpec spec);

// Fixed-step 4th-order integration of dP/dk = 4 phi sqrt(P(1-P)), P(0) = A0^2,
// phi = arcsin(A0); returns P at k = 0..k_max.
std::vector<double> speedup_condition_integrate(double A0, std::int64_t k_max, double h);

}  // namespace qgrover
