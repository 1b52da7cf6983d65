#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace qgrover {

// size limits for the dense engine
inline constexpr int kMaxSingleRegisterQubits = 14;
inline constexpr int kMaxTotalQubits = 20;
inline constexpr int kMaxKeptQubits = 8;

// Dense amplitudes over the computational basis. Bit convention, fixed and
// load-bearing: qubit 0 is the MOST significant bit of the basis index, so
// "the first l qubits" are the l most significant bits.
struct StateVector {
    int n_qubits = 0;
    std::vector<std::complex<double>> amps;
};

StateVector uniform_state(int n);

// Flip the sign of the marked amplitudes.
StateVector apply_oracle(StateVector state, const std::vector<std::uint64_t>& marked);

// Reflect about the uniform state: a -> 2*mean - a.
StateVector apply_diffusion(StateVector state);

// k rounds of oracle + diffusion from the uniform state.
StateVector grover_run(int n, const std::vector<std::uint64_t>& marked, std::int64_t k);

// (1/sqrt(2^n)) sum_j |j>^{tensor l} over l registers of n qubits each;
// register 0 occupies the most significant n bits.
StateVector ghz_initial(int n, int l);

enum class ReflectionVariant { Global, Local };

// One step of the multi-register protocol: oracle on register 0 only, then
// either the reflection about the correlated initial state (Global) or the
// single-register diffusion on register 0 alone (Local).
StateVector parallel_step(StateVector state, const std::vector<std::uint64_t>& marked,
                          int n, int l, ReflectionVariant variant);

// Overlap with the normalized marked superposition.
std::complex<double> target_overlap(const StateVector& state,
                                    const std::vector<std::uint64_t>& marked);

// Overlap with the normalized uniform superposition of unmarked states.
std::complex<double> nontarget_overlap(const StateVector& state,
                                       const std::vector<std::uint64_t>& marked);

// Squared norm of the component outside span{marked superposition, its complement}.
double subspace_residual(const StateVector& state,
                         const std::vector<std::uint64_t>& marked);

double norm_squared(const StateVector& state);

}  // namespace qgrover
