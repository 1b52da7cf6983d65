#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "qgrover/entanglement.hpp"
#include "qgrover/statevector.hpp"

namespace qgrover {

struct DensityMatrix {
    std::uint64_t dim = 0;
    std::vector<std::complex<double>> entries;  // row-major, dim x dim

    std::complex<double>& at(std::uint64_t i, std::uint64_t j) { return entries[i * dim + j]; }
    const std::complex<double>& at(std::uint64_t i, std::uint64_t j) const {
        return entries[i * dim + j];
    }
};

// Sorted distinct qubit indices; qubit 0 = most significant bit of the index.
struct QubitSubset {
    std::vector<int> indices;

    static QubitSubset first(int l);  // {0, 1, ..., l-1}
};

QubitSubset complement(const QubitSubset& keep, int n);

// Trace out every qubit not in `keep`. Kept qubits preserve their relative
// order in the reduced index (first kept qubit = most significant bit).
DensityMatrix reduced_density(const StateVector& state, const QubitSubset& keep);

double purity(const DensityMatrix& rho);

// sqrt(2(1 - purity)) across the split keep | complement; traces whichever
// side is smaller, so only min(|keep|, n-|keep|) must fit under the cap.
double concurrence_numeric(const StateVector& state, const QubitSubset& keep);

struct EigenSystem {
    std::vector<double> values;  // descending, unclamped
    std::vector<std::vector<std::complex<double>>> vectors;  // matching columns
};

// Cyclic Jacobi for dense Hermitian matrices: off-diagonal norm < 1e-12,
// at most 50 sweeps.
EigenSystem jacobi_eigh(const DensityMatrix& matrix);

// Squared Schmidt coefficients (descending, clamped at 0) of the state across
// keep | complement, with the significant Schmidt vector pairs.
SchmidtData schmidt_numeric(const StateVector& state, const QubitSubset& keep);

// (1/2) sum |eigenvalues of rho1 - rho2|.
double trace_distance(const DensityMatrix& rho1, const DensityMatrix& rho2);

// Equal-weight mixture of the given basis states: (1/len) sum |i><i|.
DensityMatrix basis_mixture(const std::vector<std::uint64_t>& indices, std::uint64_t dim);

}  // namespace qgrover
