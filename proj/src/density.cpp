#include "qgrover/density.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "qgrover/numeric.hpp"

namespace qgrover {

namespace {

using cplx = std::complex<double>;

void validate_subset(const QubitSubset& subset, int n) {
    if (subset.indices.empty()) throw std::invalid_argument("qubit subset is empty");
    if (static_cast<int>(subset.indices.size()) >= n)
        throw std::invalid_argument("qubit subset must be a proper subset");
    int prev = -1;
    for (int q : subset.indices) {
        if (q < 0 || q >= n) throw std::out_of_range("qubit index out of range");
        if (q <= prev) throw std::invalid_argument("qubit indices must be strictly increasing");
        prev = q;
    }
}

// bit masks of the global index addressed by each sub-index of the subset,
// first listed qubit = most significant bit of the sub-index
std::vector<std::uint64_t> scatter_table(const std::vector<int>& qubits, int n) {
    int m = static_cast<int>(qubits.size());
    std::vector<std::uint64_t> table(std::uint64_t{1} << m, 0);
    for (std::uint64_t s = 0; s < table.size(); ++s) {
        std::uint64_t global = 0;
        for (int j = 0; j < m; ++j)
            if ((s >> (m - 1 - j)) & 1) global |= std::uint64_t{1} << (n - 1 - qubits[j]);
        table[s] = global;
    }
    return table;
}

}  // namespace

QubitSubset QubitSubset::first(int l) {
    QubitSubset subset;
    subset.indices.resize(static_cast<std::size_t>(std::max(0, l)));
    std::iota(subset.indices.begin(), subset.indices.end(), 0);
    return subset;
}

QubitSubset complement(const QubitSubset& keep, int n) {
    validate_subset(keep, n);
    QubitSubset rest;
    std::size_t pos = 0;
    for (int q = 0; q < n; ++q) {
        if (pos < keep.indices.size() && keep.indices[pos] == q) {
            ++pos;
        } else {
            rest.indices.push_back(q);
        }
    }
    return rest;
}

DensityMatrix reduced_density(const StateVector& state, const QubitSubset& keep) {
    int n = state.n_qubits;
    validate_subset(keep, n);
    int m = static_cast<int>(keep.indices.size());
    if (m > kMaxKeptQubits) throw std::length_error("kept subset too large");

    std::vector<std::uint64_t> kept_bits = scatter_table(keep.indices, n);
    std::vector<std::uint64_t> env_bits = scatter_table(complement(keep, n).indices, n);

    std::uint64_t dim = std::uint64_t{1} << m;
    DensityMatrix rho;
    rho.dim = dim;
    rho.entries.assign(dim * dim, cplx{0.0, 0.0});

    std::vector<cplx> fiber(dim);
    for (std::uint64_t env : env_bits) {
        for (std::uint64_t s = 0; s < dim; ++s) fiber[s] = state.amps[kept_bits[s] | env];
        for (std::uint64_t i = 0; i < dim; ++i)
            for (std::uint64_t j = 0; j < dim; ++j)
                rho.entries[i * dim + j] += fiber[i] * std::conj(fiber[j]);
    }
    return rho;
}

double purity(const DensityMatrix& rho) {
    return pairwise_map_sum<double>(0, rho.entries.size(),
                                    [&](std::size_t i) { return std::norm(rho.entries[i]); });
}

// Concurrence from the two-by-two minors of the amplitude matrix. Immune to
// the 1 - purity cancellation, so near-product states come out at the
// floating-point floor instead of at sqrt(machine epsilon). Quadratic in the
// state size, hence only used as a fallback on small systems.
static double concurrence_from_minors(const StateVector& state, const QubitSubset& side) {
    int n = state.n_qubits;
    std::vector<std::uint64_t> row_bits = scatter_table(side.indices, n);
    std::vector<std::uint64_t> col_bits = scatter_table(complement(side, n).indices, n);
    std::size_t rows = row_bits.size();
    std::size_t cols = col_bits.size();
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < rows; ++i)
        for (std::size_t k = i + 1; k < rows; ++k)
            for (std::size_t j = 0; j + 1 < cols; ++j)
                for (std::size_t l = j + 1; l < cols; ++l) {
                    cplx minor = state.amps[row_bits[i] | col_bits[j]] *
                                     state.amps[row_bits[k] | col_bits[l]] -
                                 state.amps[row_bits[i] | col_bits[l]] *
                                     state.amps[row_bits[k] | col_bits[j]];
                    sum += std::norm(minor);
                }
    return 2.0 * std::sqrt(sum);
}

double concurrence_numeric(const StateVector& state, const QubitSubset& keep) {
    int n = state.n_qubits;
    validate_subset(keep, n);
    const QubitSubset* side = &keep;
    QubitSubset rest;
    if (static_cast<int>(keep.indices.size()) > n - static_cast<int>(keep.indices.size())) {
        rest = complement(keep, n);
        side = &rest;
    }
    if (static_cast<int>(side->indices.size()) > kMaxKeptQubits)
        throw std::length_error("kept subset too large");
    double p = purity(reduced_density(state, *side));
    double half_csq = std::max(0.0, 1.0 - p);
    // 1 - purity loses every significant digit when the state is close to a
    // product across the cut; switch to the minor form there.
    if (2.0 * half_csq < 1e-13 && state.amps.size() <= (std::size_t{1} << 14))
        return concurrence_from_minors(state, *side);
    return std::sqrt(2.0 * half_csq);
}

EigenSystem jacobi_eigh(const DensityMatrix& matrix) {
    std::uint64_t dim = matrix.dim;
    if (dim == 0 || matrix.entries.size() != dim * dim)
        throw std::invalid_argument("malformed matrix");

    // work on the Hermitian average to wash out representation asymmetry
    std::vector<cplx> a(dim * dim);
    for (std::uint64_t i = 0; i < dim; ++i)
        for (std::uint64_t j = 0; j < dim; ++j)
            a[i * dim + j] =
                0.5 * (matrix.entries[i * dim + j] + std::conj(matrix.entries[j * dim + i]));

    std::vector<cplx> v(dim * dim, cplx{0.0, 0.0});
    for (std::uint64_t i = 0; i < dim; ++i) v[i * dim + i] = 1.0;

    auto off_norm = [&]() {
        double sum = 0.0;
        for (std::uint64_t p = 0; p < dim; ++p)
            for (std::uint64_t q = p + 1; q < dim; ++q) sum += std::norm(a[p * dim + q]);
        return std::sqrt(2.0 * sum);
    };

    int sweep = 0;
    while (off_norm() >= 1e-12) {
        if (++sweep > 50) throw std::runtime_error("jacobi failed to converge");
        for (std::uint64_t p = 0; p < dim; ++p) {
            for (std::uint64_t q = p + 1; q < dim; ++q) {
                cplx apq = a[p * dim + q];
                double mag = std::abs(apq);
                if (mag < 1e-300) continue;
                cplx u = apq / mag;  // phase so the rotated block is real
                double tau =
                    (a[q * dim + q].real() - a[p * dim + p].real()) / (2.0 * mag);
                double t = (tau >= 0.0 ? 1.0 : -1.0) /
                           (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                double c = 1.0 / std::sqrt(1.0 + t * t);
                double s = t * c;

                for (std::uint64_t i = 0; i < dim; ++i) {  // columns p, q of A
                    cplx aip = a[i * dim + p];
                    cplx aiq = a[i * dim + q];
                    a[i * dim + p] = c * aip - s * std::conj(u) * aiq;
                    a[i * dim + q] = s * u * aip + c * aiq;
                }
                for (std::uint64_t j = 0; j < dim; ++j) {  // rows p, q
                    cplx apj = a[p * dim + j];
                    cplx aqj = a[q * dim + j];
                    a[p * dim + j] = c * apj - s * u * aqj;
                    a[q * dim + j] = s * std::conj(u) * apj + c * aqj;
                }
                for (std::uint64_t i = 0; i < dim; ++i) {  // eigenvector columns
                    cplx vip = v[i * dim + p];
                    cplx viq = v[i * dim + q];
                    v[i * dim + p] = c * vip - s * std::conj(u) * viq;
                    v[i * dim + q] = s * u * vip + c * viq;
                }
            }
        }
    }

    std::vector<std::uint64_t> order(dim);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::uint64_t x, std::uint64_t y) {
        return a[x * dim + x].real() > a[y * dim + y].real();
    });

    EigenSystem sys;
    sys.values.reserve(dim);
    sys.vectors.reserve(dim);
    for (std::uint64_t col : order) {
        sys.values.push_back(a[col * dim + col].real());
        std::vector<cplx> vec(dim);
        for (std::uint64_t i = 0; i < dim; ++i) vec[i] = v[i * dim + col];
        sys.vectors.push_back(std::move(vec));
    }
    return sys;
}

SchmidtData schmidt_numeric(const StateVector& state, const QubitSubset& keep) {
    int n = state.n_qubits;
    validate_subset(keep, n);
    int m = static_cast<int>(keep.indices.size());
    if (m > kMaxKeptQubits) throw std::length_error("kept subset too large");

    EigenSystem sys = jacobi_eigh(reduced_density(state, keep));

    SchmidtData data;
    data.coefficients.reserve(sys.values.size());
    for (double value : sys.values) data.coefficients.push_back(std::max(0.0, value));
    if (data.coefficients.size() >= 2)
        data.degenerate = data.coefficients[0] - data.coefficients[1] <= 1e-12;

    std::vector<std::uint64_t> kept_bits = scatter_table(keep.indices, n);
    std::vector<std::uint64_t> env_bits = scatter_table(complement(keep, n).indices, n);
    std::uint64_t dim = std::uint64_t{1} << m;
    for (std::size_t j = 0; j < data.coefficients.size(); ++j) {
        double mu = data.coefficients[j];
        if (mu <= 1e-12) break;  // descending, the rest are negligible
        data.vectors_left.push_back(sys.vectors[j]);
        std::vector<cplx> right(env_bits.size());
        for (std::size_t e = 0; e < env_bits.size(); ++e) {
            cplx sum = pairwise_map_sum<cplx>(0, dim, [&](std::size_t s) {
                return std::conj(sys.vectors[j][s]) * state.amps[kept_bits[s] | env_bits[e]];
            });
            right[e] = sum / std::sqrt(mu);
        }
        data.vectors_right.push_back(std::move(right));
    }
    return data;
}

double trace_distance(const DensityMatrix& rho1, const DensityMatrix& rho2) {
    if (rho1.dim != rho2.dim) throw std::invalid_argument("dimension mismatch");
    DensityMatrix diff;
    diff.dim = rho1.dim;
    diff.entries.resize(rho1.entries.size());
    for (std::size_t i = 0; i < diff.entries.size(); ++i)
        diff.entries[i] = rho1.entries[i] - rho2.entries[i];
    EigenSystem sys = jacobi_eigh(diff);
    double sum = pairwise_map_sum<double>(0, sys.values.size(),
                                          [&](std::size_t i) { return std::abs(sys.values[i]); });
    return 0.5 * sum;
}

DensityMatrix basis_mixture(const std::vector<std::uint64_t>& indices, std::uint64_t dim) {
    if (indices.empty()) throw std::invalid_argument("mixture needs at least one state");
    DensityMatrix rho;
    rho.dim = dim;
    rho.entries.assign(dim * dim, cplx{0.0, 0.0});
    double w = 1.0 / static_cast<double>(indices.size());
    for (std::uint64_t idx : indices) {
        if (idx >= dim) throw std::out_of_range("basis index out of range");
        rho.entries[idx * dim + idx] += w;
    }
    return rho;
}

}  // namespace qgrover
