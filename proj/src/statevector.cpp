#include "qgrover/statevector.hpp"

#include <cmath>
#include <stdexcept>

#include "qgrover/numeric.hpp"

namespace qgrover {

namespace {

using cplx = std::complex<double>;

void check_indices(const std::vector<std::uint64_t>& marked, int n) {
    std::uint64_t dim = std::uint64_t{1} << n;
    for (std::uint64_t idx : marked)
        if (idx >= dim) throw std::out_of_range("marked index out of range");
}

cplx mean_amplitude(const std::vector<cplx>& amps) {
    cplx total = pairwise_map_sum<cplx>(0, amps.size(), [&](std::size_t i) { return amps[i]; });
    return total / static_cast<double>(amps.size());
}

}  // namespace

StateVector uniform_state(int n) {
    if (n < 1) throw std::invalid_argument("qubit count must be positive");
    if (n > kMaxSingleRegisterQubits) throw std::length_error("qubit cap exceeded");
    StateVector state;
    state.n_qubits = n;
    std::uint64_t dim = std::uint64_t{1} << n;
    state.amps.assign(dim, cplx{1.0 / std::sqrt(static_cast<double>(dim)), 0.0});
    return state;
}

StateVector apply_oracle(StateVector state, const std::vector<std::uint64_t>& marked) {
    check_indices(marked, state.n_qubits);
    for (std::uint64_t idx : marked) state.amps[idx] = -state.amps[idx];
    return state;
}

StateVector apply_diffusion(StateVector state) {
    cplx twice_mean = 2.0 * mean_amplitude(state.amps);
    for (cplx& a : state.amps) a = twice_mean - a;
    return state;
}

StateVector grover_run(int n, const std::vector<std::uint64_t>& marked, std::int64_t k) {
    if (k < 0) throw std::invalid_argument("iteration count must be non-negative");
    StateVector state = uniform_state(n);
    check_indices(marked, n);
    for (std::int64_t i = 0; i < k; ++i)
        state = apply_diffusion(apply_oracle(std::move(state), marked));
    return state;
}

StateVector ghz_initial(int n, int l) {
    if (n < 1 || l < 1) throw std::invalid_argument("register shape must be positive");
    if (n > kMaxSingleRegisterQubits || n * l > kMaxTotalQubits)
        throw std::length_error("qubit cap exceeded");
    StateVector state;
    state.n_qubits = n * l;
    state.amps.assign(std::uint64_t{1} << (n * l), cplx{0.0, 0.0});
    std::uint64_t dim = std::uint64_t{1} << n;
    std::uint64_t stride = 0;  // j placed in every register: index j * sum_c 2^{n c}
    for (int c = 0; c < l; ++c) stride = (stride << n) | 1;
    double amp = 1.0 / std::sqrt(static_cast<double>(dim));
    for (std::uint64_t j = 0; j < dim; ++j) state.amps[j * stride] = cplx{amp, 0.0};
    return state;
}

StateVector parallel_step(StateVector state, const std::vector<std::uint64_t>& marked,
                          int n, int l, ReflectionVariant variant) {
    if (state.n_qubits != n * l) throw std::invalid_argument("state does not match registers");
    check_indices(marked, n);
    int rest_bits = n * (l - 1);
    std::uint64_t rest_dim = std::uint64_t{1} << rest_bits;
    std::uint64_t dim = std::uint64_t{1} << n;

    // oracle acts on register 0 (the most significant n bits) only
    for (std::uint64_t m : marked)
        for (std::uint64_t rest = 0; rest < rest_dim; ++rest) {
            std::uint64_t idx = (m << rest_bits) | rest;
            state.amps[idx] = -state.amps[idx];
        }

    if (variant == ReflectionVariant::Global) {
        // reflect about the correlated initial vector g: psi -> 2 g <g|psi> - psi
        std::uint64_t stride = 0;
        for (int c = 0; c < l; ++c) stride = (stride << n) | 1;
        double g = 1.0 / std::sqrt(static_cast<double>(dim));
        cplx overlap =
            pairwise_map_sum<cplx>(0, dim, [&](std::size_t j) { return state.amps[j * stride]; });
        overlap *= g;
        for (cplx& a : state.amps) a = -a;
        for (std::uint64_t j = 0; j < dim; ++j) state.amps[j * stride] += 2.0 * g * overlap;
    } else {
        // diffusion on register 0 alone, identity on the rest
        for (std::uint64_t rest = 0; rest < rest_dim; ++rest) {
            cplx sum = pairwise_map_sum<cplx>(
                0, dim, [&](std::size_t x) { return state.amps[(x << rest_bits) | rest]; });
            cplx twice_mean = 2.0 * sum / static_cast<double>(dim);
            for (std::uint64_t x = 0; x < dim; ++x) {
                std::uint64_t idx = (x << rest_bits) | rest;
                state.amps[idx] = twice_mean - state.amps[idx];
            }
        }
    }
    return state;
}

std::complex<double> target_overlap(const StateVector& state,
                                    const std::vector<std::uint64_t>& marked) {
    if (marked.empty()) throw std::invalid_argument("marked set is empty");
    check_indices(marked, state.n_qubits);
    cplx sum = pairwise_map_sum<cplx>(0, marked.size(),
                                      [&](std::size_t i) { return state.amps[marked[i]]; });
    return sum / std::sqrt(static_cast<double>(marked.size()));
}

std::complex<double> nontarget_overlap(const StateVector& state,
                                       const std::vector<std::uint64_t>& marked) {
    check_indices(marked, state.n_qubits);
    std::vector<bool> is_marked(state.amps.size(), false);
    for (std::uint64_t idx : marked) is_marked[idx] = true;
    cplx sum = pairwise_map_sum<cplx>(0, state.amps.size(), [&](std::size_t i) {
        return is_marked[i] ? cplx{0.0, 0.0} : state.amps[i];
    });
    std::uint64_t rest = state.amps.size() - marked.size();
    if (rest == 0) throw std::invalid_argument("all basis states marked");
    return sum / std::sqrt(static_cast<double>(rest));
}

double subspace_residual(const StateVector& state,
                         const std::vector<std::uint64_t>& marked) {
    double t = std::norm(target_overlap(state, marked));
    double u = std::norm(nontarget_overlap(state, marked));
    return std::max(0.0, norm_squared(state) - t - u);
}

double norm_squared(const StateVector& state) {
    return pairwise_map_sum<double>(0, state.amps.size(),
                                    [&](std::size_t i) { return std::norm(state.amps[i]); });
}

}  // namespace qgrover
