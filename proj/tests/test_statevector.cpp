#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "qgrover/density.hpp"
#include "qgrover/statevector.hpp"

using namespace qgrover;

TEST_CASE("uniform state and the two reflections") {
    StateVector state = uniform_state(5);
    CHECK(norm_squared(state) == doctest::Approx(1.0).epsilon(1e-14));
    for (const auto& a : state.amps) CHECK(a.real() == doctest::Approx(1.0 / std::sqrt(32.0)));

    // the sign flip is an involution and touches only the marked entries
    std::vector<std::uint64_t> marked{3, 17};
    StateVector flipped = apply_oracle(state, marked);
    CHECK(flipped.amps[3].real() < 0.0);
    CHECK(flipped.amps[4].real() > 0.0);
    StateVector back = apply_oracle(flipped, marked);
    for (std::size_t i = 0; i < back.amps.size(); ++i)
        CHECK(back.amps[i] == state.amps[i]);

    // the uniform state is the fixed point of the diffusion
    StateVector diffused = apply_diffusion(state);
    for (std::size_t i = 0; i < diffused.amps.size(); ++i)
        CHECK(std::abs(diffused.amps[i] - state.amps[i]) < 1e-15);
    CHECK(norm_squared(apply_diffusion(flipped)) == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("four-state search succeeds in one step") {
    StateVector state = grover_run(2, {2}, 1);
    CHECK(std::norm(state.amps[2]) == doctest::Approx(1.0).epsilon(1e-13));
    for (std::uint64_t i : {0u, 1u, 3u})
        CHECK(std::abs(state.amps[i]) < 1e-13);
}

TEST_CASE("caps and index validation") {
    CHECK_THROWS_AS(uniform_state(15), std::length_error);
    CHECK_THROWS_AS(uniform_state(0), std::invalid_argument);
    CHECK_THROWS_AS(apply_oracle(uniform_state(3), {8}), std::out_of_range);
    CHECK_THROWS_AS(ghz_initial(6, 4), std::length_error);  // 24 total qubits
    CHECK_THROWS_AS(grover_run(3, {0}, -1), std::invalid_argument);
}

TEST_CASE("correlated initial state occupies exactly the diagonal strings") {
    StateVector state = ghz_initial(2, 2);
    for (std::uint64_t i = 0; i < 16; ++i) {
        bool diagonal = i == 0 || i == 5 || i == 10 || i == 15;
        if (diagonal) {
            CHECK(state.amps[i].real() == doctest::Approx(0.5).epsilon(1e-15));
        } else {
            CHECK(std::abs(state.amps[i]) == 0.0);
        }
    }
    CHECK(norm_squared(ghz_initial(3, 2)) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("global reflection drives four-state registers to the target in one step") {
    StateVector state = ghz_initial(2, 2);
    state = parallel_step(std::move(state), {3}, 2, 2, ReflectionVariant::Global);
    // expect exactly |3>|3> = index 15
    CHECK(std::norm(state.amps[15]) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(norm_squared(state) == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("local variant preserves the norm but leaves the registers correlated") {
    StateVector state = ghz_initial(2, 2);
    state = parallel_step(std::move(state), {3}, 2, 2, ReflectionVariant::Local);
    CHECK(norm_squared(state) == doctest::Approx(1.0).epsilon(1e-13));
    // the diffusion ignored register 1, so the joint state is not |3>|3>
    CHECK(std::norm(state.amps[15]) < 0.99);
}

TEST_CASE("reduced density: bit convention and basic properties") {
    // mark a state whose first (most significant) qubit is 1: index 4 of n=3
    StateVector state = uniform_state(3);
    state.amps.assign(8, {0.0, 0.0});
    state.amps[4] = 1.0;  // |100>
    DensityMatrix top = reduced_density(state, QubitSubset::first(1));
    CHECK(top.at(1, 1).real() == doctest::Approx(1.0));
    CHECK(std::abs(top.at(0, 0)) < 1e-15);

    QubitSubset last;
    last.indices = {2};
    DensityMatrix bottom = reduced_density(state, last);
    CHECK(bottom.at(0, 0).real() == doctest::Approx(1.0));

    DensityMatrix rho = reduced_density(uniform_state(4), QubitSubset::first(2));
    for (std::uint64_t i = 0; i < 4; ++i)
        for (std::uint64_t j = 0; j < 4; ++j)
            CHECK(rho.at(i, j).real() == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(purity(rho) == doctest::Approx(1.0).epsilon(1e-13));  // product state stays pure
}

TEST_CASE("purity is the same from either side of a split") {
    StateVector state = grover_run(6, {17, 40}, 3);
    for (int l = 1; l <= 5; ++l) {
        double left = purity(reduced_density(state, QubitSubset::first(l)));
        double right = purity(reduced_density(state, complement(QubitSubset::first(l), 6)));
        CHECK(std::abs(left - right) < 1e-12);
    }
}

TEST_CASE("jacobi eigensolver on known matrices") {
    DensityMatrix m;
    m.dim = 2;
    m.entries = {{2.0, 0.0}, {0.0, -1.0}, {0.0, 1.0}, {2.0, 0.0}};  // pauli-y type block
    EigenSystem sys = jacobi_eigh(m);
    CHECK(sys.values[0] == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(sys.values[1] == doctest::Approx(1.0).epsilon(1e-12));

    // residual check: M v = lambda v
    for (int j = 0; j < 2; ++j) {
        for (int i = 0; i < 2; ++i) {
            std::complex<double> mv = 0.0;
            for (int t = 0; t < 2; ++t) mv += m.at(i, t) * sys.vectors[j][t];
            CHECK(std::abs(mv - sys.values[j] * sys.vectors[j][i]) < 1e-12);
        }
    }

    // a maximally mixed 4x4 spectrum
    DensityMatrix mixed = basis_mixture({0, 1, 2, 3}, 4);
    EigenSystem flat = jacobi_eigh(mixed);
    for (double v : flat.values) CHECK(v == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("numeric schmidt data agrees with its defining contraction") {
    StateVector state = grover_run(5, {9}, 2);
    SchmidtData data = schmidt_numeric(state, QubitSubset::first(2));
    REQUIRE(data.coefficients.size() == 4);
    CHECK(data.coefficients[0] + data.coefficients[1] == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(data.coefficients[2] < 1e-10);  // single target keeps the rank at 2

    // rebuild the state from the pairs
    std::size_t pairs = data.vectors_left.size();
    REQUIRE(pairs >= 2);
    std::complex<double> overlap = 0.0;
    for (std::uint64_t x = 0; x < 4; ++x)
        for (std::uint64_t y = 0; y < 8; ++y) {
            std::complex<double> rec = 0.0;
            for (std::size_t j = 0; j < pairs; ++j)
                rec += std::sqrt(data.coefficients[j]) * data.vectors_left[j][x] *
                       data.vectors_right[j][y];
            overlap += std::conj(rec) * state.amps[(x << 3) | y];
        }
    CHECK(std::abs(overlap) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("trace distance: coincidence, orthogonality, and a hand value") {
    DensityMatrix a = basis_mixture({0}, 2);
    DensityMatrix b = basis_mixture({1}, 2);
    CHECK(trace_distance(a, a) == doctest::Approx(0.0));
    CHECK(trace_distance(a, b) == doctest::Approx(1.0).epsilon(1e-12));
    DensityMatrix half = basis_mixture({0, 1}, 2);
    CHECK(trace_distance(a, half) == doctest::Approx(0.5).epsilon(1e-12));
    DensityMatrix wide = basis_mixture({0}, 4);
    CHECK_THROWS_AS(trace_distance(a, wide), std::invalid_argument);
}
