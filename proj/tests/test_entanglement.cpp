#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "doctest.h"
#include "qgrover/density.hpp"
#include "qgrover/entanglement.hpp"
#include "qgrover/grover.hpp"
#include "qgrover/statevector.hpp"

using namespace qgrover;

namespace {

// normalized uniform superposition over every basis state except the target,
// then projected onto product form: overlap with (uniform non-x) x (uniform non-y)
double offtarget_product_overlap(int n, int l, std::uint64_t target) {
    int m = n - l;
    std::uint64_t N = std::uint64_t{1} << n;
    std::uint64_t xt = target >> m;
    std::uint64_t yt = target & ((std::uint64_t{1} << m) - 1);
    double rest = 1.0 / std::sqrt(static_cast<double>(N - 1));
    double wl = 1.0 / std::sqrt(static_cast<double>((std::uint64_t{1} << l) - 1));
    double wr = 1.0 / std::sqrt(static_cast<double>((std::uint64_t{1} << m) - 1));
    double sum = 0.0;
    for (std::uint64_t i = 0; i < N; ++i) {
        if (i == target) continue;
        std::uint64_t x = i >> m;
        std::uint64_t y = i & ((std::uint64_t{1} << m) - 1);
        if (x == xt || y == yt) continue;
        sum += rest * wl * wr;
    }
    return sum;
}

}  // namespace

TEST_CASE("partition prefactor values") {
    CHECK(eta({1, 2}) == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-15));
    CHECK(eta({2, 4}) == doctest::Approx(std::sqrt(9.0 / 15.0)).epsilon(1e-15));
    double direct = std::sqrt((std::pow(2.0, 10) - 1.0) * (std::pow(2.0, 10) - 1.0) /
                              (std::pow(2.0, 20) - 1.0));
    CHECK(eta({10, 20}) == doctest::Approx(direct).epsilon(1e-15));
    CHECK(eta({1, 20}) == doctest::Approx(eta({19, 20})).epsilon(1e-15));  // symmetry
    CHECK_THROWS_AS(eta({0, 4}), std::invalid_argument);
    CHECK_THROWS_AS(eta({4, 4}), std::invalid_argument);
}

TEST_CASE("prefactor against a direct off-target overlap") {
    // the product of uniform off-block states captures exactly an eta fraction
    // of the off-target superposition
    for (auto [n, l, t] : std::vector<std::array<int, 3>>{{4, 2, 9}, {6, 2, 17}, {5, 3, 3}}) {
        double overlap = offtarget_product_overlap(n, l, static_cast<std::uint64_t>(t));
        CHECK(overlap == doctest::Approx(eta({l, n})).epsilon(1e-12));
    }
}

TEST_CASE("multi-target prefactor") {
    CHECK(eta_prime({2, 4}, 1, 1, 1) == doctest::Approx(eta({2, 4})).epsilon(1e-15));
    CHECK(eta_prime({2, 4}, 2, 2, 4) == doctest::Approx(std::sqrt(4.0 / 12.0)).epsilon(1e-15));
    CHECK_THROWS_AS(eta_prime({2, 4}, 0, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(eta_prime({2, 4}, 5, 1, 1), std::invalid_argument);
}

TEST_CASE("concurrence from a schmidt spectrum") {
    std::vector<double> pure{1.0, 0.0};
    CHECK(concurrence_from_spectrum(pure) == 0.0);
    std::vector<double> bell{0.5, 0.5};
    CHECK(concurrence_from_spectrum(bell) == doctest::Approx(1.0).epsilon(1e-15));
    std::vector<double> flat{0.25, 0.25, 0.25, 0.25};
    CHECK(concurrence_from_spectrum(flat) == doctest::Approx(std::sqrt(1.5)).epsilon(1e-15));
    std::vector<double> bad{0.7, 0.7};
    CHECK_THROWS_AS(concurrence_from_spectrum(bad), std::invalid_argument);
    std::vector<double> negative{1.5, -0.5};
    CHECK_THROWS_AS(concurrence_from_spectrum(negative), std::invalid_argument);
}

TEST_CASE("schmidt pair: normalization and determinant identity") {
    SearchParams params = make_params(10, {517});
    PartitionSpec spec{4, 10};
    double e = eta(spec);
    for (std::int64_t k = 0; k <= 24; ++k) {
        SchmidtPair pair = schmidt_coefficients(k, params, spec);
        CHECK(pair.lambda_plus + pair.lambda_minus == doctest::Approx(1.0).epsilon(1e-12));
        TwoDimState amps = amplitude_closed_form(k, params);
        double a = amps.A - amps.B * std::tan(params.theta);
        double det = e * e * a * a * amps.B * amps.B;
        CHECK(pair.lambda_plus * pair.lambda_minus == doctest::Approx(det).epsilon(1e-10));
    }
}

TEST_CASE("schmidt pair matches the numeric eigensolver") {
    SearchParams params = make_params(6, {17});
    for (int l : {1, 2, 3}) {
        for (std::int64_t k : {0, 1, 3, 6}) {
            SchmidtPair pair = schmidt_coefficients(k, params, PartitionSpec{l, 6});
            StateVector state = grover_run(6, params.marked, k);
            EigenSystem sys = jacobi_eigh(reduced_density(state, QubitSubset::first(l)));
            CHECK(std::abs(sys.values[0] - pair.lambda_plus) < 1e-10);
            CHECK(std::abs(sys.values[1] - pair.lambda_minus) < 1e-10);
        }
    }
}

TEST_CASE("closed-form concurrence: exact zero at the start, matches numeric after") {
    SearchParams params = make_params(6, {17});
    PartitionSpec spec{2, 6};
    CHECK(concurrence_state(0, params, spec) == 0.0);  // exact, not approximate
    for (std::int64_t k = 0; k <= 12; ++k) {
        StateVector state = grover_run(6, params.marked, k);
        double numeric = concurrence_numeric(state, QubitSubset::first(2));
        CHECK(std::abs(concurrence_state(k, params, spec) - numeric) < 1e-10);
    }
}

TEST_CASE("the five representations agree inside the first quadrant") {
    SearchParams params = make_params_analytic(std::uint64_t{1} << 10, 1);
    double e = 0.83;  // any prefactor: the identities are prefactor-linear
    for (std::int64_t k = 0; k <= 24; ++k) {
        ConcurrenceChain chain = concurrence_chain_eta(k, e, params.theta);
        CHECK(std::abs(chain.exact - chain.form2) < 1e-12);
        CHECK(std::abs(chain.exact - chain.rate_form) < 1e-12);
        // the dropped sine ratio is <= 1, so the approximation sits above
        CHECK(chain.approx4 >= chain.exact - 1e-15);
        if (k >= 1) CHECK(chain.approx5 > 0.0);
    }
    // deep into the quadrant the dropped factor is within a percent of 1
    ConcurrenceChain late = concurrence_chain_eta(24, e, params.theta);
    CHECK(std::abs(late.approx4 / late.exact - 1.0) < 0.01);
    CHECK_THROWS_AS(concurrence_chain_eta(26, e, params.theta), std::domain_error);
    CHECK_THROWS_AS(concurrence_chain_eta(-1, e, params.theta), std::invalid_argument);
}

TEST_CASE("oracle gain and reflection change") {
    SearchParams params = make_params_analytic(std::uint64_t{1} << 10, 1);
    double theta = params.theta;
    for (std::int64_t k = 0; k <= 23; ++k) {
        double gain = oracle_entanglement_gain_eta(k, 1.0, theta);
        double post = concurrence_post_oracle_eta(k, 1.0, theta);
        double before = concurrence_chain_eta(k, 1.0, theta).exact;
        CHECK(gain > 0.0);
        CHECK(std::abs(post - before - gain) < 1e-12);  // gain is exactly the jump
        CHECK(reflection_entanglement_change_eta(k, 1.0, theta) <= 1e-15);
    }
    // k+1 must stay inside the quadrant too
    CHECK_THROWS_AS(reflection_entanglement_change_eta(24, 1.0, theta), std::domain_error);
}

TEST_CASE("schmidt vectors reconstruct the state") {
    SearchParams params = make_params(6, {17});
    for (int l : {2, 3, 4}) {
        for (std::int64_t k : {1, 3, 6, 9}) {
            SchmidtData data = schmidt_vectors(k, params, PartitionSpec{l, 6});
            StateVector state = grover_run(6, params.marked, k);
            int m = 6 - l;
            std::complex<double> overlap = 0.0;
            for (std::uint64_t x = 0; x < (std::uint64_t{1} << l); ++x)
                for (std::uint64_t y = 0; y < (std::uint64_t{1} << m); ++y) {
                    std::complex<double> rec = 0.0;
                    for (int j = 0; j < 2; ++j)
                        rec += std::sqrt(data.coefficients[j]) * data.vectors_left[j][x] *
                               data.vectors_right[j][y];
                    overlap += std::conj(rec) * state.amps[(x << m) | y];
                }
            CHECK(std::abs(overlap) == doctest::Approx(1.0).epsilon(1e-9));

            // biorthogonality of each side
            for (int side = 0; side < 2; ++side) {
                const auto& vecs = side == 0 ? data.vectors_left : data.vectors_right;
                std::complex<double> cross = 0.0;
                double n0 = 0.0, n1 = 0.0;
                for (std::size_t i = 0; i < vecs[0].size(); ++i) {
                    cross += std::conj(vecs[0][i]) * vecs[1][i];
                    n0 += std::norm(vecs[0][i]);
                    n1 += std::norm(vecs[1][i]);
                }
                CHECK(std::abs(cross) < 1e-9);
                CHECK(n0 == doctest::Approx(1.0).epsilon(1e-12));
                CHECK(n1 == doctest::Approx(1.0).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("pattern counts and target concurrence across a split") {
    SearchParams params = make_params(4, {0, 1, 2});
    MultiTargetSplit split = derive_split(params, PartitionSpec{2, 4});
    CHECK(split.p == 1);
    CHECK(split.q == 3);
    CHECK(split.target_concurrence == doctest::Approx(0.0));

    SearchParams diag = make_params(4, {0, 5, 10, 15});
    MultiTargetSplit dsplit = derive_split(diag, PartitionSpec{2, 4});
    CHECK(dsplit.p == 4);
    CHECK(dsplit.q == 4);
    CHECK(dsplit.target_concurrence == doctest::Approx(std::sqrt(1.5)).epsilon(1e-12));

    SearchParams grid = make_params(4, {0, 1, 4, 5});
    MultiTargetSplit gsplit = derive_split(grid, PartitionSpec{2, 4});
    CHECK(gsplit.p == 2);
    CHECK(gsplit.q == 2);
    CHECK(gsplit.target_concurrence == doctest::Approx(0.0));
}

TEST_CASE("multi-target concurrence collapses to the single-target form at r = 1") {
    SearchParams params = make_params(6, {9});
    PartitionSpec spec{2, 6};
    MultiTargetSplit split = derive_split(params, spec);
    for (std::int64_t k = 0; k <= 10; ++k) {
        MultiTargetRecord rec = multi_target_concurrence(k, params, split, spec);
        CHECK(std::abs(rec.total - concurrence_state(k, params, spec)) < 1e-12);
        CHECK(rec.byproduct == doctest::Approx(0.0));
        CHECK(std::abs(rec.search - rec.total) < 1e-12);
    }
}

TEST_CASE("product sets: hypot(search, byproduct) recovers the total at every k") {
    SearchParams params = make_params(4, {0, 1, 4, 5});
    PartitionSpec spec{2, 4};
    MultiTargetSplit split = derive_split(params, spec);
    for (std::int64_t k = 0; k <= 8; ++k) {
        MultiTargetRecord rec = multi_target_concurrence(k, params, split, spec);
        CHECK(std::abs(rec.total - std::hypot(rec.search, rec.byproduct)) < 1e-12);
        CHECK(rec.byproduct == doctest::Approx(0.0));
    }
    // {0,1} across l=2 is the 1x2 product set; the target is itself a product
    // across the cut, so the byproduct component vanishes identically.
    SearchParams narrow = make_params(4, {0, 1});
    PartitionSpec nspec{2, 4};
    MultiTargetSplit nsplit = derive_split(narrow, nspec);
    CHECK(nsplit.p == 1);
    CHECK(nsplit.q == 2);
    for (std::int64_t k = 0; k <= 8; ++k) {
        MultiTargetRecord rec = multi_target_concurrence(k, narrow, nsplit, nspec);
        CHECK(rec.byproduct == doctest::Approx(0.0));
        CHECK(std::abs(rec.total - std::hypot(rec.search, rec.byproduct)) < 1e-12);
    }
}

TEST_CASE("covered-block splits: the component decomposition is only approximate") {
    // The trailing bits of 3 = 00011 and 12 = 01100 cover the whole one-qubit
    // block at l = 4, the prefactor collapses to zero, and the component sum
    // underestimates the total concurrence by a finite gap.
    SearchParams params = make_params(5, {3, 12});
    PartitionSpec spec{4, 5};
    MultiTargetSplit split = derive_split(params, spec);
    CHECK(eta_prime(spec, split.p, split.q, 2) == doctest::Approx(0.0));
    MultiTargetRecord rec = multi_target_concurrence(1, params, split, spec);
    CHECK(rec.search == doctest::Approx(0.0));
    double gap = rec.total - std::hypot(rec.search, rec.byproduct);
    CHECK(gap > 0.2);   // missing amplification entanglement, not rounding
    CHECK(gap < 0.25);
}

TEST_CASE("multi-target concurrence matches the statevector engine") {
    const std::vector<std::pair<int, std::vector<std::uint64_t>>> instances = {
        {3, {0, 7}}, {5, {3, 12}}, {4, {0, 5, 10, 15}}, {4, {0, 1, 2}}, {6, {1, 2, 40, 41, 62}}};
    for (const auto& [n, marked] : instances) {
        SearchParams params = make_params(n, marked);
        StateVector state = uniform_state(n);
        for (std::int64_t k = 0; k <= 8; ++k) {
            if (k > 0) state = apply_diffusion(apply_oracle(std::move(state), params.marked));
            for (int l = 1; l < n; ++l) {
                PartitionSpec spec{l, n};
                MultiTargetSplit split = derive_split(params, spec);
                MultiTargetRecord rec = multi_target_concurrence(k, params, split, spec);
                double numeric = concurrence_numeric(state, QubitSubset::first(l));
                CHECK(std::abs(rec.total - numeric) < 1e-10);
            }
        }
    }
}

TEST_CASE("growth-law integration") {
    CHECK_THROWS_AS(speedup_condition_integrate(0.5, 5, 0.2), std::invalid_argument);
    CHECK_THROWS_AS(speedup_condition_integrate(0.0, 5, 1e-3), std::invalid_argument);
    CHECK_THROWS_AS(speedup_condition_integrate(1.0, 5, 1e-3), std::invalid_argument);

    double a0 = std::sin(std::acos(-1.0) / 6.0);
    std::vector<double> P = speedup_condition_integrate(a0, 1, 1e-3);
    CHECK(P[0] == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(P[1] == doctest::Approx(1.0).epsilon(1e-6));

    double phi = std::asin(1e-2);
    std::vector<double> Q = speedup_condition_integrate(1e-2, 78, 1e-3);
    for (std::int64_t k = 0; k <= 78; ++k) {
        double s = std::sin((2.0 * k + 1.0) * phi);
        CHECK(std::abs(Q[static_cast<std::size_t>(k)] - s * s) < 1e-6);
        if (k > 0) CHECK(Q[static_cast<std::size_t>(k)] >= Q[static_cast<std::size_t>(k) - 1]);
    }
}
