#include "qgrover/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace qgrover {

namespace {

const double kPi = std::acos(-1.0);

// largest k for which k and k+1 both sit inside the first quadrant
std::int64_t quadrant_limit(double theta) {
    return static_cast<std::int64_t>(std::floor(((kPi / 2.0 + 1e-12) / theta - 3.0) / 2.0));
}

}  // namespace

std::vector<SweepRow> figure1_sweep(std::uint64_t N, std::uint64_t r, std::int64_t k_max,
                                    std::optional<PartitionSpec> partition) {
    if (k_max < 0) throw std::invalid_argument("iteration count must be non-negative");
    SearchParams params = make_params_analytic(N, r);

    double eta_value = 1.0;
    bool numeric = false;
    SearchParams sim;
    if (partition) {
        if (r != 1) throw std::invalid_argument("single-target operation requires r = 1");
        if (params.n == 0 || partition->n != params.n)
            throw std::invalid_argument("partition does not match qubit count");
        eta_value = eta(*partition);
        numeric = params.n <= kMaxSingleRegisterQubits;
        if (numeric) sim = make_params(params.n, {0});
    }

    std::vector<SweepRow> rows;
    rows.reserve(static_cast<std::size_t>(k_max) + 1);
    StateVector state;
    QubitSubset keep;
    if (numeric) {
        state = uniform_state(params.n);
        keep = QubitSubset::first(partition->l);
    }
    for (std::int64_t k = 0; k <= k_max; ++k) {
        SweepRow row;
        row.k = k;
        row.A2 = success_probability(k, params);
        row.C_analytic = concurrence_state_eta(k, eta_value, params.theta);
        if (numeric) {
            if (k > 0) state = apply_diffusion(apply_oracle(std::move(state), sim.marked));
            double c = concurrence_numeric(state, keep);
            row.C_numeric = c;
            row.abs_err = std::abs(c - row.C_analytic);
        }
        rows.push_back(row);
    }
    return rows;
}

std::vector<Figure2Row> figure2_sweep(std::uint64_t N, std::uint64_t r, std::int64_t k_max) {
    if (k_max < 0) throw std::invalid_argument("iteration count must be non-negative");
    SearchParams params = make_params_analytic(N, r);
    std::int64_t last = std::min(k_max, quadrant_limit(params.theta));
    std::vector<Figure2Row> rows;
    for (std::int64_t k = 0; k <= last; ++k) {
        Figure2Row row;
        row.k = k;
        row.oracle_gain = oracle_entanglement_gain_eta(k, 1.0, params.theta);
        row.reflection_drop = -reflection_entanglement_change_eta(k, 1.0, params.theta);
        rows.push_back(row);
    }
    return rows;
}

ValidationReport cross_validate(int n, const std::vector<std::uint64_t>& marked,
                                std::int64_t k_max, std::vector<int> partitions,
                                double threshold) {
    if (k_max < 0) throw std::invalid_argument("iteration count must be non-negative");
    SearchParams params = make_params(n, marked);
    if (n > kMaxSingleRegisterQubits) throw std::length_error("qubit cap exceeded");
    if (partitions.empty())
        for (int l = 1; l < n; ++l) partitions.push_back(l);
    if (partitions.empty()) throw std::invalid_argument("partition needs at least 2 qubits");

    struct Ctx {
        PartitionSpec spec;
        MultiTargetSplit split;
    };
    std::vector<Ctx> ctxs;
    ctxs.reserve(partitions.size());
    for (int l : partitions) {
        Ctx c;
        c.spec = PartitionSpec{l, n};
        if (params.r > 1) c.split = derive_split(params, c.spec);
        ctxs.push_back(c);
    }

    ValidationReport report;
    report.threshold = threshold;
    StateVector state = uniform_state(n);
    for (std::int64_t k = 0; k <= k_max; ++k) {
        if (k > 0) state = apply_diffusion(apply_oracle(std::move(state), params.marked));
        for (const Ctx& c : ctxs) {
            ValidationCell cell;
            cell.k = k;
            cell.l = c.spec.l;
            cell.analytic = params.r == 1
                                ? concurrence_state(k, params, c.spec)
                                : multi_target_concurrence(k, params, c.split, c.spec).total;
            cell.numeric = concurrence_numeric(state, QubitSubset::first(c.spec.l));
            cell.abs_err = std::abs(cell.analytic - cell.numeric);
            report.max_abs_err = std::max(report.max_abs_err, cell.abs_err);
            report.cells.push_back(cell);
        }
    }
    report.pass = report.max_abs_err <= threshold;
    return report;
}

std::vector<BoundReport> optimality_experiment(int n_lo, int n_hi, std::int64_t T_max) {
    if (n_lo < 2 || n_hi < n_lo) throw std::invalid_argument("register range must satisfy 2 <= n_lo <= n_hi");
    if (n_hi > kMaxKeptQubits) throw std::length_error("qubit cap exceeded");

    std::vector<BoundReport> out;
    for (int n = n_lo; n <= n_hi; ++n) {
        std::uint64_t N = std::uint64_t{1} << n;
        double Nd = static_cast<double>(N);
        double sqrtN = std::sqrt(Nd);
        SearchParams probe = make_params(n, {0});
        std::int64_t tmax = T_max > 0 ? T_max : 2 * optimal_iterations(probe);
        if (tmax < 1) tmax = 1;

        // one search per candidate target, all advanced in lockstep
        std::vector<StateVector> states(N);
        for (auto& s : states) s = uniform_state(n);

        BoundReport rep;
        rep.n = n;
        auto record = [&](std::int64_t T) {
            double lhs = 0.0;
            double min_gap = std::numeric_limits<double>::infinity();
            for (std::uint64_t t = 0; t < N; ++t) {
                double P = std::norm(states[t].amps[t]);
                lhs += std::abs(P - 1.0 / Nd);
                min_gap = std::min(min_gap, P - 1.0 / Nd);
            }
            OptimalityRow row;
            row.n = n;
            row.T = T;
            row.lhs = lhs;
            row.rhs = std::sqrt(2.0) * static_cast<double>(T) * sqrtN;
            row.satisfied = lhs <= row.rhs + 1e-12;
            rep.rows.push_back(row);
            if (rep.T_star < 0 && min_gap >= 0.5) {
                rep.T_star = T;
                rep.ratio = static_cast<double>(T) / sqrtN;
            }
        };
        record(0);
        for (std::int64_t T = 1; T <= tmax; ++T) {
            for (std::uint64_t t = 0; t < N; ++t)
                states[t] = apply_diffusion(apply_oracle(std::move(states[t]), {t}));
            record(T);
        }
        out.push_back(std::move(rep));
    }
    return out;
}

ParallelDemoResult parallel_demo(int n, int l, const std::vector<std::uint64_t>& marked,
                                 ReflectionVariant variant) {
    if (l < 2) throw std::invalid_argument("protocol needs at least 2 registers");
    SearchParams params = make_params(n, marked);
    if (n > kMaxKeptQubits) throw std::length_error("kept subset too large");

    StateVector state = ghz_initial(n, l);
    std::int64_t k = optimal_iterations(params);
    for (std::int64_t i = 0; i < k; ++i)
        state = parallel_step(std::move(state), params.marked, n, l, variant);

    DensityMatrix target = basis_mixture(params.marked, std::uint64_t{1} << n);
    ParallelDemoResult res;
    res.k_used = k;
    res.register_distances.reserve(static_cast<std::size_t>(l));
    for (int c = 0; c < l; ++c) {
        QubitSubset keep;
        for (int j = 0; j < n; ++j) keep.indices.push_back(c * n + j);
        res.register_distances.push_back(trace_distance(reduced_density(state, keep), target));
    }
    return res;
}

QuarterCaseResult quarter_case_demo(int n) {
    if (n < 3) throw std::invalid_argument("quarter case needs at least 3 qubits");
    if (n > kMaxSingleRegisterQubits) throw std::length_error("qubit cap exceeded");

    // pair even states from the bottom half with odd states from the top half,
    // mirrored, so the two halves of the target never share a right-block bit
    std::uint64_t half = std::uint64_t{1} << (n - 1);
    std::uint64_t count = std::uint64_t{1} << (n - 3);
    std::vector<std::uint64_t> marked;
    marked.reserve(2 * count);
    for (std::uint64_t j = 0; j < count; ++j) marked.push_back(2 * j);
    for (std::uint64_t j = 0; j < count; ++j) marked.push_back(2 * (half - 1 - j) + 1);
    SearchParams params = make_params(n, std::move(marked));

    QuarterCaseResult res;
    res.n = n;
    res.marked = params.marked;

    StateVector post = apply_oracle(uniform_state(n), params.marked);
    res.post_oracle_concurrence = concurrence_numeric(post, QubitSubset::first(n - 1));

    StateVector final_state = grover_run(n, params.marked, 1);
    res.success_after_one = std::norm(target_overlap(final_state, params.marked));

    PartitionSpec spec{n - 1, n};
    MultiTargetSplit split = derive_split(params, spec);
    MultiTargetRecord rec = multi_target_concurrence(1, params, split, spec);
    res.search_component = rec.search;
    res.byproduct_component = rec.byproduct;
    res.target_concurrence = split.target_concurrence;
    return res;
}

double speedup_condition_check(double A0, std::int64_t k_max, double h) {
    if (!(A0 > 0.0 && A0 < 1.0))
        throw std::invalid_argument("initial amplitude must be in (0, 1)");
    double phi = std::asin(A0);
    if (k_max <= 0)
        k_max = std::max<std::int64_t>(1, std::llround((kPi / (2.0 * phi) - 1.0) / 2.0));
    std::vector<double> P = speedup_condition_integrate(A0, k_max, h);
    double worst = 0.0;
    for (std::int64_t k = 0; k <= k_max; ++k) {
        double s = std::sin((2.0 * static_cast<double>(k) + 1.0) * phi);
        worst = std::max(worst, std::abs(P[static_cast<std::size_t>(k)] - s * s));
    }
    return worst;
}

}  // namespace qgrover
