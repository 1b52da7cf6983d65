// command-line front end: closed-form summaries, sweep CSVs, cross-validation,
// the query-count bound experiment, and the multi-register / quarter demos.
//
// exit codes: 0 success, 1 verification failure, 2 usage error, 3 i/o error.

#include <cstdint>
#include <iostream>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "qgrover/csv.hpp"
#include "qgrover/density.hpp"
#include "qgrover/entanglement.hpp"
#include "qgrover/experiments.hpp"
#include "qgrover/grover.hpp"
#include "qgrover/statevector.hpp"

namespace {

using namespace qgrover;

std::vector<std::uint64_t> parse_marked(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("marked set is empty");
    if (text.rfind("count:", 0) == 0) {
        std::uint64_t count = std::stoull(text.substr(6));
        if (count == 0) throw std::invalid_argument("marked set is empty");
        std::vector<std::uint64_t> out(count);
        std::iota(out.begin(), out.end(), std::uint64_t{0});
        return out;
    }
    std::vector<std::uint64_t> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::size_t end = comma == std::string::npos ? text.size() : comma;
        out.push_back(std::stoull(text.substr(pos, end - pos)));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

std::vector<int> parse_partitions(const std::string& text) {
    if (text == "all") return {};
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::size_t end = comma == std::string::npos ? text.size() : comma;
        out.push_back(std::stoi(text.substr(pos, end - pos)));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

void emit_csv(const std::string& out_path, const std::string& header,
              const std::vector<std::vector<std::string>>& rows) {
    if (out_path.empty()) {
        std::cout << header << '\n';
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (i) std::cout << ',';
                std::cout << row[i];
            }
            std::cout << '\n';
        }
    } else {
        write_csv(out_path, header, rows);
        std::cout << "wrote " << rows.size() << " rows to " << out_path << '\n';
    }
}

struct SimulateOpts {
    std::uint64_t N = 0;
    std::uint64_t r = 1;
    int n = 0;
    std::string marked;
    std::string iters = "auto";
    int partition = 0;
};

int run_simulate(const SimulateOpts& o) {
    SearchParams params;
    if (o.N != 0) {
        if (o.n != 0 || !o.marked.empty())
            throw std::invalid_argument("--N (analytic mode) excludes --n/--marked");
        params = make_params_analytic(o.N, o.r);
    } else {
        if (o.n == 0 || o.marked.empty())
            throw std::invalid_argument("need either --N or both --n and --marked");
        params = make_params(o.n, parse_marked(o.marked));
    }

    std::int64_t kstar = optimal_iterations(params);
    std::int64_t k = o.iters == "auto" ? kstar : std::stoll(o.iters);
    if (k < 0) throw std::invalid_argument("iteration count must be non-negative");

    std::cout << "N = " << params.N << "  r = " << params.r
              << "  theta = " << format_significant(params.theta) << '\n';
    std::cout << "optimal iterations = " << kstar << "  (running k = " << k << ")\n";
    std::cout << "success probability (closed form) = "
              << format_significant(success_probability(k, params)) << '\n';

    if (!params.analytic && params.n <= kMaxSingleRegisterQubits) {
        StateVector state = grover_run(params.n, params.marked, k);
        double p = std::norm(target_overlap(state, params.marked));
        std::cout << "success probability (statevector) = " << format_significant(p)
                  << "  residual outside the invariant plane = "
                  << format_significant(subspace_residual(state, params.marked)) << '\n';
    }

    if (o.partition > 0) {
        if (params.n == 0)
            throw std::invalid_argument("partition needs a power-of-two database");
        PartitionSpec spec{o.partition, params.n};
        if (params.r == 1) {
            std::cout << "concurrence across " << spec.l << '|' << (spec.n - spec.l)
                      << " = " << format_significant(concurrence_state_eta(
                             k, params.analytic ? 1.0 : eta(spec), params.theta))
                      << (params.analytic ? "  (eta = 1)\n" : "\n");
        } else {
            if (params.analytic)
                throw std::invalid_argument("operation requires an explicit marked set");
            MultiTargetSplit split = derive_split(params, spec);
            MultiTargetRecord rec = multi_target_concurrence(k, params, split, spec);
            std::cout << "concurrence across " << spec.l << '|' << (spec.n - spec.l)
                      << " = " << format_significant(rec.total)
                      << "  (search " << format_significant(rec.search) << ", byproduct "
                      << format_significant(rec.byproduct) << ")\n";
        }
    }
    return 0;
}

struct FigureOpts {
    int which = 1;
    std::uint64_t N = 0;
    std::uint64_t r = 1;
    std::int64_t kmax = -1;
    int partition = 0;
    std::string out;
};

int run_figure(const FigureOpts& o) {
    SearchParams params = make_params_analytic(o.N, o.r);
    if (o.which == 1) {
        std::int64_t kmax = o.kmax >= 0 ? o.kmax : 2 * optimal_iterations(params);
        std::optional<PartitionSpec> spec;
        if (o.partition > 0) spec = PartitionSpec{o.partition, params.n};
        std::vector<SweepRow> rows = figure1_sweep(o.N, o.r, kmax, spec);
        bool numeric = !rows.empty() && rows.front().C_numeric.has_value();
        std::vector<std::vector<std::string>> cells;
        cells.reserve(rows.size());
        for (const SweepRow& row : rows) {
            std::vector<std::string> cell{std::to_string(row.k), format_significant(row.A2),
                                          format_significant(row.C_analytic)};
            if (numeric) {
                cell.push_back(format_significant(*row.C_numeric));
                cell.push_back(format_significant(*row.abs_err));
            }
            cells.push_back(std::move(cell));
        }
        emit_csv(o.out, numeric ? "k,A2,C_analytic,C_numeric,abs_err" : "k,A2,C_analytic",
                 cells);
    } else {
        std::int64_t kmax = o.kmax >= 0 ? o.kmax : std::numeric_limits<std::int64_t>::max();
        std::vector<Figure2Row> rows = figure2_sweep(o.N, o.r, kmax);
        std::vector<std::vector<std::string>> cells;
        cells.reserve(rows.size());
        for (const Figure2Row& row : rows)
            cells.push_back({std::to_string(row.k), format_significant(row.oracle_gain),
                             format_significant(row.reflection_drop)});
        emit_csv(o.out, "k,oracle_gain,reflection_drop", cells);
    }
    return 0;
}

struct ValidateOpts {
    int n = 0;
    std::string marked;
    std::int64_t kmax = -1;
    std::string partitions = "all";
    double threshold = 1e-9;
    std::string out;
};

int run_validate(const ValidateOpts& o) {
    std::vector<std::uint64_t> marked = parse_marked(o.marked);
    SearchParams params = make_params(o.n, marked);
    std::int64_t kmax = o.kmax >= 0 ? o.kmax : 2 * optimal_iterations(params);
    ValidationReport report =
        cross_validate(o.n, marked, kmax, parse_partitions(o.partitions), o.threshold);

    if (!o.out.empty()) {
        std::vector<std::vector<std::string>> cells;
        cells.reserve(report.cells.size());
        for (const ValidationCell& cell : report.cells)
            cells.push_back({std::to_string(cell.k), std::to_string(cell.l),
                             format_significant(cell.analytic), format_significant(cell.numeric),
                             format_significant(cell.abs_err)});
        write_csv(o.out, "k,partition,C_analytic,C_numeric,abs_err", cells);
    }

    std::cout << report.cells.size() << " cells checked, max |closed form - statevector| = "
              << format_significant(report.max_abs_err) << " (threshold "
              << format_significant(report.threshold) << ")\n";
    std::cout << (report.pass ? "agreement holds\n" : "agreement FAILS\n");
    return report.pass ? 0 : 1;
}

struct OptimalityOpts {
    int nmin = 3;
    int nmax = 8;
    std::int64_t Tmax = 0;
    std::string out;
};

int run_optimality(const OptimalityOpts& o) {
    std::vector<BoundReport> reports = optimality_experiment(o.nmin, o.nmax, o.Tmax);
    std::vector<std::vector<std::string>> cells;
    for (const BoundReport& rep : reports) {
        std::size_t violations = 0;
        for (const OptimalityRow& row : rep.rows) {
            if (!row.satisfied) ++violations;
            cells.push_back({std::to_string(row.n), std::to_string(row.T),
                             format_significant(row.lhs), format_significant(row.rhs),
                             row.satisfied ? "1" : "0"});
        }
        std::cout << "n = " << rep.n << ": threshold query count = " << rep.T_star
                  << ", ratio to sqrt(N) = " << format_significant(rep.ratio) << ", "
                  << violations << " of " << rep.rows.size() << " rows exceed the bound\n";
    }
    if (!o.out.empty()) write_csv(o.out, "n,T,lhs,rhs,satisfied", cells);
    return 0;
}

struct ParallelOpts {
    int n = 3;
    int l = 2;
    std::string marked = "0";
    std::string variant = "global";
};

int run_parallel(const ParallelOpts& o) {
    ReflectionVariant variant =
        o.variant == "local" ? ReflectionVariant::Local : ReflectionVariant::Global;
    ParallelDemoResult res = parallel_demo(o.n, o.l, parse_marked(o.marked), variant);
    std::cout << o.l << " registers of " << o.n << " qubits, " << res.k_used
              << " steps, " << o.variant << " reflection\n";
    for (std::size_t c = 0; c < res.register_distances.size(); ++c)
        std::cout << "register " << c << ": trace distance to the marked mixture = "
                  << format_significant(res.register_distances[c]) << '\n';
    return 0;
}

int run_quarter(int n) {
    QuarterCaseResult res = quarter_case_demo(n);
    std::cout << "n = " << res.n << ", marked =";
    for (std::uint64_t m : res.marked) std::cout << ' ' << m;
    std::cout << '\n';
    std::cout << "success probability after one step = "
              << format_significant(res.success_after_one) << '\n';
    std::cout << "post-flip concurrence across " << (res.n - 1)
              << "|1 = " << format_significant(res.post_oracle_concurrence) << '\n';
    std::cout << "k = 1 components: search = " << format_significant(res.search_component)
              << ", inherited = " << format_significant(res.byproduct_component)
              << " (target concurrence " << format_significant(res.target_concurrence)
              << ")\n";
    return 0;
}

struct SpeedupOpts {
    double a0 = 0.0;
    std::int64_t kmax = 0;
    double h = 1e-3;
};

int run_speedup(const SpeedupOpts& o) {
    double deviation = speedup_condition_check(o.a0, o.kmax, o.h);
    std::cout << "max |integrated - closed form| = " << format_significant(deviation) << '\n';
    if (deviation >= 1e-6) {
        std::cout << "integration does NOT reproduce the closed form\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"entanglement dynamics of amplitude-amplification search"};
    app.require_subcommand(1);

    SimulateOpts sim;
    auto* sim_cmd = app.add_subcommand("simulate", "one-instance run summary");
    sim_cmd->add_option("--N", sim.N, "database size (closed-form mode, any N >= 2)");
    sim_cmd->add_option("--r", sim.r, "marked count in closed-form mode (default 1)");
    sim_cmd->add_option("--n", sim.n, "qubit count (explicit marked set mode)");
    sim_cmd->add_option("--marked", sim.marked, "comma-separated indices, or count:K");
    sim_cmd->add_option("--iters", sim.iters, "iteration count, or 'auto' for the optimum");
    sim_cmd->add_option("--partition", sim.partition, "left block size for concurrence output");

    FigureOpts fig;
    auto* fig_cmd = app.add_subcommand("figure", "sweep CSV: 1 = success/concurrence arch, "
                                                 "2 = per-step gain vs drop");
    fig_cmd->add_option("--which", fig.which)->check(CLI::Range(1, 2));
    fig_cmd->add_option("--N", fig.N, "database size")->required();
    fig_cmd->add_option("--r", fig.r, "marked count (default 1)");
    fig_cmd->add_option("--kmax", fig.kmax, "last k (default: twice the optimum / quadrant end)");
    fig_cmd->add_option("--partition", fig.partition,
                        "left block size: exact prefactor + numeric column when feasible");
    fig_cmd->add_option("--out", fig.out, "CSV path (stdout when omitted)");

    ValidateOpts val;
    auto* val_cmd = app.add_subcommand("validate", "closed forms vs statevector engine");
    val_cmd->add_option("--n", val.n)->required();
    val_cmd->add_option("--marked", val.marked)->required();
    val_cmd->add_option("--kmax", val.kmax, "last k (default: twice the optimum)");
    val_cmd->add_option("--partitions", val.partitions, "'all' or comma-separated block sizes");
    val_cmd->add_option("--threshold", val.threshold, "max tolerated |difference|");
    val_cmd->add_option("--out", val.out, "CSV path for the per-cell table");

    OptimalityOpts opt;
    auto* opt_cmd = app.add_subcommand("optimality", "query-count bound across register sizes");
    opt_cmd->add_option("--nmin", opt.nmin);
    opt_cmd->add_option("--nmax", opt.nmax);
    opt_cmd->add_option("--Tmax", opt.Tmax, "last query count (default: twice the optimum)");
    opt_cmd->add_option("--out", opt.out, "CSV path for the per-(n,T) table");

    ParallelOpts par;
    auto* par_cmd = app.add_subcommand("parallel", "multi-register protocol demo");
    par_cmd->add_option("--n", par.n, "qubits per register");
    par_cmd->add_option("--l", par.l, "register count");
    par_cmd->add_option("--marked", par.marked, "marked indices within one register");
    par_cmd->add_option("--variant", par.variant)->check(CLI::IsMember({"global", "local"}));

    int quarter_n = 3;
    auto* quarter_cmd = app.add_subcommand("quarter", "r = N/4 exact-success showcase");
    quarter_cmd->add_option("--n", quarter_n);

    SpeedupOpts spd;
    auto* spd_cmd = app.add_subcommand("speedup", "integrate the growth law, compare closed form");
    spd_cmd->add_option("--a0", spd.a0, "initial amplitude in (0, 1)")->required();
    spd_cmd->add_option("--kmax", spd.kmax, "last k (default: first probability maximum)");
    spd_cmd->add_option("--step", spd.h, "integration step (default 1e-3)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (sim_cmd->parsed()) return run_simulate(sim);
        if (fig_cmd->parsed()) return run_figure(fig);
        if (val_cmd->parsed()) return run_validate(val);
        if (opt_cmd->parsed()) return run_optimality(opt);
        if (par_cmd->parsed()) return run_parallel(par);
        if (quarter_cmd->parsed()) return run_quarter(quarter_n);
        if (spd_cmd->parsed()) return run_speedup(spd);
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
