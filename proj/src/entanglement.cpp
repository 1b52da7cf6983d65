#include "qgrover/entanglement.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

#include "qgrover/numeric.hpp"

namespace qgrover {

namespace {

const double kPi = std::acos(-1.0);

void validate_partition(PartitionSpec spec) {
    if (spec.n < 2) throw std::invalid_argument("partition needs at least 2 qubits");
    if (spec.l < 1 || spec.l > spec.n - 1)
        throw std::invalid_argument("left block size must be in [1, n-1]");
}

void validate_single_target(const SearchParams& params, PartitionSpec spec) {
    if (params.r != 1) throw std::invalid_argument("single-target operation requires r = 1");
    if (params.n == 0)
        throw std::invalid_argument("database size must be a power of two here");
    if (spec.n != params.n)
        throw std::invalid_argument("partition does not match qubit count");
    validate_partition(spec);
}

void require_marked(const SearchParams& params) {
    if (params.analytic || params.marked.empty())
        throw std::invalid_argument("operation requires an explicit marked set");
}

void require_quadrant(std::int64_t k, double theta) {
    if (k < 0) throw std::invalid_argument("iteration count must be non-negative");
    if ((2.0 * static_cast<double>(k) + 1.0) * theta > kPi / 2.0 + 1e-12)
        throw std::domain_error("first-quadrant range exceeded");
}

double pow2d(int bits) { return std::ldexp(1.0, bits); }

}  // namespace

double eta(PartitionSpec spec) {
    validate_partition(spec);
    double dl = pow2d(spec.l) - 1.0;
    double dr = pow2d(spec.n - spec.l) - 1.0;
    return std::sqrt(dl * dr / (pow2d(spec.n) - 1.0));
}

double eta_prime(PartitionSpec spec, std::uint64_t p, std::uint64_t q, std::uint64_t r) {
    validate_partition(spec);
    double dl = pow2d(spec.l);
    double dr = pow2d(spec.n - spec.l);
    double N = pow2d(spec.n);
    if (p < 1 || static_cast<double>(p) > dl)
        throw std::invalid_argument("left pattern count out of range");
    if (q < 1 || static_cast<double>(q) > dr)
        throw std::invalid_argument("right pattern count out of range");
    if (r < 1 || static_cast<double>(r) >= N)
        throw std::invalid_argument("marked count out of range");
    return std::sqrt((dl - static_cast<double>(p)) * (dr - static_cast<double>(q)) /
                     (N - static_cast<double>(r)));
}

double concurrence_from_spectrum(std::span<const double> mu) {
    if (mu.empty()) throw std::invalid_argument("schmidt spectrum is empty");
    for (double m : mu)
        if (m < -1e-12) throw std::invalid_argument("negative schmidt coefficient");
    double sum = pairwise_map_sum<double>(0, mu.size(),
                                          [&](std::size_t i) { return std::max(0.0, mu[i]); });
    if (std::abs(sum - 1.0) > 1e-8)
        throw std::invalid_argument("schmidt spectrum not normalized");
    double purity = pairwise_map_sum<double>(0, mu.size(), [&](std::size_t i) {
        double m = std::max(0.0, mu[i]);
        return m * m;
    });
    return std::sqrt(2.0 * std::max(0.0, 1.0 - purity));
}

SchmidtPair schmidt_coefficients_eta(std::int64_t k, double eta_value, double theta) {
    if (k < 0) throw std::invalid_argument("iteration count must be non-negative");
    double angle = (2.0 * static_cast<double>(k) + 1.0) * theta;
    double A = std::sin(angle);
    double B = std::cos(angle);
    double a = A - B * std::tan(theta);
    double det = eta_value * eta_value * a * a * B * B;
    double radicand = 0.25 - det;
    if (radicand < -1e-12)
        throw std::domain_error("schmidt discriminant negative beyond tolerance");
    double s = std::sqrt(std::max(0.0, radicand));
    SchmidtPair pair;
    pair.lambda_plus = 0.5 + s;
    pair.lambda_minus = std::max(0.0, 0.5 - s);
    pair.degenerate = pair.lambda_plus - pair.lambda_minus <= 1e-12;
    return pair;
}

SchmidtPair schmidt_coefficients(std::int64_t k, const SearchParams& params,
                                 PartitionSpec spec) {
    validate_single_target(params, spec);
    return schmidt_coefficients_eta(k, eta(spec), params.theta);
}

std::vector<std::complex<double>> expand_block_vector(double c0, double c1,
                                                      std::uint64_t pattern, int qubits) {
    if (qubits < 1 || qubits > 62) throw std::invalid_argument("block size must be in [1, 62]");
    std::uint64_t dim = std::uint64_t{1} << qubits;
    if (pattern >= dim) throw std::out_of_range("pattern index out of range");
    std::vector<std::complex<double>> out(dim);
    double rest = c1 / std::sqrt(static_cast<double>(dim - 1));
    for (std::uint64_t i = 0; i < dim; ++i) out[i] = rest;
    out[pattern] = c0;
    return out;
}

SchmidtData schmidt_vectors(std::int64_t k, const SearchParams& params, PartitionSpec spec) {
    validate_single_target(params, spec);
    require_marked(params);
    SchmidtPair pair = schmidt_coefficients(k, params, spec);

    int l = spec.l;
    int m = spec.n - spec.l;
    std::uint64_t xt = params.marked[0] >> m;
    std::uint64_t yt = params.marked[0] & ((std::uint64_t{1} << m) - 1);

    double angle = (2.0 * static_cast<double>(k) + 1.0) * params.theta;
    double A = std::sin(angle);
    double B = std::cos(angle);
    double Nm1 = pow2d(spec.n) - 1.0;
    double u = std::sqrt((pow2d(l) - 1.0) / Nm1);
    double v = std::sqrt((pow2d(m) - 1.0) / Nm1);
    double e = eta(spec);

    // coefficient matrix of the state in the {target, uniform-rest} block bases
    double M00 = A, M01 = B * v;
    double M10 = B * u, M11 = B * e;

    // left marginal in the same 2D basis
    double pa = M00 * M00 + M01 * M01;
    double pb = M00 * M10 + M01 * M11;
    double pd = M10 * M10 + M11 * M11;

    auto left_vector = [&](double lambda, int which) -> std::array<double, 2> {
        double n1 = pb * pb + (lambda - pa) * (lambda - pa);
        double n2 = (lambda - pd) * (lambda - pd) + pb * pb;
        if (std::max(n1, n2) < 1e-24)
            return which == 0 ? std::array<double, 2>{1.0, 0.0}
                              : std::array<double, 2>{0.0, 1.0};
        std::array<double, 2> vsel = n1 >= n2 ? std::array<double, 2>{pb, lambda - pa}
                                              : std::array<double, 2>{lambda - pd, pb};
        double norm = std::sqrt(vsel[0] * vsel[0] + vsel[1] * vsel[1]);
        return {vsel[0] / norm, vsel[1] / norm};
    };

    std::array<double, 2> lp = left_vector(pair.lambda_plus, 0);
    std::array<double, 2> lm = left_vector(pair.lambda_minus, 1);
    // near-degenerate marginals give nearly parallel candidates; re-orthogonalize
    double overlap = lp[0] * lm[0] + lp[1] * lm[1];
    lm = {lm[0] - overlap * lp[0], lm[1] - overlap * lp[1]};
    double lmnorm = std::sqrt(lm[0] * lm[0] + lm[1] * lm[1]);
    if (lmnorm < 1e-12) {
        lm = {-lp[1], lp[0]};
    } else {
        lm = {lm[0] / lmnorm, lm[1] / lmnorm};
    }

    auto right_vector = [&](std::array<double, 2> lv,
                            const std::array<double, 2>* other) -> std::array<double, 2> {
        std::array<double, 2> w = {M00 * lv[0] + M10 * lv[1], M01 * lv[0] + M11 * lv[1]};
        double norm = std::sqrt(w[0] * w[0] + w[1] * w[1]);
        if (norm < 1e-12 && other != nullptr) return {-(*other)[1], (*other)[0]};
        return {w[0] / norm, w[1] / norm};
    };

    std::array<double, 2> rp = right_vector(lp, nullptr);  // norm sqrt(lambda_plus) >= 1/sqrt 2
    std::array<double, 2> rm = right_vector(lm, &rp);

    SchmidtData data;
    data.coefficients = {pair.lambda_plus, pair.lambda_minus};
    data.degenerate = pair.degenerate;
    data.vectors_left.push_back(expand_block_vector(lp[0], lp[1], xt, l));
    data.vectors_left.push_back(expand_block_vector(lm[0], lm[1], xt, l));
    data.vectors_right.push_back(expand_block_vector(rp[0], rp[1], yt, m));
    data.vectors_right.push_back(expand_block_vector(rm[0], rm[1], yt, m));
    return data;
}

double concurrence_state_eta(std::int64_t k, double eta_value, double theta) {
    if (k < 0) throw std::invalid_argument("iteration count must be non-negative");
    double kk = static_cast<double>(k);
    double prod = std::sin(2.0 * kk * theta) * std::cos((2.0 * kk + 1.0) * theta);
    return 2.0 * eta_value * std::abs(prod) / std::cos(theta);
}

double concurrence_state(std::int64_t k, const SearchParams& params, PartitionSpec spec) {
    validate_single_target(params, spec);
    return concurrence_state_eta(k, eta(spec), params.theta);
}

ConcurrenceChain concurrence_chain_eta(std::int64_t k, double eta_value, double theta) {
    require_quadrant(k, theta);
    double kk = static_cast<double>(k);
    double A = std::sin((2.0 * kk + 1.0) * theta);
    double B = std::cos((2.0 * kk + 1.0) * theta);
    double sec = 1.0 / std::cos(theta);
    double rate = 2.0 * theta * std::sin((4.0 * kk + 2.0) * theta);
    ConcurrenceChain chain;
    chain.exact = 2.0 * eta_value * B * (A - B * std::tan(theta));
    chain.form2 = 2.0 * eta_value * sec * std::sin(2.0 * kk * theta) * B;
    chain.rate_form = eta_value * sec / (2.0 * theta) * (std::sin(2.0 * kk * theta) / A) * rate;
    chain.approx4 = eta_value * sec / (2.0 * theta) * rate;
    chain.approx5 = rate / (2.0 * std::sin(theta));
    return chain;
}

ConcurrenceChain concurrence_chain(std::int64_t k, const SearchParams& params,
                                   PartitionSpec spec) {
    validate_single_target(params, spec);
    return concurrence_chain_eta(k, eta(spec), params.theta);
}

double concurrence_post_oracle_eta(std::int64_t k, double eta_value, double theta) {
    require_quadrant(k, theta);
    double angle = (2.0 * static_cast<double>(k) + 1.0) * theta;
    double A = std::sin(angle);
    double B = std::cos(angle);
    return 2.0 * eta_value * (A + B * std::tan(theta)) * B;
}

double concurrence_post_oracle(std::int64_t k, const SearchParams& params,
                               PartitionSpec spec) {
    validate_single_target(params, spec);
    return concurrence_post_oracle_eta(k, eta(spec), params.theta);
}

double oracle_entanglement_gain_eta(std::int64_t k, double eta_value, double theta) {
    require_quadrant(k, theta);
    double B = std::cos((2.0 * static_cast<double>(k) + 1.0) * theta);
    return 4.0 * eta_value * B * B * std::tan(theta);
}

double oracle_entanglement_gain(std::int64_t k, const SearchParams& params,
                                PartitionSpec spec) {
    validate_single_target(params, spec);
    return oracle_entanglement_gain_eta(k, eta(spec), params.theta);
}

double reflection_entanglement_change_eta(std::int64_t k, double eta_value, double theta) {
    double post = concurrence_post_oracle_eta(k, eta_value, theta);
    return concurrence_chain_eta(k + 1, eta_value, theta).exact - post;
}

double reflection_entanglement_change(std::int64_t k, const SearchParams& params,
                                      PartitionSpec spec) {
    validate_single_target(params, spec);
    return reflection_entanglement_change_eta(k, eta(spec), params.theta);
}

MultiTargetSplit derive_split(const SearchParams& params, PartitionSpec spec) {
    require_marked(params);
    if (spec.n != params.n)
        throw std::invalid_argument("partition does not match qubit count");
    validate_partition(spec);

    int m = spec.n - spec.l;
    std::uint64_t mask = (std::uint64_t{1} << m) - 1;
    std::map<std::uint64_t, std::vector<std::uint64_t>> by_right;
    std::set<std::uint64_t> lefts;
    for (std::uint64_t idx : params.marked) {
        by_right[idx & mask].push_back(idx >> m);
        lefts.insert(idx >> m);
    }

    double r = static_cast<double>(params.r);
    double sum_sq = 0.0;  // sum over right-pattern pairs of squared overlap counts
    for (auto it1 = by_right.begin(); it1 != by_right.end(); ++it1) {
        for (auto it2 = by_right.begin(); it2 != by_right.end(); ++it2) {
            std::vector<std::uint64_t> common;
            std::set_intersection(it1->second.begin(), it1->second.end(),
                                  it2->second.begin(), it2->second.end(),
                                  std::back_inserter(common));
            double c = static_cast<double>(common.size());
            sum_sq += c * c;
        }
    }
    double purity = sum_sq / (r * r);

    MultiTargetSplit split;
    split.p = lefts.size();
    split.q = by_right.size();
    split.target_concurrence = std::sqrt(std::max(0.0, 2.0 * (1.0 - purity)));
    return split;
}

MultiTargetRecord multi_target_concurrence(std::int64_t k, const SearchParams& params,
                                           const MultiTargetSplit& split,
                                           PartitionSpec spec) {
    require_marked(params);
    if (spec.n != params.n)
        throw std::invalid_argument("partition does not match qubit count");
    validate_partition(spec);
    if (k < 0) throw std::invalid_argument("iteration count must be non-negative");
    std::uint64_t r = params.r;
    if (split.p < 1 || split.p > r || split.q < 1 || split.q > r ||
        static_cast<unsigned __int128>(split.p) * split.q < r)
        throw std::invalid_argument("split inconsistent with marked set");

    int m = spec.n - spec.l;
    std::uint64_t mask = (std::uint64_t{1} << m) - 1;
    std::map<std::uint64_t, std::uint64_t> mx, my;
    for (std::uint64_t idx : params.marked) {
        ++mx[idx >> m];
        ++my[idx & mask];
    }
    double rd = static_cast<double>(r);
    double alpha1 = 0.0, beta1 = 0.0, cross = 0.0;
    for (const auto& [pat, count] : my) {
        (void)pat;
        double c = static_cast<double>(count);
        alpha1 += c * c;
    }
    for (const auto& [pat, count] : mx) {
        (void)pat;
        double c = static_cast<double>(count);
        beta1 += c * c;
    }
    alpha1 /= rd * pow2d(spec.l);
    beta1 /= rd * pow2d(m);
    for (std::uint64_t idx : params.marked)
        cross += static_cast<double>(mx[idx >> m]) * static_cast<double>(my[idx & mask]);
    double tau = cross / (rd * std::sqrt(rd) * std::sqrt(static_cast<double>(params.N)));

    double angle = (2.0 * static_cast<double>(k) + 1.0) * params.theta;
    double A = std::sin(angle);
    double B = std::cos(angle);
    double t = std::tan(params.theta);
    double a = A - B * t;
    double b = B / std::cos(params.theta);
    double c = params.A0;
    double Ct = split.target_concurrence;
    double one_minus_purity = 0.5 * Ct * Ct;

    double total_sq = 2.0 * a * a * a * a * one_minus_purity +
                      4.0 * a * a * b * b * (1.0 + c * c - alpha1 - beta1) +
                      8.0 * a * a * a * b * (c - tau);

    MultiTargetRecord rec;
    rec.total = std::sqrt(std::max(0.0, total_sq));
    rec.byproduct = std::abs(A * A - B * B * t * t) * Ct;
    rec.search = 2.0 * eta_prime(spec, split.p, split.q, r) * std::abs(a) * std::abs(B);
    rec.byproduct_tan_variant = std::abs(A * A - B * B * t) * Ct;
    return rec;
}

std::vector<double> speedup_condition_integrate(double A0, std::int64_t k_max, double h) {
    if (!(A0 > 0.0 && A0 < 1.0))
        throw std::invalid_argument("initial amplitude must be in (0, 1)");
    if (k_max < 0) throw std::invalid_argument("iteration count must be non-negative");
    if (!(h > 0.0)) throw std::invalid_argument("integration step must be positive");
    if (h > 0.1) throw std::invalid_argument("integration step too large");

    double phi = std::asin(A0);
    auto f = [&](double p) { return 4.0 * phi * std::sqrt(std::max(0.0, p * (1.0 - p))); };

    std::int64_t substeps = std::max<std::int64_t>(1, std::llround(1.0 / h));
    double hh = 1.0 / static_cast<double>(substeps);
    // a 4th-order step kisses the P=1 turning point from above by O(phi^2 h^2);
    // allow that much, treat anything larger as a diverged integration
    double upper = 1.0 + std::max(1e-9, 8.0 * phi * phi * hh * hh);
    double lower = -1e-9;

    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(k_max) + 1);
    double P = A0 * A0;
    out.push_back(P);
    for (std::int64_t k = 0; k < k_max; ++k) {
        for (std::int64_t s = 0; s < substeps; ++s) {
            double k1 = f(P);
            double k2 = f(P + 0.5 * hh * k1);
            double k3 = f(P + 0.5 * hh * k2);
            double k4 = f(P + hh * k3);
            P += hh / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
            if (P > upper || P < lower || !std::isfinite(P))
                throw std::runtime_error("integration escaped [0, 1]");
            P = std::clamp(P, 0.0, 1.0);
        }
        out.push_back(P);
    }
    return out;
}

}  // namespace qgrover
