#include "qgrover/grover.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qgrover {

namespace {

void fill_angles(SearchParams& p) {
    p.theta = std::asin(std::sqrt(static_cast<double>(p.r) / static_cast<double>(p.N)));
    p.A0 = std::sin(p.theta);
    p.B0 = std::cos(p.theta);
}

int exact_log2(std::uint64_t v) {
    if (v == 0 || (v & (v - 1)) != 0) return 0;
    int n = 0;
    while (v > 1) {
        v >>= 1;
        ++n;
    }
    return n;
}

}  // namespace

SearchParams make_params(int n, std::vector<std::uint64_t> marked) {
    if (n < 1 || n > 62) throw std::invalid_argument("qubit count must be in [1, 62]");
    if (marked.empty()) throw std::invalid_argument("marked set is empty");
    SearchParams p;
    p.n = n;
    p.N = std::uint64_t{1} << n;
    std::sort(marked.begin(), marked.end());
    for (std::size_t i = 0; i < marked.size(); ++i) {
        if (marked[i] >= p.N) throw std::out_of_range("marked index out of range");
        if (i > 0 && marked[i] == marked[i - 1])
            throw std::invalid_argument("marked indices must be distinct");
    }
    if (marked.size() == p.N)
        throw std::invalid_argument("all basis states marked: reflection is degenerate");
    p.marked = std::move(marked);
    p.r = p.marked.size();
    fill_angles(p);
    return p;
}

SearchParams make_params_analytic(std::uint64_t N, std::uint64_t r) {
    if (N < 2) throw std::invalid_argument("database size must be at least 2");
    if (r == 0) throw std::invalid_argument("marked set is empty");
    if (r >= N)
        throw std::invalid_argument("all basis states marked: reflection is degenerate");
    SearchParams p;
    p.N = N;
    p.r = r;
    p.n = exact_log2(N);
    p.analytic = true;
    fill_angles(p);
    return p;
}

TwoDimState initial_state(const SearchParams& params) {
    return TwoDimState{0, params.A0, params.B0};
}

TwoDimState iterate(TwoDimState state, const SearchParams& params) {
    double N = static_cast<double>(params.N);
    double r = static_cast<double>(params.r);
    double diag = (N - 2.0 * r) / N;
    double off = 2.0 * std::sqrt(r * (N - r)) / N;
    TwoDimState next;
    next.k = state.k + 1;
    next.A = diag * state.A + off * state.B;
    next.B = diag * state.B - off * state.A;
    return next;
}

TwoDimState amplitude_closed_form(std::int64_t k, const SearchParams& params) {
    if (k < 0) throw std::invalid_argument("iteration count must be non-negative");
    double angle = (2.0 * static_cast<double>(k) + 1.0) * params.theta;
    return TwoDimState{k, std::sin(angle), std::cos(angle)};
}

std::int64_t optimal_iterations(const SearchParams& params) {
    double pi = std::acos(-1.0);
    return std::max<std::int64_t>(0, std::llround((pi / (2.0 * params.theta) - 1.0) / 2.0));
}

double success_probability(std::int64_t k, const SearchParams& params) {
    double a = amplitude_closed_form(k, params).A;
    return a * a;
}

double success_probability_rate(double k, const SearchParams& params) {
    return 2.0 * params.theta * std::sin((4.0 * k + 2.0) * params.theta);
}

double success_probability_step(std::int64_t k, const SearchParams& params) {
    return success_probability(k + 1, params) - success_probability(k, params);
}

}  // namespace qgrover
