#pragma once

#include <cstdint>
#include <vector>

namespace qgrover {

// Problem instance. Two construction modes:
//  - make_params(n, marked): explicit marked set over N = 2^n basis states.
//  - make_params_analytic(N, r): closed-form work only, N need not be a power
//    of two and no marked set is stored (numeric operations reject it).
struct SearchParams {
    std::uint64_t N = 0;                 // database size
    std::uint64_t r = 0;                 // number of marked states
    int n = 0;                           // qubit count; 0 if N is not a power of two
    std::vector<std::uint64_t> marked;   // strictly increasing; empty in analytic mode
    bool analytic = false;
    double theta = 0.0;                  // arcsin(sqrt(r/N))
    double A0 = 0.0;                     // sin(theta), initial marked amplitude
    double B0 = 0.0;                     // cos(theta), initial unmarked amplitude
};

// Amplitudes (A, B) of the state on the invariant plane spanned by the
// normalized marked superposition and its uniform complement, after k steps.
struct TwoDimState {
    std::int64_t k = 0;
    double A = 0.0;
    double B = 0.0;
};

SearchParams make_params(int n, std::vector<std::uint64_t> marked);
SearchParams make_params_analytic(std::uint64_t N, std::uint64_t r);

TwoDimState initial_state(const SearchParams& params);

// One sign-flip + reflection-about-start step, expressed as the exact 2x2
// rotation with entries (N-2r)/N and 2*sqrt(r(N-r))/N.
TwoDimState iterate(TwoDimState state, const SearchParams& params);

// A_k = sin((2k+1)theta), B_k = cos((2k+1)theta), valid for every k >= 0.
TwoDimState amplitude_closed_form(std::int64_t k, const SearchParams& params);

// Exact integer maximizer of sin^2((2k+1)theta): round((pi/(2 theta) - 1)/2).
std::int64_t optimal_iterations(const SearchParams& params);

double success_probability(std::int64_t k, const SearchParams& params);

// Continuous-k derivative of the success probability: 2 theta sin((4k+2)theta).
double success_probability_rate(double k, const SearchParams& params);

// Forward difference P(k+1) - P(k), for comparing against the derivative.
double success_probability_step(std::int64_t k, const SearchParams& params);

}  // namespace qgrover
