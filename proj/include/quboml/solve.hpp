#pragma once

#include <cstdint>

#include "quboml/qubo.hpp"
#include "quboml/tsp.hpp"

namespace quboml {

enum class SolveMethod { brute, anneal };

const char* to_string(SolveMethod m);

struct SolveResult {
    BitVector x;
    double energy = 0.0;
    SolveMethod method = SolveMethod::brute;
};

// Simulated-annealing schedule. Temperatures run geometrically from t_start
// down to t_end over `sweeps` full single-bit-flip passes per restart.
struct AnnealParams {
    int restarts = 20;
    int sweeps = 0;
    double t_start = 1.0;
    double t_end = 1e-3;
    std::uint64_t seed = 0;
};

inline constexpr int kBruteForceMaxBits = 24;
inline constexpr int kBruteForceMaxCities = 10;

// Exhaustive search over all 2^n configurations, n <= 24. Ties are broken
// toward the lexicographically smallest bit vector (bit 0 most significant).
SolveResult brute_force_qubo(const QuboMatrix& q);

// Exhaustive search over all (m-1)! tours anchored at city 0, m <= 10.
// Among optimal tours the lexicographically smallest permutation wins.
Tour brute_force_tsp(const TspInstance& t);

// restarts = 20, sweeps = 200*n, t_start = max|Q_ij| (1.0 for an all-zero
// matrix), t_end = 1e-3 * t_start.
AnnealParams default_anneal_params(const QuboMatrix& q, std::uint64_t seed);

// Single-bit-flip Metropolis annealing; deterministic given params.seed.
// Returns the best configuration seen across all restarts.
SolveResult anneal_qubo(const QuboMatrix& q, const AnnealParams& p);

// Labeling dispatch: brute force for n <= 24, otherwise annealing with
// default parameters derived from `seed`.
SolveResult label(const QuboMatrix& q, std::uint64_t seed);

// Exact label for a TSP-derived QUBO: the canonical optimal tour's bit
// encoding (direction fixed by brute_force_tsp's tie-break).
SolveResult label_tsp(const TspInstance& t, const QuboMatrix& q);

}  // namespace quboml
