#include "quboml/solve.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "quboml/errors.hpp"

namespace quboml {

const char* to_string(SolveMethod m) {
    return m == SolveMethod::brute ? "brute" : "anneal";
}

SolveResult brute_force_qubo(const QuboMatrix& q) {
    const int n = q.n();
    if (n > kBruteForceMaxBits)
        throw CapacityError("brute_force_qubo: n = " + std::to_string(n) + " exceeds " +
                            std::to_string(kBruteForceMaxBits) + " bits; use anneal_qubo");
    const std::vector<double>& c = q.coeffs();
    // Counter bit n-1-i holds x_i, so ascending counter order is
    // lexicographic order of the bit vector with bit 0 most significant;
    // keeping the first strict improvement realizes the tie-break.
    const std::uint64_t total = 1ULL << n;
    double best = 0.0;
    std::uint64_t best_mask = 0;
    bool have_best = false;
    std::vector<int> set_bits;
    set_bits.reserve(n);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        set_bits.clear();
        for (int i = 0; i < n; ++i)
            if ((mask >> (n - 1 - i)) & 1ULL) set_bits.push_back(i);
        double e = 0.0;
        for (std::size_t a = 0; a < set_bits.size(); ++a) {
            const double* row = c.data() + static_cast<std::size_t>(set_bits[a]) * n;
            for (std::size_t b = a; b < set_bits.size(); ++b) e += row[set_bits[b]];
        }
        if (!have_best || e < best) {
            best = e;
            best_mask = mask;
            have_best = true;
        }
    }
    BitVector x(n, 0);
    for (int i = 0; i < n; ++i) x[i] = static_cast<std::uint8_t>((best_mask >> (n - 1 - i)) & 1ULL);
    return SolveResult{std::move(x), best, SolveMethod::brute};
}

Tour brute_force_tsp(const TspInstance& t) {
    const int m = t.m();
    if (m > kBruteForceMaxCities)
        throw CapacityError("brute_force_tsp: m = " + std::to_string(m) + " exceeds " +
                            std::to_string(kBruteForceMaxCities) + " cities");
    Tour p;
    p.perm.resize(m);
    std::iota(p.perm.begin(), p.perm.end(), 0);
    if (m <= 2) return p;
    // Anchor city 0; next_permutation walks the rest in lexicographic order,
    // so the first strict improvement is the canonical optimum.
    std::vector<int> rest(p.perm.begin() + 1, p.perm.end());
    Tour best = p;
    double best_len = tour_length(t, p);
    Tour cand;
    cand.perm.resize(m);
    cand.perm[0] = 0;
    while (std::next_permutation(rest.begin(), rest.end())) {
        std::copy(rest.begin(), rest.end(), cand.perm.begin() + 1);
        const double len = tour_length(t, cand);
        if (len < best_len) {
            best_len = len;
            best = cand;
        }
    }
    return best;
}

AnnealParams default_anneal_params(const QuboMatrix& q, std::uint64_t seed) {
    AnnealParams p;
    p.restarts = 20;
    p.sweeps = 200 * q.n();
    p.t_start = q.max_abs_coeff();
    if (p.t_start <= 0.0) p.t_start = 1.0;  // all-zero matrix
    p.t_end = 1e-3 * p.t_start;
    p.seed = seed;
    return p;
}

SolveResult anneal_qubo(const QuboMatrix& q, const AnnealParams& p) {
    if (p.restarts < 1 || p.sweeps < 1)
        throw std::invalid_argument("anneal_qubo: restarts and sweeps must be >= 1");
    if (!(p.t_start > p.t_end) || !(p.t_end > 0.0))
        throw std::invalid_argument("anneal_qubo: need t_start > t_end > 0");
    const int n = q.n();
    const std::vector<double>& c = q.coeffs();

    // Local field of bit i: Q_ii + sum_{j<i} Q_ji x_j + sum_{j>i} Q_ij x_j.
    // Flipping bit i changes the energy by +field when setting, -field when
    // clearing.
    auto local_field = [&](const BitVector& x, int i) {
        double f = c[static_cast<std::size_t>(i) * n + i];
        for (int j = 0; j < i; ++j)
            if (x[j]) f += c[static_cast<std::size_t>(j) * n + i];
        for (int j = i + 1; j < n; ++j)
            if (x[j]) f += c[static_cast<std::size_t>(i) * n + j];
        return f;
    };

    BitVector best_x;
    double best_e = 0.0;
    bool have_best = false;
    const double cool =
        p.sweeps > 1 ? std::pow(p.t_end / p.t_start, 1.0 / (p.sweeps - 1)) : 1.0;

    for (int r = 0; r < p.restarts; ++r) {
        SplitMix64 rng(sub_seed(p.seed, static_cast<std::uint64_t>(r)));
        BitVector x(n);
        for (int i = 0; i < n; ++i) x[i] = static_cast<std::uint8_t>(rng.next_u64() & 1ULL);
        double e = energy(q, x);
        if (!have_best || e < best_e) {
            best_e = e;
            best_x = x;
            have_best = true;
        }
        double temp = p.t_start;
        for (int s = 0; s < p.sweeps; ++s) {
            for (int i = 0; i < n; ++i) {
                const double de = (x[i] ? -1.0 : 1.0) * local_field(x, i);
                if (de <= 0.0 || rng.next_double() < std::exp(-de / temp)) {
                    x[i] ^= 1;
                    e += de;
                    if (e < best_e) {
                        best_e = e;
                        best_x = x;
                    }
                }
            }
            temp *= cool;
        }
    }
    // The running energy may carry accumulated rounding from incremental
    // updates; the reported energy must match a fresh evaluation exactly.
    best_e = energy(q, best_x);
    return SolveResult{std::move(best_x), best_e, SolveMethod::anneal};
}

SolveResult label(const QuboMatrix& q, std::uint64_t seed) {
    if (q.n() <= kBruteForceMaxBits) return brute_force_qubo(q);
    return anneal_qubo(q, default_anneal_params(q, seed));
}

SolveResult label_tsp(const TspInstance& t, const QuboMatrix& q) {
    const Tour best = brute_force_tsp(t);
    BitVector x = tour_to_bits(best, t.m());
    const double e = energy(q, x);
    return SolveResult{std::move(x), e, SolveMethod::brute};
}

}  // namespace quboml
