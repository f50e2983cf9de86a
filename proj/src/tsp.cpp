#include "quboml/tsp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace quboml {

namespace {

void check_permutation(const Tour& p, int m) {
    if (p.perm.size() != static_cast<std::size_t>(m))
        throw std::invalid_argument("tour must have exactly m cities");
    std::vector<char> seen(m, 0);
    for (int v : p.perm) {
        if (v < 0 || v >= m || seen[v])
            throw std::invalid_argument("tour must be a permutation of 0..m-1");
        seen[v] = 1;
    }
}

}  // namespace

TspInstance::TspInstance(int m, std::vector<double> dist) : m_(m), dist_(std::move(dist)) {
    if (m_ < 1) throw std::invalid_argument("TspInstance: m must be >= 1");
    if (dist_.size() != static_cast<std::size_t>(m_) * m_)
        throw std::invalid_argument("TspInstance: distance matrix must be m*m");
    for (int k = 0; k < m_; ++k) {
        if (dist_[static_cast<std::size_t>(k) * m_ + k] != 0.0)
            throw std::invalid_argument("TspInstance: diagonal must be zero");
        for (int l = 0; l < m_; ++l) {
            const double d = dist_[static_cast<std::size_t>(k) * m_ + l];
            if (!std::isfinite(d)) throw std::invalid_argument("TspInstance: non-finite distance");
            if (k != l && (d < 1.0 || d > 10000.0))
                throw std::invalid_argument("TspInstance: off-diagonal distances must lie in [1, 10000]");
            if (d != dist_[static_cast<std::size_t>(l) * m_ + k])
                throw std::invalid_argument("TspInstance: distance matrix must be symmetric");
        }
    }
}

double TspInstance::max_distance() const {
    double m = 0.0;
    for (double d : dist_) m = std::max(m, d);
    return m;
}

PenaltyConfig default_penalty_config(const TspInstance& t) {
    return PenaltyConfig{2.0 * t.max_distance(), 1.0};
}

double tour_length(const TspInstance& t, const Tour& p) {
    const int m = t.m();
    check_permutation(p, m);
    double len = 0.0;
    for (int k = 0; k < m; ++k) len += t.dist(p.perm[k], p.perm[(k + 1) % m]);
    return len;
}

QuboMatrix tsp_to_qubo(const TspInstance& t, const PenaltyConfig& pc) {
    const int m = t.m();
    if (!(pc.b > 0.0)) throw std::invalid_argument("tsp_to_qubo: penalty b must be > 0");
    if (!(pc.a > pc.b * t.max_distance()))
        throw std::invalid_argument("tsp_to_qubo: penalty a must exceed b * max(D)");
    const int n = m * m;
    std::vector<double> raw(static_cast<std::size_t>(n) * n, 0.0);
    auto cell = [&](int i, int j) -> double& { return raw[static_cast<std::size_t>(i) * n + j]; };
    auto var = [m](int city, int pos) { return city * m + pos; };

    // One-hot per city: a * (sum_j x_{v,j} - 1)^2, constants dropped.
    for (int v = 0; v < m; ++v) {
        for (int j = 0; j < m; ++j) {
            cell(var(v, j), var(v, j)) += -pc.a;
            for (int j2 = j + 1; j2 < m; ++j2) cell(var(v, j), var(v, j2)) += 2.0 * pc.a;
        }
    }
    // One-hot per position: a * (sum_v x_{v,j} - 1)^2, constants dropped.
    for (int j = 0; j < m; ++j) {
        for (int v = 0; v < m; ++v) {
            cell(var(v, j), var(v, j)) += -pc.a;
            for (int v2 = v + 1; v2 < m; ++v2) cell(var(v, j), var(v2, j)) += 2.0 * pc.a;
        }
    }
    // Distance term: b * sum_{u != v} D_uv * sum_j x_{u,j} x_{v,(j+1) mod m}.
    for (int u = 0; u < m; ++u) {
        for (int v = 0; v < m; ++v) {
            if (u == v) continue;
            const double d = pc.b * t.dist(u, v);
            for (int j = 0; j < m; ++j) cell(var(u, j), var(v, (j + 1) % m)) += d;
        }
    }
    // Dropped constants: a per city plus a per position.
    const double offset = 2.0 * pc.a * m;
    return canonicalize(n, raw, offset);
}

BitVector tour_to_bits(const Tour& p, int m) {
    check_permutation(p, m);
    BitVector x(static_cast<std::size_t>(m) * m, 0);
    for (int j = 0; j < m; ++j) x[static_cast<std::size_t>(p.perm[j]) * m + j] = 1;
    return x;
}

TourDecode bits_to_tour(const BitVector& x, int m) {
    if (m < 1) throw std::invalid_argument("bits_to_tour: m must be >= 1");
    if (x.size() != static_cast<std::size_t>(m) * m)
        throw std::invalid_argument("bits_to_tour: bit vector length must be m*m");
    TourDecode out;
    std::vector<int> row_count(m, 0), col_count(m, 0);
    std::vector<int> pos_city(m, -1);
    for (int v = 0; v < m; ++v) {
        for (int j = 0; j < m; ++j) {
            if (x[static_cast<std::size_t>(v) * m + j]) {
                ++row_count[v];
                ++col_count[j];
                pos_city[j] = v;
            }
        }
    }
    for (int v = 0; v < m; ++v)
        if (row_count[v] != 1) out.bad_cities.push_back(v);
    for (int j = 0; j < m; ++j)
        if (col_count[j] != 1) out.bad_positions.push_back(j);
    if (out.bad_cities.empty() && out.bad_positions.empty()) out.tour = Tour{pos_city};
    return out;
}

TspInstance random_tsp(int m, std::uint64_t seed) {
    if (m < 2) throw std::invalid_argument("random_tsp: m must be >= 2");
    SplitMix64 rng(seed);
    std::vector<double> d(static_cast<std::size_t>(m) * m, 0.0);
    for (int k = 0; k < m; ++k) {
        for (int l = k + 1; l < m; ++l) {
            const double v = static_cast<double>(rng.uniform_int(1, 10000));
            d[static_cast<std::size_t>(k) * m + l] = v;
            d[static_cast<std::size_t>(l) * m + k] = v;
        }
    }
    return TspInstance(m, std::move(d));
}

}  // namespace quboml
