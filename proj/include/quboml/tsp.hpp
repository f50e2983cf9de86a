#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "quboml/qubo.hpp"

namespace quboml {

// Symmetric travel-distance matrix with zero diagonal and off-diagonal
// entries in [1, 10000].
class TspInstance {
public:
    TspInstance(int m, std::vector<double> dist);

    int m() const { return m_; }
    double dist(int k, int l) const { return dist_[static_cast<std::size_t>(k) * m_ + l]; }
    const std::vector<double>& dists() const { return dist_; }
    double max_distance() const;

private:
    int m_;
    std::vector<double> dist_;  // row-major m*m
};

// A permutation of 0..m-1; perm[j] is the city visited at position j.
struct Tour {
    std::vector<int> perm;
};

// Weights for the one-hot constraint terms (a) and the distance term (b)
// of the QUBO translation. Feasible ground states need a > b * max(D).
struct PenaltyConfig {
    double a;
    double b;
};

// b = 1, a = 2 * max(D): twice the sufficiency bound for slack.
PenaltyConfig default_penalty_config(const TspInstance& t);

// Cyclic tour cost including the closing edge.
double tour_length(const TspInstance& t, const Tour& p);

// One-hot position encoding over n = m^2 variables; bit v*m+j means "city v
// occupies tour position j" (city-major ordering). Constraint constants are
// stored as offset = 2*a*m, so penalized_cost(tour_to_bits(p)) equals
// b * tour_length(p) for every valid tour.
QuboMatrix tsp_to_qubo(const TspInstance& t, const PenaltyConfig& pc);

BitVector tour_to_bits(const Tour& p, int m);

// Decode of a candidate configuration; infeasible inputs report which city
// rows and position columns fail the exactly-one-bit rule.
struct TourDecode {
    std::optional<Tour> tour;
    std::vector<int> bad_cities;
    std::vector<int> bad_positions;

    bool feasible() const { return tour.has_value(); }
};

TourDecode bits_to_tour(const BitVector& x, int m);

// Random symmetric instance with integer distances uniform in [1, 10000].
TspInstance random_tsp(int m, std::uint64_t seed);

}  // namespace quboml
