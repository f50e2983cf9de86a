#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "quboml/rng.hpp"

namespace quboml {

// Candidate qubit configuration; entries are 0 or 1.
using BitVector = std::vector<std::uint8_t>;

std::string bits_to_string(const BitVector& x);
BitVector bits_from_string(const std::string& s);

// Closed interval used for sampling and for normalization bounds. lo < hi.
struct ValueRange {
    double lo = 0.0;
    double hi = 1.0;
};

// Upper-triangular real coefficient matrix plus a constant offset. The
// offset carries constants dropped when penalty constraints are expanded
// into coefficients, so penalized_cost() recovers the original objective.
class QuboMatrix {
public:
    // Requires an already upper-triangular matrix (coeffs[i*n+j] == 0 for
    // i > j) with finite entries. Use canonicalize() to fold a full matrix.
    QuboMatrix(int n, std::vector<double> coeffs, double offset = 0.0);

    int n() const { return n_; }
    double offset() const { return offset_; }
    double at(int i, int j) const { return coeffs_[static_cast<std::size_t>(i) * n_ + j]; }
    const std::vector<double>& coeffs() const { return coeffs_; }

    double max_abs_coeff() const;

private:
    int n_;
    double offset_;
    std::vector<double> coeffs_;  // row-major n*n, zero below the diagonal
};

// Sum over i <= j of Q_ij * x_i * x_j, accumulated in row-major order
// (i outer, j inner) so results are bit-reproducible. Offset not included.
double energy(const QuboMatrix& q, const BitVector& x);

// energy(q, x) + q.offset().
double penalized_cost(const QuboMatrix& q, const BitVector& x);

// Folds the lower triangle into the upper one (Q'_ij = Q_ij + Q_ji for
// i < j); preserves the energy of every configuration.
QuboMatrix canonicalize(int n, const std::vector<double>& raw, double offset = 0.0);

// Upper triangle (diagonal included) filled i.i.d. uniform over
// [range.lo, range.hi), drawn in row-major order; lower triangle zero,
// offset zero. Fully determined by the seed.
QuboMatrix random_qubo(int n, ValueRange range, std::uint64_t seed);

// Elementwise affine map v -> (v - lo) / (hi - lo) over the full row-major
// matrix. Every entry must lie within bounds.
std::vector<double> normalize(const QuboMatrix& q, ValueRange bounds);

// Exact inverse of normalize on raw matrix data.
std::vector<double> denormalize(const std::vector<double>& unit, ValueRange bounds);

}  // namespace quboml
