#include "quboml/qubo.hpp"

#include <cmath>
#include <stdexcept>

#include "quboml/errors.hpp"

namespace quboml {

std::string bits_to_string(const BitVector& x) {
    std::string s(x.size(), '0');
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i]) s[i] = '1';
    return s;
}

BitVector bits_from_string(const std::string& s) {
    BitVector x(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '0')
            x[i] = 0;
        else if (s[i] == '1')
            x[i] = 1;
        else
            throw std::invalid_argument("bit string may contain only '0'/'1'");
    }
    return x;
}

QuboMatrix::QuboMatrix(int n, std::vector<double> coeffs, double offset)
    : n_(n), offset_(offset), coeffs_(std::move(coeffs)) {
    if (n_ < 1) throw std::invalid_argument("QuboMatrix: n must be >= 1");
    if (coeffs_.size() != static_cast<std::size_t>(n_) * n_)
        throw std::invalid_argument("QuboMatrix: coefficient count must be n*n");
    if (!std::isfinite(offset_)) throw std::invalid_argument("QuboMatrix: offset must be finite");
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) {
            const double v = coeffs_[static_cast<std::size_t>(i) * n_ + j];
            if (!std::isfinite(v))
                throw std::invalid_argument("QuboMatrix: non-finite coefficient");
            if (j < i && v != 0.0)
                throw std::invalid_argument(
                    "QuboMatrix: lower triangle must be zero; use canonicalize()");
        }
    }
}

double QuboMatrix::max_abs_coeff() const {
    double m = 0.0;
    for (double v : coeffs_) m = std::max(m, std::abs(v));
    return m;
}

double energy(const QuboMatrix& q, const BitVector& x) {
    const int n = q.n();
    if (x.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("energy: bit vector length must equal q.n");
    const std::vector<double>& c = q.coeffs();
    double e = 0.0;
    for (int i = 0; i < n; ++i) {
        if (!x[i]) continue;
        const double* row = c.data() + static_cast<std::size_t>(i) * n;
        for (int j = i; j < n; ++j) {
            if (x[j]) e += row[j];
        }
    }
    return e;
}

double penalized_cost(const QuboMatrix& q, const BitVector& x) {
    return energy(q, x) + q.offset();
}

QuboMatrix canonicalize(int n, const std::vector<double>& raw, double offset) {
    if (n < 1) throw std::invalid_argument("canonicalize: n must be >= 1");
    if (raw.size() != static_cast<std::size_t>(n) * n)
        throw std::invalid_argument("canonicalize: matrix must be square n*n");
    for (double v : raw)
        if (!std::isfinite(v)) throw std::invalid_argument("canonicalize: non-finite entry");
    std::vector<double> upper(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) {
        upper[static_cast<std::size_t>(i) * n + i] = raw[static_cast<std::size_t>(i) * n + i];
        for (int j = i + 1; j < n; ++j) {
            upper[static_cast<std::size_t>(i) * n + j] =
                raw[static_cast<std::size_t>(i) * n + j] + raw[static_cast<std::size_t>(j) * n + i];
        }
    }
    return QuboMatrix(n, std::move(upper), offset);
}

QuboMatrix random_qubo(int n, ValueRange range, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_qubo: n must be >= 1");
    if (!(range.lo < range.hi)) throw std::invalid_argument("random_qubo: range.lo must be < range.hi");
    SplitMix64 rng(seed);
    std::vector<double> c(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            c[static_cast<std::size_t>(i) * n + j] = rng.uniform(range.lo, range.hi);
    return QuboMatrix(n, std::move(c), 0.0);
}

std::vector<double> normalize(const QuboMatrix& q, ValueRange bounds) {
    if (!(bounds.lo < bounds.hi)) throw std::invalid_argument("normalize: bounds.lo must be < bounds.hi");
    const int n = q.n();
    const double span = bounds.hi - bounds.lo;
    std::vector<double> out(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double v = q.at(i, j);
            if (v < bounds.lo || v > bounds.hi)
                throw std::out_of_range("normalize: coefficient (" + std::to_string(i) + "," +
                                        std::to_string(j) + ") = " + std::to_string(v) +
                                        " outside bounds");
            out[static_cast<std::size_t>(i) * n + j] = (v - bounds.lo) / span;
        }
    }
    return out;
}

std::vector<double> denormalize(const std::vector<double>& unit, ValueRange bounds) {
    if (!(bounds.lo < bounds.hi))
        throw std::invalid_argument("denormalize: bounds.lo must be < bounds.hi");
    const double span = bounds.hi - bounds.lo;
    std::vector<double> out(unit.size());
    for (std::size_t i = 0; i < unit.size(); ++i) out[i] = bounds.lo + unit[i] * span;
    return out;
}

}  // namespace quboml
