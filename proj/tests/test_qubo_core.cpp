#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "quboml/qubo.hpp"
#include "quboml/rng.hpp"

using namespace quboml;

namespace {

// Independent energy oracle over the full matrix with i<=j pairing.
double energy_reference(int n, const std::vector<double>& upper, const BitVector& x) {
    double e = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) e += upper[static_cast<std::size_t>(i) * n + j] * x[i] * x[j];
    return e;
}

BitVector random_bits(int n, SplitMix64& rng) {
    BitVector x(n);
    for (int i = 0; i < n; ++i) x[i] = static_cast<std::uint8_t>(rng.next_u64() & 1ULL);
    return x;
}

}  // namespace

TEST_CASE("energy: zero matrix gives zero") {
    QuboMatrix q(4, std::vector<double>(16, 0.0));
    BitVector x = {1, 0, 1, 1};
    CHECK(energy(q, x) == 0.0);
}

TEST_CASE("energy: direct arithmetic on a 2x2 matrix") {
    // Q00=1, Q01=2, Q11=3
    QuboMatrix q(2, {1.0, 2.0, 0.0, 3.0});
    CHECK(energy(q, {1, 1}) == 6.0);
    CHECK(energy(q, {0, 1}) == 3.0);
}

TEST_CASE("energy: dimension mismatch is rejected") {
    QuboMatrix q(3, std::vector<double>(9, 0.0));
    CHECK_THROWS_AS(energy(q, {1, 0}), std::invalid_argument);
}

TEST_CASE("penalized_cost equals energy when offset is zero") {
    SplitMix64 rng(11);
    QuboMatrix q = random_qubo(6, {-5.0, 5.0}, 99);
    for (int t = 0; t < 20; ++t) {
        BitVector x = random_bits(6, rng);
        CHECK(penalized_cost(q, x) == energy(q, x));
    }
}

TEST_CASE("penalized_cost includes the offset") {
    QuboMatrix q(2, {1.0, 0.0, 0.0, 1.0}, 7.5);
    CHECK(penalized_cost(q, {1, 0}) == doctest::Approx(8.5));
}

TEST_CASE("canonicalize: already upper-triangular is unchanged") {
    std::vector<double> raw = {1.0, 2.0, 0.0, 3.0};
    QuboMatrix q = canonicalize(2, raw);
    CHECK(q.coeffs() == raw);
}

TEST_CASE("canonicalize: folds the lower triangle") {
    QuboMatrix q = canonicalize(2, {0.0, 2.0, 3.0, 0.0});
    CHECK(q.at(0, 1) == 5.0);
    CHECK(q.at(1, 0) == 0.0);
}

TEST_CASE("canonicalize: diagonal entries unchanged") {
    QuboMatrix q = canonicalize(3, {4.0, 1.0, 0.0, 2.0, -5.0, 0.0, 3.0, 1.0, 6.0});
    CHECK(q.at(0, 0) == 4.0);
    CHECK(q.at(1, 1) == -5.0);
    CHECK(q.at(2, 2) == 6.0);
}

TEST_CASE("canonicalize rejects bad input") {
    CHECK_THROWS_AS(canonicalize(2, {1.0, 2.0, 3.0}), std::invalid_argument);
    CHECK_THROWS_AS(canonicalize(2, {1.0, std::nan(""), 0.0, 1.0}), std::invalid_argument);
}

TEST_CASE("QuboMatrix constructor rejects nonzero lower triangle") {
    CHECK_THROWS_AS(QuboMatrix(2, {1.0, 0.0, 2.0, 1.0}), std::invalid_argument);
}

TEST_CASE("canonicalization preserves energy for random matrices") {
    SplitMix64 rng(2024);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 1 + static_cast<int>(rng.next_below(8));
        std::vector<double> raw(static_cast<std::size_t>(n) * n);
        for (double& v : raw) v = rng.uniform(-10.0, 10.0);
        // Fold by hand to get the reference upper form.
        std::vector<double> upper(raw.size(), 0.0);
        for (int i = 0; i < n; ++i) {
            upper[static_cast<std::size_t>(i) * n + i] = raw[static_cast<std::size_t>(i) * n + i];
            for (int j = i + 1; j < n; ++j)
                upper[static_cast<std::size_t>(i) * n + j] =
                    raw[static_cast<std::size_t>(i) * n + j] +
                    raw[static_cast<std::size_t>(j) * n + i];
        }
        QuboMatrix q = canonicalize(n, raw);
        BitVector x = random_bits(n, rng);
        CHECK(energy(q, x) == energy_reference(n, upper, x));
    }
}

TEST_CASE("random_qubo: entries within range, lower triangle zero, deterministic") {
    const ValueRange range{-10000.0, 10000.0};
    QuboMatrix q = random_qubo(16, range, 42);
    for (int i = 0; i < 16; ++i) {
        for (int j = 0; j < 16; ++j) {
            if (j < i) {
                CHECK(q.at(i, j) == 0.0);
            } else {
                CHECK(q.at(i, j) >= range.lo);
                CHECK(q.at(i, j) <= range.hi);
            }
        }
    }
    QuboMatrix q2 = random_qubo(16, range, 42);
    CHECK(q.coeffs() == q2.coeffs());
    QuboMatrix q3 = random_qubo(16, range, 43);
    CHECK(q.coeffs() != q3.coeffs());
}

TEST_CASE("normalize: boundary and midpoint mapping") {
    QuboMatrix q(2, {-10.0, 0.0, 0.0, 10.0});
    const ValueRange bounds{-10.0, 10.0};
    std::vector<double> u = normalize(q, bounds);
    CHECK(u[0] == 0.0);   // entry == lo
    CHECK(u[3] == 1.0);   // entry == hi
    CHECK(u[1] == 0.5);   // midpoint
}

TEST_CASE("normalize rejects out-of-bounds entries and names the index") {
    QuboMatrix q(2, {0.0, 20.0, 0.0, 1.0});
    try {
        normalize(q, {-10.0, 10.0});
        FAIL("expected out_of_range");
    } catch (const std::out_of_range& e) {
        CHECK(std::string(e.what()).find("(0,1)") != std::string::npos);
    }
}

TEST_CASE("normalize then denormalize roundtrips to 1e-12") {
    QuboMatrix q = random_qubo(12, {-10000.0, 10000.0}, 7);
    const ValueRange bounds{-10000.0, 10000.0};
    std::vector<double> u = normalize(q, bounds);
    for (double v : u) {
        CHECK(v >= 0.0);
        CHECK(v <= 1.0);
    }
    std::vector<double> back = denormalize(u, bounds);
    double max_err = 0.0;
    for (int i = 0; i < 12 * 12; ++i) max_err = std::max(max_err, std::abs(back[i] - q.coeffs()[i]));
    CHECK(max_err <= 1e-12);
}

TEST_CASE("property: energy is linear in coefficients") {
    SplitMix64 rng(5150);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng.next_below(8));
        QuboMatrix q1 = random_qubo(n, {-3.0, 3.0}, rng.next_u64());
        QuboMatrix q2 = random_qubo(n, {-3.0, 3.0}, rng.next_u64());
        std::vector<double> sum(q1.coeffs());
        for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += q2.coeffs()[i];
        QuboMatrix qs(n, std::move(sum));
        BitVector x = random_bits(n, rng);
        CHECK(energy(qs, x) ==
              doctest::Approx(energy(q1, x) + energy(q2, x)).epsilon(1e-12));
    }
}

TEST_CASE("property: positive scaling preserves energies and minimizers") {
    SplitMix64 rng(616);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 4 + static_cast<int>(rng.next_below(9));  // n <= 12
        QuboMatrix q = random_qubo(n, {-10.0, 10.0}, rng.next_u64());
        const double c = 0.5 + rng.next_double() * 3.0;
        std::vector<double> scaled(q.coeffs());
        for (double& v : scaled) v *= c;
        QuboMatrix qc(n, std::move(scaled));

        BitVector x = random_bits(n, rng);
        CHECK(energy(qc, x) == doctest::Approx(c * energy(q, x)).epsilon(1e-12));

        // Minimizing sets over all 2^n vectors coincide.
        std::vector<std::uint64_t> min_a, min_b;
        double best_a = 0.0, best_b = 0.0;
        for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
            BitVector v(n);
            for (int i = 0; i < n; ++i) v[i] = static_cast<std::uint8_t>((mask >> i) & 1ULL);
            const double ea = energy(q, v), eb = energy(qc, v);
            if (mask == 0 || ea < best_a - 1e-12) {
                best_a = ea;
                min_a.assign(1, mask);
            } else if (std::abs(ea - best_a) <= 1e-12) {
                min_a.push_back(mask);
            }
            if (mask == 0 || eb < best_b - 1e-12) {
                best_b = eb;
                min_b.assign(1, mask);
            } else if (std::abs(eb - best_b) <= 1e-12) {
                min_b.push_back(mask);
            }
        }
        CHECK(min_a == min_b);
    }
}

TEST_CASE("property: all-zeros configuration always has zero energy") {
    SplitMix64 rng(31337);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 1 + static_cast<int>(rng.next_below(10));
        QuboMatrix q = random_qubo(n, {-100.0, 100.0}, rng.next_u64());
        CHECK(energy(q, BitVector(n, 0)) == 0.0);
    }
}

TEST_CASE("bit string helpers roundtrip") {
    BitVector x = {1, 0, 0, 1, 1};
    CHECK(bits_to_string(x) == "10011");
    CHECK(bits_from_string("10011") == x);
    CHECK_THROWS_AS(bits_from_string("10x"), std::invalid_argument);
}
