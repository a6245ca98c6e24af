#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "plates/cyclotomic.hpp"
#include "plates/matrix.hpp"
#include "plates/plate.hpp"

namespace plates {

// Geometric ground truth. Plates are compared as functions on Delta_r^n up to
// sets of measure zero: every identity is checked only at generic points, i.e.
// points where no proper nonempty subset of coordinates sums to an integer.
// Such points lie off every wall x_S = const of every plate.

struct SamplePlan {
    int n = 1;
    int r = 1;
    std::uint64_t seed = 0;
    int denominator = 2;  // prime, > n
    std::size_t batch = 8;

    /// seed 0, denominator the first prime above 2n, batch max(16, 2 r^{n-1}).
    /// Primes just above n leave too few generic residue patterns once n >= 6.
    static SamplePlan defaults(int n, int r);
    void validate() const;
    /// Hard cap on sampled points: 50 r^{n-1}.
    [[nodiscard]] std::size_t point_cap() const;
};

[[nodiscard]] bool is_prime(long p);
[[nodiscard]] int first_prime_above(int n);

/// True when x_S is non-integral for every proper nonempty S.
[[nodiscard]] bool is_generic(const RationalPoint& x);

class SamplingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Deterministic stream of generic points of Delta_r^n with coordinates in
/// (1/D)Z, drawn uniformly from the grid by stars and bars and rejected until
/// generic.
class GenericSampler {
public:
    explicit GenericSampler(const SamplePlan& plan);

    RationalPoint next();
    std::vector<RationalPoint> next_batch(std::size_t count);

    static constexpr int kRetryCap = 10000;

private:
    SamplePlan plan_;
    std::mt19937_64 rng_;
};

[[nodiscard]] std::vector<RationalPoint> sample_generic(const SamplePlan& plan, std::size_t count);

struct EvaluationMatrix {
    std::vector<RationalPoint> points;
    std::vector<Plate> plates;
    Matrix<Rational> entries;  // entries(i, j) = evaluate(plates[j], points[i])
};

[[nodiscard]] EvaluationMatrix evaluation_matrix(std::vector<RationalPoint> points, std::vector<Plate> plates);

/// Row echelon form over Q, grown one row at a time.
class RowEchelon {
public:
    explicit RowEchelon(std::size_t cols) : cols_(cols) {}
    /// Returns true when the row increased the rank.
    bool insert(std::vector<Rational> row);
    [[nodiscard]] std::size_t rank() const { return rows_.size(); }
    [[nodiscard]] std::size_t cols() const { return cols_; }

private:
    std::size_t cols_;
    std::vector<std::vector<Rational>> rows_;
    std::vector<std::size_t> pivots_;
};

struct RankReport {
    std::size_t rank = 0;
    std::size_t points_used = 0;
};

/// Rank of the span of the plates' indicator functions. Points are added in
/// batches until the rank is unchanged over 3 consecutive batches, reaches the
/// column count, or the point cap is hit.
[[nodiscard]] RankReport rank_of_span(const std::vector<Plate>& plates, const SamplePlan& plan);

class NotInSpan : public std::runtime_error {
public:
    NotInSpan() : std::runtime_error("target not in almost-everywhere span") {}
};

/// Fits plates against a fixed basis by exact interpolation at generic points.
/// Construction samples until the basis is seen to be independent, keeps an
/// invertible square subsystem, and reserves a fresh held-out batch.
class BasisSolver {
public:
    BasisSolver(std::vector<Plate> basis, const SamplePlan& plan);

    /// Coefficients c with target = sum_j c_j basis_j at every sampled and
    /// every held-out point. Throws NotInSpan otherwise.
    [[nodiscard]] std::vector<Rational> solve(const Plate& target) const;

    [[nodiscard]] const std::vector<Plate>& basis() const { return basis_; }
    [[nodiscard]] std::size_t points_used() const { return fit_points_.size() + holdout_points_.size(); }

private:
    [[nodiscard]] bool matches(const std::vector<RationalPoint>& points,
                               const std::vector<std::vector<std::uint8_t>>& basis_values, const Plate& target,
                               const std::vector<Rational>& coefficients) const;

    std::vector<Plate> basis_;
    std::vector<RationalPoint> fit_points_;
    std::vector<std::vector<std::uint8_t>> fit_values_;
    std::vector<RationalPoint> holdout_points_;
    std::vector<std::vector<std::uint8_t>> holdout_values_;
    std::vector<std::size_t> square_rows_;  // indices into fit_points_
    std::optional<Matrix<Rational>> square_inverse_;
};

[[nodiscard]] std::vector<Rational> solve_in_basis(const Plate& target, const std::vector<Plate>& basis,
                                                   const SamplePlan& plan);

struct WeightedPlate {
    Cyclotomic weight;
    Plate plate;
};
/// Formal linear combination of plates; all weights share one cyclotomic order.
using PlateCombination = std::vector<WeightedPlate>;

/// Value of the combination at x.
[[nodiscard]] Cyclotomic evaluate(const PlateCombination& combination, const RationalPoint& x, int order);

/// Integer-coefficient combination helper.
[[nodiscard]] PlateCombination combination(int order, const std::vector<std::pair<long, Plate>>& terms);

struct IdentityCheck {
    bool holds = false;
    std::size_t points_used = 0;
    std::optional<RationalPoint> witness;
};

/// Compares two combinations at generic points: batches are drawn until the
/// rank of the span of all plates involved is stable, then one held-out batch.
/// Stops at the first disagreement and reports it as the witness.
[[nodiscard]] IdentityCheck verify_identity_ae(const PlateCombination& lhs, const PlateCombination& rhs,
                                               const SamplePlan& plan);

}  // namespace plates
