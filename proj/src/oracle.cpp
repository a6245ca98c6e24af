#include "plates/oracle.hpp"

#include <algorithm>
#include <set>

namespace plates {

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

int first_prime_above(int n) {
    int p = n + 1;
    while (!is_prime(p)) ++p;
    return p;
}

namespace {

std::size_t dimension(int n, int r) {
    std::size_t d = 1;
    for (int i = 1; i < n; ++i) d *= static_cast<std::size_t>(r);
    return d;
}

}  // namespace

SamplePlan SamplePlan::defaults(int n, int r) {
    SamplePlan plan;
    plan.n = n;
    plan.r = r;
    plan.seed = 0;
    plan.denominator = first_prime_above(2 * n);
    plan.batch = std::max<std::size_t>(16, 2 * dimension(n, r));
    return plan;
}

void SamplePlan::validate() const {
    if (n < 1 || r < 1) throw std::invalid_argument("sample plan needs n >= 1 and r >= 1");
    if (!is_prime(denominator) || denominator <= n) throw std::invalid_argument("sample denominator must be a prime > n");
    if (batch < 1) throw std::invalid_argument("sample batch must be >= 1");
}

std::size_t SamplePlan::point_cap() const { return 50 * dimension(n, r); }

bool is_generic(const RationalPoint& x) {
    const std::size_t n = x.size();
    if (n >= 8 * sizeof(unsigned long)) throw std::invalid_argument("is_generic: too many coordinates");
    for (unsigned long mask = 1; mask + 1 < (1UL << n); ++mask) {
        Rational s;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask & (1UL << i)) s += x[i];
        }
        if (s.is_integer()) return false;
    }
    return true;
}

GenericSampler::GenericSampler(const SamplePlan& plan) : plan_(plan), rng_(plan.seed) { plan_.validate(); }

RationalPoint GenericSampler::next() {
    const int n = plan_.n;
    const long d = plan_.denominator;
    const long total = static_cast<long>(plan_.r) * d;
    for (int attempt = 0; attempt < kRetryCap; ++attempt) {
        // Weak composition of total into n parts: choose n-1 bars among total+n-1 slots.
        std::set<long> bars;
        std::uniform_int_distribution<long> slot(0, total + n - 2);
        while (static_cast<int>(bars.size()) < n - 1) bars.insert(slot(rng_));
        std::vector<long> numerators;
        long prev = -1;
        for (long b : bars) {
            numerators.push_back(b - prev - 1);
            prev = b;
        }
        numerators.push_back(total + n - 1 - prev - 1);

        bool generic = true;
        for (unsigned long mask = 1; generic && mask + 1 < (1UL << n); ++mask) {
            long s = 0;
            for (int i = 0; i < n; ++i) {
                if (mask & (1UL << i)) s += numerators[static_cast<std::size_t>(i)];
            }
            generic = s % d != 0;
        }
        if (!generic) continue;
        RationalPoint x;
        for (long c : numerators) x.emplace_back(c, d);
        return x;
    }
    throw SamplingError("no generic point found within the retry cap; raise the denominator");
}

std::vector<RationalPoint> GenericSampler::next_batch(std::size_t count) {
    std::vector<RationalPoint> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(next());
    return out;
}

std::vector<RationalPoint> sample_generic(const SamplePlan& plan, std::size_t count) {
    GenericSampler sampler(plan);
    return sampler.next_batch(count);
}

EvaluationMatrix evaluation_matrix(std::vector<RationalPoint> points, std::vector<Plate> plates) {
    Matrix<Rational> entries(points.size(), plates.size(), Rational(0));
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = 0; j < plates.size(); ++j) entries(i, j) = Rational(evaluate(plates[j], points[i]));
    }
    return {std::move(points), std::move(plates), std::move(entries)};
}

bool RowEchelon::insert(std::vector<Rational> row) {
    if (row.size() != cols_) throw std::invalid_argument("RowEchelon: row length mismatch");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Rational f = row[pivots_[i]];
        if (f.is_zero()) continue;
        const auto& base = rows_[i];
        for (std::size_t j = pivots_[i]; j < cols_; ++j) {
            if (!base[j].is_zero()) row[j] -= f * base[j];
        }
    }
    std::size_t pivot = 0;
    while (pivot < cols_ && row[pivot].is_zero()) ++pivot;
    if (pivot == cols_) return false;
    const Rational inv = inverse(row[pivot]);
    for (std::size_t j = pivot; j < cols_; ++j) row[j] *= inv;
    rows_.push_back(std::move(row));
    pivots_.push_back(pivot);
    return true;
}

namespace {

std::vector<std::uint8_t> indicator_row(const std::vector<Plate>& plates, const RationalPoint& x) {
    std::vector<std::uint8_t> row;
    row.reserve(plates.size());
    for (const auto& p : plates) row.push_back(static_cast<std::uint8_t>(evaluate(p, x)));
    return row;
}

std::vector<Rational> to_rationals(const std::vector<std::uint8_t>& row) {
    return {row.begin(), row.end()};
}

void require_shape(const std::vector<Plate>& plates, const SamplePlan& plan) {
    for (const auto& p : plates) {
        if (p.n() != plan.n || p.total() != plan.r) throw std::invalid_argument("plate does not live in the sampled simplex");
    }
}

// Draws batches into `echelon`, calling on_point for every point, until the
// rank is stable for 3 consecutive batches, reaches full column rank, or the
// cap is reached. Returns the number of points drawn.
template <typename OnPoint>
std::size_t grow_until_stable(GenericSampler& sampler, const SamplePlan& plan, RowEchelon& echelon, OnPoint&& on_point) {
    std::size_t used = 0;
    int stable = 0;
    std::size_t last_rank = 0;
    bool first = true;
    while (used < plan.point_cap() || first) {
        for (std::size_t i = 0; i < plan.batch; ++i) {
            on_point(sampler.next());
            ++used;
        }
        if (!first && echelon.rank() == last_rank) {
            ++stable;
        } else {
            stable = 0;
        }
        first = false;
        last_rank = echelon.rank();
        if (stable >= 3 || echelon.rank() == echelon.cols()) break;
    }
    return used;
}

}  // namespace

RankReport rank_of_span(const std::vector<Plate>& plates, const SamplePlan& plan) {
    plan.validate();
    require_shape(plates, plan);
    if (plates.empty()) return {};
    GenericSampler sampler(plan);
    RowEchelon echelon(plates.size());
    const std::size_t used = grow_until_stable(sampler, plan, echelon, [&](const RationalPoint& x) {
        echelon.insert(to_rationals(indicator_row(plates, x)));
    });
    return {echelon.rank(), used};
}

BasisSolver::BasisSolver(std::vector<Plate> basis, const SamplePlan& plan) : basis_(std::move(basis)) {
    plan.validate();
    require_shape(basis_, plan);
    if (basis_.empty()) throw std::invalid_argument("BasisSolver: empty basis");
    GenericSampler sampler(plan);
    RowEchelon echelon(basis_.size());
    grow_until_stable(sampler, plan, echelon, [&](const RationalPoint& x) {
        auto values = indicator_row(basis_, x);
        if (echelon.insert(to_rationals(values))) square_rows_.push_back(fit_points_.size());
        fit_points_.push_back(x);
        fit_values_.push_back(std::move(values));
    });
    if (echelon.rank() != basis_.size()) throw std::runtime_error("basis plates are not independent at the sampled points");

    Matrix<Rational> square(basis_.size(), basis_.size(), Rational(0));
    for (std::size_t i = 0; i < square_rows_.size(); ++i) {
        for (std::size_t j = 0; j < basis_.size(); ++j) square(i, j) = Rational(fit_values_[square_rows_[i]][j]);
    }
    square_inverse_ = inverse(square);
    if (!square_inverse_) throw std::logic_error("selected interpolation rows are singular");

    holdout_points_ = sampler.next_batch(plan.batch);
    for (const auto& x : holdout_points_) holdout_values_.push_back(indicator_row(basis_, x));
}

bool BasisSolver::matches(const std::vector<RationalPoint>& points,
                          const std::vector<std::vector<std::uint8_t>>& basis_values, const Plate& target,
                          const std::vector<Rational>& coefficients) const {
    for (std::size_t i = 0; i < points.size(); ++i) {
        Rational predicted;
        for (std::size_t j = 0; j < coefficients.size(); ++j) {
            if (basis_values[i][j]) predicted += coefficients[j];
        }
        if (predicted != Rational(evaluate(target, points[i]))) return false;
    }
    return true;
}

std::vector<Rational> BasisSolver::solve(const Plate& target) const {
    const std::size_t d = basis_.size();
    std::vector<Rational> rhs;
    for (std::size_t i = 0; i < d; ++i) rhs.emplace_back(evaluate(target, fit_points_[square_rows_[i]]));
    std::vector<Rational> coefficients(d, Rational(0));
    const auto& inv = *square_inverse_;
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            if (!rhs[j].is_zero() && !inv(i, j).is_zero()) coefficients[i] += inv(i, j) * rhs[j];
        }
    }
    if (!matches(fit_points_, fit_values_, target, coefficients)) throw NotInSpan();
    if (!matches(holdout_points_, holdout_values_, target, coefficients)) throw NotInSpan();
    return coefficients;
}

std::vector<Rational> solve_in_basis(const Plate& target, const std::vector<Plate>& basis, const SamplePlan& plan) {
    return BasisSolver(basis, plan).solve(target);
}

Cyclotomic evaluate(const PlateCombination& combination, const RationalPoint& x, int order) {
    Cyclotomic sum(order);
    for (const auto& term : combination) {
        if (evaluate(term.plate, x)) sum += term.weight;
    }
    return sum;
}

PlateCombination combination(int order, const std::vector<std::pair<long, Plate>>& terms) {
    PlateCombination out;
    for (const auto& [c, p] : terms) out.push_back({Cyclotomic(order, Rational(c)), p});
    return out;
}

IdentityCheck verify_identity_ae(const PlateCombination& lhs, const PlateCombination& rhs, const SamplePlan& plan) {
    plan.validate();
    int order = 0;
    std::set<Plate> distinct;
    for (const auto* side : {&lhs, &rhs}) {
        for (const auto& term : *side) {
            if (order == 0) order = term.weight.order();
            if (term.weight.order() != order) throw OrderMismatch();
            distinct.insert(term.plate);
        }
    }
    if (order == 0) order = 1;
    const std::vector<Plate> plates(distinct.begin(), distinct.end());
    require_shape(plates, plan);

    IdentityCheck result;
    GenericSampler sampler(plan);
    auto agrees = [&](const RationalPoint& x) {
        ++result.points_used;
        if (evaluate(lhs, x, order) == evaluate(rhs, x, order)) return true;
        if (!result.witness) result.witness = x;
        return false;
    };
    if (plates.empty()) {
        result.holds = true;
        return result;
    }
    RowEchelon echelon(plates.size());
    grow_until_stable(sampler, plan, echelon, [&](const RationalPoint& x) {
        if (!result.witness) agrees(x);
        echelon.insert(to_rationals(indicator_row(plates, x)));
    });
    if (!result.witness) {
        for (const auto& x : sampler.next_batch(plan.batch)) {
            if (!agrees(x)) break;
        }
    }
    result.holds = !result.witness.has_value();
    return result;
}

}  // namespace plates
