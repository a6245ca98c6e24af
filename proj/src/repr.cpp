#include "plates/repr.hpp"

#include <algorithm>
#include <numeric>

#include "plates/expansion.hpp"

namespace plates {

ClassFunction::ClassFunction(int n) : n_(n) {
    for (const auto& type : partitions(n)) values_.emplace(type, Rational(0));
}

ClassFunction ClassFunction::from(int n, const std::function<Rational(const CycleType&)>& f) {
    ClassFunction out(n);
    for (auto& [type, value] : out.values_) value = f(type);
    return out;
}

ClassFunction ClassFunction::constant(int n, const Rational& value) {
    return from(n, [&](const CycleType&) { return value; });
}

const Rational& ClassFunction::operator()(const CycleType& type) const {
    auto it = values_.find(type);
    if (it == values_.end()) throw std::invalid_argument("cycle type " + type.str() + " is not a class of S_" + std::to_string(n_));
    return it->second;
}

void ClassFunction::set(const CycleType& type, const Rational& value) {
    auto it = values_.find(type);
    if (it == values_.end()) throw std::invalid_argument("cycle type " + type.str() + " is not a class of S_" + std::to_string(n_));
    it->second = value;
}

Rational ClassFunction::degree() const { return values_.begin()->second; }

void ClassFunction::require_same_n(const ClassFunction& o) const {
    if (n_ != o.n_) throw std::invalid_argument("class functions of different symmetric groups");
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& o) {
    require_same_n(o);
    for (auto& [type, value] : values_) value += o(type);
    return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& o) {
    require_same_n(o);
    for (auto& [type, value] : values_) value -= o(type);
    return *this;
}

ClassFunction& ClassFunction::operator*=(const ClassFunction& o) {
    require_same_n(o);
    for (auto& [type, value] : values_) value *= o(type);
    return *this;
}

Rational inner_product(const ClassFunction& a, const ClassFunction& b) {
    if (a.n() != b.n()) throw std::invalid_argument("class functions of different symmetric groups");
    Rational sum;
    for (const auto& [type, value] : a.values()) {
        sum += value * b(type) / Rational(type.centralizer_order());
    }
    return sum;
}

ActionMatrix action_matrix(const Permutation& sigma, int r) {
    const int n = sigma.size();
    ActionMatrix out{standard_basis(n, r), Matrix<Cyclotomic>(0, 0, Cyclotomic(r))};
    std::map<Plate, std::size_t> index;
    for (std::size_t i = 0; i < out.basis.size(); ++i) index.emplace(out.basis[i], i);
    out.entries = Matrix<Cyclotomic>(out.basis.size(), out.basis.size(), Cyclotomic(r));
    for (std::size_t j = 0; j < out.basis.size(); ++j) {
        const PlateVector image = expand(apply_permutation(sigma, out.basis[j]));
        for (const auto& [p, c] : image.terms()) out.entries(index.at(p), j) = c;
    }
    return out;
}

ClassFunction plate_character(int n, int r) {
    return ClassFunction::from(n, [&](const CycleType& type) {
        return action_matrix(Permutation::from_cycle_type(type), r).entries.trace().to_rational();
    });
}

Integer gcd_formula(const CycleType& type, int r) {
    if (r < 1) throw std::invalid_argument("gcd_formula: r must be positive");
    long g = r;
    for (int part : type.parts) g = std::gcd(g, static_cast<long>(part));
    if (g != 1) return 0;
    Integer out;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(r), type.length() - 1);
    return out;
}

ClassFunction formula_character(int n, int r) {
    return ClassFunction::from(n, [&](const CycleType& type) { return Rational(gcd_formula(type, r)); });
}

namespace {

// Murnaghan-Nakayama on beta-sets: removing a rim hook of length t from mu is
// moving one bead of the beta-set down by t onto an empty slot; the sign is
// (-1)^(beads jumped over).
class MurnaghanNakayama {
public:
    Integer value(std::vector<int> beads, const std::vector<int>& rho, std::size_t next) {
        if (next == rho.size()) return 1;
        auto key = std::make_pair(beads, std::vector<int>(rho.begin() + static_cast<long>(next), rho.end()));
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        const int t = rho[next];
        Integer sum = 0;
        for (std::size_t i = 0; i < beads.size(); ++i) {
            const int target = beads[i] - t;
            if (target < 0 || std::binary_search(beads.begin(), beads.end(), target)) continue;
            const auto jumped = std::count_if(beads.begin(), beads.end(), [&](int b) { return b > target && b < beads[i]; });
            std::vector<int> moved = beads;
            moved[i] = target;
            std::sort(moved.begin(), moved.end());
            const Integer sub = value(std::move(moved), rho, next + 1);
            if (jumped % 2 == 0) {
                sum += sub;
            } else {
                sum -= sub;
            }
        }
        memo_.emplace(std::move(key), sum);
        return sum;
    }

private:
    std::map<std::pair<std::vector<int>, std::vector<int>>, Integer> memo_;
};

std::vector<int> beta_set(const CycleType& mu) {
    const int len = static_cast<int>(mu.length());
    std::vector<int> beads;
    for (int i = 0; i < len; ++i) beads.push_back(mu.parts[static_cast<std::size_t>(i)] + (len - 1 - i));
    std::sort(beads.begin(), beads.end());
    return beads;
}

}  // namespace

Integer mn_value(const CycleType& mu, const CycleType& rho) {
    if (mu.size() != rho.size()) throw std::invalid_argument("mn_value: partitions of different sizes");
    MurnaghanNakayama mn;
    return mn.value(beta_set(mu), rho.parts, 0);
}

ClassFunction mn_character(const CycleType& mu) {
    MurnaghanNakayama mn;
    const auto beads = beta_set(mu);
    return ClassFunction::from(mu.size(), [&](const CycleType& rho) { return Rational(mn.value(beads, rho.parts, 0)); });
}

// Fixed monomials of degree k under a permutation of cycle type lambda are
// products of cycle-orbit monomials: solutions of sum_i lambda_i a_i = k.
ClassFunction sym_power_character(int k, int n) {
    if (k < 0) return ClassFunction(n);
    return ClassFunction::from(n, [&](const CycleType& type) {
        std::vector<Integer> ways(static_cast<std::size_t>(k) + 1, 0);
        ways[0] = 1;
        for (int part : type.parts) {
            for (int d = part; d <= k; ++d) ways[static_cast<std::size_t>(d)] += ways[static_cast<std::size_t>(d - part)];
        }
        return Rational(ways[static_cast<std::size_t>(k)]);
    });
}

std::map<CycleType, Integer> multiplicities(const ClassFunction& chi) {
    std::map<CycleType, Integer> out;
    for (const auto& mu : partitions(chi.n())) {
        const Rational m = inner_product(chi, mn_character(mu));
        if (!m.is_integer() || m.sign() < 0) throw NotACharacter();
        out.emplace(mu, m.numerator());
    }
    return out;
}

std::vector<Integer> trivial_multiplicity_series(int n, int r_max) {
    std::vector<Integer> out;
    const ClassFunction trivial = ClassFunction::constant(n, Rational(1));
    for (int r = 1; r <= r_max; ++r) {
        const Rational m = inner_product(formula_character(n, r), trivial);
        if (!m.is_integer()) throw NotACharacter();
        out.push_back(m.numerator());
    }
    return out;
}

}  // namespace plates
