#include <random>

#include "doctest.h"
#include "plates/expansion.hpp"
#include "plates/repr.hpp"
#include "test_support.hpp"

using namespace plates;

namespace {

CycleType C(std::vector<int> parts) { return CycleType(std::move(parts)); }

std::map<CycleType, Integer> nonzero(const std::map<CycleType, Integer>& m) {
    std::map<CycleType, Integer> out;
    for (const auto& [k, v] : m) {
        if (v != 0) out.emplace(k, v);
    }
    return out;
}

// Brute force: degree-k exponent vectors on n letters fixed by sigma.
long fixed_monomials(const Permutation& sigma, int k) {
    const int n = sigma.size();
    long count = 0;
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == n - 1) {
            e[static_cast<std::size_t>(i)] = left;
            bool fixed = true;
            for (int a = 1; a <= n; ++a) fixed = fixed && e[static_cast<std::size_t>(sigma(a) - 1)] == e[static_cast<std::size_t>(a - 1)];
            count += fixed;
            return;
        }
        for (int v = 0; v <= left; ++v) {
            e[static_cast<std::size_t>(i)] = v;
            rec(i + 1, left - v);
        }
    };
    rec(0, k);
    return count;
}

// Trace of sigma on Pl(Delta_r^n) computed through the geometric oracle only.
Rational oracle_trace(const Permutation& sigma, int r, const BasisSolver& solver) {
    Rational trace;
    const auto& basis = solver.basis();
    for (std::size_t j = 0; j < basis.size(); ++j) trace += solver.solve(apply_permutation(sigma, basis[j]))[j];
    return trace;
}

}  // namespace

TEST_CASE("action matrices") {
    const auto id = action_matrix(Permutation::identity(3), 2);
    CHECK(id.entries == Matrix<Cyclotomic>::identity(4, Cyclotomic::one(2)));

    const auto m = action_matrix(Permutation::parse("(1 2)", 2), 2);
    CHECK(m.basis == standard_basis(2, 2));
    CHECK(m.entries(0, 0) == Cyclotomic(2, Rational(1)));
    CHECK(m.entries(0, 1) == Cyclotomic(2, Rational(1)));
    CHECK(m.entries(1, 0) == Cyclotomic(2));
    CHECK(m.entries(1, 1) == Cyclotomic(2, Rational(-1)));

    for (int r = 1; r <= 3; ++r) {
        const auto a = action_matrix(Permutation::parse("(1 2)", 3), r).entries;
        const auto b = action_matrix(Permutation::parse("(2 3)", 3), r).entries;
        CHECK(action_matrix(Permutation::parse("(1 2 3)", 3), r).entries == a * b);
    }
}

TEST_CASE("property: the plate action is a representation") {
    for (int n = 2; n <= 3; ++n) {
        for (int r = 1; r <= 3; ++r) {
            const auto group = all_permutations(n);
            std::map<Permutation, Matrix<Cyclotomic>> m;
            for (const auto& s : group) m.emplace(s, action_matrix(s, r).entries);
            for (const auto& s : group) {
                const auto inv = inverse(m.at(s));
                REQUIRE(inv.has_value());
                CHECK(*inv == m.at(s.inverse()));
                for (const auto& t : group) CHECK(m.at(s * t) == m.at(s) * m.at(t));
            }
        }
    }
    // Spot checks in S_4.
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 6; ++trial) {
        const auto s = testing::random_permutation(rng, 4), t = testing::random_permutation(rng, 4);
        CHECK(action_matrix(s * t, 2).entries == action_matrix(s, 2).entries * action_matrix(t, 2).entries);
    }
}

TEST_CASE("plate character against oracle traces and the closed form") {
    for (int n = 1; n <= 3; ++n) {
        for (int r = 1; r <= 3; ++r) {
            const BasisSolver solver(standard_basis(n, r), SamplePlan::defaults(n, r));
            const auto chi = plate_character(n, r);
            for (const auto& type : partitions(n)) {
                CAPTURE(type.str());
                CHECK(chi(type) == oracle_trace(Permutation::from_cycle_type(type), r, solver));
            }
        }
    }
    for (int n = 1; n <= 4; ++n) {
        for (int r = 1; r <= 4; ++r) CHECK(plate_character(n, r) == formula_character(n, r));
    }
}

TEST_CASE("closed form") {
    CHECK(gcd_formula(C({3}), 3) == 0);
    CHECK(gcd_formula(C({2, 1}), 10) == 10);
    CHECK(gcd_formula(C({1, 1, 1}), 3) == 9);
    const auto chi = formula_character(3, 3);
    CHECK(chi(C({1, 1, 1})) == Rational(9));
    CHECK(chi(C({2, 1})) == Rational(3));
    CHECK(chi(C({3})) == Rational(0));
    CHECK(formula_character(3, 10)(C({2, 1})) == Rational(10));
    CHECK(formula_character(5, 1) == ClassFunction::constant(5, Rational(1)));
}

TEST_CASE("irreducible characters") {
    CHECK(mn_value(C({2, 1}), C({3})) == -1);
    for (int n = 1; n <= 6; ++n) {
        CHECK(mn_character(C({n})) == ClassFunction::constant(n, Rational(1)));
        CHECK(mn_character(CycleType(std::vector<int>(static_cast<std::size_t>(n), 1))) ==
              ClassFunction::from(n, [](const CycleType& t) { return Rational(t.sign()); }));
        if (n >= 2) {
            // Standard representation: fixed points minus one.
            CHECK(mn_character(C({n - 1, 1})) == ClassFunction::from(n, [](const CycleType& t) {
                      return Rational(static_cast<long>(std::count(t.parts.begin(), t.parts.end(), 1)) - 1);
                  }));
        }
    }
    CHECK_THROWS_AS((void)mn_value(C({2}), C({1, 1, 1})), std::invalid_argument);
}

TEST_CASE("property: row and column orthogonality up to n = 6") {
    for (int n = 1; n <= 6; ++n) {
        const auto parts = partitions(n);
        std::vector<ClassFunction> chars;
        for (const auto& mu : parts) chars.push_back(mn_character(mu));
        Integer squares = 0;
        for (std::size_t i = 0; i < chars.size(); ++i) {
            for (std::size_t j = 0; j < chars.size(); ++j) CHECK(inner_product(chars[i], chars[j]) == Rational(i == j ? 1 : 0));
            squares += chars[i].degree().numerator() * chars[i].degree().numerator();
        }
        CHECK(squares == factorial(n));
        for (const auto& rho : parts) {
            for (const auto& tau : parts) {
                Rational sum;
                for (const auto& chi : chars) sum += chi(rho) * chi(tau);
                CHECK(sum == (rho == tau ? Rational(rho.centralizer_order()) : Rational(0)));
            }
        }
    }
}

TEST_CASE("symmetric powers") {
    CHECK(sym_power_character(0, 4) == ClassFunction::constant(4, Rational(1)));
    CHECK(sym_power_character(2, 3)(C({2, 1})) == Rational(2));
    CHECK(sym_power_character(3, 3)(C({3})) == Rational(1));
    CHECK(sym_power_character(-1, 3) == ClassFunction(3));
    for (int n = 1; n <= 5; ++n) {
        for (int k = 0; k <= 5; ++k) {
            const auto chi = sym_power_character(k, n);
            for (const auto& type : partitions(n)) CHECK(chi(type) == Rational(fixed_monomials(Permutation::from_cycle_type(type), k)));
        }
    }
}

TEST_CASE("decompositions") {
    CHECK(nonzero(multiplicities(formula_character(3, 3))) == std::map<CycleType, Integer>{{C({3}), 3}, {C({2, 1}), 3}});
    CHECK(nonzero(multiplicities(formula_character(4, 3))) ==
          std::map<CycleType, Integer>{{C({4}), 5}, {C({2, 2}), 2}, {C({3, 1}), 5}, {C({2, 1, 1}), 1}});
    CHECK(nonzero(multiplicities(formula_character(3, 4))) ==
          std::map<CycleType, Integer>{{C({3}), 5}, {C({2, 1}), 5}, {C({1, 1, 1}), 1}});
    CHECK(nonzero(multiplicities(formula_character(2, 4))) == std::map<CycleType, Integer>{{C({2}), 2}, {C({1, 1}), 2}});
    CHECK(nonzero(multiplicities(formula_character(4, 4))) ==
          std::map<CycleType, Integer>{{C({4}), 8}, {C({3, 1}), 12}, {C({2, 2}), 4}, {C({2, 1, 1}), 4}});

    CHECK_THROWS_WITH_AS((void)multiplicities(ClassFunction::constant(3, Rational(1, 2))), "not a character", NotACharacter);
    CHECK_THROWS_AS((void)multiplicities(ClassFunction::constant(3, Rational(0)) - mn_character(C({3}))), NotACharacter);

    CHECK(trivial_multiplicity_series(3, 6) == std::vector<Integer>{1, 2, 3, 5, 7, 9});
    CHECK(trivial_multiplicity_series(4, 6) == std::vector<Integer>{1, 2, 5, 8, 14, 20});
    // n=3, r=2: (4 + 3*2 + 2*1)/6
    CHECK(inner_product(formula_character(3, 2), ClassFunction::constant(3, Rational(1))) == Rational(2));
}

TEST_CASE("property: dimension audit") {
    for (int n = 1; n <= 6; ++n) {
        for (int r = 1; r <= 6; ++r) {
            const auto chi = formula_character(n, r);
            Integer dim = 0;
            for (const auto& [mu, m] : multiplicities(chi)) dim += m * mn_character(mu).degree().numerator();
            Integer expected;
            mpz_ui_pow_ui(expected.get_mpz_t(), static_cast<unsigned long>(r), static_cast<unsigned long>(n - 1));
            CHECK(dim == expected);
            CHECK(chi.degree() == Rational(expected));
        }
    }
}

TEST_CASE("class function plumbing") {
    auto f = ClassFunction::constant(3, Rational(2));
    f.set(C({3}), Rational(5));
    CHECK(f(C({3})) == Rational(5));
    CHECK_THROWS_AS((void)f(C({2, 2})), std::invalid_argument);
    CHECK_THROWS_AS(f + ClassFunction(4), std::invalid_argument);
    CHECK((f - f) == ClassFunction(3));
}
