#include <random>

#include "doctest.h"
#include "plates/repr.hpp"
#include "plates/translation.hpp"
#include "test_support.hpp"

using namespace plates;

namespace {

CycleType C(std::vector<int> parts) { return CycleType(std::move(parts)); }

// The character of C_r^n sending e_j to q^{i_j}; well defined exactly when
// sum i_j = 1 mod r. Used as an independent model of the algebra.
Cyclotomic ev(const IdempotentLabel& label, const TranslationElement& x) {
    Cyclotomic out(x.r());
    for (const auto& [e, c] : x.terms()) {
        long k = 0;
        for (std::size_t j = 0; j < e.size(); ++j) k += static_cast<long>(label.indices[j + 1]) * e[j];
        out += c * q_pow(x.r(), k);
    }
    return out;
}

TranslationElement random_element(std::mt19937_64& rng, int n, int r) {
    std::uniform_int_distribution<long> exp(-2 * r, 2 * r);
    std::uniform_int_distribution<int> coeff(-3, 3);
    TranslationElement x(n, r);
    for (int t = 0; t < 4; ++t) {
        std::vector<long> word(static_cast<std::size_t>(n));
        for (auto& w : word) w = exp(rng);
        x += normalize(word, Cyclotomic(r, Rational(coeff(rng))), r);
    }
    return x;
}

// Brute force over all of (Z/r)^n.
long labels_fixed_brute(const Permutation& sigma, int r) {
    const int n = sigma.size();
    long count = 0;
    std::vector<int> i(static_cast<std::size_t>(n), 0);
    while (true) {
        long sum = 0;
        for (int v : i) sum += v;
        bool fixed = sum % r == 1 % r;
        for (int a = 1; a <= n && fixed; ++a) fixed = i[static_cast<std::size_t>(sigma(a) - 1)] == i[static_cast<std::size_t>(a - 1)];
        count += fixed;
        std::size_t j = 0;
        while (j < i.size() && ++i[j] == r) i[j++] = 0;
        if (j == i.size()) break;
    }
    return count;
}

}  // namespace

TEST_CASE("normal form") {
    const int r = 3;
    const auto e1 = TranslationElement::generator(3, r, 1);
    TranslationElement expected(3, r);
    expected.add_term({r - 1, r - 1}, q_pow(r, 1));
    CHECK(e1 == expected);

    const auto prod = TranslationElement::generator(3, r, 1) * TranslationElement::generator(3, r, 2) *
                      TranslationElement::generator(3, r, 3);
    CHECK(prod == q_pow(r, 1) * TranslationElement::one(3, r));
    CHECK(normalize({0, r, 0}, Cyclotomic::one(r), r) == TranslationElement::one(3, r));
    CHECK(TranslationElement::generator(2, 3, 2).str() == "(1)*e2");
    CHECK(monomial_basis(3, 3).size() == 9);
    CHECK_THROWS_AS(TranslationElement::generator(3, 3, 4), std::invalid_argument);
    CHECK_THROWS_AS(TranslationElement::one(2, 2) + TranslationElement::one(2, 3), std::invalid_argument);
}

TEST_CASE("permutation action") {
    const auto s = Permutation::parse("(1 2)", 2);
    const auto e2 = TranslationElement::generator(2, 3, 2);
    TranslationElement expected(2, 3);
    expected.add_term({2}, q_pow(3, 1));
    CHECK(ta_act(s, e2) == expected);
    CHECK(ta_act(s, e2) == TranslationElement::generator(2, 3, 1));
    for (int j = 0; j < 3; ++j) {
        const auto x = normalize({0, j}, Cyclotomic::one(3), 3);
        CHECK(ta_act(s, ta_act(s, x)) == x);
        CHECK(ta_act(Permutation::identity(2), x) == x);
    }
}

TEST_CASE("traces") {
    CHECK(ta_trace(Permutation::parse("(1 2)", 2), 3) == Cyclotomic(3, Rational(1)));
    CHECK(ta_trace(Permutation::identity(3), 3) == Cyclotomic(3, Rational(9)));
    CHECK(ta_trace(Permutation::parse("(1 2 3)", 3), 3) == Cyclotomic(3));
    for (int n = 1; n <= 4; ++n) {
        for (int r = 1; r <= 5; ++r) {
            for (const auto& type : partitions(n)) {
                const auto s = Permutation::from_cycle_type(type);
                CAPTURE(type.str());
                CAPTURE(r);
                CHECK(ta_trace(s, r) == Cyclotomic(r, Rational(formula_character(n, r)(type))));
                CHECK(fixed_label_count(s, r) == labels_fixed_brute(s, r));
                CHECK(diophantine_count(type, r) == labels_fixed_brute(s, r));
            }
        }
    }
}

TEST_CASE("property: action matrices are monomial with root-of-unity entries") {
    for (int n = 2; n <= 4; ++n) {
        for (int r = 2; r <= 4; ++r) {
            for (const auto& s : all_permutations(n)) {
                const auto m = ta_action_matrix(s, r);
                for (std::size_t j = 0; j < m.cols(); ++j) {
                    int nonzero = 0;
                    for (std::size_t i = 0; i < m.rows(); ++i) {
                        if (m(i, j).is_zero()) continue;
                        ++nonzero;
                        bool root = false;
                        for (long k = 0; k < r; ++k) root = root || m(i, j) == Cyclotomic::zeta_pow(r, k);
                        CHECK(root);
                    }
                    CHECK(nonzero == 1);
                }
            }
        }
    }
}

TEST_CASE("property: normal form respects every character of the algebra") {
    std::mt19937_64 rng(31);
    for (int n = 1; n <= 4; ++n) {
        for (int r = 1; r <= 4; ++r) {
            const auto labels = idempotent_labels(n, r);
            for (int trial = 0; trial < 10; ++trial) {
                std::uniform_int_distribution<long> exp(-10, 10);
                std::vector<long> word(static_cast<std::size_t>(n));
                for (auto& w : word) w = exp(rng);
                const auto x = random_element(rng, n, r), y = random_element(rng, n, r);
                const auto s = testing::random_permutation(rng, n);
                for (const auto& label : labels) {
                    long k = 0;
                    for (int j = 0; j < n; ++j) k += label.indices[static_cast<std::size_t>(j)] * word[static_cast<std::size_t>(j)];
                    CHECK(ev(label, normalize(word, Cyclotomic::one(r), r)) == q_pow(r, k));
                    CHECK(ev(label, x * y) == ev(label, x) * ev(label, y));
                    IdempotentLabel pulled{std::vector<int>(static_cast<std::size_t>(n))};
                    for (int j = 1; j <= n; ++j) pulled.indices[static_cast<std::size_t>(j - 1)] = label.indices[static_cast<std::size_t>(s(j) - 1)];
                    CHECK(ev(label, ta_act(s, x)) == ev(pulled, x));
                }
            }
        }
    }
}

TEST_CASE("diophantine counts") {
    CHECK(diophantine_count(C({2, 1}), 10) == 10);
    CHECK(diophantine_count(C({3}), 10) == 1);
    CHECK(diophantine_count(C({3}), 3) == 0);
    for (int n = 1; n <= 6; ++n) {
        for (int r = 1; r <= 7; ++r) {
            for (const auto& type : partitions(n)) {
                CHECK(diophantine_count_enumerated(type, r) == diophantine_count_closed(type, r));
            }
        }
    }
    // Large cases take the closed form.
    CHECK(diophantine_count(C({1, 1, 1, 1, 1, 1, 1, 1, 1}), 10) == Integer("100000000"));
}

TEST_CASE("idempotents") {
    const auto eps = idempotent(IdempotentLabel{{1, 0}}, 2);
    CHECK(TranslationElement::generator(2, 2, 1) * eps == Cyclotomic(2, Rational(-1)) * eps);
    CHECK(TranslationElement::generator(2, 2, 1) * eps == q_pow(2, 1) * eps);
    CHECK(eps * eps == eps);
    CHECK(idempotent_labels(3, 2).size() == 4);
    CHECK_THROWS_WITH_AS(validate_label(IdempotentLabel{{0, 0}}, 2), "not in \xF0\x9D\x93\x98", NotInLabelSet);
    CHECK_THROWS_AS(validate_label(IdempotentLabel{{2, 0}}, 2), std::invalid_argument);
    CHECK_THROWS_AS((void)idempotent(IdempotentLabel{{0, 0, 0}}, 3), NotInLabelSet);

    const auto labels = idempotent_labels(3, 3);
    for (const auto& a : labels) {
        for (const auto& b : labels) CHECK(ev(a, idempotent(b, 3)) == Cyclotomic(3, Rational(a == b ? 1 : 0)));
    }
    CHECK(fixed_label_count(Permutation::parse("(1 2)", 3), 10) == 10);
    CHECK(fixed_label_count(Permutation::parse("(1 2 3)", 3), 10) == 1);
    CHECK(fixed_label_count(Permutation::identity(3), 10) == 100);
}

TEST_CASE("partition of unity") {
    for (auto [n, r] : {std::pair{2, 2}, {2, 3}, {3, 2}, {3, 3}, {1, 4}, {4, 2}}) {
        const auto report = verify_partition_of_unity(n, r);
        CAPTURE(n);
        CAPTURE(r);
        CHECK(report.ok());
        CHECK(report.exhaustive);
        const auto labels = idempotent_labels(n, r).size();
        CHECK(report.checked_pairs == labels * labels);
    }
    // Sampled mode, forced by a low exhaustive limit.
    const auto sampled = verify_partition_of_unity(3, 3, 3, 8);
    CHECK(sampled.ok());
    CHECK_FALSE(sampled.exhaustive);
    CHECK(sampled.checked_pairs == 9 + 512);
}
