#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "plates/combinatorics.hpp"
#include "plates/cyclotomic.hpp"
#include "plates/matrix.hpp"

namespace plates {

// The translation algebra C_r^n = < e_1..e_n : e_i^r = 1, commuting, e_1...e_n = q >
// with q = exp(-2 pi i / r). Elements are kept in the normal form where e_1 is
// eliminated through e_1 = q e_2^{-1} ... e_n^{-1}, so the monomials
// e_2^{j_2} ... e_n^{j_n}, 0 <= j_i < r, form a basis of size r^{n-1}.

/// Exponent vector (j_2, ..., j_n), each in 0..r-1.
using Exponents = std::vector<int>;

class TranslationElement {
public:
    TranslationElement(int n, int r);
    static TranslationElement one(int n, int r);
    /// The generator e_i, 1 <= i <= n, in normal form.
    static TranslationElement generator(int n, int r, int i);

    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] int r() const { return r_; }
    [[nodiscard]] const std::map<Exponents, Cyclotomic>& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] Cyclotomic coefficient(const Exponents& e) const;

    void add_term(const Exponents& e, const Cyclotomic& c);

    TranslationElement& operator+=(const TranslationElement& o);
    TranslationElement& operator-=(const TranslationElement& o);
    TranslationElement& operator*=(const Cyclotomic& c);

    friend TranslationElement operator+(TranslationElement a, const TranslationElement& b) { return a += b; }
    friend TranslationElement operator-(TranslationElement a, const TranslationElement& b) { return a -= b; }
    friend TranslationElement operator*(const TranslationElement& a, const TranslationElement& b);
    friend TranslationElement operator*(const Cyclotomic& c, TranslationElement a) { return a *= c; }
    friend bool operator==(const TranslationElement&, const TranslationElement&) = default;

    [[nodiscard]] std::string str() const;

private:
    void require_compatible(const TranslationElement& o) const;

    int n_;
    int r_;
    std::map<Exponents, Cyclotomic> terms_;
};

/// scalar * e_1^{k_1} ... e_n^{k_n} in normal form; exponents may be any integers.
[[nodiscard]] TranslationElement normalize(const std::vector<long>& word, const Cyclotomic& scalar, int r);

[[nodiscard]] inline TranslationElement ta_multiply(const TranslationElement& a, const TranslationElement& b) { return a * b; }

/// sigma sends e_i to e_{sigma(i)}.
[[nodiscard]] TranslationElement ta_act(const Permutation& sigma, const TranslationElement& x);

/// Monomial basis in lexicographic exponent order.
[[nodiscard]] std::vector<Exponents> monomial_basis(int n, int r);

/// Column j is sigma applied to monomial_basis(n, r)[j].
[[nodiscard]] Matrix<Cyclotomic> ta_action_matrix(const Permutation& sigma, int r);
[[nodiscard]] Cyclotomic ta_trace(const Permutation& sigma, int r);

/// |{x in (Z/r)^k : sum_i lambda_i x_i = 1 mod r}|, enumerated directly.
[[nodiscard]] Integer diophantine_count_enumerated(const CycleType& type, int r);
/// Same count by the closed form r^{k-1} [gcd(lambda, r) = 1].
[[nodiscard]] Integer diophantine_count_closed(const CycleType& type, int r);
/// Enumerates when r^k <= 10^7, otherwise uses the closed form.
[[nodiscard]] Integer diophantine_count(const CycleType& type, int r);

/// I = (i_1..i_n), 0 <= i_j < r, sum i_j = 1 mod r.
struct IdempotentLabel {
    std::vector<int> indices;
    friend auto operator<=>(const IdempotentLabel&, const IdempotentLabel&) = default;
};

class NotInLabelSet : public std::invalid_argument {
public:
    NotInLabelSet() : std::invalid_argument("not in \xF0\x9D\x93\x98") {}  // "not in 𝓘"
};

void validate_label(const IdempotentLabel& label, int r);
[[nodiscard]] std::vector<IdempotentLabel> idempotent_labels(int n, int r);

/// epsilon_I = r^{-n} prod_j sum_{k=0}^{r-1} (q^{-i_j} e_j)^k, normalized.
[[nodiscard]] TranslationElement idempotent(const IdempotentLabel& label, int r);

struct PartitionOfUnityReport {
    int n = 0;
    int r = 0;
    bool exhaustive = true;
    std::size_t checked_pairs = 0;
    std::vector<std::string> failures;
    [[nodiscard]] bool ok() const { return failures.empty(); }
};

/// Checks eps_I eps_J = delta_{IJ} eps_I, sum_I eps_I = 1, e_j eps_I = q^{i_j} eps_I
/// and (e_1...e_n) eps_I = q eps_I. All pairs are checked when r^n <= exhaustive_limit;
/// beyond that the diagonal pairs of the first 64 labels plus a seeded sample of 512 pairs.
[[nodiscard]] PartitionOfUnityReport verify_partition_of_unity(int n, int r, std::uint64_t seed = 0,
                                                               unsigned long exhaustive_limit = 4096);

/// Labels I fixed by sigma acting on coordinates.
[[nodiscard]] Integer fixed_label_count(const Permutation& sigma, int r);

}  // namespace plates
