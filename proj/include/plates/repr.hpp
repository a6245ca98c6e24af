#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "plates/combinatorics.hpp"
#include "plates/cyclotomic.hpp"
#include "plates/matrix.hpp"
#include "plates/plate.hpp"

namespace plates {

/// Function on the conjugacy classes of S_n, keyed by cycle type. Every
/// character realized here is rational-valued, so values are stored in Q.
class ClassFunction {
public:
    explicit ClassFunction(int n);
    static ClassFunction from(int n, const std::function<Rational(const CycleType&)>& f);
    static ClassFunction constant(int n, const Rational& value);

    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] const std::map<CycleType, Rational>& values() const { return values_; }
    [[nodiscard]] const Rational& operator()(const CycleType& type) const;
    void set(const CycleType& type, const Rational& value);
    /// Value at the identity class.
    [[nodiscard]] Rational degree() const;

    ClassFunction& operator+=(const ClassFunction& o);
    ClassFunction& operator-=(const ClassFunction& o);
    /// Pointwise product (character of the tensor product).
    ClassFunction& operator*=(const ClassFunction& o);

    friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
    friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
    friend ClassFunction operator*(ClassFunction a, const ClassFunction& b) { return a *= b; }
    friend bool operator==(const ClassFunction&, const ClassFunction&) = default;

private:
    void require_same_n(const ClassFunction& o) const;

    int n_;
    std::map<CycleType, Rational> values_;
};

/// <a, b> = (1/n!) sum_g a(g) b(g), exact.
[[nodiscard]] Rational inner_product(const ClassFunction& a, const ClassFunction& b);

struct ActionMatrix {
    std::vector<Plate> basis;  // standard_basis(n, r)
    Matrix<Cyclotomic> entries;  // column j = expand(sigma . basis[j])
};

[[nodiscard]] ActionMatrix action_matrix(const Permutation& sigma, int r);

/// Traces of the plate action on Pl(Delta_r^n), one representative per class.
[[nodiscard]] ClassFunction plate_character(int n, int r);

/// r^{k-1} when gcd(lambda_1, ..., lambda_k, r) = 1, else 0.
[[nodiscard]] Integer gcd_formula(const CycleType& type, int r);
[[nodiscard]] ClassFunction formula_character(int n, int r);

/// chi^mu(rho) by the Murnaghan-Nakayama rule.
[[nodiscard]] Integer mn_value(const CycleType& mu, const CycleType& rho);
[[nodiscard]] ClassFunction mn_character(const CycleType& mu);

/// Character of Sym^k(C^n); the zero function for k < 0.
[[nodiscard]] ClassFunction sym_power_character(int k, int n);

class NotACharacter : public std::domain_error {
public:
    NotACharacter() : std::domain_error("not a character") {}
};

/// Multiplicity of every irreducible chi^mu in chi. Throws NotACharacter on a
/// negative or non-integral multiplicity.
[[nodiscard]] std::map<CycleType, Integer> multiplicities(const ClassFunction& chi);

/// Multiplicity of the trivial representation in Pl(Delta_r^n) for r = 1..r_max.
[[nodiscard]] std::vector<Integer> trivial_multiplicity_series(int n, int r_max);

}  // namespace plates
