#pragma once

#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "plates/rational.hpp"

namespace plates {

/// Integer polynomial, coefficients listed from the constant term upwards.
using IntPolynomial = std::vector<long>;

class OrderMismatch : public std::invalid_argument {
public:
    OrderMismatch() : std::invalid_argument("order mismatch") {}
};

[[nodiscard]] long euler_phi(long r);

/// The r-th cyclotomic polynomial. Results are cached; the returned
/// reference stays valid for the life of the process.
[[nodiscard]] const IntPolynomial& cyclotomic_polynomial(int r);

/// Element of the cyclotomic field Q(zeta_r), zeta_r = exp(2 pi i / r),
/// stored as its residue modulo Phi_r. The representation is canonical, so
/// equality is coefficient-wise.
class Cyclotomic {
public:
    /// Zero of order r.
    explicit Cyclotomic(int order);
    Cyclotomic(int order, const Rational& value);

    /// Reduces an arbitrary polynomial in zeta modulo Phi_r.
    static Cyclotomic from_polynomial(int order, std::vector<Rational> coefficients);

    /// zeta_r^k for any integer k.
    static Cyclotomic zeta_pow(int order, long k);
    static Cyclotomic one(int order) { return {order, Rational(1)}; }

    [[nodiscard]] int order() const { return order_; }
    [[nodiscard]] const std::vector<Rational>& coefficients() const { return coeffs_; }
    [[nodiscard]] bool is_zero() const;
    [[nodiscard]] bool is_one() const;
    [[nodiscard]] bool is_rational() const;
    /// Throws std::domain_error when the value is not in Q.
    [[nodiscard]] Rational to_rational() const;

    /// Image under the Galois automorphism zeta -> zeta^j, gcd(j, r) = 1.
    [[nodiscard]] Cyclotomic galois(long j) const;

    /// Polynomial text in the symbol z, e.g. "1/2 - 1/2*z^2".
    [[nodiscard]] std::string str() const;

    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Rational& o);
    Cyclotomic& operator/=(const Cyclotomic& o);

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Rational& b) { return a *= b; }
    friend Cyclotomic operator*(const Rational& b, Cyclotomic a) { return a *= b; }
    friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
    friend Cyclotomic operator-(Cyclotomic a);

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) = default;

    friend std::ostream& operator<<(std::ostream& os, const Cyclotomic& c) { return os << c.str(); }

private:
    void require_same_order(const Cyclotomic& o) const;

    int order_;
    std::vector<Rational> coeffs_;
};

[[nodiscard]] Cyclotomic inverse(const Cyclotomic& c);

/// Powers of q = exp(-2 pi i / r) = zeta_r^{-1}, the root used throughout the
/// plate and translation-algebra formulas.
[[nodiscard]] inline Cyclotomic q_pow(int order, long k) { return Cyclotomic::zeta_pow(order, -k); }

inline Cyclotomic zero_like(const Cyclotomic& c) { return Cyclotomic(c.order()); }
inline Cyclotomic one_like(const Cyclotomic& c) { return Cyclotomic::one(c.order()); }

}  // namespace plates
