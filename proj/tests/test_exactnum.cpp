#include <complex>
#include <numbers>
#include <random>

#include "doctest.h"
#include "plates/cyclotomic.hpp"

using namespace plates;

namespace {

// Independent floating-point oracle: prod over primitive k of (x - exp(2 pi i k / r)),
// rounded to integers.
std::vector<long> cyclotomic_by_roots(int r) {
    std::vector<std::complex<double>> poly{1.0};
    for (int k = 1; k <= r; ++k) {
        if (std::gcd(k, r) != 1) continue;
        const std::complex<double> root = std::polar(1.0, 2 * std::numbers::pi * k / r);
        std::vector<std::complex<double>> next(poly.size() + 1, 0.0);
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] += poly[i];
            next[i] -= root * poly[i];
        }
        poly = next;
    }
    std::vector<long> out;
    for (const auto& c : poly) out.push_back(std::lround(c.real()));
    return out;
}

Cyclotomic random_element(std::mt19937_64& rng, int r) {
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 4);
    std::vector<Rational> coeffs;
    for (long i = 0; i < euler_phi(r) + 2; ++i) coeffs.emplace_back(num(rng), den(rng));
    return Cyclotomic::from_polynomial(r, coeffs);
}

}  // namespace

TEST_CASE("rational arithmetic stays in lowest terms") {
    const Rational a(6, -4);
    CHECK(a.numerator() == -3);
    CHECK(a.denominator() == 2);
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational::parse("10/4") == Rational(5, 2));
    CHECK_THROWS_AS(Rational(1) / Rational(0), DivisionByZero);
    CHECK_THROWS_WITH_AS((void)inverse(Rational(0)), "division by zero", DivisionByZero);
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == IntPolynomial{-1, 1});
    CHECK(cyclotomic_polynomial(4) == IntPolynomial{1, 0, 1});
    CHECK(cyclotomic_polynomial(12) == IntPolynomial{1, 0, -1, 0, 1});
    for (int r = 1; r <= 30; ++r) {
        CAPTURE(r);
        CHECK(cyclotomic_polynomial(r) == cyclotomic_by_roots(r));
        CHECK(static_cast<long>(cyclotomic_polynomial(r).size()) - 1 == euler_phi(r));
    }
}

TEST_CASE("zeta powers") {
    CHECK(Cyclotomic::zeta_pow(2, 1) == Cyclotomic(2, Rational(-1)));
    CHECK(Cyclotomic::zeta_pow(4, 2) == Cyclotomic(4, Rational(-1)));
    CHECK(Cyclotomic::zeta_pow(3, 4) == Cyclotomic::zeta_pow(3, 1));
    CHECK(Cyclotomic::zeta_pow(3, 1).str() == "z");
    CHECK(q_pow(4, 1) == Cyclotomic::zeta_pow(4, -1));
    for (int r = 1; r <= 12; ++r) {
        CHECK(Cyclotomic::zeta_pow(r, r).is_one());
        // Phi_r(zeta) = 0
        Cyclotomic value(r);
        const auto& phi = cyclotomic_polynomial(r);
        for (std::size_t i = 0; i < phi.size(); ++i) value += Cyclotomic::zeta_pow(r, static_cast<long>(i)) * Rational(phi[i]);
        CHECK(value.is_zero());
    }
}

TEST_CASE("field operations") {
    CHECK((Cyclotomic::zeta_pow(4, 1) * Cyclotomic::zeta_pow(4, 3)).is_one());
    CHECK((Cyclotomic::one(3) + Cyclotomic::zeta_pow(3, 1) + Cyclotomic::zeta_pow(3, 2)).is_zero());
    CHECK(inverse(Cyclotomic::zeta_pow(5, 1)) == Cyclotomic::zeta_pow(5, 4));
    CHECK_THROWS_WITH_AS((void)inverse(Cyclotomic(7)), "division by zero", DivisionByZero);
    CHECK_THROWS_WITH_AS(Cyclotomic::one(3) + Cyclotomic::one(4), "order mismatch", OrderMismatch);
    CHECK_THROWS_AS((void)Cyclotomic::zeta_pow(5, 1).to_rational(), std::domain_error);
}

TEST_CASE("text form") {
    const auto x = Cyclotomic::from_polynomial(5, {Rational(1, 2), Rational(0), Rational(-1, 2)});
    CHECK(x.str() == "1/2 - 1/2*z^2");
    CHECK(Cyclotomic(6).str() == "0");
    CHECK((-Cyclotomic::zeta_pow(8, 3)).str() == "-z^3");
}

TEST_CASE("property: exponent law, field axioms, canonical equality") {
    std::mt19937_64 rng(20240611);
    std::uniform_int_distribution<long> exp(-40, 40);
    for (int r : {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 15}) {
        CAPTURE(r);
        for (int trial = 0; trial < 20; ++trial) {
            const long k = exp(rng), m = exp(rng);
            CHECK(Cyclotomic::zeta_pow(r, k) * Cyclotomic::zeta_pow(r, m) == Cyclotomic::zeta_pow(r, k + m));

            const auto a = random_element(rng, r), b = random_element(rng, r), c = random_element(rng, r);
            CHECK((a * b) * c == a * (b * c));
            CHECK((a + b) * c == a * c + b * c);
            CHECK(a * b == b * a);
            if (!a.is_zero()) CHECK((a * inverse(a)).is_one());
            if (!b.is_zero()) CHECK((a / b) * b == a);
            // Equality is structural: difference zero iff coefficient vectors equal.
            CHECK(((a - b).is_zero()) == (a.coefficients() == b.coefficients()));
        }
    }
}
