#include "plates/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace plates {

long euler_phi(long r) {
    if (r < 1) throw std::invalid_argument("euler_phi: r must be positive");
    long result = r;
    for (long p = 2; p * p <= r; ++p) {
        if (r % p != 0) continue;
        while (r % p == 0) r /= p;
        result -= result / p;
    }
    if (r > 1) result -= result / r;
    return result;
}

namespace {

// Exact quotient of a by a monic divisor b, both low-to-high.
IntPolynomial divide_exact(const IntPolynomial& a, const IntPolynomial& b) {
    IntPolynomial rem = a;
    const std::size_t db = b.size() - 1;
    IntPolynomial quot(a.size() - db, 0);
    for (std::size_t d = a.size() - 1; d + 1 > db; --d) {
        const long c = rem[d];
        quot[d - db] = c;
        for (std::size_t i = 0; i <= db; ++i) rem[d - db + i] -= c * b[i];
        if (d == 0) break;
    }
    for (long c : rem) {
        if (c != 0) throw std::logic_error("cyclotomic_polynomial: inexact division");
    }
    return quot;
}

IntPolynomial compute_cyclotomic(int r) {
    IntPolynomial poly(static_cast<std::size_t>(r) + 1, 0);
    poly[0] = -1;
    poly[static_cast<std::size_t>(r)] = 1;
    for (int d = 1; d < r; ++d) {
        if (r % d == 0) poly = divide_exact(poly, cyclotomic_polynomial(d));
    }
    return poly;
}

}  // namespace

const IntPolynomial& cyclotomic_polynomial(int r) {
    if (r < 1) throw std::invalid_argument("cyclotomic_polynomial: r must be positive");
    static std::mutex mutex;
    static std::map<int, IntPolynomial> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(r); it != cache.end()) return it->second;
    }
    IntPolynomial poly = compute_cyclotomic(r);
    std::lock_guard lock(mutex);
    return cache.emplace(r, std::move(poly)).first->second;
}

Cyclotomic::Cyclotomic(int order) : order_(order) {
    if (order < 1) throw std::invalid_argument("cyclotomic order must be positive");
    coeffs_.assign(static_cast<std::size_t>(euler_phi(order)), Rational(0));
}

Cyclotomic::Cyclotomic(int order, const Rational& value) : Cyclotomic(order) { coeffs_[0] = value; }

Cyclotomic Cyclotomic::from_polynomial(int order, std::vector<Rational> coefficients) {
    Cyclotomic out(order);
    const IntPolynomial& phi = cyclotomic_polynomial(order);
    const std::size_t deg = phi.size() - 1;
    for (std::size_t d = coefficients.size(); d-- > deg;) {
        const Rational c = coefficients[d];
        if (c.is_zero()) continue;
        for (std::size_t i = 0; i <= deg; ++i) {
            if (phi[i] != 0) coefficients[d - deg + i] -= c * Rational(phi[i]);
        }
    }
    for (std::size_t i = 0; i < deg && i < coefficients.size(); ++i) out.coeffs_[i] = coefficients[i];
    return out;
}

Cyclotomic Cyclotomic::zeta_pow(int order, long k) {
    if (order < 1) throw std::invalid_argument("cyclotomic order must be positive");
    long e = k % order;
    if (e < 0) e += order;
    std::vector<Rational> poly(static_cast<std::size_t>(e) + 1, Rational(0));
    poly[static_cast<std::size_t>(e)] = Rational(1);
    return from_polynomial(order, std::move(poly));
}

bool Cyclotomic::is_zero() const {
    for (const auto& c : coeffs_) {
        if (!c.is_zero()) return false;
    }
    return true;
}

bool Cyclotomic::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        if (!coeffs_[i].is_zero()) return false;
    }
    return true;
}

bool Cyclotomic::is_one() const { return is_rational() && coeffs_[0] == Rational(1); }

Rational Cyclotomic::to_rational() const {
    if (!is_rational()) throw std::domain_error("cyclotomic value is not rational: " + str());
    return coeffs_[0];
}

Cyclotomic Cyclotomic::galois(long j) const {
    if (std::gcd(j, static_cast<long>(order_)) != 1) throw std::invalid_argument("galois: exponent not coprime to order");
    Cyclotomic out(order_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        out += zeta_pow(order_, static_cast<long>(i) * j) * coeffs_[i];
    }
    return out;
}

std::string Cyclotomic::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (c.is_zero()) continue;
        Rational mag = c.sign() < 0 ? -c : c;
        if (first) {
            if (c.sign() < 0) os << '-';
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            os << mag;
            continue;
        }
        if (mag != Rational(1)) os << mag << '*';
        os << 'z';
        if (i > 1) os << '^' << i;
    }
    if (first) os << '0';
    return os.str();
}

void Cyclotomic::require_same_order(const Cyclotomic& o) const {
    if (order_ != o.order_) throw OrderMismatch();
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    require_same_order(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
    require_same_order(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
    require_same_order(o);
    const std::size_t d = coeffs_.size();
    if (o.is_rational()) return *this *= o.coeffs_[0];
    if (is_rational()) {
        const Rational s = coeffs_[0];
        coeffs_ = o.coeffs_;
        return *this *= s;
    }
    std::vector<Rational> prod(2 * d - 1, Rational(0));
    for (std::size_t i = 0; i < d; ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < d; ++j) {
            if (!o.coeffs_[j].is_zero()) prod[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    *this = from_polynomial(order_, std::move(prod));
    return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Rational& o) {
    for (auto& c : coeffs_) c *= o;
    return *this;
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& o) {
    require_same_order(o);
    return *this *= inverse(o);
}

Cyclotomic operator-(Cyclotomic a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
}

// a^{-1} = (product of the non-trivial Galois conjugates of a) / norm(a).
Cyclotomic inverse(const Cyclotomic& c) {
    if (c.is_zero()) throw DivisionByZero();
    if (c.is_rational()) return Cyclotomic(c.order(), inverse(c.to_rational()));
    Cyclotomic cofactor = Cyclotomic::one(c.order());
    for (long j = 2; j < c.order(); ++j) {
        if (std::gcd(j, static_cast<long>(c.order())) == 1) cofactor *= c.galois(j);
    }
    const Cyclotomic norm = cofactor * c;
    return cofactor * inverse(norm.to_rational());
}

}  // namespace plates
