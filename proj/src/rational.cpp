#include "plates/rational.hpp"

namespace plates {

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw DivisionByZero();
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
    mpq_class value;
    if (value.set_str(text, 10) != 0) throw std::invalid_argument("malformed rational: " + text);
    if (value.get_den() == 0) throw DivisionByZero();
    value.canonicalize();
    Rational out;
    out.value_ = value;
    return out;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero();
    value_ /= o.value_;
    return *this;
}

Rational inverse(const Rational& q) { return Rational(1) / q; }

long to_long(const Integer& value) {
    if (!value.fits_slong_p()) throw std::overflow_error("integer does not fit in long: " + value.get_str());
    return value.get_si();
}

}  // namespace plates
