#include "stabpoly/rational.hpp"

namespace stabpoly {

Rational::Rational(long num, long den) {
    require(den != 0, "rational denominator must be nonzero");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    require(!o.is_zero(), "division by zero rational");
    v_ /= o.v_;
    return *this;
}

Rational Rational::from_string(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: '" + s + "'");
    require(sgn(q.get_den()) != 0, "rational denominator must be nonzero: '" + s + "'");
    q.canonicalize();
    return Rational(q);
}

std::string Rational::to_string() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_str();
}

ComplexRational& ComplexRational::operator/=(const ComplexRational& o) {
    require(!o.is_zero(), "division by zero");
    Rational n = o.norm();
    *this *= o.conj();
    re /= n;
    im /= n;
    return *this;
}

}  // namespace stabpoly
