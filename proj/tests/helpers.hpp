#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "stabpoly/polynomial.hpp"
#include "stabpoly/rational.hpp"
#include "stabpoly/realroot.hpp"

namespace testutil {

using stabpoly::ComplexRational;
using stabpoly::ExponentVec;
using stabpoly::Polynomial;
using stabpoly::Rational;
using stabpoly::RealUnivariate;

inline Rational Q(long n) { return Rational(n); }
inline Rational Q(long n, long d) { return Rational(n, d); }

inline ComplexRational C(long re, long im = 0) {
    return ComplexRational(Rational(re), Rational(im));
}

inline Polynomial poly(int nvars,
                       std::initializer_list<std::pair<ExponentVec, ComplexRational>> ts) {
    Polynomial f(nvars);
    for (const auto& [e, c] : ts) f.add_term(e, c);
    return f;
}

/// Coefficients lowest degree first, integer entries.
inline RealUnivariate uni(std::initializer_list<long> coeffs) {
    std::vector<Rational> c;
    for (long v : coeffs) c.push_back(Rational(v));
    return RealUnivariate(std::move(c));
}

inline RealUnivariate uniq(std::initializer_list<Rational> coeffs) {
    return RealUnivariate(std::vector<Rational>(coeffs));
}

}  // namespace testutil
