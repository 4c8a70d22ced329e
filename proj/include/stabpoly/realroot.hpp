#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "stabpoly/rational.hpp"

namespace stabpoly {

/// Univariate polynomial with exact rational coefficients, lowest degree
/// first. The zero polynomial is the empty coefficient list; otherwise the
/// leading (last) coefficient is nonzero.
class RealUnivariate {
public:
    RealUnivariate() = default;
    explicit RealUnivariate(std::vector<Rational> coeffs);
    static RealUnivariate constant(Rational c);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int k) const;
    Rational leading() const;

    Rational evaluate(const Rational& x) const;
    RealUnivariate derivative() const;

    RealUnivariate operator-() const;
    friend RealUnivariate operator+(const RealUnivariate& a, const RealUnivariate& b);
    friend RealUnivariate operator-(const RealUnivariate& a, const RealUnivariate& b);
    friend RealUnivariate operator*(const RealUnivariate& a, const RealUnivariate& b);
    RealUnivariate scaled(const Rational& s) const;
    friend bool operator==(const RealUnivariate& a, const RealUnivariate& b) {
        return a.c_ == b.c_;
    }

    /// Exact division with remainder over Q; divisor must be nonzero.
    std::pair<RealUnivariate, RealUnivariate> divmod(const RealUnivariate& d) const;
    /// Division by z - root (synthetic); remainder must vanish.
    RealUnivariate deflate(const Rational& root) const;

    /// Scales to coprime integer coefficients with positive leading sign.
    RealUnivariate primitive() const;

private:
    std::vector<Rational> c_;
    void trim();
};

/// Primitive gcd with positive leading coefficient; gcd(0,0) = 0.
RealUnivariate gcd(const RealUnivariate& a, const RealUnivariate& b);

/// Yun squarefree decomposition: returns (factor, multiplicity) pairs with
/// pairwise-coprime squarefree factors of degree >= 1 and p = c * prod f^m.
std::vector<std::pair<RealUnivariate, int>> squarefree_decomposition(const RealUnivariate& p);

RealUnivariate squarefree_part(const RealUnivariate& p);

/// Endpoint for root counting: -inf, a rational, or +inf.
struct ExtendedRational {
    enum Kind { NegInf, Finite, PosInf };
    Kind kind = Finite;
    Rational value;

    static ExtendedRational neg_inf() { return {NegInf, Rational()}; }
    static ExtendedRational pos_inf() { return {PosInf, Rational()}; }
    static ExtendedRational at(Rational v) { return {Finite, std::move(v)}; }
};

/// Number of distinct real roots of p in the half-open interval (lo, hi].
int sturm_count(const RealUnivariate& p, const ExtendedRational& lo,
                const ExtendedRational& hi);

/// True iff all complex roots of p are real (with multiplicity); vacuously
/// true for nonzero constants. p must be nonzero.
bool is_real_rooted(const RealUnivariate& p);

/// One distinct real root: either the exact rational `lo == hi`, or the open
/// interval (lo, hi) whose endpoints are non-roots of `factor`, which has this
/// root simple with a sign change across the interval.
struct IsolatedRoot {
    Rational lo, hi;
    bool exact = false;
    int multiplicity = 1;
    RealUnivariate factor;

    /// Halves the interval (no-op when exact); may discover an exact root.
    void refine_step();
    void refine_below_width(const Rational& width);
};

struct IsolatingIntervals {
    std::vector<IsolatedRoot> roots;  // sorted left to right, pairwise disjoint
};

/// Isolates all distinct real roots of p with multiplicities. p must be nonzero.
IsolatingIntervals isolate_roots(const RealUnivariate& p);

/// g'h - gh'.
RealUnivariate wronskian(const RealUnivariate& g, const RealUnivariate& h);

/// Weak weaving of the root multisets. Zero interlaces everything; any two
/// polynomials of degree <= 1 interlace; nonzero constants interlace
/// vacuously. Throws if a nonzero argument of degree >= 1 is not real-rooted.
bool interlaces(const RealUnivariate& g, const RealUnivariate& h);

/// g << h: interlacing plus W[g,h] <= 0 on all of R, decided exactly.
bool proper_position(const RealUnivariate& g, const RealUnivariate& h);

/// True iff h + i*g has no root in the open upper half-plane; equals
/// proper_position(g, h). Requires not both zero.
bool hermite_biehler_stable(const RealUnivariate& h, const RealUnivariate& g);

/// True iff W[g,h] <= 0 everywhere (exact decision; exposed for tests).
bool wronskian_nonpositive(const RealUnivariate& w);

}  // namespace stabpoly
