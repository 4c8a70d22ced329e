#pragma once

#include <complex>
#include <map>
#include <optional>
#include <vector>

#include "stabpoly/rational.hpp"

namespace stabpoly {

/// Dense exponent vector; length equals the owning polynomial's variable count.
using ExponentVec = std::vector<int>;

/// Sparse multivariate polynomial with Gaussian-rational coefficients.
/// Invariant: no stored coefficient is zero; every key has length nvars().
/// Variables are 0-indexed in this API; serialization and the CLI present
/// them 1-indexed.
class Polynomial {
public:
    using TermMap = std::map<ExponentVec, ComplexRational>;

    explicit Polynomial(int nvars = 0) : nvars_(nvars) {
        require(nvars >= 0, "variable count must be nonnegative");
    }

    static Polynomial constant(int nvars, ComplexRational c);
    static Polynomial variable(int nvars, int i);
    static Polynomial monomial(int nvars, ExponentVec exp, ComplexRational c);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    /// Coefficient of z^exp (zero if absent).
    ComplexRational coeff(const ExponentVec& exp) const;

    /// Adds c * z^exp, erasing the term if the sum cancels.
    void add_term(const ExponentVec& exp, const ComplexRational& c);

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    Polynomial& operator*=(const ComplexRational& c);

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    bool is_real() const;
    /// Splits f = h + i*g into (h, g) with real coefficients.
    std::pair<Polynomial, Polynomial> real_imag_parts() const;

    Polynomial partial_derivative(int i) const;
    /// Max exponent per variable; all zeros for constants and the zero polynomial.
    ExponentVec degree_vector() const;
    int total_degree() const;  // -1 for the zero polynomial
    bool is_multiaffine() const;
    bool is_homogeneous() const;
    bool depends_on(int i) const;

    std::complex<double> evaluate(const std::vector<std::complex<double>>& point) const;
    ComplexRational evaluate_exact(const std::vector<ComplexRational>& point) const;
    Rational evaluate_real(const std::vector<Rational>& point) const;

private:
    int nvars_;
    TermMap terms_;
};

/// z^kappa * f(1/z); requires kappa >= degree_vector(f) componentwise.
Polynomial reciprocal(const Polynomial& f, const ExponentVec& kappa);

/// The window transform d^alpha[z^beta g(1/z)] with g = d^(kappa-beta)[z^kappa f(1/z)].
/// Its support is { gamma - alpha : gamma in supp(f), alpha <= gamma <= beta },
/// which is checked before returning.
Polynomial interval_restriction(const Polynomial& f, const ExponentVec& alpha,
                                const ExponentVec& beta);

/// Exact univariate restriction f(base + t*direction); direction must be
/// strictly positive componentwise.
Polynomial restrict_line(const Polynomial& f, const std::vector<Rational>& base,
                         const std::vector<Rational>& direction);

struct PhaseNormalized {
    /// Real-coefficient polynomial with positive primitive integer scaling.
    Polynomial real_form;
    /// Exact scalar with f = phase * real_form; its argument is the common
    /// phase of the coefficients. Kept exact, never a float.
    ComplexRational phase;
};

/// If every nonzero coefficient is a positive multiple of one unit complex
/// number, returns the common-phase factorization; otherwise nullopt.
/// Decided by pairwise coefficient ratios, no irrational arithmetic.
std::optional<PhaseNormalized> phase_normalize(const Polynomial& f);

}  // namespace stabpoly
