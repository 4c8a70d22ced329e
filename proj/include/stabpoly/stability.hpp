#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stabpoly/combstruct.hpp"
#include "stabpoly/constructors.hpp"
#include "stabpoly/polynomial.hpp"
#include "stabpoly/rational.hpp"
#include "stabpoly/realroot.hpp"

namespace stabpoly {

/// Dense view of a real polynomial in at most one variable.
RealUnivariate to_real_univariate(const Polynomial& f);

enum class StabilityStatus { CertifiedStable, RefutedWithWitness, Unknown };

/// Closed list of certification methods. A verdict is never CertifiedStable
/// without one of these tags attached.
namespace method {
inline constexpr const char* kUnivariateHB = "univariate-hb";
inline constexpr const char* kBivariateDeterminant = "bivariate-determinant";
inline constexpr const char* kMultiaffineDeltaExact = "multiaffine-delta-exact";
inline constexpr const char* kByConstruction = "by-construction";
}  // namespace method

/// Search budget for the falsifiers. The deterministic grid can be switched
/// off; samples and descent rounds are exact counts, so every verdict is
/// reproducible from (input, budget, seed).
struct Budget {
    bool grid = true;
    int samples = 10000;
    int descent = 50;
    std::uint64_t seed = 0;
};

/// Three-valued stability result. A refutation always carries a witness that
/// was re-checked in exact arithmetic immediately before being returned; an
/// Unknown only reports that the budget ran out.
struct StabilityVerdict {
    StabilityStatus status = StabilityStatus::Unknown;
    /// The method:: tag that decided the verdict; empty only for Unknown.
    std::string method;
    /// Rational point where a defining inequality fails (refutations only).
    std::optional<std::vector<Rational>> witness;
    /// Variable pair whose Rayleigh difference went negative at the witness.
    std::optional<std::pair<int, int>> witness_pair;
    std::string note;
};

/// df/dz_i * df/dz_j - d2f/(dz_i dz_j) * f, exactly. Symmetric in (i, j);
/// i = j is allowed. For multi-affine f the result is constant in z_i and
/// z_j, which is asserted on every call.
Polynomial rayleigh_difference(const Polynomial& f, int i, int j);

/// Decides stability of a multi-affine real polynomial where an exact method
/// exists (one variable: real-rootedness; two variables: the constant
/// Rayleigh difference; otherwise: every pairwise difference is a sum of
/// even-exponent monomials with nonnegative coefficients). Falls back to the
/// falsifier, and returns Unknown when neither side lands.
StabilityVerdict check_multiaffine_real_stability(const Polynomial& f, const Budget& budget);

/// Searches for a rational point with g(x) < 0: deterministic grid over
/// {-2,-1,-1/2,0,1/2,1,2} on the variables g depends on (skipped when more
/// than 8), then seeded random rational points, then coordinate descent from
/// the most negative float candidate. Any returned witness is verified in
/// exact arithmetic.
std::optional<std::vector<Rational>> falsify_nonnegativity(const Polynomial& g,
                                                           const Budget& budget);

/// A real line with strictly positive direction whose restriction of f is
/// not real-rooted; such a line refutes real stability.
struct LineWitness {
    std::vector<Rational> base;
    std::vector<Rational> direction;
    /// Restriction of f to the line (one variable, real coefficients).
    Polynomial restriction;
};

/// Tries the all-ones direction through the origin, then seeded random
/// lines. An identically zero restriction also refutes: f then vanishes on a
/// whole complex line that meets the open half-plane region.
std::optional<LineWitness> line_falsify_stability(const Polynomial& f, int trials,
                                                  std::uint64_t seed);

/// Substitutes z_k <- i^(-q) * z_k for every variable, exactly. With q = -1
/// (z <- i*z) an upper-half-plane stable polynomial becomes Hurwitz stable;
/// q = 1 rotates the other way. Quarter turns keep coefficients Gaussian
/// rational.
Polynomial rotate_halfplane(const Polynomial& f, int theta_quarter_turns);

/// Support of a stable polynomial is a jump system; this runs the axiom
/// check on supp(f). A false return on a certified-stable input is a bug.
bool support_theorem_check(const Polynomial& f);

enum class RayleighMode { PositiveOrthant, AllReals };

/// Verdict for one variable pair of a basis generating polynomial.
struct RayleighPair {
    int i = 0, j = 0;  // 0-indexed ground elements, i < j
    StabilityStatus status = StabilityStatus::Unknown;
    /// "coefficient-certificate", "even-exponent-certificate", "falsified",
    /// or "budget-exhausted".
    std::string method;
    std::optional<std::vector<Rational>> witness;
    /// Exact value at the witness, or at the best sampled point when the
    /// search came up empty. Absent for certified pairs (nothing sampled).
    std::optional<Rational> worst;
};

struct RayleighReport {
    RayleighMode mode = RayleighMode::PositiveOrthant;
    std::vector<RayleighPair> pairs;  // all i < j over the ground set

    bool all_nonnegative() const;
    bool any_refuted() const;
};

/// Builds M(z) = sum of z^B over bases and checks every pairwise Rayleigh
/// difference, on the positive orthant (Rayleigh) or on all of R^n
/// (strongly Rayleigh). Positive-orthant certificates only need nonnegative
/// coefficients; the all-reals certificate additionally needs even
/// exponents, and the falsifier samples accordingly.
RayleighReport matroid_rayleigh_check(const Matroid& m, RayleighMode mode, const Budget& budget);

/// Splits f = h + i*g and returns h + alpha*g for the first alpha that
/// keeps supp(h + alpha*g) = supp(f). Real f comes back unchanged. Throws
/// when every supplied alpha cancels some coefficient.
Polynomial realify(const Polynomial& f, const std::vector<Rational>& alphas);

/// The license carried by constructor outputs, as a verdict.
StabilityVerdict construction_verdict(const ConstructionTag& tag);

}  // namespace stabpoly
