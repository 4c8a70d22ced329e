#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <optional>
#include <stdexcept>
#include <vector>

#include "helpers.hpp"
#include "stabpoly/combstruct.hpp"
#include "stabpoly/constructors.hpp"
#include "stabpoly/rng.hpp"
#include "stabpoly/stability.hpp"

using namespace stabpoly;
using testutil::C;
using testutil::Q;
using testutil::poly;

namespace {

Budget small_budget(std::uint64_t seed = 0) { return Budget{true, 2000, 30, seed}; }

Matroid uniform_matroid(int r, int n) {
    Matroid m;
    m.ground_size = n;
    std::vector<int> subset;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(subset.size()) == r) {
            m.bases.insert(subset);
            return;
        }
        for (int c = start; c < n; ++c) {
            subset.push_back(c);
            self(self, c + 1);
            subset.pop_back();
        }
    };
    rec(rec, 0);
    return m;
}

Matroid fano() {
    std::vector<std::vector<int>> lines = {{0, 1, 2}, {2, 3, 4}, {0, 4, 5}, {0, 3, 6},
                                           {1, 4, 6}, {2, 5, 6}, {1, 3, 5}};
    Matroid m = uniform_matroid(3, 7);
    for (const auto& l : lines) m.bases.erase(l);
    return m;
}

}  // namespace

TEST_CASE("rayleigh difference on the generic bivariate multi-affine form") {
    // f = 1 + 2*z2 + 3*z1 + 5*z1z2 -> difference = 3*2 - 5*1 = 1
    Polynomial f = poly(2, {{{0, 0}, C(1)}, {{0, 1}, C(2)}, {{1, 0}, C(3)}, {{1, 1}, C(5)}});
    CHECK(rayleigh_difference(f, 0, 1) == poly(2, {{{0, 0}, C(1)}}));

    Polynomial product =
        poly(2, {{{0, 0}, C(1)}, {{0, 1}, C(1)}, {{1, 0}, C(1)}, {{1, 1}, C(1)}});
    CHECK(rayleigh_difference(product, 0, 1).is_zero());

    Polynomial hole = poly(2, {{{0, 0}, C(1)}, {{1, 1}, C(1)}});
    CHECK(rayleigh_difference(hole, 0, 1) == poly(2, {{{0, 0}, C(-1)}}));
}

TEST_CASE("rayleigh difference is symmetric and squares on the diagonal") {
    SplitMix64 rng(555);
    for (int trial = 0; trial < 15; ++trial) {
        int n = 3;
        Polynomial f(n);
        for (int mask = 0; mask < 8; ++mask) {
            std::vector<int> e = {mask & 1, (mask >> 1) & 1, (mask >> 2) & 1};
            f.add_term(e, ComplexRational(rng.rational(4, 2)));
        }
        if (f.is_zero()) continue;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j)
                CHECK(rayleigh_difference(f, i, j) == rayleigh_difference(f, j, i));
            Polynomial di = f.partial_derivative(i);
            CHECK(rayleigh_difference(f, i, i) == di * di);
        }
    }
}

TEST_CASE("rayleigh difference preconditions") {
    CHECK_THROWS_AS(rayleigh_difference(poly(2, {{{0, 0}, C(0, 1)}}), 0, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(rayleigh_difference(poly(2, {{{0, 0}, C(1)}}), 0, 2),
                    std::invalid_argument);
    // non-multi-affine inputs are allowed, no constancy assertion
    Polynomial g = poly(2, {{{2, 0}, C(1)}, {{0, 1}, C(1)}});
    CHECK(rayleigh_difference(g, 0, 1) == poly(2, {{{1, 0}, C(2)}}));
}

TEST_CASE("multi-affine stability: bivariate determinant criterion") {
    Polynomial stable =
        poly(2, {{{0, 0}, C(1)}, {{0, 1}, C(1)}, {{1, 0}, C(1)}, {{1, 1}, C(1)}});
    StabilityVerdict v = check_multiaffine_real_stability(stable, small_budget());
    CHECK(v.status == StabilityStatus::CertifiedStable);
    CHECK(v.method == method::kBivariateDeterminant);

    Polynomial hole = poly(2, {{{0, 0}, C(1)}, {{1, 1}, C(1)}});
    StabilityVerdict r = check_multiaffine_real_stability(hole, small_budget());
    CHECK(r.status == StabilityStatus::RefutedWithWitness);
    REQUIRE(r.witness.has_value());
    CHECK(*r.witness == std::vector<Rational>{Q(0), Q(0)});
    REQUIRE(r.witness_pair.has_value());
    CHECK(r.witness_pair->first == 0);
    CHECK(r.witness_pair->second == 1);

    Polynomial twisted =
        poly(2, {{{0, 0}, C(1)}, {{0, 1}, C(1)}, {{1, 0}, C(1)}, {{1, 1}, C(2)}});
    CHECK(check_multiaffine_real_stability(twisted, small_budget()).status ==
          StabilityStatus::RefutedWithWitness);
}

TEST_CASE("multi-affine stability: degenerate variable counts") {
    StabilityVerdict lin =
        check_multiaffine_real_stability(poly(1, {{{0}, C(3)}, {{1}, C(2)}}), small_budget());
    CHECK(lin.status == StabilityStatus::CertifiedStable);
    CHECK(lin.method == method::kUnivariateHB);

    // constant with idle variables
    StabilityVerdict con =
        check_multiaffine_real_stability(poly(3, {{{0, 0, 0}, C(5)}}), small_budget());
    CHECK(con.status == StabilityStatus::CertifiedStable);
    CHECK(con.method == method::kUnivariateHB);

    // two used variables among many idle ones
    StabilityVerdict emb = check_multiaffine_real_stability(
        poly(4, {{{0, 0, 0, 0}, C(1)}, {{0, 1, 0, 1}, C(1)}}), small_budget());
    CHECK(emb.status == StabilityStatus::RefutedWithWitness);
}

TEST_CASE("multi-affine stability certifies small uniform matroid polynomials") {
    Polynomial u23 = basis_generating_poly(uniform_matroid(2, 3));
    StabilityVerdict v = check_multiaffine_real_stability(u23, small_budget());
    CHECK(v.status == StabilityStatus::CertifiedStable);
    CHECK(v.method == method::kMultiaffineDeltaExact);

    // pairwise differences here are full quadratic forms, not monomial sums
    Polynomial u24 = basis_generating_poly(uniform_matroid(2, 4));
    StabilityVerdict q = check_multiaffine_real_stability(u24, small_budget());
    CHECK(q.status == StabilityStatus::CertifiedStable);
    CHECK(q.method == method::kMultiaffineDeltaExact);
}

TEST_CASE("multi-affine stability refutes the Fano basis polynomial") {
    Polynomial f7 = basis_generating_poly(fano());
    StabilityVerdict v = check_multiaffine_real_stability(f7, small_budget(11));
    CHECK(v.status == StabilityStatus::RefutedWithWitness);
    REQUIRE(v.witness.has_value());
    REQUIRE(v.witness_pair.has_value());
    Polynomial d = rayleigh_difference(f7, v.witness_pair->first, v.witness_pair->second);
    CHECK(d.evaluate_real(*v.witness).sign() < 0);
}

TEST_CASE("multi-affine stability preconditions") {
    CHECK_THROWS_AS(check_multiaffine_real_stability(Polynomial(2), small_budget()),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        check_multiaffine_real_stability(poly(1, {{{2}, C(1)}}), small_budget()),
        std::invalid_argument);
    CHECK_THROWS_AS(
        check_multiaffine_real_stability(poly(1, {{{1}, C(0, 1)}}), small_budget()),
        std::invalid_argument);
}

TEST_CASE("nonnegativity falsifier examples") {
    Budget b = small_budget();
    std::optional<std::vector<Rational>> w =
        falsify_nonnegativity(poly(1, {{{0}, C(-1)}}), b);
    REQUIRE(w.has_value());
    CHECK(*w == std::vector<Rational>{Q(0)});

    CHECK_FALSE(falsify_nonnegativity(poly(1, {{{2}, C(1)}}), b).has_value());
    CHECK_FALSE(falsify_nonnegativity(Polynomial(2), b).has_value());

    Polynomial dip = poly(1, {{{2}, C(1)}, {{0}, C(-1)}});
    std::optional<std::vector<Rational>> v = falsify_nonnegativity(dip, b);
    REQUIRE(v.has_value());
    CHECK(dip.evaluate_real(*v).sign() < 0);
    CHECK((*v)[0] > Q(-1));
    CHECK((*v)[0] < Q(1));
}

TEST_CASE("falsifier reaches off-grid minima through descent") {
    // negative only on (29/10, 31/10), far outside the grid values
    Polynomial g = poly(1, {{{2}, C(100)}, {{1}, C(-600)}, {{0}, C(899)}});
    std::optional<std::vector<Rational>> w = falsify_nonnegativity(g, small_budget(3));
    REQUIRE(w.has_value());
    CHECK(g.evaluate_real(*w).sign() < 0);
}

TEST_CASE("falsifier is deterministic for a fixed seed") {
    Polynomial g = poly(2, {{{1, 1}, C(1)}, {{0, 0}, C(-1)}});
    auto a = falsify_nonnegativity(g, small_budget(99));
    auto b = falsify_nonnegativity(g, small_budget(99));
    REQUIRE(a.has_value());
    REQUIRE(b.has_value());
    CHECK(*a == *b);
    CHECK_THROWS_AS(falsify_nonnegativity(poly(1, {{{0}, C(0, 1)}}), small_budget()),
                    std::invalid_argument);
}

TEST_CASE("line falsifier finds the canonical witness for 1 + z1z2") {
    Polynomial f = poly(2, {{{0, 0}, C(1)}, {{1, 1}, C(1)}});
    std::optional<LineWitness> w = line_falsify_stability(f, 10, 5);
    REQUIRE(w.has_value());
    CHECK(w->base == std::vector<Rational>{Q(0), Q(0)});
    CHECK(w->direction == std::vector<Rational>{Q(1), Q(1)});
    // restriction is 1 + t^2
    CHECK(w->restriction == poly(1, {{{0}, C(1)}, {{2}, C(1)}}));
}

TEST_CASE("line falsifier stays empty on stable inputs") {
    CHECK_FALSE(
        line_falsify_stability(poly(2, {{{1, 0}, C(1)}, {{0, 1}, C(1)}}), 50, 7).has_value());
    CHECK_FALSE(line_falsify_stability(poly(2, {{{1, 1}, C(1)}}), 50, 7).has_value());
    CHECK_FALSE(line_falsify_stability(poly(2, {{{0, 0}, C(4)}}), 10, 7).has_value());
}

TEST_CASE("an identically vanishing restriction is a witness") {
    // z1 - z2 vanishes along the diagonal line, which meets the open region
    Polynomial f = poly(2, {{{1, 0}, C(1)}, {{0, 1}, C(-1)}});
    std::optional<LineWitness> w = line_falsify_stability(f, 5, 1);
    REQUIRE(w.has_value());
    CHECK(w->restriction.is_zero());
}

TEST_CASE("line falsifier preconditions") {
    CHECK_THROWS_AS(line_falsify_stability(Polynomial(1), 5, 0), std::invalid_argument);
    CHECK_THROWS_AS(line_falsify_stability(poly(1, {{{1}, C(0, 1)}}), 5, 0),
                    std::invalid_argument);
}

TEST_CASE("half-plane rotation sign convention") {
    Polynomial f = poly(1, {{{1}, C(1)}, {{0}, C(0, 1)}});  // z1 + i
    // q = -1 is the transport that lands on Hurwitz stability: i*(z1 + 1)
    CHECK(rotate_halfplane(f, -1) == poly(1, {{{1}, C(0, 1)}, {{0}, C(0, 1)}}));
    // q = +1 rotates the other way and must NOT be used for that transport:
    // the image -i*z1 + i has its zero at +1, inside the right half-plane
    CHECK(rotate_halfplane(f, 1) == poly(1, {{{1}, C(0, -1)}, {{0}, C(0, 1)}}));

    Polynomial c = poly(2, {{{0, 0}, C(7, 3)}});
    CHECK(rotate_halfplane(c, 3) == c);

    Polynomial g = poly(2, {{{1, 1}, C(1)}, {{0, 0}, C(1)}});
    CHECK(rotate_halfplane(g, 2) == g);

    // squares pick up the squared phase
    CHECK(rotate_halfplane(poly(1, {{{2}, C(1)}}), 1) == poly(1, {{{2}, C(-1)}}));
}

TEST_CASE("rotation by opposite quarter turns is the identity") {
    SplitMix64 rng(31337);
    for (int trial = 0; trial < 10; ++trial) {
        Polynomial f(2);
        for (int mask = 0; mask < 4; ++mask)
            f.add_term({mask & 1, (mask >> 1) & 1},
                       ComplexRational(rng.rational(5, 2), rng.rational(5, 2)));
        CHECK(rotate_halfplane(rotate_halfplane(f, 1), -1) == f);
        CHECK(rotate_halfplane(rotate_halfplane(f, 2), 2) == f);
        CHECK(rotate_halfplane(f, 5) == rotate_halfplane(f, 1));
    }
}

TEST_CASE("support theorem check") {
    WeightedGraph path{3, {{0, 1, Q(1)}, {1, 2, Q(1)}}};
    CHECK(support_theorem_check(matching_polynomial(path).poly));
    CHECK(support_theorem_check(poly(1, {{{0}, C(3)}})));
    // support {0, 3} has a two-wide hole, so this cannot be stable
    CHECK_FALSE(support_theorem_check(poly(1, {{{0}, C(1)}, {{3}, C(1)}})));
    CHECK_THROWS_AS(support_theorem_check(Polynomial(1)), std::invalid_argument);
}

TEST_CASE("rayleigh check on small uniform matroids") {
    RayleighReport u12 =
        matroid_rayleigh_check(uniform_matroid(1, 2), RayleighMode::AllReals, small_budget());
    REQUIRE(u12.pairs.size() == 1);
    CHECK(u12.all_nonnegative());
    CHECK_FALSE(u12.any_refuted());

    RayleighReport u23 =
        matroid_rayleigh_check(uniform_matroid(2, 3), RayleighMode::AllReals, small_budget());
    REQUIRE(u23.pairs.size() == 3);
    CHECK(u23.all_nonnegative());
    for (const auto& p : u23.pairs) CHECK(p.method == "even-exponent-certificate");

    RayleighReport pos = matroid_rayleigh_check(uniform_matroid(2, 3),
                                                RayleighMode::PositiveOrthant, small_budget());
    CHECK(pos.all_nonnegative());
    for (const auto& p : pos.pairs) CHECK(p.method == "coefficient-certificate");

    RayleighReport u24 =
        matroid_rayleigh_check(uniform_matroid(2, 4), RayleighMode::AllReals, small_budget());
    CHECK(u24.all_nonnegative());
    bool quadratic_used = false;
    for (const auto& p : u24.pairs)
        if (p.method == "quadratic-form-certificate") quadratic_used = true;
    CHECK(quadratic_used);
}

TEST_CASE("rayleigh check refutes the Fano matroid over the reals") {
    RayleighReport rep =
        matroid_rayleigh_check(fano(), RayleighMode::AllReals, small_budget(21));
    REQUIRE(rep.pairs.size() == 21);
    CHECK(rep.any_refuted());
    CHECK_FALSE(rep.all_nonnegative());
    Polynomial f7 = basis_generating_poly(fano());
    for (const auto& p : rep.pairs) {
        if (p.status != StabilityStatus::RefutedWithWitness) continue;
        REQUIRE(p.witness.has_value());
        Rational value = rayleigh_difference(f7, p.i, p.j).evaluate_real(*p.witness);
        CHECK(value.sign() < 0);
        REQUIRE(p.worst.has_value());
        CHECK(*p.worst == value);
    }
}

TEST_CASE("refuted basis polynomials also fail on some real line") {
    // the pairwise refutation above implies some line restriction must have
    // complex roots; the seeded search finds one well inside this budget
    Polynomial f7 = basis_generating_poly(fano());
    std::optional<LineWitness> w = line_falsify_stability(f7, 200, 1);
    REQUIRE(w.has_value());
    CHECK_FALSE(w->restriction.is_zero());
}

TEST_CASE("rayleigh check rejects invalid matroids") {
    Matroid bad{4, {{0, 1}, {2, 3}}};
    CHECK_THROWS_AS(matroid_rayleigh_check(bad, RayleighMode::AllReals, small_budget()),
                    std::invalid_argument);
}

TEST_CASE("exact bivariate verdicts never contradict the line falsifier") {
    SplitMix64 rng(246810);
    int certified_checked = 0;
    for (int trial = 0; trial < 40; ++trial) {
        Polynomial f(2);
        for (int mask = 0; mask < 4; ++mask)
            f.add_term({mask & 1, (mask >> 1) & 1}, ComplexRational(rng.rational(3, 2)));
        if (f.is_zero()) continue;
        StabilityVerdict v = check_multiaffine_real_stability(f, small_budget(trial));
        if (v.status == StabilityStatus::CertifiedStable) {
            CHECK_FALSE(line_falsify_stability(f, 25, 1000 + trial).has_value());
            ++certified_checked;
        }
    }
    CHECK(certified_checked >= 5);
}

TEST_CASE("realify keeps the support") {
    Polynomial real = poly(1, {{{0}, C(1)}, {{1}, C(1)}});
    CHECK(realify(real, {}) == real);

    Polynomial rot = poly(1, {{{0}, C(0, 1)}, {{1}, C(0, 1)}});  // i*(1 + z1)
    CHECK(realify(rot, {Q(1)}) == real);

    Polynomial mixed = poly(1, {{{0}, C(1, 1)}, {{1}, C(1)}});  // (1+i) + z1
    CHECK(realify(mixed, {Q(1)}) == poly(1, {{{0}, C(2)}, {{1}, C(1)}}));

    // alpha = 1 cancels the constant, alpha = 2 works
    Polynomial tricky = poly(1, {{{0}, C(1, -1)}, {{1}, C(1, 1)}});
    Polynomial out = realify(tricky, {Q(1), Q(2)});
    CHECK(out == poly(1, {{{0}, C(-1)}, {{1}, C(3)}}));

    Polynomial fatal = poly(1, {{{0}, C(1, -1)}, {{1}, C(1, -1)}});  // (1-i)(1+z1)
    CHECK_THROWS_AS(realify(fatal, {Q(1)}), std::invalid_argument);
    CHECK_THROWS_AS(realify(Polynomial(1), {Q(1)}), std::invalid_argument);
}

TEST_CASE("construction verdicts carry the by-construction tag") {
    WeightedGraph single{2, {{0, 1, Q(1)}}};
    TaggedPolynomial tp = matching_polynomial(single);
    StabilityVerdict v = construction_verdict(tp.tag);
    CHECK(v.status == StabilityStatus::CertifiedStable);
    CHECK(v.method == method::kByConstruction);
    CHECK_FALSE(v.note.empty());
}
