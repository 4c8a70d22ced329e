#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <complex>
#include <stdexcept>

#include "helpers.hpp"
#include "stabpoly/polynomial.hpp"

using namespace testutil;
using stabpoly::phase_normalize;
using stabpoly::interval_restriction;
using stabpoly::reciprocal;
using stabpoly::restrict_line;

TEST_CASE("term storage drops cancelled coefficients") {
    Polynomial f(2);
    f.add_term({1, 1}, C(3));
    f.add_term({1, 1}, C(-3));
    CHECK(f.is_zero());
    f.add_term({0, 0}, C(1));
    f.add_term({1, 1}, C(1));
    CHECK(f.term_count() == 2);
    CHECK(f.coeff({1, 1}) == C(1));
    CHECK(f.coeff({2, 0}) == C(0));
    CHECK_THROWS_AS(f.add_term({1}, C(1)), std::invalid_argument);
    CHECK_THROWS_AS(f.add_term({-1, 0}, C(1)), std::invalid_argument);
}

TEST_CASE("evaluation at complex and rational points") {
    // 1 + z1*z2 vanishes at (i, i)
    Polynomial f = poly(2, {{{0, 0}, C(1)}, {{1, 1}, C(1)}});
    auto v = f.evaluate({std::complex<double>(0, 1), std::complex<double>(0, 1)});
    CHECK(std::abs(v) < 1e-12);
    ComplexRational ev = f.evaluate_exact({ComplexRational::i(), ComplexRational::i()});
    CHECK(ev == C(0));

    Polynomial s = poly(2, {{{1, 0}, C(1)}, {{0, 1}, C(1)}});
    CHECK(s.evaluate_real({Q(1, 2), Q(1, 2)}) == Q(1));
    CHECK(Polynomial::constant(3, C(1)).evaluate_exact({C(9), C(9), C(9)}) == C(1));
    CHECK_THROWS_AS(f.evaluate_real({Q(1)}), std::invalid_argument);
}

TEST_CASE("partial derivatives") {
    Polynomial f = poly(2, {{{2, 1}, C(1)}});  // z1^2 z2
    CHECK(f.partial_derivative(0) == poly(2, {{{1, 1}, C(2)}}));
    CHECK(poly(2, {{{0, 1}, C(1)}}).partial_derivative(0).is_zero());
    Polynomial g = poly(2, {{{0, 0}, C(1)}, {{1, 1}, C(1)}, {{0, 2}, C(1)}});
    CHECK(g.partial_derivative(1) == poly(2, {{{1, 0}, C(1)}, {{0, 1}, C(2)}}));
    CHECK_THROWS_AS(f.partial_derivative(2), std::invalid_argument);
}

TEST_CASE("derivative support is the shifted support") {
    Polynomial f = poly(3, {{{2, 0, 1}, C(5)}, {{1, 1, 0}, C(-2)}, {{0, 3, 2}, C(7)}});
    for (int i = 0; i < 3; ++i) {
        Polynomial d = f.partial_derivative(i);
        for (const auto& [e, c] : f.terms()) {
            if (e[static_cast<size_t>(i)] == 0) continue;
            ExponentVec shifted = e;
            --shifted[static_cast<size_t>(i)];
            CHECK(!d.coeff(shifted).is_zero());
        }
        CHECK(d.term_count() ==
              static_cast<size_t>(std::count_if(f.terms().begin(), f.terms().end(),
                                                [&](const auto& t) { return t.first[static_cast<size_t>(i)] > 0; })));
    }
}

TEST_CASE("degree and shape predicates") {
    Polynomial f = poly(2, {{{0, 0}, C(1)}, {{1, 1}, C(1)}});
    CHECK(f.is_multiaffine());
    CHECK(!poly(1, {{{2}, C(1)}}).is_multiaffine());
    CHECK(poly(3, {{{1, 1, 0}, C(1)}, {{1, 0, 1}, C(1)}}).is_homogeneous());
    CHECK(!f.is_homogeneous());
    CHECK(f.degree_vector() == ExponentVec{1, 1});
    CHECK(poly(2, {{{2, 0}, C(3)}, {{0, 1}, C(-1)}}).degree_vector() == ExponentVec{2, 1});
    CHECK(f.total_degree() == 2);
    CHECK(Polynomial(2).total_degree() == -1);
    CHECK(f.depends_on(0));
    CHECK(!poly(2, {{{0, 1}, C(1)}}).depends_on(0));
}

TEST_CASE("reciprocal reverses the coefficient window") {
    // 1 + z1 with window 1 is its own reverse
    Polynomial f = poly(1, {{{0}, C(1)}, {{1}, C(1)}});
    CHECK(reciprocal(f, {1}) == f);
    // a + b z1 with window 2: a z1^2 + b z1
    Polynomial g = poly(1, {{{0}, C(5)}, {{1}, C(7)}});
    CHECK(reciprocal(g, {2}) == poly(1, {{{2}, C(5)}, {{1}, C(7)}}));
    Polynomial h = poly(2, {{{0, 0}, C(1)}, {{1, 1}, C(1)}});
    CHECK(reciprocal(h, {1, 1}) == h);
    CHECK(reciprocal(reciprocal(h, {1, 1}), {1, 1}) == h);
    CHECK_THROWS_AS(reciprocal(g, {0}), std::invalid_argument);
}

TEST_CASE("interval restriction keeps exactly the windowed support") {
    // 1 + z1 + z1 z2 + z1^2 z2, window [ (1,0), (1,1) ]
    Polynomial f = poly(2, {{{0, 0}, C(1)}, {{1, 0}, C(1)}, {{1, 1}, C(1)}, {{2, 1}, C(1)}});
    Polynomial r = interval_restriction(f, {1, 0}, {1, 1});
    CHECK(r.term_count() == 2);
    CHECK(!r.coeff({0, 0}).is_zero());
    CHECK(!r.coeff({0, 1}).is_zero());

    // full window keeps the whole support
    Polynomial full = interval_restriction(f, {0, 0}, f.degree_vector());
    CHECK(full.term_count() == f.term_count());
    for (const auto& [e, c] : f.terms()) CHECK(!full.coeff(e).is_zero());

    Polynomial g = poly(1, {{{0}, C(1)}, {{2}, C(1)}});
    Polynomial gr = interval_restriction(g, {1}, {2});
    CHECK(gr.term_count() == 1);
    CHECK(!gr.coeff({1}).is_zero());

    CHECK_THROWS_AS(interval_restriction(f, {1, 1}, {0, 1}), std::invalid_argument);
}

TEST_CASE("line restriction") {
    Polynomial f = poly(2, {{{1, 1}, C(1)}});  // z1 z2
    Polynomial t2 = restrict_line(f, {Q(0), Q(0)}, {Q(1), Q(1)});
    CHECK(t2 == poly(1, {{{2}, C(1)}}));

    Polynomial s = poly(2, {{{1, 0}, C(1)}, {{0, 1}, C(1)}});
    CHECK(restrict_line(s, {Q(1), Q(0)}, {Q(1), Q(2)}) ==
          poly(1, {{{0}, C(1)}, {{1}, C(3)}}));

    Polynomial g = poly(2, {{{0, 0}, C(1)}, {{1, 1}, C(1)}});
    CHECK(restrict_line(g, {Q(0), Q(0)}, {Q(1), Q(1)}) ==
          poly(1, {{{0}, C(1)}, {{2}, C(1)}}));

    CHECK_THROWS_AS(restrict_line(f, {Q(0), Q(0)}, {Q(1), Q(0)}), std::invalid_argument);
    CHECK_THROWS_AS(restrict_line(f, {Q(0)}, {Q(1), Q(1)}), std::invalid_argument);
}

TEST_CASE("real and imaginary parts") {
    // f = (1 + 2i) z1 + 3 z2  ->  h = z1 + 3 z2, g = 2 z1
    Polynomial f = poly(2, {{{1, 0}, ComplexRational(Q(1), Q(2))}, {{0, 1}, C(3)}});
    auto [h, g] = f.real_imag_parts();
    CHECK(h == poly(2, {{{1, 0}, C(1)}, {{0, 1}, C(3)}}));
    CHECK(g == poly(2, {{{1, 0}, C(2)}}));
    CHECK(!f.is_real());
    CHECK(h.is_real());
}

TEST_CASE("phase normalization factors a common phase") {
    // i z1 + 2i z2 = i * (z1 + 2 z2)
    Polynomial f = poly(2, {{{1, 0}, ComplexRational(Q(0), Q(1))},
                            {{0, 1}, ComplexRational(Q(0), Q(2))}});
    auto pn = phase_normalize(f);
    REQUIRE(pn.has_value());
    CHECK(pn->real_form == poly(2, {{{1, 0}, C(1)}, {{0, 1}, C(2)}}));
    CHECK(pn->phase == ComplexRational::i());

    // mixed signs cannot share a phase
    CHECK(!phase_normalize(poly(2, {{{1, 0}, C(1)}, {{0, 1}, C(-1)}})).has_value());

    // (1+i)(z1 z2 + z2 z3): phase detected without any square roots
    ComplexRational w(Q(1), Q(1));
    Polynomial g = poly(3, {{{1, 1, 0}, w}, {{0, 1, 1}, w}});
    auto pg = phase_normalize(g);
    REQUIRE(pg.has_value());
    CHECK(pg->real_form == poly(3, {{{1, 1, 0}, C(1)}, {{0, 1, 1}, C(1)}}));
    CHECK(pg->phase == w);

    // scaling normalizes to primitive integers
    Polynomial h = poly(1, {{{0}, ComplexRational(Q(2, 3))}, {{1}, ComplexRational(Q(4, 3))}});
    auto ph = phase_normalize(h);
    REQUIRE(ph.has_value());
    CHECK(ph->real_form == poly(1, {{{0}, C(1)}, {{1}, C(2)}}));
    CHECK(ph->phase == ComplexRational(Q(2, 3)));
}

TEST_CASE("product and sum arithmetic") {
    Polynomial a = poly(1, {{{0}, C(1)}, {{1}, C(1)}});   // 1 + z
    Polynomial b = poly(1, {{{0}, C(-1)}, {{1}, C(1)}});  // z - 1
    CHECK(a * b == poly(1, {{{0}, C(-1)}, {{2}, C(1)}}));
    CHECK(a + b == poly(1, {{{1}, C(2)}}));
    CHECK(a - a == Polynomial(1));
    Polynomial c = a;
    c *= C(0);
    CHECK(c.is_zero());
}
