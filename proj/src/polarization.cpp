#include "stabpoly/polarization.hpp"

#include <numeric>

namespace stabpoly {

int PolarizedPolynomial::flat_index(int i, int j) const {
    require(i >= 0 && i < source_nvars && j >= 0 && j < degrees[i],
            "polarized index out of range");
    int off = std::accumulate(degrees.begin(), degrees.begin() + i, 0);
    return off + j;
}

int PolarizedPolynomial::group_of(int flat) const {
    int off = 0;
    for (int i = 0; i < source_nvars; ++i) {
        if (flat < off + degrees[i]) return i;
        off += degrees[i];
    }
    throw std::invalid_argument("flat index out of range");
}

namespace {

Rational binomial(int n, int k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(b);
}

/// e_k over the variable block [off, off+d) as a polynomial in `total` vars.
Polynomial elementary_symmetric(int total, int off, int d, int k) {
    // subset-sum DP over the block
    std::vector<Polynomial> e(k + 1, Polynomial(total));
    e[0] = Polynomial::constant(total, ComplexRational(1));
    for (int j = 0; j < d; ++j) {
        Polynomial var = Polynomial::variable(total, off + j);
        for (int t = std::min(k, j + 1); t >= 1; --t) e[t] += e[t - 1] * var;
    }
    return e[k];
}

}  // namespace

PolarizedPolynomial polarize(const Polynomial& f) {
    require(!f.is_zero(), "polarize of zero polynomial");
    PolarizedPolynomial pf;
    pf.source_nvars = f.nvars();
    pf.degrees = f.degree_vector();
    const int total = std::accumulate(pf.degrees.begin(), pf.degrees.end(), 0);

    pf.base = Polynomial(total);
    for (const auto& [e, c] : f.terms()) {
        Polynomial term = Polynomial::constant(total, c);
        int off = 0;
        for (int i = 0; i < f.nvars(); ++i) {
            const int d = pf.degrees[i], k = e[i];
            if (k > 0) {
                Polynomial ek = elementary_symmetric(total, off, d, k);
                ek *= ComplexRational(Rational(1) / binomial(d, k));
                term *= ek;
            }
            off += d;
        }
        pf.base += term;
    }

    ensure(pf.base.is_multiaffine(), "polarization is not multi-affine");
    return pf;
}

Polynomial collapse(const PolarizedPolynomial& pf) {
    Polynomial out(pf.source_nvars);
    for (const auto& [e, c] : pf.base.terms()) {
        ExponentVec merged(pf.source_nvars, 0);
        int off = 0;
        for (int i = 0; i < pf.source_nvars; ++i) {
            for (int j = 0; j < pf.degrees[i]; ++j) merged[i] += e[off + j];
            off += pf.degrees[i];
        }
        out.add_term(merged, c);
    }
    return out;
}

}  // namespace stabpoly
