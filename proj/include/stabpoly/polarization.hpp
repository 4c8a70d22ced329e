#pragma once

#include "stabpoly/polynomial.hpp"

namespace stabpoly {

/// The unique multi-affine lift of a polynomial that is symmetric within each
/// variable group and collapses back to the source: z_i^k maps to
/// e_k(z_{i1},...,z_{i d_i}) / binom(d_i, k).
///
/// Group variables are laid out flat: (i, j) with 0 <= j < degrees[i] sits at
/// offset(i) + j where offset(i) = degrees[0] + ... + degrees[i-1].
struct PolarizedPolynomial {
    Polynomial base;            // over sum(degrees) variables
    std::vector<int> degrees;   // per-source-variable degree d_i
    int source_nvars = 0;

    int flat_index(int i, int j) const;
    int group_of(int flat) const;
};

/// Requires f != 0.
PolarizedPolynomial polarize(const Polynomial& f);

/// Substitutes z_{ij} := z_i; collapse(polarize(f)) == f exactly.
Polynomial collapse(const PolarizedPolynomial& pf);

}  // namespace stabpoly
