#pragma once

#include <string>
#include <vector>

#include "stabpoly/combstruct.hpp"
#include "stabpoly/matrix.hpp"
#include "stabpoly/polynomial.hpp"

namespace stabpoly {

/// Which half-plane the construction guarantees to be zero-free.
enum class HalfPlane { Upper, Right };

/// License travelling with a constructed polynomial: how it was built and
/// which stability statement that construction guarantees.
struct ConstructionTag {
    enum class Kind {
        DetPencil,
        PrincipalMinors,
        Matching,
        Forest,
        SpanningTree,
        DegreeSystem,
        Representable,
    };
    Kind kind;
    HalfPlane halfplane;
    std::string provenance;
};

struct TaggedPolynomial {
    Polynomial poly;
    ConstructionTag tag;
};

/// det(z_1 A_1 + ... + z_m A_m + B) for positive semidefinite A_k and
/// Hermitian B; the result has exactly real coefficients. Size guard: n <= 8.
TaggedPolynomial det_pencil(const std::vector<Matrix>& a_list, const Matrix& b);

/// det(I + A Z), Z = diag(z): the coefficient of z^S is the principal minor
/// det(A[S]). Hermitian input gives an Upper tag, skew-Hermitian a Right
/// tag. Size guard: n <= 12.
TaggedPolynomial principal_minors_poly(const Matrix& a);

/// Sum over all matchings of prod lambda_ij z_i z_j (empty matching gives the
/// constant 1). Parallel edges merge by adding weights. Guard: |E| <= 24.
TaggedPolynomial matching_polynomial(const WeightedGraph& g);

/// det(L + Z) over variables z_1..z_n, w_1..w_m (vertex then edge order):
/// the rooted-spanning-forest generating polynomial. Each edge e = {u,v} with
/// weight c contributes c*w_e to the Laplacian. The determinant expansion is
/// cross-checked against direct forest enumeration before returning.
/// Guard: n <= 8.
TaggedPolynomial forest_polynomial(const WeightedGraph& g);

/// Direct enumeration of rooted spanning forests, same variables as
/// forest_polynomial; exposed so tests can compare the two routes.
Polynomial rooted_forest_expansion(const WeightedGraph& g);

/// Spanning-tree generating polynomial over edge variables w_1..w_m, via the
/// root-deleted Laplacian determinant; the result is checked to be
/// independent of the root by recomputing at a second root.
/// Requires a connected graph; guard: n <= 8.
TaggedPolynomial spanning_tree_polynomial(const WeightedGraph& g, int root);

/// prod over edges (1 + z_i z_j); edge weights are ignored. Guard: |E| <= 20.
TaggedPolynomial degree_poly(const WeightedGraph& g);

/// For an r x n matrix A of full row rank, sum over r-subsets S of
/// |det A[S]|^2 z^S (exactly det * conj(det), no square roots); the support
/// is the set of bases of the matroid represented by A. Guard: n <= 12.
TaggedPolynomial representable_matroid_poly(const Matrix& a);

/// Sum of z^B over bases; carries no stability license on purpose.
/// Requires the basis family to satisfy the exchange axiom.
Polynomial basis_generating_poly(const Matroid& m);

}  // namespace stabpoly
