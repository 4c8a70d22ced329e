#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stabpoly/combstruct.hpp"
#include "stabpoly/stability.hpp"

namespace stabpoly {

/// The rank-3 matroid on 7 elements whose non-bases are the 7 lines of the
/// Fano plane; 28 bases.
Matroid fano();

/// One forced multiplicative relation between basis coefficients of a
/// homogeneous multi-affine polynomial with the half-plane property:
/// if s + {i,j} is dependent while all four exchanged triples are bases,
/// a(s+{i,k}) * a(s+{j,l}) = a(s+{i,l}) * a(s+{j,k}).
struct KeyRelation {
    std::vector<int> s;  // common part, a single element at rank 3
    int i = -1, j = -1;  // s + {i,j} is a non-basis; i < j
    int k = -1, l = -1;  // exchanged pair; k < l

    std::vector<int> set_ik() const;
    std::vector<int> set_jl() const;
    std::vector<int> set_il() const;
    std::vector<int> set_jk() const;

    bool operator==(const KeyRelation& o) const = default;
};

struct RelationSystem {
    int ground_size = 0;
    std::vector<KeyRelation> relations;
    std::set<std::vector<int>> bases_used;  // every basis named by some relation
};

/// All key relations of a rank-3 matroid, one per (dependent 3-set split,
/// exchanged pair) with the four exchanged triples all bases.
RelationSystem key_relations(const Matroid& m);

/// Vertices are the pairs {i,j} with both {i,j,x} and {i,j,y} bases; edges
/// join intersecting pairs.  Connectivity is what forces the coefficient
/// quotient a({i,j,x})/a({i,j,y}) to be independent of the vertex.
struct QuotientGraph {
    int x = -1, y = -1;
    std::vector<std::pair<int, int>> vertices;  // each i < j
    std::vector<std::pair<int, int>> edges;     // indices into vertices
    bool connected = false;
};

QuotientGraph quotient_graph(const Matroid& m, int x, int y);

/// A coefficient quotient a(numerator)/a(denominator), carried symbolically.
struct FormalQuotient {
    std::vector<int> numerator;
    std::vector<int> denominator;
};

/// lambda(x,y) for x < y, each defined from the least vertex of its
/// quotient graph; the consistency check makes the choice immaterial.
struct LambdaMap {
    std::map<std::pair<int, int>, FormalQuotient> quotients;
};

struct LambdaEdge {
    int x = -1, y = -1;
    std::pair<int, int> u, v;  // uncovered edge of the (x,y) quotient graph
};

struct LambdaResult {
    std::optional<LambdaMap> map;
    std::optional<LambdaEdge> uncovered;
    std::string note;
};

/// Checks that every quotient-graph edge is covered by a relation instance:
/// for adjacent vertices {i,j}, {i,k} either {i,j,k} or {i,x,y} must be a
/// non-basis, and the matching relation must appear in rel.
LambdaResult lambda_consistency(const Matroid& m, const RelationSystem& rel);

/// Element weights v with lambda(x,y) forced equal to v[x]/v[y]; the
/// canonical instantiation is all ones (symbolic lambdas carry no scale).
struct WeightFactorization {
    std::vector<Rational> weights;  // positive, weights[0] == 1
    std::string note;
};

struct FactorizationResult {
    std::optional<WeightFactorization> factorization;
    std::optional<std::array<int, 3>> failed_triple;  // lambda(x,z) != lambda(x,y)*lambda(y,z)
    std::string note;
};

/// Verifies lambda multiplicativity over all element triples (direct common
/// vertex, or a detour through an outside element when the triple is
/// dependent), then checks every basis pair is joined by single-exchange
/// steps so a(A)/a(B) telescopes to a weight ratio.
FactorizationResult weight_factorization(const Matroid& m, const LambdaMap& lambda);

/// Exactly re-validated evidence that the all-ones basis generating
/// polynomial is not stable.
struct RefutationWitness {
    enum class Kind { RayleighPoint, Line } kind = Kind::RayleighPoint;
    int i = -1, j = -1;            // Rayleigh pair
    std::vector<Rational> point;   // where the Rayleigh difference is negative
    Rational value;                // its exact value there
    std::optional<LineWitness> line;
};

/// Attacks the uniform basis polynomial of m: Rayleigh differences over all
/// of real space first, then random real line restrictions.
std::optional<RefutationWitness> refute_uniform(const Matroid& m, const Budget& budget);

enum class ObstructionStatus { NotHPP, Inconclusive };

struct ChainStep {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct ObstructionReport {
    ObstructionStatus status = ObstructionStatus::Inconclusive;
    std::vector<ChainStep> chain;  // stops after the first failing step
    int relation_count = 0;
    int quotient_graphs = 0;
    int connected_quotient_graphs = 0;
    int lambda_pairs = 0;
    std::optional<WeightFactorization> factorization;
    std::optional<RefutationWitness> witness;
    std::string failure;  // name of the first failing step, empty for NotHPP
};

/// Full pipeline for a rank-3 matroid: key relations, quotient-graph
/// connectivity, lambda consistency, weight factorization, and refutation of
/// the uniform basis polynomial.  NotHPP only when every step succeeds, and
/// only after every certificate re-validates.
ObstructionReport hpp_obstruction(const Matroid& m, const Budget& budget);

}  // namespace stabpoly
