#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "stabpoly/polynomial.hpp"
#include "stabpoly/rational.hpp"

namespace stabpoly {

/// Finite set of integer lattice points, all of length dim. Iteration order
/// is lexicographic (std::set of vectors), which every verifier relies on for
/// deterministic first witnesses.
struct SupportSet {
    int dim = 0;
    std::set<std::vector<int>> points;

    bool contains(const std::vector<int>& p) const { return points.count(p) > 0; }
    /// All coordinates that are zero in every point (0-indexed).
    std::vector<int> unused_coordinates() const;
    bool all_binary() const;
};

/// Exponent vectors of the nonzero terms.
SupportSet support_of(const Polynomial& f);

/// Indicator vectors of 0-indexed element subsets.
SupportSet indicator_support(int n, const std::set<std::vector<int>>& subsets);
/// Inverse of indicator_support; requires binary points.
std::set<std::vector<int>> subsets_of(const SupportSet& F);

/// Ground set {0..n-1} with an explicit basis list (sorted element vectors).
struct Matroid {
    int ground_size = 0;
    std::set<std::vector<int>> bases;

    int rank() const;
    bool has_basis(const std::vector<int>& b) const { return bases.count(b) > 0; }
};

/// Unit steps from alpha toward beta: the vectors sigma with |sigma| = 1 and
/// |alpha + sigma - beta| = |alpha - beta| - 1.
std::set<std::vector<int>> steps(const std::vector<int>& alpha, const std::vector<int>& beta);

struct JumpViolation {
    std::vector<int> alpha, beta, sigma;
};

struct JumpSystemResult {
    bool ok = false;
    std::optional<JumpViolation> violation;  // lexicographically first
};

/// Two-step axiom: for alpha, beta in F and any step sigma from alpha toward
/// beta, either alpha + sigma is in F or a second step tau lands in F.
JumpSystemResult is_jump_system(const SupportSet& F);

struct DeltaViolation {
    std::vector<int> a, b;  // subsets as sorted element lists
    int x = -1;             // element of a delta b with no partner y
};

struct DeltaMatroidReport {
    bool axiom_ok = false;
    std::optional<DeltaViolation> violation;
    /// Ground elements covered by no member; the strict reading requires
    /// every element to appear, so callers can decide how to treat these.
    std::vector<int> unused_elements;

    bool covers_ground() const { return unused_elements.empty(); }
    bool strict_ok() const { return axiom_ok && covers_ground(); }
};

/// Symmetric exchange axiom over binary points: for members A, B and any
/// x in A delta B there is y in A delta B (y = x allowed) with
/// A delta {x,y} in F.
DeltaMatroidReport is_delta_matroid(const SupportSet& F);

struct MatroidViolation {
    std::vector<int> a, b;
    int x = -1;               // element of a \ b with no exchange, or -1
    std::string reason;       // "cardinality" or "exchange"
};

struct MatroidResult {
    bool ok = false;
    std::optional<MatroidViolation> violation;
};

/// Basis exchange axiom on a non-empty family of subsets of {0..n-1}.
MatroidResult is_matroid_bases(const std::set<std::vector<int>>& bases, int n);

/// Lexicographically least gamma with alpha <= gamma <= beta for some
/// alpha, beta in F but gamma not in F; nullopt when the support has no holes.
std::optional<std::vector<int>> has_internal_zeros(const SupportSet& F);

/// Undirected graph; parallel edges are allowed (distinct entries), loops are
/// not. Endpoints are 0-indexed with u < v after normalization.
struct WeightedGraph {
    struct Edge {
        int u = 0, v = 0;
        Rational w = Rational(1);
    };
    int nvertices = 0;
    std::vector<Edge> edges;

    /// Orders endpoints, checks ranges, rejects loops and negative weights.
    void normalize();
};

/// Indicator vectors of vertex sets covered by some matching (empty matching
/// included). Parallel edges are merged first. Guard: nvertices <= 16.
SupportSet matching_support(const WeightedGraph& g);

/// Degree vectors of all spanning subgraphs. Guard: at most 24 edges.
SupportSet degree_sequence_system(const WeightedGraph& g);

}  // namespace stabpoly
