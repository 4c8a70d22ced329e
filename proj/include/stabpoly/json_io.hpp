#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"
#include "stabpoly/combstruct.hpp"
#include "stabpoly/constructors.hpp"
#include "stabpoly/matrix.hpp"
#include "stabpoly/obstruction.hpp"
#include "stabpoly/stability.hpp"

namespace stabpoly::io {

using Json = nlohmann::json;

/// Well-formed JSON that violates one of the format contracts below.
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Polynomials: { "nvars": n, "terms": [ { "exp": [..], "re": "p/q",
/// "im": "p/q" } ] }.  Terms are emitted in exponent order; zero
/// coefficients and duplicate exponent vectors are rejected on input.
Json polynomial_to_json(const Polynomial& f);
Polynomial polynomial_from_json(const Json& j);

/// Support sets: { "dim": n, "points": [[..], ..] }.
Json support_to_json(const SupportSet& s);
SupportSet support_from_json(const Json& j);

/// Matroids: { "n": n, "bases": [[1,2,3], ..] }, elements 1-indexed.
Json matroid_to_json(const Matroid& m);
Matroid matroid_from_json(const Json& j);

/// Graphs: { "n": n, "edges": [ { "u": 1, "v": 2, "w": "p/q" } ] },
/// vertices 1-indexed, edge order preserved.
Json graph_to_json(const WeightedGraph& g);
WeightedGraph graph_from_json(const Json& j);

/// Matrices: 2-D array; "p/q" for real entries, { "re": .., "im": .. }
/// otherwise.  Both forms are accepted anywhere on input.
Json matrix_to_json(const Matrix& a);
Matrix matrix_from_json(const Json& j);

Json budget_to_json(const Budget& b);

Json verdict_to_json(const StabilityVerdict& v, const Budget& budget);
Json rayleigh_to_json(const RayleighReport& r);
Json line_witness_to_json(const LineWitness& w);
Json obstruction_to_json(const ObstructionReport& r);
Json tag_to_json(const ConstructionTag& t);
Json jump_to_json(const JumpSystemResult& r);
Json delta_to_json(const DeltaMatroidReport& r);
Json matroid_result_to_json(const MatroidResult& r);

/// "fnv1a64:" plus sixteen hex digits over the raw input bytes.
std::string input_hash(const std::string& raw);

}  // namespace stabpoly::io
