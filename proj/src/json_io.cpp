#include "stabpoly/json_io.hpp"

#include <algorithm>
#include <cstdio>

#include "stabpoly/rng.hpp"

namespace stabpoly::io {

namespace {

Rational rational_from_string(const std::string& s) {
    try {
        return Rational::from_string(s);
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
}

const Json& field(const Json& j, const char* name) {
    if (!j.is_object() || !j.contains(name))
        throw FormatError(std::string("missing field '") + name + "'");
    return j.at(name);
}

int int_field(const Json& j, const char* name) {
    const Json& v = field(j, name);
    if (!v.is_number_integer()) throw FormatError(std::string("'") + name + "' must be an integer");
    return v.get<int>();
}

std::string string_field(const Json& j, const char* name) {
    const Json& v = field(j, name);
    if (!v.is_string()) throw FormatError(std::string("'") + name + "' must be a string");
    return v.get<std::string>();
}

std::vector<int> int_vector(const Json& j, const char* what) {
    if (!j.is_array()) throw FormatError(std::string(what) + " must be an array");
    std::vector<int> out;
    for (const Json& v : j) {
        if (!v.is_number_integer()) throw FormatError(std::string(what) + " entries must be integers");
        out.push_back(v.get<int>());
    }
    return out;
}

Json rationals_to_json(const std::vector<Rational>& xs) {
    Json a = Json::array();
    for (const Rational& x : xs) a.push_back(x.to_string());
    return a;
}

/// Sorted 0-indexed element list to a 1-indexed JSON array.
Json elements_to_json(const std::vector<int>& xs) {
    Json a = Json::array();
    for (int x : xs) a.push_back(x + 1);
    return a;
}

const char* status_name(StabilityStatus s) {
    switch (s) {
        case StabilityStatus::CertifiedStable: return "certified-stable";
        case StabilityStatus::RefutedWithWitness: return "refuted-with-witness";
        default: return "unknown";
    }
}

}  // namespace

Json polynomial_to_json(const Polynomial& f) {
    Json terms = Json::array();
    for (const auto& [e, c] : f.terms()) {
        Json t;
        t["exp"] = e;
        t["re"] = c.re.to_string();
        t["im"] = c.im.to_string();
        terms.push_back(std::move(t));
    }
    return Json{{"nvars", f.nvars()}, {"terms", std::move(terms)}};
}

Polynomial polynomial_from_json(const Json& j) {
    int nvars = int_field(j, "nvars");
    if (nvars < 0) throw FormatError("'nvars' must be nonnegative");
    const Json& terms = field(j, "terms");
    if (!terms.is_array()) throw FormatError("'terms' must be an array");
    Polynomial f(nvars);
    std::set<std::vector<int>> seen;
    for (const Json& t : terms) {
        std::vector<int> exp = int_vector(field(t, "exp"), "'exp'");
        if (static_cast<int>(exp.size()) != nvars)
            throw FormatError("'exp' length must equal 'nvars'");
        for (int e : exp)
            if (e < 0) throw FormatError("'exp' entries must be nonnegative");
        if (!seen.insert(exp).second) throw FormatError("duplicate exponent vector");
        ComplexRational c;
        c.re = rational_from_string(string_field(t, "re"));
        c.im = t.contains("im") ? rational_from_string(string_field(t, "im")) : Rational(0);
        if (c.re.sign() == 0 && c.im.sign() == 0) throw FormatError("zero coefficient term");
        f.add_term(exp, c);
    }
    return f;
}

Json support_to_json(const SupportSet& s) {
    Json points = Json::array();
    for (const auto& p : s.points) points.push_back(p);
    return Json{{"dim", s.dim}, {"points", std::move(points)}};
}

SupportSet support_from_json(const Json& j) {
    SupportSet s;
    s.dim = int_field(j, "dim");
    if (s.dim < 0) throw FormatError("'dim' must be nonnegative");
    const Json& points = field(j, "points");
    if (!points.is_array()) throw FormatError("'points' must be an array");
    for (const Json& p : points) {
        std::vector<int> v = int_vector(p, "point");
        if (static_cast<int>(v.size()) != s.dim) throw FormatError("point length must equal 'dim'");
        for (int x : v)
            if (x < 0) throw FormatError("point entries must be nonnegative");
        s.points.insert(std::move(v));
    }
    return s;
}

Json matroid_to_json(const Matroid& m) {
    Json bases = Json::array();
    for (const auto& b : m.bases) bases.push_back(elements_to_json(b));
    return Json{{"n", m.ground_size}, {"bases", std::move(bases)}};
}

Matroid matroid_from_json(const Json& j) {
    Matroid m;
    m.ground_size = int_field(j, "n");
    if (m.ground_size < 0) throw FormatError("'n' must be nonnegative");
    const Json& bases = field(j, "bases");
    if (!bases.is_array()) throw FormatError("'bases' must be an array");
    for (const Json& b : bases) {
        std::vector<int> v = int_vector(b, "basis");
        for (int& x : v) {
            if (x < 1 || x > m.ground_size) throw FormatError("basis element out of range");
            x -= 1;
        }
        std::sort(v.begin(), v.end());
        if (std::adjacent_find(v.begin(), v.end()) != v.end())
            throw FormatError("basis repeats an element");
        m.bases.insert(std::move(v));
    }
    return m;
}

Json graph_to_json(const WeightedGraph& g) {
    Json edges = Json::array();
    for (const auto& e : g.edges)
        edges.push_back(Json{{"u", e.u + 1}, {"v", e.v + 1}, {"w", e.w.to_string()}});
    return Json{{"n", g.nvertices}, {"edges", std::move(edges)}};
}

WeightedGraph graph_from_json(const Json& j) {
    WeightedGraph g;
    g.nvertices = int_field(j, "n");
    if (g.nvertices < 0) throw FormatError("'n' must be nonnegative");
    const Json& edges = field(j, "edges");
    if (!edges.is_array()) throw FormatError("'edges' must be an array");
    for (const Json& e : edges) {
        WeightedGraph::Edge edge;
        edge.u = int_field(e, "u") - 1;
        edge.v = int_field(e, "v") - 1;
        if (edge.u < 0 || edge.u >= g.nvertices || edge.v < 0 || edge.v >= g.nvertices)
            throw FormatError("edge endpoint out of range");
        edge.w = e.contains("w") ? rational_from_string(string_field(e, "w")) : Rational(1);
        g.edges.push_back(std::move(edge));
    }
    return g;
}

Json matrix_to_json(const Matrix& a) {
    Json rows = Json::array();
    for (int i = 0; i < a.rows(); ++i) {
        Json row = Json::array();
        for (int k = 0; k < a.cols(); ++k) {
            const ComplexRational& c = a.at(i, k);
            if (c.im.sign() == 0)
                row.push_back(c.re.to_string());
            else
                row.push_back(Json{{"re", c.re.to_string()}, {"im", c.im.to_string()}});
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const Json& j) {
    if (!j.is_array()) throw FormatError("matrix must be a 2-D array");
    int nrows = static_cast<int>(j.size());
    if (nrows == 0) return Matrix();
    if (!j.at(0).is_array()) throw FormatError("matrix rows must be arrays");
    int ncols = static_cast<int>(j.at(0).size());
    Matrix a(nrows, ncols);
    for (int i = 0; i < nrows; ++i) {
        const Json& row = j.at(static_cast<size_t>(i));
        if (!row.is_array() || static_cast<int>(row.size()) != ncols)
            throw FormatError("matrix rows must all have the same length");
        for (int k = 0; k < ncols; ++k) {
            const Json& cell = row.at(static_cast<size_t>(k));
            ComplexRational c;
            if (cell.is_string()) {
                c.re = rational_from_string(cell.get<std::string>());
            } else if (cell.is_object()) {
                c.re = rational_from_string(string_field(cell, "re"));
                if (cell.contains("im")) c.im = rational_from_string(string_field(cell, "im"));
            } else {
                throw FormatError("matrix entry must be a string or an object");
            }
            a.at(i, k) = c;
        }
    }
    return a;
}

Json budget_to_json(const Budget& b) {
    return Json{{"grid", b.grid}, {"samples", b.samples}, {"descent", b.descent}};
}

Json verdict_to_json(const StabilityVerdict& v, const Budget& budget) {
    Json j;
    j["status"] = status_name(v.status);
    j["method"] = v.method;
    if (v.witness || v.witness_pair) {
        Json w;
        if (v.witness) w["point"] = rationals_to_json(*v.witness);
        if (v.witness_pair) w["pair"] = Json::array({v.witness_pair->first + 1, v.witness_pair->second + 1});
        j["witness"] = std::move(w);
    }
    if (!v.note.empty()) j["note"] = v.note;
    j["seed"] = budget.seed;
    j["budget"] = budget_to_json(budget);
    return j;
}

Json rayleigh_to_json(const RayleighReport& r) {
    Json pairs = Json::array();
    for (const RayleighPair& p : r.pairs) {
        Json q;
        q["i"] = p.i + 1;
        q["j"] = p.j + 1;
        q["status"] = status_name(p.status);
        q["method"] = p.method;
        if (p.witness) q["witness"] = rationals_to_json(*p.witness);
        if (p.worst) q["worst"] = p.worst->to_string();
        pairs.push_back(std::move(q));
    }
    return Json{{"mode", r.mode == RayleighMode::AllReals ? "all-reals" : "positive-orthant"},
                {"pairs", std::move(pairs)},
                {"all_nonnegative", r.all_nonnegative()},
                {"any_refuted", r.any_refuted()}};
}

Json line_witness_to_json(const LineWitness& w) {
    return Json{{"base", rationals_to_json(w.base)},
                {"direction", rationals_to_json(w.direction)},
                {"restriction", polynomial_to_json(w.restriction)}};
}

Json obstruction_to_json(const ObstructionReport& r) {
    Json chain = Json::array();
    for (const ChainStep& s : r.chain)
        chain.push_back(Json{{"name", s.name}, {"ok", s.ok}, {"detail", s.detail}});
    Json j;
    j["status"] = r.status == ObstructionStatus::NotHPP ? "not-hpp" : "inconclusive";
    j["chain"] = std::move(chain);
    j["relations"] = r.relation_count;
    j["quotient_graphs"] = r.quotient_graphs;
    j["connected_quotient_graphs"] = r.connected_quotient_graphs;
    j["lambda_pairs"] = r.lambda_pairs;
    if (r.factorization)
        j["factorization"] = Json{{"weights", rationals_to_json(r.factorization->weights)},
                                  {"note", r.factorization->note}};
    if (r.witness) {
        Json w;
        if (r.witness->kind == RefutationWitness::Kind::RayleighPoint) {
            w["kind"] = "rayleigh-point";
            w["i"] = r.witness->i + 1;
            w["j"] = r.witness->j + 1;
            w["point"] = rationals_to_json(r.witness->point);
            w["value"] = r.witness->value.to_string();
        } else {
            w["kind"] = "line";
            if (r.witness->line) w["line"] = line_witness_to_json(*r.witness->line);
        }
        j["witness"] = std::move(w);
    }
    if (!r.failure.empty()) j["failure"] = r.failure;
    return j;
}

Json tag_to_json(const ConstructionTag& t) {
    const char* kind = "";
    switch (t.kind) {
        case ConstructionTag::Kind::DetPencil: kind = "det-pencil"; break;
        case ConstructionTag::Kind::PrincipalMinors: kind = "principal-minors"; break;
        case ConstructionTag::Kind::Matching: kind = "matching"; break;
        case ConstructionTag::Kind::Forest: kind = "forest"; break;
        case ConstructionTag::Kind::SpanningTree: kind = "spanning-tree"; break;
        case ConstructionTag::Kind::DegreeSystem: kind = "degree-system"; break;
        case ConstructionTag::Kind::Representable: kind = "representable"; break;
    }
    return Json{{"kind", kind},
                {"halfplane", t.halfplane == HalfPlane::Upper ? "upper" : "right"},
                {"provenance", t.provenance}};
}

Json jump_to_json(const JumpSystemResult& r) {
    Json j;
    j["ok"] = r.ok;
    if (r.violation)
        j["violation"] = Json{{"alpha", r.violation->alpha},
                              {"beta", r.violation->beta},
                              {"sigma", r.violation->sigma}};
    return j;
}

Json delta_to_json(const DeltaMatroidReport& r) {
    Json j;
    j["axiom_ok"] = r.axiom_ok;
    j["covers_ground"] = r.covers_ground();
    j["strict_ok"] = r.strict_ok();
    j["unused_elements"] = elements_to_json(r.unused_elements);
    if (r.violation)
        j["violation"] = Json{{"a", elements_to_json(r.violation->a)},
                              {"b", elements_to_json(r.violation->b)},
                              {"x", r.violation->x + 1}};
    return j;
}

Json matroid_result_to_json(const MatroidResult& r) {
    Json j;
    j["ok"] = r.ok;
    if (r.violation) {
        Json v;
        v["a"] = elements_to_json(r.violation->a);
        v["b"] = elements_to_json(r.violation->b);
        v["reason"] = r.violation->reason;
        if (r.violation->x >= 0) v["x"] = r.violation->x + 1;
        j["violation"] = std::move(v);
    }
    return j;
}

std::string input_hash(const std::string& raw) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "fnv1a64:%016llx",
                  static_cast<unsigned long long>(fnv1a64(raw)));
    return buf;
}

}  // namespace stabpoly::io
