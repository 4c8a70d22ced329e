#include "stabpoly/cli_run.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include "stabpoly/polarization.hpp"

namespace stabpoly::cli {

namespace {

using io::FormatError;
using io::Json;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot read input file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int check_stability_cmd(const Json& doc, const Budget& budget, Json& result) {
    StabilityVerdict v = check_multiaffine_real_stability(io::polynomial_from_json(doc), budget);
    result = io::verdict_to_json(v, budget);
    switch (v.status) {
        case StabilityStatus::CertifiedStable: return 0;
        case StabilityStatus::RefutedWithWitness: return 1;
        default: return 4;
    }
}

int rayleigh_cmd(const Json& doc, const std::string& mode, const Budget& budget, Json& result) {
    RayleighMode m;
    if (mode == "positive-orthant")
        m = RayleighMode::PositiveOrthant;
    else if (mode == "all-reals")
        m = RayleighMode::AllReals;
    else
        throw FormatError("mode must be 'positive-orthant' or 'all-reals'");
    RayleighReport rep = matroid_rayleigh_check(io::matroid_from_json(doc), m, budget);
    result = io::rayleigh_to_json(rep);
    if (rep.any_refuted()) return 1;
    return rep.all_nonnegative() ? 0 : 4;
}

int check_support_cmd(const Json& doc, Json& result) {
    Polynomial f = io::polynomial_from_json(doc);
    bool ok = support_theorem_check(f);
    result = Json{{"ok", ok}, {"support", io::support_to_json(support_of(f))}};
    return ok ? 0 : 1;
}

int verify_cmd(const std::string& family, const Json& doc, Json& result) {
    if (family == "jump") {
        JumpSystemResult r = is_jump_system(io::support_from_json(doc));
        result = io::jump_to_json(r);
        return r.ok ? 0 : 1;
    }
    if (family == "delta") {
        DeltaMatroidReport r = is_delta_matroid(io::support_from_json(doc));
        result = io::delta_to_json(r);
        return r.axiom_ok ? 0 : 1;
    }
    if (family == "matroid") {
        Matroid m = io::matroid_from_json(doc);
        MatroidResult r = is_matroid_bases(m.bases, m.ground_size);
        result = io::matroid_result_to_json(r);
        return r.ok ? 0 : 1;
    }
    throw FormatError("verify family must be jump, delta, or matroid");
}

int construct_cmd(const std::string& kind, const Json& doc, int root, Json& result) {
    TaggedPolynomial built;
    if (kind == "matching") {
        built = matching_polynomial(io::graph_from_json(doc));
    } else if (kind == "forest") {
        built = forest_polynomial(io::graph_from_json(doc));
    } else if (kind == "spanning-tree") {
        built = spanning_tree_polynomial(io::graph_from_json(doc), root - 1);
    } else if (kind == "degree") {
        built = degree_poly(io::graph_from_json(doc));
    } else if (kind == "principal-minors") {
        built = principal_minors_poly(io::matrix_from_json(doc));
    } else if (kind == "representable") {
        built = representable_matroid_poly(io::matrix_from_json(doc));
    } else if (kind == "det-pencil") {
        std::vector<Matrix> a_list;
        const Json& arr = doc.is_object() && doc.contains("a") ? doc.at("a") : doc;
        if (!arr.is_array()) throw FormatError("det-pencil input needs an 'a' array of matrices");
        for (const Json& m : arr) a_list.push_back(io::matrix_from_json(m));
        if (a_list.empty()) throw FormatError("det-pencil needs at least one coefficient matrix");
        Matrix b;
        if (doc.is_object() && doc.contains("b")) {
            b = io::matrix_from_json(doc.at("b"));
        } else {
            b = Matrix(a_list.front().rows(), a_list.front().cols());
        }
        built = det_pencil(a_list, b);
    } else if (kind == "basis-generating") {
        // carries no construction tag: the sum over bases proves nothing
        Polynomial f = basis_generating_poly(io::matroid_from_json(doc));
        result = Json{{"polynomial", io::polynomial_to_json(f)}};
        return 0;
    } else {
        throw FormatError("unknown construct kind '" + kind + "'");
    }
    result = Json{{"polynomial", io::polynomial_to_json(built.poly)},
                  {"tag", io::tag_to_json(built.tag)}};
    return 0;
}

int polarize_cmd(const Json& doc, Json& result) {
    Polynomial f = io::polynomial_from_json(doc);
    PolarizedPolynomial pf = polarize(f);
    ensure(collapse(pf) == f, "polarization failed to collapse back");
    result = Json{{"polynomial", io::polynomial_to_json(pf.base)},
                  {"degrees", pf.degrees},
                  {"source_nvars", pf.source_nvars}};
    return 0;
}

int obstruct_cmd(const Json& doc, const Budget& budget, Json& result) {
    ObstructionReport rep = hpp_obstruction(io::matroid_from_json(doc), budget);
    result = io::obstruction_to_json(rep);
    return rep.status == ObstructionStatus::NotHPP ? 10 : 0;
}

int realify_cmd(const Json& doc, const std::vector<std::string>& alphas, Json& result) {
    Polynomial f = io::polynomial_from_json(doc);
    std::vector<Rational> parsed;
    for (const std::string& a : alphas) {
        try {
            parsed.push_back(Rational::from_string(a));
        } catch (const std::invalid_argument& e) {
            throw FormatError(e.what());
        }
    }
    Polynomial h = realify(f, parsed);
    result = Json{{"polynomial", io::polynomial_to_json(h)}};
    return 0;
}

}  // namespace

RunOutcome run(const CommandRequest& req) {
    auto started = std::chrono::steady_clock::now();
    RunOutcome out;
    Json& rep = out.report;
    rep["tool"] = kToolName;
    rep["version"] = kToolVersion;
    rep["subcommand"] = req.kind.empty() ? req.subcommand : req.subcommand + " " + req.kind;
    rep["seed"] = req.seed;
    Budget budget{true, req.samples, req.descent, req.seed};
    rep["budget"] = io::budget_to_json(budget);
    try {
        std::string raw_all;
        std::vector<Json> docs;
        for (const std::string& path : req.inputs) {
            std::string raw = slurp(path);
            raw_all += raw;
            docs.push_back(Json::parse(raw));
        }
        rep["input_hash"] = io::input_hash(raw_all);
        if (docs.empty()) throw FormatError("no input file given");
        const Json& doc = docs.front();
        Json result;
        if (req.subcommand == "check-stability")
            out.exit_code = check_stability_cmd(doc, budget, result);
        else if (req.subcommand == "rayleigh")
            out.exit_code = rayleigh_cmd(doc, req.mode, budget, result);
        else if (req.subcommand == "check-support")
            out.exit_code = check_support_cmd(doc, result);
        else if (req.subcommand == "verify")
            out.exit_code = verify_cmd(req.kind, doc, result);
        else if (req.subcommand == "construct")
            out.exit_code = construct_cmd(req.kind, doc, req.root, result);
        else if (req.subcommand == "polarize")
            out.exit_code = polarize_cmd(doc, result);
        else if (req.subcommand == "obstruct")
            out.exit_code = obstruct_cmd(doc, budget, result);
        else if (req.subcommand == "realify")
            out.exit_code = realify_cmd(doc, req.alphas, result);
        else
            throw FormatError("unknown subcommand '" + req.subcommand + "'");
        rep["result"] = std::move(result);
    } catch (const FormatError& e) {
        out.exit_code = 2;
        rep["error"] = e.what();
    } catch (const Json::parse_error& e) {
        out.exit_code = 2;
        rep["error"] = e.what();
    } catch (const std::invalid_argument& e) {
        out.exit_code = 3;
        rep["error"] = e.what();
    } catch (const std::exception& e) {
        out.exit_code = 70;
        rep["error"] = std::string("internal: ") + e.what();
    }
    auto elapsed = std::chrono::steady_clock::now() - started;
    rep["timing_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
    rep["exit"] = out.exit_code;
    return out;
}

}  // namespace stabpoly::cli
