#include "stabpoly/stability.hpp"

#include <algorithm>
#include <cstddef>
#include <utility>

#include "stabpoly/matrix.hpp"
#include "stabpoly/realroot.hpp"
#include "stabpoly/rng.hpp"

namespace stabpoly {

RealUnivariate to_real_univariate(const Polynomial& f) {
    require(f.nvars() <= 1, "univariate conversion needs at most one variable");
    require(f.is_real(), "univariate conversion needs real coefficients");
    if (f.is_zero()) return RealUnivariate();
    int deg = 0;
    for (const auto& [e, c] : f.terms())
        if (!e.empty()) deg = std::max(deg, e[0]);
    std::vector<Rational> coeffs(static_cast<size_t>(deg) + 1);
    for (const auto& [e, c] : f.terms()) coeffs[e.empty() ? 0 : static_cast<size_t>(e[0])] = c.re;
    return RealUnivariate(std::move(coeffs));
}

namespace {

double to_double(const Rational& r) { return r.raw().get_d(); }

/// Float shadow of a real polynomial; only ranks candidates, never decides.
struct FloatPoly {
    std::vector<std::pair<std::vector<int>, double>> terms;

    explicit FloatPoly(const Polynomial& g) {
        for (const auto& [e, c] : g.terms()) terms.emplace_back(e, to_double(c.re));
    }

    double eval(const std::vector<double>& x) const {
        double acc = 0.0;
        for (const auto& [e, coeff] : terms) {
            double t = coeff;
            for (size_t i = 0; i < x.size(); ++i)
                for (int k = 0; k < e[i]; ++k) t *= x[i];
            acc += t;
        }
        return acc;
    }
};

std::vector<double> to_doubles(const std::vector<Rational>& x) {
    std::vector<double> out(x.size());
    for (size_t i = 0; i < x.size(); ++i) out[i] = to_double(x[i]);
    return out;
}

struct SearchResult {
    std::optional<std::vector<Rational>> witness;  // exact negative point
    std::optional<Rational> best_checked;          // most negative exact value seen
};

/// Grid + seeded sampling + coordinate descent; float values only rank
/// candidates, every returned witness is re-verified with exact arithmetic.
SearchResult falsify_search(const Polynomial& g, const Budget& budget, bool positive_only,
                            const std::string& stream_label) {
    SearchResult out;
    if (g.is_zero()) return out;
    const int n = g.nvars();
    std::vector<int> used;
    for (int i = 0; i < n; ++i)
        if (g.depends_on(i)) used.push_back(i);
    const int k = static_cast<int>(used.size());
    const std::vector<Rational> base_point(static_cast<size_t>(n),
                                           positive_only ? Rational(1) : Rational(0));

    const FloatPoly shadow(g);
    struct Cand {
        std::vector<Rational> x;
        double v = 0.0;
    };
    std::vector<Cand> pool;  // ascending by v, bounded
    const size_t cap = 24;
    auto consider = [&](const std::vector<Rational>& x) {
        double v = shadow.eval(to_doubles(x));
        if (pool.size() == cap && v >= pool.back().v) return;
        auto at = std::upper_bound(pool.begin(), pool.end(), v,
                                   [](double a, const Cand& b) { return a < b.v; });
        pool.insert(at, Cand{x, v});
        if (pool.size() > cap) pool.pop_back();
    };

    const std::vector<Rational> grid_vals =
        positive_only
            ? std::vector<Rational>{Rational(1, 2), Rational(1), Rational(2)}
            : std::vector<Rational>{Rational(-2),    Rational(-1), Rational(-1, 2), Rational(0),
                                    Rational(1, 2), Rational(1),  Rational(2)};
    if (budget.grid && k <= 8) {
        std::vector<size_t> idx(static_cast<size_t>(k), 0);
        std::vector<Rational> x = base_point;
        while (true) {
            for (int a = 0; a < k; ++a)
                x[static_cast<size_t>(used[static_cast<size_t>(a)])] = grid_vals[idx[static_cast<size_t>(a)]];
            consider(x);
            int pos = 0;
            while (pos < k && ++idx[static_cast<size_t>(pos)] == grid_vals.size()) {
                idx[static_cast<size_t>(pos)] = 0;
                ++pos;
            }
            if (pos == k) break;
        }
    }

    SplitMix64 rng = SplitMix64(budget.seed).fork(stream_label);
    for (int s = 0; s < budget.samples; ++s) {
        std::vector<Rational> x = base_point;
        for (int a = 0; a < k; ++a) {
            Rational r = positive_only
                             ? Rational(rng.integer_in(1, 12), rng.integer_in(1, 4))
                             : rng.rational(8, 4);
            x[static_cast<size_t>(used[static_cast<size_t>(a)])] = r;
        }
        consider(x);
    }

    if (!pool.empty() && budget.descent > 0 && k > 0) {
        Cand cur = pool.front();
        Rational step(1);
        for (int round = 0; round < budget.descent; ++round) {
            bool improved = false;
            for (int a = 0; a < k; ++a) {
                for (int sgn = 0; sgn < 2; ++sgn) {
                    std::vector<Rational> y = cur.x;
                    Rational& coord = y[static_cast<size_t>(used[static_cast<size_t>(a)])];
                    coord += sgn == 0 ? step : -step;
                    if (positive_only && coord.sign() <= 0) continue;
                    double v = shadow.eval(to_doubles(y));
                    if (v < cur.v) {
                        cur = Cand{std::move(y), v};
                        improved = true;
                    }
                }
            }
            if (!improved) step /= Rational(2);
        }
        pool.insert(pool.begin(), std::move(cur));
    }

    for (const Cand& c : pool) {
        Rational v = g.evaluate_real(c.x);
        if (!out.best_checked || v < *out.best_checked) out.best_checked = v;
        if (v.sign() < 0) {
            out.witness = c.x;
            return out;
        }
    }
    return out;
}

/// True when every term has a nonnegative coefficient and all-even
/// exponents; such a sum is pointwise nonnegative on all of R^n.
bool even_nonneg_terms(const Polynomial& d) {
    for (const auto& [e, c] : d.terms()) {
        if (c.re.sign() < 0) return false;
        for (int exp : e)
            if (exp % 2 != 0) return false;
    }
    return true;
}

/// Exact decision for total degree <= 2: p >= 0 on R^n iff the homogenized
/// Gram matrix (1, z) p-form is positive semidefinite; the y -> 0 boundary
/// of the homogenization is closed, so no extra condition appears.
bool quadratic_nonneg(const Polynomial& d, const std::vector<int>& used) {
    const int k = static_cast<int>(used.size());
    Matrix gram(k + 1, k + 1);
    std::vector<int> pos(static_cast<size_t>(d.nvars()), -1);
    for (int a = 0; a < k; ++a) pos[static_cast<size_t>(used[static_cast<size_t>(a)])] = a;
    for (const auto& [e, c] : d.terms()) {
        std::vector<int> vars;
        for (size_t i = 0; i < e.size(); ++i)
            for (int t = 0; t < e[i]; ++t) vars.push_back(pos[i]);
        ensure(vars.size() <= 2, "quadratic certificate on a higher-degree input");
        int r = vars.empty() ? 0 : vars[0] + 1;
        int s = vars.size() < 2 ? 0 : vars[1] + 1;
        if (vars.size() == 1) s = 0;
        if (vars.empty()) r = s = 0;
        if (r == s) {
            gram.at(r, r) += c;
        } else {
            ComplexRational half = c / ComplexRational(Rational(2));
            gram.at(r, s) += half;
            gram.at(s, r) += half;
        }
    }
    return psd_check(gram);
}

const char* allreals_certificate(const Polynomial& d, const std::vector<int>& used) {
    if (even_nonneg_terms(d)) return "even-exponent-certificate";
    if (d.total_degree() <= 2 && quadratic_nonneg(d, used))
        return "quadratic-form-certificate";
    return nullptr;
}

bool nonneg_coeff_terms(const Polynomial& d) {
    for (const auto& [e, c] : d.terms())
        if (c.re.sign() < 0) return false;
    return true;
}

std::vector<int> used_variables(const Polynomial& f) {
    std::vector<int> used;
    for (int i = 0; i < f.nvars(); ++i)
        if (f.depends_on(i)) used.push_back(i);
    return used;
}

std::string pair_label(int i, int j) {
    return "pair-" + std::to_string(i) + "-" + std::to_string(j);
}

}  // namespace

Polynomial rayleigh_difference(const Polynomial& f, int i, int j) {
    require(f.is_real(), "Rayleigh difference needs real coefficients");
    require(i >= 0 && i < f.nvars() && j >= 0 && j < f.nvars(), "variable index out of range");
    Polynomial fi = f.partial_derivative(i);
    Polynomial fj = f.partial_derivative(j);
    Polynomial d = fi * fj - fi.partial_derivative(j) * f;
    if (f.is_multiaffine())
        ensure(!d.depends_on(i) && !d.depends_on(j),
               "multi-affine Rayleigh difference must be constant in both variables");
    return d;
}

StabilityVerdict check_multiaffine_real_stability(const Polynomial& f, const Budget& budget) {
    require(!f.is_zero(), "stability of the zero polynomial is undefined");
    require(f.is_real(), "criterion needs real coefficients");
    require(f.is_multiaffine(), "criterion needs a multi-affine polynomial");

    StabilityVerdict v;
    std::vector<int> used = used_variables(f);

    if (used.size() <= 1) {
        RealUnivariate u;
        if (used.empty()) {
            u = to_real_univariate(Polynomial::constant(0, f.terms().begin()->second));
        } else {
            std::vector<Rational> coeffs(2);
            for (const auto& [e, c] : f.terms())
                coeffs[static_cast<size_t>(e[static_cast<size_t>(used[0])])] = c.re;
            u = RealUnivariate(std::move(coeffs));
        }
        ensure(is_real_rooted(u), "degree <= 1 polynomials are always real rooted");
        v.status = StabilityStatus::CertifiedStable;
        v.method = method::kUnivariateHB;
        return v;
    }

    if (used.size() == 2) {
        Polynomial d = rayleigh_difference(f, used[0], used[1]);
        std::vector<Rational> origin(static_cast<size_t>(f.nvars()), Rational(0));
        Rational value = d.evaluate_real(origin);  // d is constant
        if (value.sign() >= 0) {
            v.status = StabilityStatus::CertifiedStable;
            v.method = method::kBivariateDeterminant;
        } else {
            v.status = StabilityStatus::RefutedWithWitness;
            v.method = method::kBivariateDeterminant;
            v.witness = origin;
            v.witness_pair = {used[0], used[1]};
        }
        return v;
    }

    // the diagonal difference reduces to a square once per input
    Polynomial d0 = f.partial_derivative(used[0]);
    ensure(rayleigh_difference(f, used[0], used[0]) == d0 * d0,
           "diagonal Rayleigh identity failed");

    bool all_certified = true;
    for (size_t a = 0; a < used.size(); ++a)
        for (size_t b = a + 1; b < used.size(); ++b) {
            Polynomial d = rayleigh_difference(f, used[a], used[b]);
            if (allreals_certificate(d, used_variables(d)) != nullptr) continue;
            all_certified = false;
            Budget pb = budget;
            pb.seed = budget.seed ^ fnv1a64(pair_label(used[a], used[b]));
            SearchResult s = falsify_search(d, pb, false, "falsify");
            if (s.witness) {
                v.status = StabilityStatus::RefutedWithWitness;
                v.method = method::kMultiaffineDeltaExact;
                v.witness = std::move(s.witness);
                v.witness_pair = {used[a], used[b]};
                return v;
            }
        }
    if (all_certified) {
        v.status = StabilityStatus::CertifiedStable;
        v.method = method::kMultiaffineDeltaExact;
    } else {
        v.note = "falsifier budget exhausted on at least one uncertified pair";
    }
    return v;
}

std::optional<std::vector<Rational>> falsify_nonnegativity(const Polynomial& g,
                                                           const Budget& budget) {
    require(g.is_real(), "nonnegativity falsifier needs real coefficients");
    return falsify_search(g, budget, false, "falsify").witness;
}

std::optional<LineWitness> line_falsify_stability(const Polynomial& f, int trials,
                                                  std::uint64_t seed) {
    require(!f.is_zero(), "stability of the zero polynomial is undefined");
    require(f.is_real(), "line falsification needs real coefficients");
    const size_t n = static_cast<size_t>(f.nvars());
    SplitMix64 rng = SplitMix64(seed).fork("lines");
    for (int t = 0; t <= trials; ++t) {
        std::vector<Rational> base(n, Rational(0));
        std::vector<Rational> dir(n, Rational(1));
        if (t > 0) {
            for (size_t i = 0; i < n; ++i) base[i] = rng.rational(4, 3);
            for (size_t i = 0; i < n; ++i)
                dir[i] = Rational(rng.integer_in(1, 6), rng.integer_in(1, 3));
        }
        Polynomial u = restrict_line(f, base, dir);
        // a vanishing restriction extends to a complex line inside the
        // half-plane region, so it is itself a refutation
        if (u.is_zero()) return LineWitness{std::move(base), std::move(dir), std::move(u)};
        if (!is_real_rooted(to_real_univariate(u)))
            return LineWitness{std::move(base), std::move(dir), std::move(u)};
    }
    return std::nullopt;
}

Polynomial rotate_halfplane(const Polynomial& f, int theta_quarter_turns) {
    // i^(-q) = i^p with p = (-q) mod 4
    const int p = ((-theta_quarter_turns) % 4 + 4) % 4;
    const ComplexRational powers[4] = {ComplexRational(1), ComplexRational::i(),
                                       ComplexRational(Rational(-1)),
                                       ComplexRational(Rational(0), Rational(-1))};
    Polynomial out(f.nvars());
    for (const auto& [e, c] : f.terms()) {
        int total = 0;
        for (int x : e) total += x;
        out.add_term(e, c * powers[(p * total) % 4]);
    }
    return out;
}

bool support_theorem_check(const Polynomial& f) {
    require(!f.is_zero(), "the zero polynomial has empty support");
    return is_jump_system(support_of(f)).ok;
}

bool RayleighReport::all_nonnegative() const {
    for (const auto& p : pairs)
        if (p.status != StabilityStatus::CertifiedStable) return false;
    return true;
}

bool RayleighReport::any_refuted() const {
    for (const auto& p : pairs)
        if (p.status == StabilityStatus::RefutedWithWitness) return true;
    return false;
}

RayleighReport matroid_rayleigh_check(const Matroid& m, RayleighMode mode, const Budget& budget) {
    Polynomial f = basis_generating_poly(m);  // validates the matroid
    RayleighReport report;
    report.mode = mode;
    for (int i = 0; i < m.ground_size; ++i)
        for (int j = i + 1; j < m.ground_size; ++j) {
            Polynomial d = rayleigh_difference(f, i, j);
            RayleighPair pair;
            pair.i = i;
            pair.j = j;
            const char* cert = nullptr;
            if (mode == RayleighMode::PositiveOrthant) {
                if (nonneg_coeff_terms(d)) cert = "coefficient-certificate";
            } else {
                cert = allreals_certificate(d, used_variables(d));
            }
            if (cert != nullptr) {
                pair.status = StabilityStatus::CertifiedStable;
                pair.method = cert;
            } else {
                Budget pb = budget;
                pb.seed = budget.seed ^ fnv1a64(pair_label(i, j));
                SearchResult s = falsify_search(d, pb, mode == RayleighMode::PositiveOrthant,
                                                mode == RayleighMode::PositiveOrthant
                                                    ? "falsify-positive"
                                                    : "falsify");
                pair.worst = s.best_checked;
                if (s.witness) {
                    pair.status = StabilityStatus::RefutedWithWitness;
                    pair.method = "falsified";
                    pair.witness = std::move(s.witness);
                } else {
                    pair.status = StabilityStatus::Unknown;
                    pair.method = "budget-exhausted";
                }
            }
            report.pairs.push_back(std::move(pair));
        }
    return report;
}

Polynomial realify(const Polynomial& f, const std::vector<Rational>& alphas) {
    require(!f.is_zero(), "cannot realify the zero polynomial");
    auto [h, g] = f.real_imag_parts();
    if (g.is_zero()) return h;
    auto same_support = [](const Polynomial& a, const Polynomial& b) {
        if (a.terms().size() != b.terms().size()) return false;
        auto ia = a.terms().begin();
        auto ib = b.terms().begin();
        for (; ia != a.terms().end(); ++ia, ++ib)
            if (ia->first != ib->first) return false;
        return true;
    };
    for (const Rational& alpha : alphas) {
        Polynomial scaled = g;
        scaled *= ComplexRational(alpha);
        Polynomial candidate = h + scaled;
        if (same_support(candidate, f)) {
            ensure(candidate.is_real(), "realified polynomial must be real");
            return candidate;
        }
    }
    throw std::invalid_argument("every alpha cancelled part of the support");
}

StabilityVerdict construction_verdict(const ConstructionTag& tag) {
    StabilityVerdict v;
    v.status = StabilityStatus::CertifiedStable;
    v.method = method::kByConstruction;
    v.note = tag.provenance;
    return v;
}

}  // namespace stabpoly
