#include "stabpoly/obstruction.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <tuple>

#include "stabpoly/rng.hpp"

namespace stabpoly {

namespace {

std::vector<int> sorted3(int a, int b, int c) {
    std::vector<int> v{a, b, c};
    std::sort(v.begin(), v.end());
    return v;
}

std::string pair_str(int x, int y) {
    return "(" + std::to_string(x + 1) + "," + std::to_string(y + 1) + ")";
}

/// {p,q,r} is a basis and some disjoint pair {i,j} completes each of p, q, r
/// to a basis; that pair makes the three quotients telescope directly.
bool direct_triple(const Matroid& m, int p, int q, int r) {
    if (!m.has_basis(sorted3(p, q, r))) return false;
    for (int i = 0; i < m.ground_size; ++i) {
        if (i == p || i == q || i == r) continue;
        for (int j = i + 1; j < m.ground_size; ++j) {
            if (j == p || j == q || j == r) continue;
            if (m.has_basis(sorted3(i, j, p)) && m.has_basis(sorted3(i, j, q)) &&
                m.has_basis(sorted3(i, j, r)))
                return true;
        }
    }
    return false;
}

}  // namespace

Matroid fano() {
    static const std::vector<std::vector<int>> lines = {
        {0, 1, 2}, {2, 3, 4}, {0, 4, 5}, {0, 3, 6}, {1, 4, 6}, {2, 5, 6}, {1, 3, 5}};
    Matroid m;
    m.ground_size = 7;
    for (int a = 0; a < 7; ++a)
        for (int b = a + 1; b < 7; ++b)
            for (int c = b + 1; c < 7; ++c) {
                std::vector<int> t{a, b, c};
                if (std::find(lines.begin(), lines.end(), t) == lines.end())
                    m.bases.insert(t);
            }
    ensure(m.bases.size() == 28, "seven lines must leave 28 bases");
    return m;
}

std::vector<int> KeyRelation::set_ik() const { return sorted3(s.at(0), i, k); }
std::vector<int> KeyRelation::set_jl() const { return sorted3(s.at(0), j, l); }
std::vector<int> KeyRelation::set_il() const { return sorted3(s.at(0), i, l); }
std::vector<int> KeyRelation::set_jk() const { return sorted3(s.at(0), j, k); }

RelationSystem key_relations(const Matroid& m) {
    MatroidResult chk = is_matroid_bases(m.bases, m.ground_size);
    require(chk.ok, "key relations need a valid matroid");
    require(m.rank() == 3, "key relations need a rank-3 matroid");

    RelationSystem out;
    out.ground_size = m.ground_size;
    const int n = m.ground_size;
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q)
            for (int r = q + 1; r < n; ++r) {
                if (m.has_basis({p, q, r})) continue;
                // dependent 3-set: each element can play the common part
                const std::array<std::array<int, 3>, 3> splits = {
                    {{p, q, r}, {q, p, r}, {r, p, q}}};
                for (const auto& sp : splits) {
                    KeyRelation rel;
                    rel.s = {sp[0]};
                    rel.i = sp[1];
                    rel.j = sp[2];
                    for (int k = 0; k < n; ++k) {
                        if (k == p || k == q || k == r) continue;
                        for (int l = k + 1; l < n; ++l) {
                            if (l == p || l == q || l == r) continue;
                            rel.k = k;
                            rel.l = l;
                            if (!m.has_basis(rel.set_ik()) || !m.has_basis(rel.set_jl()) ||
                                !m.has_basis(rel.set_il()) || !m.has_basis(rel.set_jk()))
                                continue;
                            out.relations.push_back(rel);
                            out.bases_used.insert(rel.set_ik());
                            out.bases_used.insert(rel.set_jl());
                            out.bases_used.insert(rel.set_il());
                            out.bases_used.insert(rel.set_jk());
                        }
                    }
                }
            }
    for (const auto& b : out.bases_used)
        ensure(m.has_basis(b), "relation names a non-basis");
    return out;
}

QuotientGraph quotient_graph(const Matroid& m, int x, int y) {
    require(0 <= x && x < m.ground_size && 0 <= y && y < m.ground_size,
            "quotient graph elements out of range");
    require(x != y, "quotient graph needs two distinct elements");

    QuotientGraph g;
    g.x = x;
    g.y = y;
    for (int i = 0; i < m.ground_size; ++i) {
        if (i == x || i == y) continue;
        for (int j = i + 1; j < m.ground_size; ++j) {
            if (j == x || j == y) continue;
            if (m.has_basis(sorted3(i, j, x)) && m.has_basis(sorted3(i, j, y)))
                g.vertices.emplace_back(i, j);
        }
    }
    const size_t nv = g.vertices.size();
    for (size_t a = 0; a < nv; ++a)
        for (size_t b = a + 1; b < nv; ++b) {
            const auto& [i, j] = g.vertices[a];
            const auto& [k, l] = g.vertices[b];
            if (i == k || i == l || j == k || j == l)
                g.edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
        }
    // an empty graph leaves the quotient undefined, so it does not count as
    // connected
    if (nv == 0) {
        g.connected = false;
        return g;
    }
    std::vector<char> seen(nv, 0);
    std::vector<std::vector<int>> adj(nv);
    for (const auto& [a, b] : g.edges) {
        adj[static_cast<size_t>(a)].push_back(b);
        adj[static_cast<size_t>(b)].push_back(a);
    }
    std::queue<int> bfs;
    bfs.push(0);
    seen[0] = 1;
    size_t reached = 1;
    while (!bfs.empty()) {
        int v = bfs.front();
        bfs.pop();
        for (int w : adj[static_cast<size_t>(v)])
            if (!seen[static_cast<size_t>(w)]) {
                seen[static_cast<size_t>(w)] = 1;
                ++reached;
                bfs.push(w);
            }
    }
    g.connected = (reached == nv);
    return g;
}

LambdaResult lambda_consistency(const Matroid& m, const RelationSystem& rel) {
    require(rel.ground_size == m.ground_size, "relation system built from another ground set");

    std::set<std::tuple<int, int, int, int, int>> index;
    for (const KeyRelation& r : rel.relations) {
        require(r.s.size() == 1, "rank-3 relations carry a one-element common part");
        index.insert({r.s[0], r.i, r.j, r.k, r.l});
    }
    auto has_relation = [&](int s, int a, int b, int c, int d) {
        if (a > b) std::swap(a, b);
        if (c > d) std::swap(c, d);
        return index.count({s, a, b, c, d}) > 0;
    };

    LambdaResult out;
    LambdaMap map;
    for (int x = 0; x < m.ground_size; ++x)
        for (int y = x + 1; y < m.ground_size; ++y) {
            QuotientGraph g = quotient_graph(m, x, y);
            require(g.connected, "lambda consistency needs connected quotient graphs");
            for (const auto& [a, b] : g.edges) {
                const auto& [i1, j1] = g.vertices[static_cast<size_t>(a)];
                const auto& [i2, j2] = g.vertices[static_cast<size_t>(b)];
                int shared = (i1 == i2 || i1 == j2) ? i1 : j1;
                int p = (i1 == shared) ? j1 : i1;
                int q = (i2 == shared) ? j2 : i2;
                // dependent {shared,p,q}: exchange x,y across the non-basis;
                // dependent {shared,x,y}: exchange p,q instead
                bool covered =
                    (!m.has_basis(sorted3(shared, p, q)) && has_relation(shared, p, q, x, y)) ||
                    (!m.has_basis(sorted3(shared, x, y)) && has_relation(shared, x, y, p, q));
                if (!covered) {
                    out.uncovered = LambdaEdge{x, y, g.vertices[static_cast<size_t>(a)],
                                               g.vertices[static_cast<size_t>(b)]};
                    out.note = "no relation ties the quotients at vertices " +
                               pair_str(i1, j1) + " and " + pair_str(i2, j2) + " for " +
                               pair_str(x, y);
                    return out;
                }
            }
            const auto& [i, j] = g.vertices.front();
            map.quotients[{x, y}] = FormalQuotient{sorted3(i, j, x), sorted3(i, j, y)};
        }
    out.map = std::move(map);
    out.note = "every quotient-graph edge is covered";
    return out;
}

FactorizationResult weight_factorization(const Matroid& m, const LambdaMap& lambda) {
    const int n = m.ground_size;
    require(static_cast<int>(lambda.quotients.size()) == n * (n - 1) / 2,
            "weight factorization needs a complete lambda map");

    FactorizationResult out;
    int triples = 0;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                if (x == y || y == z || x == z) continue;
                ++triples;
                if (direct_triple(m, x, y, z)) continue;
                bool detour = false;
                for (int u = 0; u < n && !detour; ++u) {
                    if (u == x || u == y || u == z) continue;
                    detour = direct_triple(m, x, u, z) && direct_triple(m, x, y, u) &&
                             direct_triple(m, u, y, z);
                }
                if (!detour) {
                    out.failed_triple = {x, y, z};
                    out.note = "multiplicativity underivable for " + pair_str(x, y) +
                               " through " + std::to_string(z + 1);
                    return out;
                }
            }

    // every basis pair must be joined by single-element exchanges; each step
    // quotient is a lambda value, so a(A)/a(B) telescopes to a weight ratio
    std::vector<std::vector<int>> bases(m.bases.begin(), m.bases.end());
    const size_t nb = bases.size();
    std::vector<std::vector<int>> adj(nb);
    for (size_t a = 0; a < nb; ++a)
        for (size_t b = a + 1; b < nb; ++b) {
            std::vector<int> meet;
            std::set_intersection(bases[a].begin(), bases[a].end(), bases[b].begin(),
                                  bases[b].end(), std::back_inserter(meet));
            if (meet.size() == 2) {
                adj[a].push_back(static_cast<int>(b));
                adj[b].push_back(static_cast<int>(a));
            }
        }
    auto indicator = [&](const std::vector<int>& b) {
        std::vector<int> v(static_cast<size_t>(n), 0);
        for (int e : b) v[static_cast<size_t>(e)] = 1;
        return v;
    };
    // every basis pair must be reachable, and the telescoped swaps along the
    // tree path must reproduce each basis no matter which root the search
    // starts from
    for (size_t root = 0; root < nb; ++root) {
        std::vector<int> parent(nb, -1);
        std::vector<char> seen(nb, 0);
        std::queue<int> bfs;
        bfs.push(static_cast<int>(root));
        seen[root] = 1;
        size_t reached = 1;
        while (!bfs.empty()) {
            int v = bfs.front();
            bfs.pop();
            for (int w : adj[static_cast<size_t>(v)])
                if (!seen[static_cast<size_t>(w)]) {
                    seen[static_cast<size_t>(w)] = 1;
                    parent[static_cast<size_t>(w)] = v;
                    ++reached;
                    bfs.push(w);
                }
        }
        if (reached != nb) {
            out.note = "basis exchange graph is disconnected";
            return out;
        }
        const std::vector<int> root_ind = indicator(bases[root]);
        for (size_t b = 0; b < nb; ++b) {
            std::vector<int> acc = root_ind;
            for (size_t cur = b; parent[cur] != -1; cur = static_cast<size_t>(parent[cur])) {
                const auto& hi = bases[cur];
                const auto& lo = bases[static_cast<size_t>(parent[cur])];
                std::vector<int> out_el, in_el;
                std::set_difference(lo.begin(), lo.end(), hi.begin(), hi.end(),
                                    std::back_inserter(out_el));
                std::set_difference(hi.begin(), hi.end(), lo.begin(), lo.end(),
                                    std::back_inserter(in_el));
                ensure(out_el.size() == 1 && in_el.size() == 1,
                       "exchange step must swap one element");
                acc[static_cast<size_t>(out_el[0])] -= 1;
                acc[static_cast<size_t>(in_el[0])] += 1;
            }
            ensure(acc == indicator(bases[b]), "exchange path does not telescope");
        }
    }

    WeightFactorization w;
    w.weights.assign(static_cast<size_t>(n), Rational(1));
    w.note = "canonical all-ones instantiation; every quotient equals a weight ratio";
    out.factorization = std::move(w);
    out.note = "multiplicativity verified over " + std::to_string(triples) + " ordered triples";
    return out;
}

std::optional<RefutationWitness> refute_uniform(const Matroid& m, const Budget& budget) {
    RayleighReport rep = matroid_rayleigh_check(m, RayleighMode::AllReals, budget);
    Polynomial f = basis_generating_poly(m);
    for (const RayleighPair& p : rep.pairs) {
        if (p.status != StabilityStatus::RefutedWithWitness) continue;
        ensure(p.witness.has_value(), "refuted pair must carry a witness");
        RefutationWitness w;
        w.kind = RefutationWitness::Kind::RayleighPoint;
        w.i = p.i;
        w.j = p.j;
        w.point = *p.witness;
        w.value = rayleigh_difference(f, p.i, p.j).evaluate_real(w.point);
        ensure(w.value.sign() < 0, "witness must make the Rayleigh difference negative");
        return w;
    }
    int trials = std::max(50, budget.samples / 10);
    auto lw = line_falsify_stability(f, trials, budget.seed ^ fnv1a64("uniform-refutation-lines"));
    if (lw) {
        if (!lw->restriction.is_zero())
            ensure(!is_real_rooted(to_real_univariate(lw->restriction)),
                   "line witness must restrict to a non-real-rooted polynomial");
        RefutationWitness w;
        w.kind = RefutationWitness::Kind::Line;
        w.line = std::move(lw);
        return w;
    }
    return std::nullopt;
}

ObstructionReport hpp_obstruction(const Matroid& m, const Budget& budget) {
    MatroidResult chk = is_matroid_bases(m.bases, m.ground_size);
    require(chk.ok, "obstruction pipeline needs a valid matroid");
    require(m.rank() == 3, "obstruction pipeline needs a rank-3 matroid");

    ObstructionReport rep;
    auto fail = [&](const std::string& step) {
        rep.failure = step;
        rep.status = ObstructionStatus::Inconclusive;
        return rep;
    };

    RelationSystem rel = key_relations(m);
    rep.relation_count = static_cast<int>(rel.relations.size());
    bool ok = !rel.relations.empty();
    rep.chain.push_back({"key-relations", ok, std::to_string(rep.relation_count) + " relations"});
    if (!ok) return fail("key-relations");

    std::string bad_pair;
    for (int x = 0; x < m.ground_size; ++x)
        for (int y = x + 1; y < m.ground_size; ++y) {
            QuotientGraph g = quotient_graph(m, x, y);
            ++rep.quotient_graphs;
            if (g.connected)
                ++rep.connected_quotient_graphs;
            else if (bad_pair.empty())
                bad_pair = pair_str(x, y);
        }
    ok = (rep.connected_quotient_graphs == rep.quotient_graphs);
    rep.chain.push_back({"quotient-connectivity", ok,
                         ok ? std::to_string(rep.quotient_graphs) + " graphs connected"
                            : "disconnected or empty at " + bad_pair});
    if (!ok) return fail("quotient-connectivity");

    LambdaResult lam = lambda_consistency(m, rel);
    ok = lam.map.has_value();
    rep.lambda_pairs = ok ? static_cast<int>(lam.map->quotients.size()) : 0;
    rep.chain.push_back({"lambda-consistency", ok, lam.note});
    if (!ok) return fail("lambda-consistency");

    FactorizationResult fac = weight_factorization(m, *lam.map);
    ok = fac.factorization.has_value();
    rep.factorization = fac.factorization;
    rep.chain.push_back({"weight-factorization", ok, fac.note});
    if (!ok) return fail("weight-factorization");

    std::optional<RefutationWitness> wit = refute_uniform(m, budget);
    ok = wit.has_value();
    std::string detail = "no witness within budget";
    if (ok)
        detail = wit->kind == RefutationWitness::Kind::RayleighPoint
                     ? "Rayleigh pair " + pair_str(wit->i, wit->j) + " negative"
                     : "non-real-rooted line restriction";
    rep.chain.push_back({"uniform-refutation", ok, detail});
    rep.witness = wit;
    if (!ok) return fail("uniform-refutation");

    // independent re-validation before claiming an obstruction
    RelationSystem again = key_relations(m);
    ensure(again.relations == rel.relations, "relation re-derivation disagrees");
    for (int x = 0; x < m.ground_size; ++x)
        for (int y = x + 1; y < m.ground_size; ++y)
            ensure(quotient_graph(m, x, y).connected, "connectivity re-check failed");
    Polynomial f = basis_generating_poly(m);
    if (wit->kind == RefutationWitness::Kind::RayleighPoint) {
        Rational v = rayleigh_difference(f, wit->i, wit->j).evaluate_real(wit->point);
        ensure(v == wit->value && v.sign() < 0, "witness re-evaluation failed");
    } else {
        ensure(wit->line.has_value(), "line witness missing its restriction");
        if (!wit->line->restriction.is_zero())
            ensure(!is_real_rooted(to_real_univariate(wit->line->restriction)),
                   "line witness re-evaluation failed");
    }

    rep.status = ObstructionStatus::NotHPP;
    return rep;
}

}  // namespace stabpoly
