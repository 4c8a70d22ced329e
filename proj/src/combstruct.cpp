#include "stabpoly/combstruct.hpp"

#include <algorithm>
#include <cstdlib>

namespace stabpoly {

namespace {

int l1_distance(const std::vector<int>& a, const std::vector<int>& b) {
    int d = 0;
    for (size_t i = 0; i < a.size(); ++i) d += std::abs(a[i] - b[i]);
    return d;
}

std::vector<int> add(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> r = a;
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return r;
}

std::vector<int> symmetric_difference(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> r;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(r));
    return r;
}

// A delta {x} on a sorted element list.
std::vector<int> toggle(const std::vector<int>& a, int x) {
    std::vector<int> r;
    bool inserted = false;
    for (int e : a) {
        if (e == x) {
            inserted = true;  // removal
            continue;
        }
        if (!inserted && e > x) {
            r.push_back(x);
            inserted = true;
        }
        r.push_back(e);
    }
    if (!inserted) r.push_back(x);
    return r;
}

}  // namespace

std::vector<int> SupportSet::unused_coordinates() const {
    std::vector<int> unused;
    for (int i = 0; i < dim; ++i) {
        bool used = false;
        for (const auto& p : points)
            if (p[static_cast<size_t>(i)] != 0) {
                used = true;
                break;
            }
        if (!used) unused.push_back(i);
    }
    return unused;
}

bool SupportSet::all_binary() const {
    for (const auto& p : points)
        for (int x : p)
            if (x != 0 && x != 1) return false;
    return true;
}

SupportSet support_of(const Polynomial& f) {
    SupportSet s;
    s.dim = f.nvars();
    for (const auto& [e, c] : f.terms()) s.points.insert(e);
    return s;
}

SupportSet indicator_support(int n, const std::set<std::vector<int>>& subsets) {
    SupportSet s;
    s.dim = n;
    for (const auto& sub : subsets) {
        std::vector<int> p(static_cast<size_t>(n), 0);
        for (int e : sub) {
            require(e >= 0 && e < n, "subset element out of range");
            p[static_cast<size_t>(e)] = 1;
        }
        s.points.insert(std::move(p));
    }
    return s;
}

std::set<std::vector<int>> subsets_of(const SupportSet& F) {
    require(F.all_binary(), "support set is not binary");
    std::set<std::vector<int>> out;
    for (const auto& p : F.points) {
        std::vector<int> sub;
        for (int i = 0; i < F.dim; ++i)
            if (p[static_cast<size_t>(i)] == 1) sub.push_back(i);
        out.insert(std::move(sub));
    }
    return out;
}

int Matroid::rank() const {
    require(!bases.empty(), "matroid has no bases");
    return static_cast<int>(bases.begin()->size());
}

std::set<std::vector<int>> steps(const std::vector<int>& alpha, const std::vector<int>& beta) {
    require(alpha.size() == beta.size(), "step vectors must have equal length");
    std::set<std::vector<int>> out;
    for (size_t i = 0; i < alpha.size(); ++i) {
        if (alpha[i] == beta[i]) continue;
        std::vector<int> sigma(alpha.size(), 0);
        sigma[i] = alpha[i] < beta[i] ? 1 : -1;
        out.insert(std::move(sigma));
    }
    return out;
}

JumpSystemResult is_jump_system(const SupportSet& F) {
    require(!F.points.empty(), "jump system axiom needs a non-empty set");
    for (const auto& alpha : F.points) {
        for (const auto& beta : F.points) {
            for (const auto& sigma : steps(alpha, beta)) {
                std::vector<int> mid = add(alpha, sigma);
                if (F.contains(mid)) continue;
                bool saved = false;
                for (const auto& tau : steps(mid, beta)) {
                    if (F.contains(add(mid, tau))) {
                        saved = true;
                        break;
                    }
                }
                if (!saved) return {false, JumpViolation{alpha, beta, sigma}};
            }
        }
    }
    return {true, std::nullopt};
}

DeltaMatroidReport is_delta_matroid(const SupportSet& F) {
    require(!F.points.empty(), "exchange axiom needs a non-empty set");
    require(F.all_binary(), "delta-matroid points must be 0/1 vectors");
    DeltaMatroidReport report;
    report.unused_elements = F.unused_coordinates();
    std::set<std::vector<int>> members = subsets_of(F);
    for (const auto& a : members) {
        for (const auto& b : members) {
            std::vector<int> diff = symmetric_difference(a, b);
            for (int x : diff) {
                bool found = false;
                for (int y : diff) {
                    // y == x gives a single toggle
                    std::vector<int> moved = y == x ? toggle(a, x) : toggle(toggle(a, x), y);
                    if (members.count(moved) > 0) {
                        found = true;
                        break;
                    }
                }
                if (!found) {
                    report.axiom_ok = false;
                    report.violation = DeltaViolation{a, b, x};
                    return report;
                }
            }
        }
    }
    report.axiom_ok = true;
    return report;
}

MatroidResult is_matroid_bases(const std::set<std::vector<int>>& bases, int n) {
    require(!bases.empty(), "basis exchange axiom needs a non-empty family");
    for (const auto& b : bases)
        for (int e : b) require(e >= 0 && e < n, "basis element out of range");
    const size_t rank = bases.begin()->size();
    for (const auto& b : bases) {
        if (b.size() != rank)
            return {false, MatroidViolation{*bases.begin(), b, -1, "cardinality"}};
    }
    for (const auto& a : bases) {
        for (const auto& b : bases) {
            std::vector<int> a_minus_b, b_minus_a;
            std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                                std::back_inserter(a_minus_b));
            std::set_difference(b.begin(), b.end(), a.begin(), a.end(),
                                std::back_inserter(b_minus_a));
            for (int x : a_minus_b) {
                bool found = false;
                for (int y : b_minus_a) {
                    std::vector<int> candidate = toggle(toggle(a, x), y);
                    if (bases.count(candidate) > 0) {
                        found = true;
                        break;
                    }
                }
                if (!found) return {false, MatroidViolation{a, b, x, "exchange"}};
            }
        }
    }
    return {true, std::nullopt};
}

std::optional<std::vector<int>> has_internal_zeros(const SupportSet& F) {
    std::optional<std::vector<int>> best;
    for (const auto& alpha : F.points) {
        for (const auto& beta : F.points) {
            bool ordered = true;
            for (size_t i = 0; i < alpha.size(); ++i)
                if (alpha[i] > beta[i]) {
                    ordered = false;
                    break;
                }
            if (!ordered) continue;
            // walk the box [alpha, beta]
            std::vector<int> gamma = alpha;
            while (true) {
                if (!F.contains(gamma) && (!best || gamma < *best)) best = gamma;
                size_t i = 0;
                while (i < gamma.size()) {
                    if (gamma[i] < beta[i]) {
                        ++gamma[i];
                        break;
                    }
                    gamma[i] = alpha[i];
                    ++i;
                }
                if (i == gamma.size()) break;
            }
        }
    }
    return best;
}

void WeightedGraph::normalize() {
    for (auto& e : edges) {
        require(e.u != e.v, "loops are not allowed");
        if (e.u > e.v) std::swap(e.u, e.v);
        require(e.u >= 0 && e.v < nvertices, "edge endpoint out of range");
        require(e.w.sign() >= 0, "edge weights must be nonnegative");
    }
}

SupportSet matching_support(const WeightedGraph& g) {
    require(g.nvertices <= 16, "matching enumeration is limited to 16 vertices");
    WeightedGraph h = g;
    h.normalize();
    // merge parallel edges: only incidence matters here
    std::set<std::pair<int, int>> seen;
    std::vector<std::pair<int, int>> simple;
    for (const auto& e : h.edges)
        if (seen.insert({e.u, e.v}).second) simple.emplace_back(e.u, e.v);

    SupportSet out;
    out.dim = g.nvertices;
    std::vector<int> covered(static_cast<size_t>(g.nvertices), 0);
    auto recurse = [&](auto&& self, size_t idx) -> void {
        if (idx == simple.size()) {
            out.points.insert(covered);
            return;
        }
        self(self, idx + 1);  // skip edge
        auto [u, v] = simple[idx];
        if (covered[static_cast<size_t>(u)] == 0 && covered[static_cast<size_t>(v)] == 0) {
            covered[static_cast<size_t>(u)] = covered[static_cast<size_t>(v)] = 1;
            self(self, idx + 1);
            covered[static_cast<size_t>(u)] = covered[static_cast<size_t>(v)] = 0;
        }
    };
    recurse(recurse, 0);
    return out;
}

SupportSet degree_sequence_system(const WeightedGraph& g) {
    require(g.edges.size() <= 24, "spanning-subgraph enumeration is limited to 24 edges");
    WeightedGraph h = g;
    h.normalize();
    SupportSet out;
    out.dim = g.nvertices;
    const size_t m = h.edges.size();
    for (std::uint64_t mask = 0; mask < (1ULL << m); ++mask) {
        std::vector<int> deg(static_cast<size_t>(g.nvertices), 0);
        for (size_t k = 0; k < m; ++k)
            if (mask & (1ULL << k)) {
                ++deg[static_cast<size_t>(h.edges[k].u)];
                ++deg[static_cast<size_t>(h.edges[k].v)];
            }
        out.points.insert(std::move(deg));
    }
    return out;
}

}  // namespace stabpoly
