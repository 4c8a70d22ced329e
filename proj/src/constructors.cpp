#include "stabpoly/constructors.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <utility>

namespace stabpoly {

namespace {

std::string size_note(int n, size_t m) {
    return "n=" + std::to_string(n) + ", m=" + std::to_string(m);
}

// Union-find over <= 8 vertices; copied freely during backtracking.
struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(static_cast<size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) x = parent[static_cast<size_t>(x)];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[static_cast<size_t>(a)] = b;
        return true;
    }
};

}  // namespace

TaggedPolynomial det_pencil(const std::vector<Matrix>& a_list, const Matrix& b) {
    require(b.is_square(), "pencil constant term must be square");
    const int n = b.rows();
    require(n <= 8, "pencil determinant is limited to 8x8");
    require(b.is_hermitian(), "pencil constant term must be Hermitian");
    for (const auto& a : a_list) {
        require(a.rows() == n && a.cols() == n, "pencil matrices must share one size");
        require(psd_check(a), "pencil coefficient matrices must be positive semidefinite");
    }
    const int m = static_cast<int>(a_list.size());
    std::vector<std::vector<Polynomial>> entries(
        static_cast<size_t>(n), std::vector<Polynomial>(static_cast<size_t>(n), Polynomial(m)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Polynomial& p = entries[static_cast<size_t>(i)][static_cast<size_t>(j)];
            for (int k = 0; k < m; ++k) {
                std::vector<int> e(static_cast<size_t>(m), 0);
                e[static_cast<size_t>(k)] = 1;
                p.add_term(e, a_list[static_cast<size_t>(k)].at(i, j));
            }
            p.add_term(std::vector<int>(static_cast<size_t>(m), 0), b.at(i, j));
        }
    Polynomial det = poly_matrix_det(entries);
    ensure(det.is_real(), "pencil determinant must have real coefficients");
    return {std::move(det),
            {ConstructionTag::Kind::DetPencil, HalfPlane::Upper,
             "det(sum z_k A_k + B), " + size_note(n, a_list.size())}};
}

TaggedPolynomial principal_minors_poly(const Matrix& a) {
    require(a.is_square(), "principal minors need a square matrix");
    const int n = a.rows();
    require(n <= 12, "principal minor expansion is limited to 12x12");
    const bool hermitian = a.is_hermitian();
    const bool skew = a.is_skew_hermitian();
    require(hermitian || skew, "matrix must be Hermitian or skew-Hermitian");
    Polynomial out(n);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> idx;
        std::vector<int> exp(static_cast<size_t>(n), 0);
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) {
                idx.push_back(i);
                exp[static_cast<size_t>(i)] = 1;
            }
        ComplexRational minor = a.select(idx, idx).determinant();
        if (hermitian) ensure(minor.im.is_zero(), "Hermitian principal minors must be real");
        out.add_term(exp, minor);
    }
    return {std::move(out),
            {ConstructionTag::Kind::PrincipalMinors,
             hermitian ? HalfPlane::Upper : HalfPlane::Right,
             std::string(hermitian ? "det(I+AZ), Hermitian, " : "det(I+AZ), skew-Hermitian, ") +
                 size_note(n, 0)}};
}

TaggedPolynomial matching_polynomial(const WeightedGraph& g) {
    require(g.edges.size() <= 24, "matching enumeration is limited to 24 edges");
    WeightedGraph h = g;
    h.normalize();
    // merge parallel edges by adding weights
    std::map<std::pair<int, int>, Rational> merged;
    for (const auto& e : h.edges) merged[{e.u, e.v}] += e.w;
    std::vector<std::pair<std::pair<int, int>, Rational>> edges(merged.begin(), merged.end());

    Polynomial out(g.nvertices);
    std::vector<int> covered(static_cast<size_t>(g.nvertices), 0);
    auto recurse = [&](auto&& self, size_t idx, const ComplexRational& coeff) -> void {
        if (idx == edges.size()) {
            out.add_term(covered, coeff);
            return;
        }
        self(self, idx + 1, coeff);
        auto [uv, w] = edges[idx];
        auto [u, v] = uv;
        if (covered[static_cast<size_t>(u)] == 0 && covered[static_cast<size_t>(v)] == 0) {
            covered[static_cast<size_t>(u)] = covered[static_cast<size_t>(v)] = 1;
            self(self, idx + 1, coeff * ComplexRational(w));
            covered[static_cast<size_t>(u)] = covered[static_cast<size_t>(v)] = 0;
        }
    };
    recurse(recurse, 0, ComplexRational(1));
    return {std::move(out),
            {ConstructionTag::Kind::Matching, HalfPlane::Right,
             "matching sum, " + size_note(g.nvertices, g.edges.size())}};
}

Polynomial rooted_forest_expansion(const WeightedGraph& g) {
    WeightedGraph h = g;
    h.normalize();
    const int n = h.nvertices;
    const int m = static_cast<int>(h.edges.size());
    const int nvars = n + m;
    Polynomial out(nvars);
    std::vector<int> chosen;
    auto emit = [&](const Dsu& dsu_const) {
        Dsu dsu = dsu_const;
        // one monomial w^F, then multiply by (sum of z_v) per component
        std::vector<int> base_exp(static_cast<size_t>(nvars), 0);
        Rational coeff(1);
        for (int e : chosen) {
            base_exp[static_cast<size_t>(n + e)] = 1;
            coeff *= h.edges[static_cast<size_t>(e)].w;
        }
        Polynomial acc = Polynomial::monomial(nvars, base_exp, ComplexRational(coeff));
        std::map<int, std::vector<int>> comps;
        for (int v = 0; v < n; ++v) comps[dsu.find(v)].push_back(v);
        for (const auto& [rep, members] : comps) {
            Polynomial linear(nvars);
            for (int v : members) {
                std::vector<int> e(static_cast<size_t>(nvars), 0);
                e[static_cast<size_t>(v)] = 1;
                linear.add_term(e, ComplexRational(1));
            }
            acc *= linear;
        }
        out += acc;
    };
    auto recurse = [&](auto&& self, int idx, Dsu dsu) -> void {
        if (idx == m) {
            emit(dsu);
            return;
        }
        self(self, idx + 1, dsu);  // skip edge
        Dsu with = dsu;
        if (with.unite(h.edges[static_cast<size_t>(idx)].u, h.edges[static_cast<size_t>(idx)].v)) {
            chosen.push_back(idx);
            self(self, idx + 1, with);
            chosen.pop_back();
        }
    };
    recurse(recurse, 0, Dsu(n));
    return out;
}

namespace {

// Laplacian plus z-diagonal over variables z_1..z_n, w_1..w_m.
std::vector<std::vector<Polynomial>> forest_matrix(const WeightedGraph& h) {
    const int n = h.nvertices;
    const int m = static_cast<int>(h.edges.size());
    const int nvars = n + m;
    std::vector<std::vector<Polynomial>> entries(
        static_cast<size_t>(n), std::vector<Polynomial>(static_cast<size_t>(n), Polynomial(nvars)));
    for (int e = 0; e < m; ++e) {
        const auto& edge = h.edges[static_cast<size_t>(e)];
        std::vector<int> exp(static_cast<size_t>(nvars), 0);
        exp[static_cast<size_t>(n + e)] = 1;
        ComplexRational w{edge.w};
        entries[static_cast<size_t>(edge.u)][static_cast<size_t>(edge.u)].add_term(exp, w);
        entries[static_cast<size_t>(edge.v)][static_cast<size_t>(edge.v)].add_term(exp, w);
        entries[static_cast<size_t>(edge.u)][static_cast<size_t>(edge.v)].add_term(exp, -w);
        entries[static_cast<size_t>(edge.v)][static_cast<size_t>(edge.u)].add_term(exp, -w);
    }
    for (int v = 0; v < n; ++v) {
        std::vector<int> exp(static_cast<size_t>(nvars), 0);
        exp[static_cast<size_t>(v)] = 1;
        entries[static_cast<size_t>(v)][static_cast<size_t>(v)].add_term(exp, ComplexRational(1));
    }
    return entries;
}

}  // namespace

TaggedPolynomial forest_polynomial(const WeightedGraph& g) {
    require(g.nvertices <= 8, "forest determinant is limited to 8 vertices");
    WeightedGraph h = g;
    h.normalize();
    Polynomial det = poly_matrix_det(forest_matrix(h));
    ensure(det == rooted_forest_expansion(h),
           "forest determinant disagrees with direct enumeration");
    return {std::move(det),
            {ConstructionTag::Kind::Forest, HalfPlane::Upper,
             "det(L+Z), " + size_note(g.nvertices, g.edges.size())}};
}

namespace {

Polynomial tree_poly_at_root(const WeightedGraph& h, int root) {
    const int n = h.nvertices;
    const int m = static_cast<int>(h.edges.size());
    std::vector<std::vector<Polynomial>> lap(
        static_cast<size_t>(n), std::vector<Polynomial>(static_cast<size_t>(n), Polynomial(m)));
    for (int e = 0; e < m; ++e) {
        const auto& edge = h.edges[static_cast<size_t>(e)];
        std::vector<int> exp(static_cast<size_t>(m), 0);
        exp[static_cast<size_t>(e)] = 1;
        ComplexRational w{edge.w};
        lap[static_cast<size_t>(edge.u)][static_cast<size_t>(edge.u)].add_term(exp, w);
        lap[static_cast<size_t>(edge.v)][static_cast<size_t>(edge.v)].add_term(exp, w);
        lap[static_cast<size_t>(edge.u)][static_cast<size_t>(edge.v)].add_term(exp, -w);
        lap[static_cast<size_t>(edge.v)][static_cast<size_t>(edge.u)].add_term(exp, -w);
    }
    std::vector<std::vector<Polynomial>> reduced;
    for (int i = 0; i < n; ++i) {
        if (i == root) continue;
        std::vector<Polynomial> row;
        for (int j = 0; j < n; ++j)
            if (j != root) row.push_back(lap[static_cast<size_t>(i)][static_cast<size_t>(j)]);
        reduced.push_back(std::move(row));
    }
    return poly_matrix_det(reduced);
}

}  // namespace

TaggedPolynomial spanning_tree_polynomial(const WeightedGraph& g, int root) {
    require(g.nvertices >= 1 && g.nvertices <= 8, "tree determinant is limited to 8 vertices");
    require(root >= 0 && root < g.nvertices, "root out of range");
    WeightedGraph h = g;
    h.normalize();
    Dsu dsu(h.nvertices);
    for (const auto& e : h.edges) dsu.unite(e.u, e.v);
    for (int v = 1; v < h.nvertices; ++v)
        require(dsu.find(v) == dsu.find(0), "graph must be connected");
    Polynomial t = tree_poly_at_root(h, root);
    if (h.nvertices > 1) {
        int other = root == 0 ? 1 : 0;
        ensure(t == tree_poly_at_root(h, other),
               "tree polynomial must not depend on the root");
    }
    return {std::move(t),
            {ConstructionTag::Kind::SpanningTree, HalfPlane::Upper,
             "reduced Laplacian det, " + size_note(g.nvertices, g.edges.size())}};
}

TaggedPolynomial degree_poly(const WeightedGraph& g) {
    require(g.edges.size() <= 20, "degree product is limited to 20 edges");
    WeightedGraph h = g;
    h.normalize();
    Polynomial out = Polynomial::constant(g.nvertices, ComplexRational(1));
    for (const auto& e : h.edges) {
        Polynomial factor = Polynomial::constant(g.nvertices, ComplexRational(1));
        std::vector<int> exp(static_cast<size_t>(g.nvertices), 0);
        exp[static_cast<size_t>(e.u)] = 1;
        exp[static_cast<size_t>(e.v)] = 1;
        factor.add_term(exp, ComplexRational(1));
        out *= factor;
    }
    return {std::move(out),
            {ConstructionTag::Kind::DegreeSystem, HalfPlane::Right,
             "prod (1 + z_i z_j), " + size_note(g.nvertices, g.edges.size())}};
}

TaggedPolynomial representable_matroid_poly(const Matrix& a) {
    const int r = a.rows();
    const int n = a.cols();
    require(r <= n, "row rank cannot exceed the column count");
    require(n <= 12, "column subset enumeration is limited to 12");
    std::vector<int> all_rows(static_cast<size_t>(r));
    std::iota(all_rows.begin(), all_rows.end(), 0);
    Polynomial out(n);
    std::vector<int> subset;
    auto recurse = [&](auto&& self, int start) -> void {
        if (static_cast<int>(subset.size()) == r) {
            ComplexRational d = a.select(all_rows, subset).determinant();
            if (!d.is_zero()) {
                std::vector<int> exp(static_cast<size_t>(n), 0);
                for (int c : subset) exp[static_cast<size_t>(c)] = 1;
                out.add_term(exp, d * d.conj());
            }
            return;
        }
        for (int c = start; c < n; ++c) {
            subset.push_back(c);
            self(self, c + 1);
            subset.pop_back();
        }
    };
    recurse(recurse, 0);
    return {std::move(out),
            {ConstructionTag::Kind::Representable, HalfPlane::Upper,
             "det(A[S]) norms, r=" + std::to_string(r) + ", n=" + std::to_string(n)}};
}

Polynomial basis_generating_poly(const Matroid& m) {
    require(m.ground_size >= 1, "ground set must be non-empty");
    MatroidResult check = is_matroid_bases(m.bases, m.ground_size);
    require(check.ok, "basis family fails the exchange axiom");
    Polynomial out(m.ground_size);
    for (const auto& b : m.bases) {
        std::vector<int> exp(static_cast<size_t>(m.ground_size), 0);
        for (int e : b) exp[static_cast<size_t>(e)] = 1;
        out.add_term(exp, ComplexRational(1));
    }
    return out;
}

}  // namespace stabpoly
