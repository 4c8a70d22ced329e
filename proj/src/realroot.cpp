#include "stabpoly/realroot.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

namespace stabpoly {

namespace {

// Positive scalar s such that s*c has coprime integer entries; 1 for all-zero.
Rational positive_content_scale(const std::vector<Rational>& c) {
    mpz_class num_gcd = 0, den_lcm = 1;
    for (const auto& r : c) {
        if (r.is_zero()) continue;
        mpz_class n = r.numerator(), d = r.denominator();
        mpz_abs(n.get_mpz_t(), n.get_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    }
    if (num_gcd == 0) return Rational(1);
    return Rational(mpq_class(den_lcm, num_gcd));
}

// Content-free copy keeping the leading sign (safe inside Sturm chains).
RealUnivariate sign_preserving_primitive(const RealUnivariate& p) {
    if (p.is_zero()) return p;
    return p.scaled(positive_content_scale(p.coeffs()));
}

int sign_at_extended(const RealUnivariate& p, const ExtendedRational& x) {
    if (p.is_zero()) return 0;
    switch (x.kind) {
        case ExtendedRational::Finite:
            return p.evaluate(x.value).sign();
        case ExtendedRational::PosInf:
            return p.leading().sign();
        case ExtendedRational::NegInf:
            return p.degree() % 2 == 0 ? p.leading().sign() : -p.leading().sign();
    }
    return 0;
}

bool extended_less(const ExtendedRational& a, const ExtendedRational& b) {
    if (a.kind == ExtendedRational::NegInf) return b.kind != ExtendedRational::NegInf;
    if (a.kind == ExtendedRational::PosInf) return false;
    if (b.kind == ExtendedRational::PosInf) return true;
    if (b.kind == ExtendedRational::NegInf) return false;
    return a.value < b.value;
}

// Canonical Sturm chain of a squarefree polynomial, each element scaled to
// coprime integer coefficients without changing signs.
struct SturmChain {
    std::vector<RealUnivariate> seq;

    explicit SturmChain(const RealUnivariate& p) {
        seq.push_back(sign_preserving_primitive(p));
        RealUnivariate d = p.derivative();
        if (d.is_zero()) return;
        seq.push_back(sign_preserving_primitive(d));
        while (true) {
            const RealUnivariate& a = seq[seq.size() - 2];
            const RealUnivariate& b = seq.back();
            RealUnivariate r = -(a.divmod(b).second);
            if (r.is_zero()) break;
            seq.push_back(sign_preserving_primitive(r));
        }
    }

    int variations(const ExtendedRational& x) const {
        int count = 0, prev = 0;
        for (const auto& p : seq) {
            int s = sign_at_extended(p, x);
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++count;
            prev = s;
        }
        return count;
    }

    // Distinct roots in (lo, hi]; valid at root endpoints because the
    // variation count is right-continuous.
    int count_halfopen(const ExtendedRational& lo, const ExtendedRational& hi) const {
        int n = variations(lo) - variations(hi);
        ensure(n >= 0, "sturm chain produced a negative count");
        return n;
    }
};

// 1 + sum |a_k| / |lead|; every root lies strictly inside (-B, B).
Rational cauchy_bound(const RealUnivariate& p) {
    Rational lead_abs = p.leading().abs();
    Rational sum(1);
    for (int k = 0; k < p.degree(); ++k) sum += p.coeff(k).abs() / lead_abs;
    return sum;
}

}  // namespace

void RealUnivariate::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

RealUnivariate::RealUnivariate(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    trim();
}

RealUnivariate RealUnivariate::constant(Rational c) {
    std::vector<Rational> v;
    if (!c.is_zero()) v.push_back(std::move(c));
    return RealUnivariate(std::move(v));
}

Rational RealUnivariate::coeff(int k) const {
    require(k >= 0, "coefficient index must be nonnegative");
    if (k >= static_cast<int>(c_.size())) return Rational(0);
    return c_[k];
}

Rational RealUnivariate::leading() const {
    require(!is_zero(), "zero polynomial has no leading coefficient");
    return c_.back();
}

Rational RealUnivariate::evaluate(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

RealUnivariate RealUnivariate::derivative() const {
    std::vector<Rational> d;
    for (int k = 1; k < static_cast<int>(c_.size()); ++k) d.push_back(Rational(k) * c_[k]);
    return RealUnivariate(std::move(d));
}

RealUnivariate RealUnivariate::operator-() const {
    std::vector<Rational> v;
    v.reserve(c_.size());
    for (const auto& a : c_) v.push_back(-a);
    return RealUnivariate(std::move(v));
}

RealUnivariate operator+(const RealUnivariate& a, const RealUnivariate& b) {
    std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (size_t k = 0; k < a.c_.size(); ++k) v[k] += a.c_[k];
    for (size_t k = 0; k < b.c_.size(); ++k) v[k] += b.c_[k];
    return RealUnivariate(std::move(v));
}

RealUnivariate operator-(const RealUnivariate& a, const RealUnivariate& b) {
    return a + (-b);
}

RealUnivariate operator*(const RealUnivariate& a, const RealUnivariate& b) {
    if (a.is_zero() || b.is_zero()) return RealUnivariate();
    std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    return RealUnivariate(std::move(v));
}

RealUnivariate RealUnivariate::scaled(const Rational& s) const {
    std::vector<Rational> v;
    v.reserve(c_.size());
    for (const auto& a : c_) v.push_back(a * s);
    return RealUnivariate(std::move(v));
}

std::pair<RealUnivariate, RealUnivariate> RealUnivariate::divmod(const RealUnivariate& d) const {
    require(!d.is_zero(), "division by the zero polynomial");
    if (is_zero() || degree() < d.degree())
        return {RealUnivariate(), *this};
    std::vector<Rational> rem = c_;
    std::vector<Rational> quot(static_cast<size_t>(degree() - d.degree()) + 1, Rational(0));
    Rational lead = d.leading();
    for (int k = degree(); k >= d.degree(); --k) {
        Rational c = rem[static_cast<size_t>(k)];
        if (c.is_zero()) continue;
        Rational q = c / lead;
        quot[static_cast<size_t>(k - d.degree())] = q;
        for (int j = 0; j <= d.degree(); ++j)
            rem[static_cast<size_t>(k - d.degree() + j)] -= q * d.c_[static_cast<size_t>(j)];
    }
    return {RealUnivariate(std::move(quot)), RealUnivariate(std::move(rem))};
}

RealUnivariate RealUnivariate::deflate(const Rational& root) const {
    require(!is_zero() && degree() >= 1, "deflation needs degree >= 1");
    std::vector<Rational> q(static_cast<size_t>(degree()), Rational(0));
    Rational carry(0);
    for (int k = degree(); k >= 1; --k) {
        carry = c_[static_cast<size_t>(k)] + root * carry;
        q[static_cast<size_t>(k - 1)] = carry;
    }
    ensure((c_[0] + root * carry).is_zero(), "deflation point is not a root");
    return RealUnivariate(std::move(q));
}

RealUnivariate RealUnivariate::primitive() const {
    if (is_zero()) return *this;
    RealUnivariate p = scaled(positive_content_scale(c_));
    if (p.leading().sign() < 0) return -p;
    return p;
}

RealUnivariate gcd(const RealUnivariate& a, const RealUnivariate& b) {
    RealUnivariate x = a.primitive(), y = b.primitive();
    while (!y.is_zero()) {
        RealUnivariate r = x.divmod(y).second;
        x = std::move(y);
        y = sign_preserving_primitive(r);
    }
    return x.primitive();
}

std::vector<std::pair<RealUnivariate, int>> squarefree_decomposition(const RealUnivariate& p) {
    require(!p.is_zero(), "squarefree decomposition of the zero polynomial");
    std::vector<std::pair<RealUnivariate, int>> out;
    if (p.degree() <= 0) return out;
    RealUnivariate f = p.primitive();
    RealUnivariate fp = f.derivative();
    RealUnivariate g = gcd(f, fp);
    if (g.degree() == 0) {
        out.emplace_back(f, 1);
        return out;
    }
    auto exact_div = [](const RealUnivariate& n, const RealUnivariate& d) {
        auto qr = n.divmod(d);
        ensure(qr.second.is_zero(), "inexact division in squarefree decomposition");
        return qr.first;
    };
    RealUnivariate b = exact_div(f, g);
    RealUnivariate c = exact_div(fp, g);
    RealUnivariate d = c - b.derivative();
    int mult = 1;
    while (b.degree() > 0) {
        RealUnivariate a = gcd(b, d);
        if (a.degree() > 0) out.emplace_back(a, mult);
        b = exact_div(b, a);
        c = exact_div(d, a);
        d = c - b.derivative();
        ++mult;
    }
    return out;
}

RealUnivariate squarefree_part(const RealUnivariate& p) {
    require(!p.is_zero(), "squarefree part of the zero polynomial");
    RealUnivariate out = RealUnivariate::constant(Rational(1));
    for (const auto& [factor, mult] : squarefree_decomposition(p)) out = out * factor;
    return out.primitive();
}

int sturm_count(const RealUnivariate& p, const ExtendedRational& lo,
                const ExtendedRational& hi) {
    require(!p.is_zero(), "root counting needs a nonzero polynomial");
    require(extended_less(lo, hi), "root counting needs lo < hi");
    if (p.degree() <= 0) return 0;
    SturmChain chain(squarefree_part(p));
    return chain.count_halfopen(lo, hi);
}

bool is_real_rooted(const RealUnivariate& p) {
    require(!p.is_zero(), "real-rootedness of the zero polynomial is undefined");
    if (p.degree() <= 0) return true;
    RealUnivariate s = squarefree_part(p);
    int real = sturm_count(s, ExtendedRational::neg_inf(), ExtendedRational::pos_inf());
    return real == s.degree();
}

void IsolatedRoot::refine_step() {
    if (exact) return;
    Rational mid = (lo + hi) / Rational(2);
    int sm = factor.evaluate(mid).sign();
    if (sm == 0) {
        exact = true;
        lo = mid;
        hi = mid;
        return;
    }
    if (factor.evaluate(lo).sign() != sm)
        hi = mid;
    else
        lo = mid;
}

void IsolatedRoot::refine_below_width(const Rational& width) {
    require(width.sign() > 0, "refinement width must be positive");
    while (!exact && hi - lo >= width) refine_step();
}

namespace {

// Roots of one squarefree factor, isolated by Sturm bisection over (-B, B].
std::vector<IsolatedRoot> isolate_factor(const RealUnivariate& q, int multiplicity) {
    std::vector<IsolatedRoot> out;
    if (q.degree() <= 0) return out;
    SturmChain chain(q);
    std::map<Rational, int> var_cache;
    auto vars_at = [&](const Rational& x) {
        auto it = var_cache.find(x);
        if (it != var_cache.end()) return it->second;
        int v = chain.variations(ExtendedRational::at(x));
        var_cache.emplace(x, v);
        return v;
    };
    Rational bound = cauchy_bound(q);
    struct Piece {
        Rational lo, hi;
        int vlo, vhi;
    };
    std::vector<Piece> work;
    work.push_back({-bound, bound, vars_at(-bound), vars_at(bound)});
    auto emit_exact = [&](Rational at) {
        IsolatedRoot r;
        r.lo = at;
        r.hi = at;
        r.exact = true;
        r.multiplicity = multiplicity;
        r.factor = q;
        out.push_back(std::move(r));
    };
    auto emit = [&](Rational a, Rational b, int vb) {
        // Exactly one root in (a, b].
        if (q.evaluate(b).is_zero()) {
            emit_exact(b);
            return;
        }
        // Root lies in the open interval; push the left endpoint off any
        // other root of q so both endpoints carry a sign.
        while (q.evaluate(a).is_zero()) {
            Rational mid = (a + b) / Rational(2);
            if (q.evaluate(mid).is_zero()) {
                emit_exact(mid);
                return;
            }
            int vm = vars_at(mid);
            if (vm - vb == 1) {
                a = mid;  // root is in (mid, b)
            } else {
                b = mid;
                vb = vm;
            }
        }
        IsolatedRoot r;
        r.lo = a;
        r.hi = b;
        r.exact = false;
        r.multiplicity = multiplicity;
        r.factor = q;
        out.push_back(std::move(r));
    };
    while (!work.empty()) {
        Piece p = work.back();
        work.pop_back();
        int count = p.vlo - p.vhi;
        if (count <= 0) continue;
        if (count == 1) {
            emit(p.lo, p.hi, p.vhi);
            continue;
        }
        Rational mid = (p.lo + p.hi) / Rational(2);
        int vm = vars_at(mid);
        work.push_back({mid, p.hi, vm, p.vhi});
        work.push_back({p.lo, mid, p.vlo, vm});
    }
    std::sort(out.begin(), out.end(), [](const IsolatedRoot& a, const IsolatedRoot& b) {
        return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
    });
    return out;
}

// Orders roots of coprime factors; refines in place until separated.
int compare_separated(IsolatedRoot& u, IsolatedRoot& v) {
    while (true) {
        if (u.exact && v.exact) {
            ensure(u.lo != v.lo, "coprime factors shared a root");
            return u.lo < v.lo ? -1 : 1;
        }
        if (u.exact) {
            if (u.lo <= v.lo) return -1;
            if (u.lo >= v.hi) return 1;
            // Split v at the exact point, a non-root of v's factor.
            ensure(!v.factor.evaluate(u.lo).is_zero(), "coprime factors shared a root");
            if (v.factor.evaluate(v.lo).sign() != v.factor.evaluate(u.lo).sign())
                v.hi = u.lo;
            else
                v.lo = u.lo;
            continue;
        }
        if (v.exact) return -compare_separated(v, u);
        if (u.hi <= v.lo) return -1;
        if (v.hi <= u.lo) return 1;
        u.refine_step();
        v.refine_step();
    }
}

}  // namespace

IsolatingIntervals isolate_roots(const RealUnivariate& p) {
    require(!p.is_zero(), "root isolation of the zero polynomial");
    std::vector<std::vector<IsolatedRoot>> lists;
    for (const auto& [factor, mult] : squarefree_decomposition(p))
        lists.push_back(isolate_factor(factor, mult));
    // Merge the per-factor sorted lists; the comparator leaves every compared
    // pair disjoint, so the result is sorted with pairwise-disjoint intervals.
    IsolatingIntervals result;
    std::vector<size_t> pos(lists.size(), 0);
    while (true) {
        int best = -1;
        for (size_t i = 0; i < lists.size(); ++i) {
            if (pos[i] >= lists[i].size()) continue;
            if (best < 0 ||
                compare_separated(lists[i][pos[i]], lists[static_cast<size_t>(best)][pos[static_cast<size_t>(best)]]) < 0)
                best = static_cast<int>(i);
        }
        if (best < 0) break;
        result.roots.push_back(std::move(lists[static_cast<size_t>(best)][pos[static_cast<size_t>(best)]]));
        ++pos[static_cast<size_t>(best)];
    }
    return result;
}

RealUnivariate wronskian(const RealUnivariate& g, const RealUnivariate& h) {
    return g.derivative() * h - g * h.derivative();
}

bool wronskian_nonpositive(const RealUnivariate& w) {
    if (w.is_zero()) return true;
    if (w.degree() % 2 != 0) return false;
    if (w.leading().sign() > 0) return false;
    if (w.degree() == 0) return true;
    // Even degree, negative leading coefficient: nonpositive everywhere iff
    // every real root has even multiplicity.
    for (const auto& [factor, mult] : squarefree_decomposition(w)) {
        if (mult % 2 == 0) continue;
        if (sturm_count(factor, ExtendedRational::neg_inf(), ExtendedRational::pos_inf()) > 0)
            return false;
    }
    return true;
}

namespace {

// -1 / 0 / +1 for roots that may coincide; u belongs to g, v to h, and d is
// a gcd of g and h. A root of d inside both isolating intervals forces u = v
// because each open interval holds exactly one root of its full polynomial.
int compare_shared(IsolatedRoot& u, IsolatedRoot& v, const RealUnivariate& d) {
    while (true) {
        if (u.exact && v.exact) {
            if (u.lo == v.lo) return 0;
            return u.lo < v.lo ? -1 : 1;
        }
        if (u.exact) {
            if (u.lo <= v.lo) return -1;
            if (u.lo >= v.hi) return 1;
            if (v.factor.evaluate(u.lo).is_zero()) return 0;
            if (v.factor.evaluate(v.lo).sign() != v.factor.evaluate(u.lo).sign())
                v.hi = u.lo;
            else
                v.lo = u.lo;
            continue;
        }
        if (v.exact) return -compare_shared(v, u, d);
        if (u.hi <= v.lo) return -1;
        if (v.hi <= u.lo) return 1;
        if (d.degree() >= 1) {
            Rational jlo = std::max(u.lo, v.lo);
            Rational jhi = std::min(u.hi, v.hi);
            if (jlo < jhi) {
                int cnt = sturm_count(d, ExtendedRational::at(jlo), ExtendedRational::at(jhi));
                if (d.evaluate(jhi).is_zero()) --cnt;  // endpoint lies outside the open overlap
                if (cnt > 0) return 0;
            }
        }
        u.refine_step();
        v.refine_step();
    }
}

struct RootSequence {
    IsolatingIntervals iso;
    std::vector<size_t> expanded;  // index per root copy, multiplicity times
};

RootSequence expand_roots(const RealUnivariate& p) {
    RootSequence rs;
    rs.iso = isolate_roots(p);
    for (size_t i = 0; i < rs.iso.roots.size(); ++i)
        for (int k = 0; k < rs.iso.roots[i].multiplicity; ++k) rs.expanded.push_back(i);
    return rs;
}

// Weak weaving with `lead` taking the smallest root.
bool weaves(const std::vector<size_t>& lead, const std::vector<size_t>& follow,
            const std::vector<std::vector<int>>& cmp_lead_follow) {
    size_t p = lead.size(), q = follow.size();
    if (p != q && p != q + 1) return false;
    for (size_t k = 0; k < q; ++k)
        if (cmp_lead_follow[lead[k]][follow[k]] > 0) return false;
    for (size_t k = 0; k + 1 < p; ++k)
        if (cmp_lead_follow[lead[k + 1]][follow[k]] < 0) return false;
    return true;
}

enum class InterlaceStatus { Yes, No, NotRealRooted };

InterlaceStatus interlace_status(const RealUnivariate& g, const RealUnivariate& h) {
    if (g.is_zero() || h.is_zero()) return InterlaceStatus::Yes;
    if (g.degree() >= 1 && !is_real_rooted(g)) return InterlaceStatus::NotRealRooted;
    if (h.degree() >= 1 && !is_real_rooted(h)) return InterlaceStatus::NotRealRooted;
    if (g.degree() <= 1 && h.degree() <= 1) return InterlaceStatus::Yes;
    int dg = g.degree(), dh = h.degree();
    if (dg - dh > 1 || dh - dg > 1) return InterlaceStatus::No;
    RootSequence rg = expand_roots(g);
    RootSequence rh = expand_roots(h);
    RealUnivariate d = gcd(g, h);
    std::vector<std::vector<int>> cmp(rg.iso.roots.size(),
                                      std::vector<int>(rh.iso.roots.size(), 0));
    for (size_t i = 0; i < rg.iso.roots.size(); ++i)
        for (size_t j = 0; j < rh.iso.roots.size(); ++j)
            cmp[i][j] = compare_shared(rg.iso.roots[i], rh.iso.roots[j], d);
    std::vector<std::vector<int>> cmp_t(rh.iso.roots.size(),
                                        std::vector<int>(rg.iso.roots.size(), 0));
    for (size_t i = 0; i < rg.iso.roots.size(); ++i)
        for (size_t j = 0; j < rh.iso.roots.size(); ++j) cmp_t[j][i] = -cmp[i][j];
    bool ok = false;
    if (dg >= dh) ok = ok || weaves(rg.expanded, rh.expanded, cmp);
    if (dh >= dg) ok = ok || weaves(rh.expanded, rg.expanded, cmp_t);
    return ok ? InterlaceStatus::Yes : InterlaceStatus::No;
}

}  // namespace

bool interlaces(const RealUnivariate& g, const RealUnivariate& h) {
    InterlaceStatus s = interlace_status(g, h);
    require(s != InterlaceStatus::NotRealRooted, "interlacing needs real-rooted arguments");
    return s == InterlaceStatus::Yes;
}

bool proper_position(const RealUnivariate& g, const RealUnivariate& h) {
    if (g.is_zero() && h.is_zero()) return true;
    if (g.is_zero()) return h.degree() <= 0 || is_real_rooted(h);
    if (h.is_zero()) return g.degree() <= 0 || is_real_rooted(g);
    InterlaceStatus s = interlace_status(g, h);
    if (s != InterlaceStatus::Yes) return false;
    return wronskian_nonpositive(wronskian(g, h));
}

bool hermite_biehler_stable(const RealUnivariate& h, const RealUnivariate& g) {
    require(!(h.is_zero() && g.is_zero()), "stability of the zero polynomial is undefined");
    return proper_position(g, h);
}

}  // namespace stabpoly
