#include "stabpoly/polynomial.hpp"

#include <algorithm>
#include <numeric>

namespace stabpoly {

Polynomial Polynomial::constant(int nvars, ComplexRational c) {
    Polynomial p(nvars);
    p.add_term(ExponentVec(nvars, 0), c);
    return p;
}

Polynomial Polynomial::variable(int nvars, int i) {
    require(i >= 0 && i < nvars, "variable index out of range");
    ExponentVec e(nvars, 0);
    e[i] = 1;
    return monomial(nvars, std::move(e), ComplexRational(1));
}

Polynomial Polynomial::monomial(int nvars, ExponentVec exp, ComplexRational c) {
    Polynomial p(nvars);
    p.add_term(exp, c);
    return p;
}

ComplexRational Polynomial::coeff(const ExponentVec& exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? ComplexRational() : it->second;
}

void Polynomial::add_term(const ExponentVec& exp, const ComplexRational& c) {
    require(static_cast<int>(exp.size()) == nvars_, "exponent vector length mismatch");
    for (int e : exp) require(e >= 0, "negative exponent");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(exp, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    require(nvars_ == o.nvars_, "variable count mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    require(nvars_ == o.nvars_, "variable count mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require(a.nvars_ == b.nvars_, "variable count mismatch");
    Polynomial r(a.nvars_);
    ExponentVec e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

Polynomial& Polynomial::operator*=(const ComplexRational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

bool Polynomial::is_real() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return t.second.is_real(); });
}

std::pair<Polynomial, Polynomial> Polynomial::real_imag_parts() const {
    Polynomial h(nvars_), g(nvars_);
    for (const auto& [e, c] : terms_) {
        if (!c.re.is_zero()) h.terms_.emplace(e, ComplexRational(c.re));
        if (!c.im.is_zero()) g.terms_.emplace(e, ComplexRational(c.im));
    }
    return {h, g};
}

Polynomial Polynomial::partial_derivative(int i) const {
    require(i >= 0 && i < nvars_, "variable index out of range");
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[i] == 0) continue;
        ExponentVec d = e;
        d[i] -= 1;
        r.add_term(d, c * ComplexRational(e[i]));
    }
    return r;
}

ExponentVec Polynomial::degree_vector() const {
    ExponentVec d(nvars_, 0);
    for (const auto& [e, c] : terms_)
        for (int i = 0; i < nvars_; ++i) d[i] = std::max(d[i], e[i]);
    return d;
}

int Polynomial::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_)
        d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
}

bool Polynomial::is_multiaffine() const {
    for (const auto& [e, c] : terms_)
        for (int x : e)
            if (x > 1) return false;
    return true;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = std::accumulate(terms_.begin()->first.begin(), terms_.begin()->first.end(), 0);
    for (const auto& [e, c] : terms_)
        if (std::accumulate(e.begin(), e.end(), 0) != d) return false;
    return true;
}

bool Polynomial::depends_on(int i) const {
    require(i >= 0 && i < nvars_, "variable index out of range");
    for (const auto& [e, c] : terms_)
        if (e[i] > 0) return true;
    return false;
}

std::complex<double> Polynomial::evaluate(const std::vector<std::complex<double>>& point) const {
    require(static_cast<int>(point.size()) == nvars_, "point dimension mismatch");
    std::complex<double> acc = 0.0;
    for (const auto& [e, c] : terms_) {
        std::complex<double> t(c.re.to_double(), c.im.to_double());
        for (int i = 0; i < nvars_; ++i)
            for (int k = 0; k < e[i]; ++k) t *= point[i];
        acc += t;
    }
    return acc;
}

ComplexRational Polynomial::evaluate_exact(const std::vector<ComplexRational>& point) const {
    require(static_cast<int>(point.size()) == nvars_, "point dimension mismatch");
    ComplexRational acc;
    for (const auto& [e, c] : terms_) {
        ComplexRational t = c;
        for (int i = 0; i < nvars_; ++i)
            for (int k = 0; k < e[i]; ++k) t *= point[i];
        acc += t;
    }
    return acc;
}

Rational Polynomial::evaluate_real(const std::vector<Rational>& point) const {
    require(static_cast<int>(point.size()) == nvars_, "point dimension mismatch");
    Rational acc;
    for (const auto& [e, c] : terms_) {
        require(c.is_real(), "evaluate_real on non-real polynomial");
        Rational t = c.re;
        for (int i = 0; i < nvars_; ++i)
            for (int k = 0; k < e[i]; ++k) t *= point[i];
        acc += t;
    }
    return acc;
}

Polynomial reciprocal(const Polynomial& f, const ExponentVec& kappa) {
    require(static_cast<int>(kappa.size()) == f.nvars(), "kappa length mismatch");
    ExponentVec deg = f.degree_vector();
    for (int i = 0; i < f.nvars(); ++i)
        require(kappa[i] >= deg[i], "kappa below degree in some variable");
    Polynomial r(f.nvars());
    ExponentVec e(f.nvars());
    for (const auto& [a, c] : f.terms()) {
        for (int i = 0; i < f.nvars(); ++i) e[i] = kappa[i] - a[i];
        r.add_term(e, c);
    }
    return r;
}

namespace {

Polynomial iterated_derivative(Polynomial f, const ExponentVec& order) {
    for (int i = 0; i < static_cast<int>(order.size()); ++i)
        for (int k = 0; k < order[i]; ++k) f = f.partial_derivative(i);
    return f;
}

}  // namespace

Polynomial interval_restriction(const Polynomial& f, const ExponentVec& alpha,
                                const ExponentVec& beta) {
    const int n = f.nvars();
    require(static_cast<int>(alpha.size()) == n && static_cast<int>(beta.size()) == n,
            "alpha/beta length mismatch");
    ExponentVec deg = f.degree_vector();
    for (int i = 0; i < n; ++i) {
        require(alpha[i] <= beta[i], "alpha must be <= beta componentwise");
        require(alpha[i] >= 0 && beta[i] <= deg[i], "window outside [0, degree vector]");
    }

    ExponentVec kappa_minus_beta(n);
    for (int i = 0; i < n; ++i) kappa_minus_beta[i] = deg[i] - beta[i];
    Polynomial g = iterated_derivative(reciprocal(f, deg), kappa_minus_beta);
    Polynomial result = iterated_derivative(reciprocal(g, beta), alpha);

    // Postcondition: support equals the shifted window of supp(f).
    std::map<ExponentVec, bool> expected;
    for (const auto& [gamma, c] : f.terms()) {
        bool in = true;
        for (int i = 0; i < n; ++i)
            if (gamma[i] < alpha[i] || gamma[i] > beta[i]) { in = false; break; }
        if (!in) continue;
        ExponentVec shifted(n);
        for (int i = 0; i < n; ++i) shifted[i] = gamma[i] - alpha[i];
        expected.emplace(std::move(shifted), true);
    }
    ensure(expected.size() == result.term_count(), "interval_restriction support mismatch");
    for (const auto& [e, c] : result.terms())
        ensure(expected.count(e) == 1, "interval_restriction support mismatch");
    return result;
}

Polynomial restrict_line(const Polynomial& f, const std::vector<Rational>& base,
                         const std::vector<Rational>& direction) {
    const int n = f.nvars();
    require(static_cast<int>(base.size()) == n && static_cast<int>(direction.size()) == n,
            "line dimension mismatch");
    for (const Rational& d : direction)
        require(d.sign() > 0, "direction must be strictly positive");

    // Univariate factors base_i + t*direction_i, multiplied per exponent.
    Polynomial result(1);
    for (const auto& [e, c] : f.terms()) {
        Polynomial term = Polynomial::constant(1, c);
        for (int i = 0; i < n; ++i) {
            if (e[i] == 0) continue;
            Polynomial lin(1);
            lin.add_term({0}, ComplexRational(base[i]));
            lin.add_term({1}, ComplexRational(direction[i]));
            for (int k = 0; k < e[i]; ++k) term *= lin;
        }
        result += term;
    }
    return result;
}

std::optional<PhaseNormalized> phase_normalize(const Polynomial& f) {
    require(!f.is_zero(), "phase_normalize of zero polynomial");
    const ComplexRational c0 = f.terms().begin()->second;
    Polynomial scaled(f.nvars());
    for (const auto& [e, c] : f.terms()) {
        // c / c0 must be a positive rational; test via c * conj(c0).
        ComplexRational u = c * c0.conj();
        if (!u.im.is_zero() || u.re.sign() <= 0) return std::nullopt;
        scaled.add_term(e, ComplexRational(u.re / c0.norm()));
    }
    // Rescale to primitive integer coefficients (positive leading by
    // construction: every ratio is positive).
    mpz_class num_gcd = 0, den_lcm = 1;
    for (const auto& [e, c] : scaled.terms()) {
        mpz_class g, l;
        mpz_gcd(g.get_mpz_t(), num_gcd.get_mpz_t(), c.re.numerator().get_mpz_t());
        num_gcd = g;
        mpz_lcm(l.get_mpz_t(), den_lcm.get_mpz_t(), c.re.denominator().get_mpz_t());
        den_lcm = l;
    }
    ComplexRational scale{Rational(mpq_class(den_lcm, num_gcd))};
    scaled *= scale;
    // Phase is the exact scalar with f = phase * real_form.
    const ExponentVec& e0 = f.terms().begin()->first;
    ComplexRational phase = c0 / scaled.coeff(e0);
    Polynomial check = scaled;
    check *= phase;
    ensure(check == f, "phase normalization lost exactness");
    return PhaseNormalized{std::move(scaled), std::move(phase)};
}

}  // namespace stabpoly
