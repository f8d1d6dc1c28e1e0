#include "pwq/polyring.hpp"

#include <algorithm>
#include <sstream>

namespace pwq {

const char* order_name(MonomialOrder ord) {
    return ord == MonomialOrder::lex ? "lex" : "grlex";
}

MonomialOrder order_from_name(const std::string& name) {
    if (name == "lex") return MonomialOrder::lex;
    if (name == "grlex") return MonomialOrder::grlex;
    throw std::invalid_argument("unknown monomial order '" + name + "'");
}

int monomial_cmp(const Exponents& a, const Exponents& b, MonomialOrder ord) {
    if (a.size() != b.size()) throw std::invalid_argument("monomial_cmp: arity mismatch");
    if (ord == MonomialOrder::grlex) {
        int da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db ? -1 : 1;
    }
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

bool monomial_divides(const Exponents& a, const Exponents& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Polynomial Polynomial::constant(int arity, const Rational& c, MonomialOrder ord) {
    Polynomial p(arity, ord);
    p.add_term(Exponents(arity, 0), c);
    return p;
}

Polynomial Polynomial::variable(int arity, int i, MonomialOrder ord) {
    if (i < 0 || i >= arity) throw std::invalid_argument("Polynomial::variable: index out of range");
    Exponents e(arity, 0);
    e[i] = 1;
    return monomial(std::move(e), Rational(1), ord);
}

Polynomial Polynomial::monomial(Exponents e, const Rational& c, MonomialOrder ord) {
    Polynomial p(static_cast<int>(e.size()), ord);
    p.add_term(std::move(e), c);
    return p;
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
    return d;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = total_degree(terms_.begin()->first);
    for (const auto& [e, c] : terms_)
        if (total_degree(e) != d) return false;
    return true;
}

Rational Polynomial::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
    if (static_cast<int>(e.size()) != arity_)
        throw std::invalid_argument("Polynomial::add_term: arity mismatch");
    for (int x : e)
        if (x < 0) throw std::invalid_argument("Polynomial::add_term: negative exponent");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::with_order(MonomialOrder ord) const {
    if (ord == order()) return *this;
    Polynomial out(arity_, ord);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, c);
    return out;
}

Polynomial Polynomial::operator-() const {
    Polynomial out(*this);
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (arity_ != o.arity_) throw std::invalid_argument("Polynomial: arity mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (arity_ != o.arity_) throw std::invalid_argument("Polynomial: arity mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.arity_ != b.arity_) throw std::invalid_argument("Polynomial: arity mismatch");
    Polynomial out(a.arity_, a.order());
    Exponents e(a.arity_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (int i = 0; i < a.arity_; ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
    if (c == 0) return Polynomial(p.arity(), p.order());
    Polynomial out(p);
    for (auto& [e, v] : out.terms_) v *= c;
    return out;
}

Polynomial Polynomial::times_monomial(const Exponents& shift, const Rational& c) const {
    if (static_cast<int>(shift.size()) != arity_)
        throw std::invalid_argument("times_monomial: arity mismatch");
    Polynomial out(arity_, order());
    if (c == 0) return out;
    Exponents e(arity_);
    for (const auto& [ea, ca] : terms_) {
        for (int i = 0; i < arity_; ++i) e[i] = ea[i] + shift[i];
        out.terms_.emplace(e, ca * c);
    }
    return out;
}

const Exponents& Polynomial::leading_monomial() const {
    if (terms_.empty()) throw std::domain_error("leading_monomial of zero polynomial");
    return terms_.begin()->first;
}

const Rational& Polynomial::leading_coeff() const {
    if (terms_.empty()) throw std::domain_error("leading_coeff of zero polynomial");
    return terms_.begin()->second;
}

Polynomial Polynomial::top_degree_form() const {
    if (terms_.empty()) throw std::domain_error("top_degree_form of zero polynomial");
    int d = degree();
    Polynomial out(arity_, order());
    for (const auto& [e, c] : terms_)
        if (total_degree(e) == d) out.terms_.emplace(e, c);
    return out;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
    if (static_cast<int>(point.size()) != arity_)
        throw std::invalid_argument("evaluate: point length mismatch");
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (int i = 0; i < arity_; ++i)
            if (e[i] != 0) t *= rational_pow(point[i], static_cast<unsigned>(e[i]));
        acc += t;
    }
    return acc;
}

Polynomial Polynomial::apply_permutation(const Permutation& pi) const {
    if (pi.size() != arity_) throw std::invalid_argument("apply_permutation: arity mismatch");
    Polynomial out(arity_, order());
    Exponents e(arity_);
    for (const auto& [ea, c] : terms_) {
        for (int i = 0; i < arity_; ++i) e[pi(i)] = ea[i];
        out.terms_.emplace(e, c);
    }
    return out;
}

Polynomial Polynomial::divided_exactly(const Polynomial& divisor) const {
    if (arity_ != divisor.arity_) throw std::invalid_argument("divided_exactly: arity mismatch");
    if (divisor.is_zero()) throw std::domain_error("divided_exactly: division by zero");
    Polynomial d = divisor.with_order(order());
    const Exponents& dl = d.leading_monomial();
    const Rational& dc = d.leading_coeff();
    Polynomial quo(arity_, order());
    Polynomial work = *this;
    Exponents shift(arity_);
    while (!work.is_zero()) {
        const Exponents& le = work.leading_monomial();
        if (!monomial_divides(dl, le))
            throw std::domain_error("divided_exactly: nonzero remainder");
        for (int i = 0; i < arity_; ++i) shift[i] = le[i] - dl[i];
        Rational f = work.leading_coeff() / dc;
        quo.add_term(shift, f);
        work -= d.times_monomial(shift, f);
    }
    return quo;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (arity_ != o.arity_ || terms_.size() != o.terms_.size()) return false;
    for (const auto& [e, c] : terms_) {
        auto it = o.terms_.find(e);
        if (it == o.terms_.end() || it->second != c) return false;
    }
    return true;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool unit = (a == 1), any = false;
        std::ostringstream mono;
        for (int i = 0; i < arity_; ++i) {
            if (e[i] == 0) continue;
            if (any) mono << "*";
            any = true;
            mono << "x" << (i + 1);
            if (e[i] > 1) mono << "^" << e[i];
        }
        if (!any) os << a.get_str();
        else {
            if (!unit) os << a.get_str() << "*";
            os << mono.str();
        }
    }
    return os.str();
}

Exponents leading_monomial(const Polynomial& f, MonomialOrder ord) {
    if (f.is_zero()) throw std::domain_error("leading_monomial of zero polynomial");
    if (ord == f.order()) return f.leading_monomial();
    const Exponents* best = nullptr;
    for (const auto& [e, c] : f.terms())
        if (!best || monomial_cmp(e, *best, ord) > 0) best = &e;
    return *best;
}

Polynomial elementary_symmetric_on(int arity, int d, const std::vector<int>& vars,
                                   MonomialOrder ord) {
    std::vector<bool> seen(arity, false);
    for (int v : vars) {
        if (v < 0 || v >= arity)
            throw std::invalid_argument("elementary_symmetric: variable index out of range");
        if (seen[v]) throw std::invalid_argument("elementary_symmetric: repeated variable");
        seen[v] = true;
    }
    Polynomial out(arity, ord);
    int m = static_cast<int>(vars.size());
    if (d < 0 || d > m) return out;  // e_d = 0 outside 0..m
    if (d == 0) return Polynomial::constant(arity, 1, ord);
    // walk all d-subsets of vars
    std::vector<int> idx(d);
    for (int i = 0; i < d; ++i) idx[i] = i;
    while (true) {
        Exponents e(arity, 0);
        for (int i : idx) e[vars[i]] = 1;
        out.add_term(e, Rational(1));
        int i = d - 1;
        while (i >= 0 && idx[i] == m - d + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < d; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

Polynomial elementary_symmetric(int arity, int d, MonomialOrder ord) {
    std::vector<int> vars(arity);
    for (int i = 0; i < arity; ++i) vars[i] = i;
    return elementary_symmetric_on(arity, d, vars, ord);
}

Polynomial elementary_symmetric_omitting(int arity, int d, int omit, MonomialOrder ord) {
    if (omit < 0 || omit >= arity)
        throw std::invalid_argument("elementary_symmetric_omitting: index out of range");
    std::vector<int> vars;
    vars.reserve(arity - 1);
    for (int i = 0; i < arity; ++i)
        if (i != omit) vars.push_back(i);
    return elementary_symmetric_on(arity, d, vars, ord);
}

Rational complete_homogeneous_eval(int b, std::span<const Rational> values) {
    if (b < 0) return Rational(0);
    // h[j] after processing i values = h_j(v_1..v_i)
    std::vector<Rational> h(b + 1, Rational(0));
    h[0] = 1;
    for (const Rational& v : values)
        for (int j = 1; j <= b; ++j) h[j] += v * h[j - 1];
    return h[b];
}

namespace {

// Textbook key polynomial: x^delta for weakly decreasing delta, otherwise
// pi_i applied across the first ascent, pi_i f = (x_i f - x_{i+1} s_i f) / (x_i - x_{i+1}).
Polynomial key_polynomial(std::vector<int> delta, int n, MonomialOrder ord) {
    for (int i = 0; i + 1 < n; ++i) {
        if (delta[i] < delta[i + 1]) {
            std::swap(delta[i], delta[i + 1]);
            Polynomial f = key_polynomial(delta, n, ord);
            Polynomial sf = f.apply_permutation(Permutation::transposition(n, i, i + 1));
            Polynomial xi = Polynomial::variable(n, i, ord);
            Polynomial xj = Polynomial::variable(n, i + 1, ord);
            return (xi * f - xj * sf).divided_exactly(xi - xj);
        }
    }
    Exponents e(delta.begin(), delta.end());
    return Polynomial::monomial(std::move(e), Rational(1), ord);
}

}  // namespace

Polynomial demazure_character(const std::vector<int>& gamma, MonomialOrder ord) {
    for (int g : gamma)
        if (g < 0) throw std::invalid_argument("demazure_character: negative entry");
    std::vector<int> rev(gamma.rbegin(), gamma.rend());
    return key_polynomial(std::move(rev), static_cast<int>(gamma.size()), ord);
}

}  // namespace pwq
