#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "pwq/perm.hpp"
#include "pwq/rational.hpp"

namespace pwq {

// Dense exponent vector of fixed length n (the ring arity).
using Exponents = std::vector<int>;

inline int total_degree(const Exponents& e) {
    int d = 0;
    for (int x : e) d += x;
    return d;
}

// Both orders put 1 at the bottom and are multiplicative. lex compares at
// the largest index where the exponents differ (x_n > ... > x_1), the
// convention under which the standard monomial bases of the packed-word
// ideals line up with coinversion codes. grlex refines total degree by the
// same tie-break.
enum class MonomialOrder { lex, grlex };

const char* order_name(MonomialOrder ord);
MonomialOrder order_from_name(const std::string& name);

// <0, 0, >0 for a < b, a == b, a > b under ord.
int monomial_cmp(const Exponents& a, const Exponents& b, MonomialOrder ord);
bool monomial_divides(const Exponents& a, const Exponents& b);  // x^a | x^b

// Strict "greater" comparator; maps keyed by it iterate leading term first.
struct TermCmp {
    MonomialOrder ord = MonomialOrder::lex;
    bool operator()(const Exponents& a, const Exponents& b) const {
        return monomial_cmp(a, b, ord) > 0;
    }
};

// Sparse multivariate polynomial over Q. Terms live in a map ordered
// descending by the polynomial's monomial order; no zero coefficient is
// ever stored. Values are immutable in spirit: every operation returns a
// fresh polynomial.
class Polynomial {
public:
    using TermMap = std::map<Exponents, Rational, TermCmp>;

    explicit Polynomial(int arity, MonomialOrder ord = MonomialOrder::lex)
        : arity_(arity), terms_(TermCmp{ord}) {
        if (arity < 0) throw std::invalid_argument("Polynomial: negative arity");
    }

    static Polynomial constant(int arity, const Rational& c,
                               MonomialOrder ord = MonomialOrder::lex);
    static Polynomial variable(int arity, int i, MonomialOrder ord = MonomialOrder::lex);
    static Polynomial monomial(Exponents e, const Rational& c,
                               MonomialOrder ord = MonomialOrder::lex);

    int arity() const { return arity_; }
    MonomialOrder order() const { return terms_.key_comp().ord; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    int degree() const;  // max total degree; -1 for the zero polynomial
    bool is_homogeneous() const;

    Rational coeff(const Exponents& e) const;
    void add_term(const Exponents& e, const Rational& c);

    Polynomial with_order(MonomialOrder ord) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& c, const Polynomial& p);

    // p * c * x^shift in one pass.
    Polynomial times_monomial(const Exponents& shift, const Rational& c) const;

    // Leading data under the stored order; throws std::domain_error on zero.
    const Exponents& leading_monomial() const;
    const Rational& leading_coeff() const;
    Polynomial top_degree_form() const;  // tau(f): highest total-degree part

    Rational evaluate(std::span<const Rational> point) const;
    Polynomial apply_permutation(const Permutation& pi) const;  // x_i -> x_{pi(i)}

    // Division by a single divisor with zero remainder required.
    Polynomial divided_exactly(const Polynomial& divisor) const;

    // Mathematical equality, independent of the stored orders.
    bool operator==(const Polynomial& o) const;

    std::string str() const;

private:
    int arity_;
    TermMap terms_;
};

// Leading monomial of f under ord, scanning if ord differs from the stored
// order; throws std::domain_error on the zero polynomial.
Exponents leading_monomial(const Polynomial& f, MonomialOrder ord);

// e_d on the full variable set; e_0 = 1, e_d = 0 for d < 0 or d > #vars.
Polynomial elementary_symmetric(int arity, int d, MonomialOrder ord = MonomialOrder::lex);
// e_d^{(omit)}: the variable x_omit (0-based) left out.
Polynomial elementary_symmetric_omitting(int arity, int d, int omit,
                                         MonomialOrder ord = MonomialOrder::lex);
// e_d on an arbitrary subset of 0-based variable indices.
Polynomial elementary_symmetric_on(int arity, int d, const std::vector<int>& vars,
                                   MonomialOrder ord = MonomialOrder::lex);

// h_b evaluated at a point: sum of all degree-b monomials in the values.
// h_0 = 1, h_b = 0 for b < 0.
Rational complete_homogeneous_eval(int b, std::span<const Rational> values);

// Demazure character (key polynomial) of a composition gamma, in the
// convention pinned by the calibration properties of this library: the
// textbook divided-difference key of the reversed composition, so that the
// lex leading monomial of demazure_character(gamma(S)) is gamma(S)*.
Polynomial demazure_character(const std::vector<int>& gamma,
                              MonomialOrder ord = MonomialOrder::lex);

}  // namespace pwq
