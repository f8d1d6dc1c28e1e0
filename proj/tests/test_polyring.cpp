#include <doctest.h>

#include <random>

#include "pwq/polyring.hpp"

using namespace pwq;

namespace {

Polynomial X(int arity, int i) { return Polynomial::variable(arity, i); }
Polynomial C(int arity, long v) { return Polynomial::constant(arity, Rational(v)); }

}  // namespace

TEST_CASE("monomial order basics") {
    // lex compares at the largest differing index: x_n > ... > x_1
    CHECK(monomial_cmp({1, 0}, {0, 1}, MonomialOrder::lex) < 0);
    CHECK(monomial_cmp({0, 3}, {1, 1}, MonomialOrder::lex) > 0);
    CHECK(monomial_cmp({0, 0}, {1, 0}, MonomialOrder::lex) < 0);  // 1 is minimal
    // grlex refines total degree
    CHECK(monomial_cmp({3, 0}, {0, 2}, MonomialOrder::grlex) > 0);
    CHECK(monomial_cmp({1, 1}, {2, 0}, MonomialOrder::grlex) > 0);

    // multiplicative: m1 < m2 implies m*m1 < m*m2
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> d(0, 4);
    for (int trial = 0; trial < 200; ++trial) {
        Exponents a(3), b(3), m(3);
        for (int i = 0; i < 3; ++i) { a[i] = d(rng); b[i] = d(rng); m[i] = d(rng); }
        for (auto ord : {MonomialOrder::lex, MonomialOrder::grlex}) {
            int c0 = monomial_cmp(a, b, ord);
            Exponents ma = a, mb = b;
            for (int i = 0; i < 3; ++i) { ma[i] += m[i]; mb[i] += m[i]; }
            CHECK(monomial_cmp(ma, mb, ord) == c0);
        }
    }
}

TEST_CASE("arithmetic") {
    int n = 2;
    Polynomial f = (X(n, 0) + X(n, 1)) * (X(n, 0) - X(n, 1));
    Polynomial expect = X(n, 0) * X(n, 0) - X(n, 1) * X(n, 1);
    CHECK(f == expect);

    CHECK(f + Polynomial(n) == f);

    Polynomial e1 = elementary_symmetric(n, 1), e2 = elementary_symmetric(n, 2);
    CHECK(e1 * e1 - Rational(2) * e2 == X(n, 0) * X(n, 0) + X(n, 1) * X(n, 1));

    CHECK_THROWS_AS(f + Polynomial(3), std::invalid_argument);
    CHECK((Rational(0) * f).is_zero());
    CHECK(f.degree() == 2);
    CHECK(Polynomial(2).degree() == -1);
}

TEST_CASE("elementary symmetric polynomials") {
    Polynomial e2 = elementary_symmetric(3, 2);
    Polynomial expect =
        X(3, 0) * X(3, 1) + X(3, 0) * X(3, 2) + X(3, 1) * X(3, 2);
    CHECK(e2 == expect);

    CHECK(elementary_symmetric(4, 0) == C(4, 1));
    CHECK(elementary_symmetric(4, -1).is_zero());
    CHECK(elementary_symmetric(4, 5).is_zero());
    CHECK(elementary_symmetric_omitting(2, 1, 0) == X(2, 1));
    CHECK(elementary_symmetric_on(3, 1, {0, 2}) == X(3, 0) + X(3, 2));
    CHECK_THROWS_AS(elementary_symmetric_on(3, 1, {3}), std::invalid_argument);
    CHECK_THROWS_AS(elementary_symmetric_on(3, 1, {0, 0}), std::invalid_argument);
}

TEST_CASE("e_d splits off one variable: e_d = e_d^(i) + x_i e_{d-1}^(i)") {
    for (int n = 1; n <= 6; ++n)
        for (int d = 0; d <= n; ++d)
            for (int i = 0; i < n; ++i) {
                Polynomial lhs = elementary_symmetric(n, d);
                Polynomial rhs = elementary_symmetric_omitting(n, d, i) +
                                 X(n, i) * elementary_symmetric_omitting(n, d - 1, i);
                CHECK(lhs == rhs);
            }
}

TEST_CASE("complete homogeneous evaluation") {
    std::vector<Rational> v12 = {Rational(1), Rational(2)};
    CHECK(complete_homogeneous_eval(2, v12) == Rational(7));
    CHECK(complete_homogeneous_eval(0, v12) == Rational(1));
    CHECK(complete_homogeneous_eval(-3, v12) == Rational(0));
    std::vector<Rational> v = {Rational(2), Rational(-1), Rational(1, 2)};
    CHECK(complete_homogeneous_eval(1, v) == Rational(3, 2));
}

TEST_CASE("Newton identity at random rational points") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 5);
    for (int n = 1; n <= 6; ++n) {
        std::vector<Rational> beta(n);
        for (auto& b : beta) { b = Rational(num(rng), den(rng)); b.canonicalize(); }
        for (int d = 1; d <= n + 2; ++d) {
            Rational sum(0);
            for (int a = 0; a <= d; ++a) {
                Rational ea = elementary_symmetric(n, a).evaluate(beta);
                Rational hb = complete_homogeneous_eval(d - a, beta);
                sum += (a % 2 ? -ea : ea) * hb;
            }
            CHECK(sum == 0);
        }
    }
}

TEST_CASE("leading monomials") {
    Polynomial f = X(2, 0) * X(2, 1) + X(2, 0) * X(2, 0) * X(2, 0);
    CHECK(leading_monomial(f, MonomialOrder::lex) == Exponents{1, 1});
    CHECK(leading_monomial(f, MonomialOrder::grlex) == Exponents{3, 0});
    CHECK(leading_monomial(X(3, 0), MonomialOrder::lex) == Exponents{1, 0, 0});
    CHECK(leading_monomial(elementary_symmetric(3, 2), MonomialOrder::lex) ==
          Exponents{0, 1, 1});
    CHECK_THROWS_AS(leading_monomial(Polynomial(2), MonomialOrder::lex), std::domain_error);
}

TEST_CASE("apply_permutation") {
    Permutation swap = Permutation::transposition(2, 0, 1);
    CHECK(X(2, 0).apply_permutation(swap) == X(2, 1));
    CHECK(X(2, 0) * X(2, 0) * X(2, 1) == (X(2, 1) * X(2, 1) * X(2, 0)).apply_permutation(swap));
    for (int d = 0; d <= 3; ++d)
        CHECK(elementary_symmetric(3, d)
                  .apply_permutation(Permutation::canonical_of_cycle_type({3}, 3)) ==
              elementary_symmetric(3, d));

    Permutation a(std::vector<int>{1, 2, 0}), b(std::vector<int>{2, 1, 0});
    Polynomial f = X(3, 0) * X(3, 0) + Rational(3) * X(3, 1) * X(3, 2) + X(3, 2);
    CHECK(f.apply_permutation(b).apply_permutation(a) == f.apply_permutation(a.compose(b)));
    CHECK_THROWS_AS(f.apply_permutation(Permutation::identity(2)), std::invalid_argument);
}

TEST_CASE("evaluation") {
    std::vector<Rational> p12 = {Rational(1), Rational(2)};
    CHECK(elementary_symmetric(2, 2).evaluate(p12) == Rational(2));
    Polynomial f = X(2, 0) * X(2, 1) + C(2, 5);
    std::vector<Rational> zeros = {Rational(0), Rational(0)};
    CHECK(f.evaluate(zeros) == Rational(5));
    Polynomial g = (X(2, 0) - C(2, 1)) * (C(2, 1) - X(2, 1));
    std::vector<Rational> p21 = {Rational(2), Rational(1)};
    CHECK(g.evaluate(p21) == Rational(0));
    CHECK_THROWS_AS(f.evaluate(zeros = {Rational(0)}), std::invalid_argument);
}

TEST_CASE("exact division") {
    Polynomial num = X(2, 0) * X(2, 0) - X(2, 1) * X(2, 1);
    CHECK(num.divided_exactly(X(2, 0) - X(2, 1)) == X(2, 0) + X(2, 1));
    CHECK_THROWS_AS(X(2, 0).divided_exactly(X(2, 1)), std::domain_error);
}

TEST_CASE("Demazure characters: small closed forms") {
    // dominant one-row shapes in two variables
    CHECK(demazure_character({2, 0}) ==
          X(2, 0) * X(2, 0) + X(2, 0) * X(2, 1) + X(2, 1) * X(2, 1));
    CHECK(demazure_character({0, 2}) == X(2, 0) * X(2, 0));
    CHECK(demazure_character({1, 0}) == X(2, 0) + X(2, 1));
    CHECK(demazure_character({0, 1}) == X(2, 0));
    CHECK(demazure_character({1, 1}) == X(2, 0) * X(2, 1));
    CHECK(demazure_character({0, 0, 0}) == C(3, 1));
    CHECK_THROWS_AS(demazure_character({1, -1}), std::invalid_argument);
}

TEST_CASE("Demazure calibration: lex leading exponent of kappa_{gamma(S)} is gamma(S)*") {
    for (int n = 1; n <= 5; ++n) {
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            std::vector<int> S;
            for (int i = 0; i < n; ++i)
                if (mask & (1u << i)) S.push_back(i + 1);
            std::vector<int> gamma(n, 0);
            for (size_t j = 0; j < S.size(); ++j) gamma[S[j] - 1] = S[j] - static_cast<int>(j);
            Polynomial kappa = demazure_character(gamma);
            std::vector<int> expect(gamma.rbegin(), gamma.rend());
            CHECK(leading_monomial(kappa, MonomialOrder::lex) == Exponents(expect));
        }
    }
}
