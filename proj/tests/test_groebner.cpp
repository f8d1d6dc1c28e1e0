#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>

#include "pwq/groebner.hpp"

using namespace pwq;

namespace {

Polynomial X(int arity, int i) { return Polynomial::variable(arity, i); }

IdealPresentation ideal(std::vector<Polynomial> gens) {
    return IdealPresentation::make(std::move(gens));
}

IdealPresentation elementary_ideal(int n) {
    std::vector<Polynomial> gens;
    for (int d = 1; d <= n; ++d) gens.push_back(elementary_symmetric(n, d));
    return ideal(std::move(gens));
}

bool basis_contains(const GroebnerBasis& G, const Polynomial& p) {
    return std::any_of(G.basis.begin(), G.basis.end(),
                       [&](const Polynomial& g) { return g == p; });
}

}  // namespace

TEST_CASE("buchberger on <e_1, e_2>") {
    GroebnerBasis G = buchberger(elementary_ideal(2), MonomialOrder::lex);
    REQUIRE(G.basis.size() == 2);
    CHECK(basis_contains(G, X(2, 0) + X(2, 1)));
    CHECK(basis_contains(G, X(2, 0) * X(2, 0)));
}

TEST_CASE("buchberger on a principal ideal") {
    GroebnerBasis G = buchberger(ideal({X(2, 0)}), MonomialOrder::lex);
    REQUIRE(G.basis.size() == 1);
    CHECK(G.basis[0] == X(2, 0));
}

TEST_CASE("buchberger drops redundant monomial generators") {
    Polynomial x = X(2, 0), y = X(2, 1);
    GroebnerBasis G = buchberger(ideal({x * y, x * x * y, x * x, y * x, y * y * x, y * y}),
                                 MonomialOrder::lex);
    REQUIRE(G.basis.size() == 3);
    CHECK(basis_contains(G, x * x));
    CHECK(basis_contains(G, x * y));
    CHECK(basis_contains(G, y * y));
}

TEST_CASE("buchberger rejects zero generators") {
    CHECK_THROWS_AS(ideal({Polynomial(2)}), std::invalid_argument);
    CHECK_THROWS_AS(ideal({}), std::invalid_argument);
}

TEST_CASE("normal forms") {
    GroebnerBasis G = buchberger(elementary_ideal(2), MonomialOrder::lex);
    CHECK(normal_form(elementary_symmetric(2, 1), G).is_zero());
    CHECK(normal_form(X(2, 1), G) == -X(2, 0));  // x_2 = -x_1 in the quotient
    CHECK(normal_form(X(2, 0), G) == X(2, 0));   // standard monomial is fixed
    CHECK_THROWS_AS(normal_form(X(3, 0), G), std::invalid_argument);
}

TEST_CASE("normal form is idempotent, linear, multiplicative-after-reduction") {
    GroebnerBasis G = buchberger(elementary_ideal(3), MonomialOrder::lex);
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> expo(0, 3), coeff(-4, 4);
    auto random_poly = [&]() {
        Polynomial p(3);
        for (int t = 0; t < 6; ++t) {
            Exponents e = {expo(rng), expo(rng), expo(rng)};
            p.add_term(e, Rational(coeff(rng)));
        }
        return p;
    };
    for (int trial = 0; trial < 25; ++trial) {
        Polynomial f = random_poly(), g = random_poly();
        Polynomial nf = normal_form(f, G), ng = normal_form(g, G);
        CHECK(normal_form(nf, G) == nf);
        CHECK(normal_form(f + g, G) == nf + ng);
        CHECK(normal_form(f * g, G) == normal_form(nf * ng, G));
    }
}

TEST_CASE("standard monomials and Hilbert series of classical ideals") {
    // <x_1,...,x_n>: only the constant survives
    GroebnerBasis G1 = buchberger(ideal({X(3, 0), X(3, 1), X(3, 2)}), MonomialOrder::lex);
    StandardMonomialSet s1 = standard_monomials(G1);
    CHECK(s1.size() == 1);
    CHECK(s1.by_degree[0][0] == Exponents{0, 0, 0});

    // coinvariant algebra of S_3: Hilbert series [3]!_q
    GroebnerBasis G2 = buchberger(elementary_ideal(3), MonomialOrder::lex);
    CHECK(hilbert_series(G2) == QPolynomial({1, 2, 2, 1}));
    CHECK(hilbert_series(G2) == q_factorial(3));

    // infinite quotient detected
    GroebnerBasis G3 = buchberger(ideal({X(2, 0)}), MonomialOrder::lex);
    CHECK_THROWS_AS(standard_monomials(G3), InfiniteQuotientError);

    // non-homogeneous ideal rejected by hilbert_series
    GroebnerBasis G4 =
        buchberger(ideal({X(1, 0) * X(1, 0) - Polynomial::constant(1, Rational(1))}),
                   MonomialOrder::lex);
    CHECK_THROWS_AS(hilbert_series(G4), std::invalid_argument);
}

TEST_CASE("reduced basis is independent of generator order") {
    std::vector<Polynomial> gens;
    for (int d = 1; d <= 4; ++d) gens.push_back(elementary_symmetric(4, d));
    gens.push_back(X(4, 0) * X(4, 1) + X(4, 2) * X(4, 3));
    GroebnerBasis ref = buchberger(ideal(gens), MonomialOrder::lex);
    std::mt19937 rng(17);
    for (int trial = 0; trial < 4; ++trial) {
        std::shuffle(gens.begin(), gens.end(), rng);
        GroebnerBasis got = buchberger(ideal(gens), MonomialOrder::lex);
        REQUIRE(got.basis.size() == ref.basis.size());
        for (size_t i = 0; i < ref.basis.size(); ++i) CHECK(got.basis[i] == ref.basis[i]);
    }
}

TEST_CASE("vanishing ideals of point sets") {
    std::vector<std::vector<Rational>> pts1 = {{Rational(5)}};
    GroebnerBasis G1 = vanishing_ideal(pts1);
    REQUIRE(G1.basis.size() == 1);
    CHECK(G1.basis[0] == X(1, 0) - Polynomial::constant(1, Rational(5)));

    std::vector<std::vector<Rational>> pts2 = {{Rational(1)}, {Rational(2)}};
    GroebnerBasis G2 = vanishing_ideal(pts2);
    REQUIRE(G2.basis.size() == 1);
    Polynomial expect = X(1, 0) * X(1, 0) - Rational(3) * X(1, 0) +
                        Polynomial::constant(1, Rational(2));
    CHECK(G2.basis[0] == expect);

    // X_{2,1} with alpha = (1,2)
    std::vector<std::vector<Rational>> pts3 = {{Rational(1), Rational(1)},
                                               {Rational(1), Rational(2)},
                                               {Rational(2), Rational(1)}};
    GroebnerBasis G3 = vanishing_ideal(pts3);
    CHECK(standard_monomials(G3).size() == 3);
    for (const auto& g : G3.basis)
        for (const auto& p : pts3) CHECK(g.evaluate(p) == 0);

    CHECK_THROWS_AS(vanishing_ideal({{Rational(1)}, {Rational(1)}}), std::invalid_argument);
}

TEST_CASE("vanishing ideal quotient dimension equals point count (random sets)") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> coord(-9, 9), den(1, 4);
    for (int n = 1; n <= 3; ++n)
        for (int m : {1, 4, 9, 16}) {
            std::vector<std::vector<Rational>> pts;
            std::set<std::vector<std::pair<long, long>>> seen;
            while (static_cast<int>(pts.size()) < m) {
                std::vector<Rational> p(n);
                std::vector<std::pair<long, long>> key;
                for (auto& c : p) {
                    c = Rational(coord(rng), den(rng));
                    c.canonicalize();
                    key.emplace_back(c.get_num().get_si(), c.get_den().get_si());
                }
                if (seen.insert(key).second) pts.push_back(std::move(p));
            }
            for (auto ord : {MonomialOrder::lex, MonomialOrder::grlex}) {
                GroebnerBasis G = vanishing_ideal(pts, ord);
                CHECK(standard_monomials(G).size() == pts.size());
            }
        }
}

TEST_CASE("associated graded ideals") {
    // I({1}) = <x - 1> has top-form ideal <x>
    IdealPresentation T1 = associated_graded({{Rational(1)}});
    REQUIRE(T1.generators.size() == 1);
    CHECK(T1.generators[0] == X(1, 0));
    CHECK(T1.homogeneous);

    // X_{2,1}: gr of the vanishing ideal is the packed-word ideal at n=2
    std::vector<std::vector<Rational>> pts = {{Rational(1), Rational(1)},
                                              {Rational(1), Rational(2)},
                                              {Rational(2), Rational(1)}};
    IdealPresentation T2 = associated_graded(pts);
    Polynomial x = X(2, 0), y = X(2, 1);
    IdealPresentation J2 = ideal({x * x, x * y, y * y});
    CHECK(ideal_equal(T2, J2, MonomialOrder::lex));

    // two permutation points: gr recovers the invariant ideal
    std::vector<std::vector<Rational>> perm2 = {{Rational(1), Rational(2)},
                                                {Rational(2), Rational(1)}};
    CHECK(ideal_equal(associated_graded(perm2), elementary_ideal(2), MonomialOrder::lex));

    // same computation through a generator presentation of I(X)
    GroebnerBasis GI = vanishing_ideal(pts, MonomialOrder::lex);
    IdealPresentation T3 = associated_graded(ideal(GI.basis));
    CHECK(ideal_equal(T3, J2, MonomialOrder::grlex));
}

TEST_CASE("ideal_equal") {
    Polynomial x = X(2, 0), y = X(2, 1);
    CHECK(ideal_equal(ideal({x, y}), ideal({x + y, x - y}), MonomialOrder::lex));
    CHECK_FALSE(ideal_equal(ideal({x}), ideal({x * x}), MonomialOrder::lex));
    CHECK_THROWS_AS(ideal_equal(ideal({x}), ideal({X(3, 0)}), MonomialOrder::lex),
                    std::invalid_argument);
}

TEST_CASE("groebner cache: cold and warm runs agree; stale files are ignored") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "pwq_cache_test";
    fs::remove_all(dir);

    IdealPresentation I = elementary_ideal(3);
    GroebnerBasis direct = buchberger(I, MonomialOrder::lex);
    {
        GroebnerCache cold(dir);
        GroebnerBasis a = cold.get("einv_n3", I, MonomialOrder::lex);
        REQUIRE(a.basis.size() == direct.basis.size());
        for (size_t i = 0; i < a.basis.size(); ++i) CHECK(a.basis[i] == direct.basis[i]);
        CHECK(fs::exists(dir / "einv_n3_lex.json"));
    }
    {
        GroebnerCache warm(dir);
        GroebnerBasis b = warm.get("einv_n3", I, MonomialOrder::lex);
        REQUIRE(b.basis.size() == direct.basis.size());
        for (size_t i = 0; i < b.basis.size(); ++i) CHECK(b.basis[i] == direct.basis[i]);
    }
    {
        // corrupt the file: the cache must fall back to recomputing
        std::ofstream out(dir / "einv_n3_lex.json");
        out << "{ not json";
    }
    {
        GroebnerCache again(dir);
        GroebnerBasis c = again.get("einv_n3", I, MonomialOrder::lex);
        REQUIRE(c.basis.size() == direct.basis.size());
        for (size_t i = 0; i < c.basis.size(); ++i) CHECK(c.basis[i] == direct.basis[i]);
    }
    // same tag, different generators: hash mismatch forces recompute
    {
        GroebnerCache cache(dir);
        GroebnerBasis first = cache.get("clash", elementary_ideal(2), MonomialOrder::lex);
        CHECK(first.basis.size() == 2);
    }
    {
        GroebnerCache cache(dir);
        GroebnerBasis second =
            cache.get("clash", ideal({X(2, 0)}), MonomialOrder::lex);
        REQUIRE(second.basis.size() == 1);
        CHECK(second.basis[0] == X(2, 0));
    }
    fs::remove_all(dir);
}
