#include "pwq/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace pwq {

IdealPresentation IdealPresentation::make(std::vector<Polynomial> gens) {
    if (gens.empty()) throw std::invalid_argument("IdealPresentation: no generators");
    IdealPresentation I;
    I.arity = gens.front().arity();
    bool homog = true;
    for (const auto& g : gens) {
        if (g.arity() != I.arity)
            throw std::invalid_argument("IdealPresentation: mixed arities");
        if (g.is_zero()) throw std::invalid_argument("IdealPresentation: zero generator");
        homog = homog && g.is_homogeneous();
    }
    I.generators = std::move(gens);
    I.homogeneous = homog;
    return I;
}

namespace {

Exponents lcm_exp(const Exponents& a, const Exponents& b) {
    Exponents l(a.size());
    for (size_t i = 0; i < a.size(); ++i) l[i] = std::max(a[i], b[i]);
    return l;
}

bool coprime(const Exponents& a, const Exponents& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

// Clear denominators and divide out integer content; fix the sign so the
// leading coefficient is positive.
void make_primitive(Polynomial& f) {
    if (f.is_zero()) return;
    mpz_class den_lcm(1), num_gcd(0);
    for (const auto& [e, c] : f.terms())
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    for (const auto& [e, c] : f.terms()) {
        mpz_class scaled = c.get_num() * (den_lcm / c.get_den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
    }
    Rational factor(den_lcm, num_gcd);
    factor.canonicalize();
    if (f.leading_coeff() < 0) factor = -factor;
    f = factor * f;
}

void make_monic(Polynomial& f) {
    if (f.is_zero()) return;
    f = (Rational(1) / f.leading_coeff()) * f;
}

Polynomial reduce_full(const Polynomial& f, const std::vector<Polynomial>& G) {
    using RawMap = std::map<Exponents, Rational, TermCmp>;
    RawMap work(TermCmp{f.order()});
    for (const auto& [e, c] : f.terms()) work.emplace(e, c);
    Polynomial rem(f.arity(), f.order());
    Exponents shift(f.arity());
    while (!work.empty()) {
        auto lead = work.begin();
        const Polynomial* red = nullptr;
        for (const auto& g : G)
            if (monomial_divides(g.leading_monomial(), lead->first)) { red = &g; break; }
        if (red == nullptr) {
            rem.add_term(lead->first, lead->second);
            work.erase(lead);
            continue;
        }
        for (size_t i = 0; i < shift.size(); ++i)
            shift[i] = lead->first[i] - red->leading_monomial()[i];
        Rational factor = lead->second / red->leading_coeff();
        Exponents e(f.arity());
        for (const auto& [eg, cg] : red->terms()) {
            for (int i = 0; i < f.arity(); ++i) e[i] = eg[i] + shift[i];
            auto [it, inserted] = work.emplace(e, -factor * cg);
            if (!inserted) {
                it->second -= factor * cg;
                if (it->second == 0) work.erase(it);
            }
        }
    }
    return rem;
}

struct Pair {
    int i, j;
    Exponents lcm;
    int deg;
};

struct PairCmp {
    bool operator()(const Pair& a, const Pair& b) const {
        if (a.deg != b.deg) return a.deg < b.deg;
        int c = monomial_cmp(a.lcm, b.lcm, MonomialOrder::lex);
        if (c != 0) return c < 0;
        if (a.j != b.j) return a.j < b.j;
        return a.i < b.i;
    }
};

// Gebauer-Moller update: prune the new pairs (i,t) against each other, drop
// coprime pairs, then apply the chain criterion to the old ones.
void gm_update(std::set<Pair, PairCmp>& pairs, const std::vector<Polynomial>& G, int t) {
    const Exponents& lt = G[t].leading_monomial();
    std::vector<Pair> fresh;
    for (int i = 0; i < t; ++i)
        fresh.push_back({i, t, lcm_exp(G[i].leading_monomial(), lt), 0});
    for (auto& p : fresh) p.deg = total_degree(p.lcm);

    std::vector<bool> keep(fresh.size(), true);
    // criterion M: drop (i,t) when another new lcm properly divides it
    for (size_t a = 0; a < fresh.size(); ++a) {
        if (!keep[a]) continue;
        for (size_t b = 0; b < fresh.size(); ++b) {
            if (a == b || !keep[a]) continue;
            if (fresh[b].lcm != fresh[a].lcm && monomial_divides(fresh[b].lcm, fresh[a].lcm))
                keep[a] = false;
        }
    }
    // criterion F: one representative per lcm value, preferring a coprime pair
    for (size_t a = 0; a < fresh.size(); ++a) {
        if (!keep[a]) continue;
        for (size_t b = a + 1; b < fresh.size(); ++b) {
            if (!keep[b] || fresh[b].lcm != fresh[a].lcm) continue;
            if (coprime(G[fresh[a].i].leading_monomial(), lt)) keep[b] = false;
            else keep[a] = false;
        }
    }
    // criterion B (Buchberger's first): coprime leading monomials
    for (size_t a = 0; a < fresh.size(); ++a)
        if (keep[a] && coprime(G[fresh[a].i].leading_monomial(), lt)) keep[a] = false;

    // chain criterion on the surviving old pairs
    for (auto it = pairs.begin(); it != pairs.end();) {
        const Pair& p = *it;
        bool drop = monomial_divides(lt, p.lcm) &&
                    lcm_exp(G[p.i].leading_monomial(), lt) != p.lcm &&
                    lcm_exp(G[p.j].leading_monomial(), lt) != p.lcm;
        it = drop ? pairs.erase(it) : std::next(it);
    }
    for (size_t a = 0; a < fresh.size(); ++a)
        if (keep[a]) pairs.insert(fresh[a]);
}

std::vector<Polynomial> interreduce(std::vector<Polynomial> G) {
    // drop elements whose leading monomial another one divides
    std::vector<Polynomial> minimal;
    std::sort(G.begin(), G.end(), [](const Polynomial& a, const Polynomial& b) {
        return monomial_cmp(a.leading_monomial(), b.leading_monomial(), a.order()) < 0;
    });
    for (size_t i = 0; i < G.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < G.size() && !redundant; ++j)
            if (j != i && monomial_divides(G[j].leading_monomial(), G[i].leading_monomial()) &&
                !(j > i && G[j].leading_monomial() == G[i].leading_monomial()))
                redundant = true;
        if (!redundant) minimal.push_back(G[i]);
    }
    // tail-reduce each element against the others
    std::vector<Polynomial> out;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Polynomial r = reduce_full(minimal[i], others);
        if (!r.is_zero()) {
            make_monic(r);
            out.push_back(std::move(r));
        }
    }
    std::sort(out.begin(), out.end(), [](const Polynomial& a, const Polynomial& b) {
        return monomial_cmp(a.leading_monomial(), b.leading_monomial(), a.order()) < 0;
    });
    return out;
}

}  // namespace

GroebnerBasis buchberger(const IdealPresentation& ideal, MonomialOrder ord) {
    std::vector<Polynomial> G;
    std::set<Pair, PairCmp> pairs;
    for (const auto& gen : ideal.generators) {
        Polynomial g = reduce_full(gen.with_order(ord), G);
        if (g.is_zero()) continue;
        make_primitive(g);
        G.push_back(std::move(g));
        gm_update(pairs, G, static_cast<int>(G.size()) - 1);
    }
    Exponents shift(ideal.arity);
    while (!pairs.empty()) {
        Pair p = *pairs.begin();
        pairs.erase(pairs.begin());
        const Polynomial &f = G[p.i], &g = G[p.j];
        // S-polynomial: cancel the leading terms at the lcm
        Polynomial s(ideal.arity, ord);
        for (size_t x = 0; x < shift.size(); ++x) shift[x] = p.lcm[x] - f.leading_monomial()[x];
        s = f.times_monomial(shift, Rational(1) / f.leading_coeff());
        for (size_t x = 0; x < shift.size(); ++x) shift[x] = p.lcm[x] - g.leading_monomial()[x];
        s -= g.times_monomial(shift, Rational(1) / g.leading_coeff());
        Polynomial h = reduce_full(s, G);
        if (h.is_zero()) continue;
        make_primitive(h);
        G.push_back(std::move(h));
        gm_update(pairs, G, static_cast<int>(G.size()) - 1);
    }

    GroebnerBasis out;
    out.order = ord;
    out.basis = interreduce(std::move(G));
    out.reduced = true;
    for (const auto& gen : ideal.generators)
        if (!normal_form(gen, out).is_zero())
            throw std::logic_error("buchberger: generator fails to reduce to zero");
    return out;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G) {
    if (!G.basis.empty() && G.basis.front().arity() != f.arity())
        throw std::invalid_argument("normal_form: arity mismatch");
    return reduce_full(f.with_order(G.order), G.basis);
}

std::vector<Exponents> StandardMonomialSet::all() const {
    std::vector<Exponents> out;
    for (const auto& d : by_degree) out.insert(out.end(), d.begin(), d.end());
    return out;
}

StandardMonomialSet standard_monomials(const GroebnerBasis& G) {
    int n = G.arity();
    if (G.basis.empty()) throw InfiniteQuotientError("standard_monomials: zero ideal");
    std::vector<Exponents> lms;
    for (const auto& g : G.basis) lms.push_back(g.leading_monomial());
    // finite dimension needs a pure power of every variable among the LMs
    std::vector<int> bound(n, -1);
    for (const auto& lm : lms) {
        int nz = -1;
        bool pure = true;
        for (int i = 0; i < n && pure; ++i)
            if (lm[i] != 0) {
                if (nz >= 0) pure = false;
                nz = i;
            }
        if (pure && nz >= 0 && (bound[nz] < 0 || lm[nz] < bound[nz])) bound[nz] = lm[nz];
        if (pure && nz < 0) return {};  // 1 in the ideal: empty quotient
    }
    for (int i = 0; i < n; ++i)
        if (bound[i] < 0)
            throw InfiniteQuotientError("standard_monomials: infinite-dimensional quotient");

    StandardMonomialSet out;
    Exponents e(n, 0);
    auto visit = [&](auto&& self, int pos) -> void {
        if (pos == n) {
            for (const auto& lm : lms)
                if (monomial_divides(lm, e)) return;
            int d = total_degree(e);
            if (d >= static_cast<int>(out.by_degree.size())) out.by_degree.resize(d + 1);
            out.by_degree[d].push_back(e);
            return;
        }
        for (e[pos] = 0; e[pos] < bound[pos]; ++e[pos]) self(self, pos + 1);
        e[pos] = 0;
    };
    visit(visit, 0);
    for (auto& deg : out.by_degree)
        std::sort(deg.begin(), deg.end(), [&](const Exponents& a, const Exponents& b) {
            return monomial_cmp(a, b, G.order) < 0;
        });
    return out;
}

QPolynomial hilbert_series(const GroebnerBasis& G) {
    for (const auto& g : G.basis)
        if (!g.is_homogeneous())
            throw std::invalid_argument("hilbert_series: non-homogeneous ideal");
    StandardMonomialSet std_mons = standard_monomials(G);
    std::vector<long long> coeffs;
    for (const auto& d : std_mons.by_degree) coeffs.push_back(static_cast<long long>(d.size()));
    return QPolynomial(std::move(coeffs));
}

namespace {

// Forward-eliminated row of the Buchberger-Moller evaluation matrix,
// remembering how it combines the accepted standard monomials.
struct BmRow {
    std::vector<Rational> vec;
    int pivot;
    std::vector<Rational> combo;  // over the accepted standard monomials
};

Rational eval_monomial(const Exponents& e, const std::vector<Rational>& point) {
    Rational out(1);
    for (size_t i = 0; i < e.size(); ++i)
        if (e[i] != 0) out *= rational_pow(point[i], static_cast<unsigned>(e[i]));
    return out;
}

}  // namespace

GroebnerBasis vanishing_ideal(const std::vector<std::vector<Rational>>& points,
                              MonomialOrder ord) {
    if (points.empty()) throw std::invalid_argument("vanishing_ideal: no points");
    const int n = static_cast<int>(points.front().size());
    const int m = static_cast<int>(points.size());
    for (const auto& p : points)
        if (static_cast<int>(p.size()) != n)
            throw std::invalid_argument("vanishing_ideal: ragged point list");
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            if (points[a] == points[b])
                throw std::invalid_argument("vanishing_ideal: duplicate points");

    auto asc = [&](const Exponents& a, const Exponents& b) { return monomial_cmp(a, b, ord) < 0; };
    std::set<Exponents, decltype(asc)> candidates(asc);
    candidates.insert(Exponents(n, 0));

    std::vector<Exponents> std_mons;
    std::vector<BmRow> rows;
    std::vector<Exponents> lms;
    GroebnerBasis out;
    out.order = ord;

    while (!candidates.empty()) {
        Exponents mono = *candidates.begin();
        candidates.erase(candidates.begin());
        bool pruned = false;
        for (const auto& lm : lms)
            if (monomial_divides(lm, mono)) { pruned = true; break; }
        if (pruned) continue;

        std::vector<Rational> v(m);
        for (int p = 0; p < m; ++p) v[p] = eval_monomial(mono, points[p]);
        std::vector<Rational> combo(std_mons.size(), Rational(0));
        for (const auto& row : rows) {
            if (v[row.pivot] == 0) continue;
            Rational f = v[row.pivot] / row.vec[row.pivot];
            for (int p = 0; p < m; ++p) v[p] -= f * row.vec[p];
            for (size_t b = 0; b < row.combo.size(); ++b) combo[b] += f * row.combo[b];
        }
        int pivot = -1;
        for (int p = 0; p < m; ++p)
            if (v[p] != 0) { pivot = p; break; }

        if (pivot < 0) {
            // x^mono - sum combo_b x^b vanishes on every point
            Polynomial g(n, ord);
            g.add_term(mono, Rational(1));
            for (size_t b = 0; b < std_mons.size(); ++b) g.add_term(std_mons[b], -combo[b]);
            lms.push_back(mono);
            out.basis.push_back(std::move(g));
        } else {
            // row.vec = v(mono) - sum acc_b v(b), so the combo is negated
            for (auto& x : combo) x = -x;
            combo.resize(std_mons.size() + 1, Rational(0));
            combo[std_mons.size()] = 1;
            for (auto& row : rows) row.combo.resize(std_mons.size() + 1, Rational(0));
            std_mons.push_back(mono);
            rows.push_back({std::move(v), pivot, std::move(combo)});
            for (int i = 0; i < n; ++i) {
                Exponents next = mono;
                ++next[i];
                bool div = false;
                for (const auto& lm : lms)
                    if (monomial_divides(lm, next)) { div = true; break; }
                if (!div) candidates.insert(std::move(next));
            }
        }
    }

    if (static_cast<int>(std_mons.size()) != m)
        throw std::logic_error("vanishing_ideal: dimension does not match point count");
    for (const auto& g : out.basis)
        for (const auto& p : points)
            if (g.evaluate(p) != 0)
                throw std::logic_error("vanishing_ideal: basis element fails to vanish");
    std::sort(out.basis.begin(), out.basis.end(), [&](const Polynomial& a, const Polynomial& b) {
        return monomial_cmp(a.leading_monomial(), b.leading_monomial(), ord) < 0;
    });
    return out;
}

namespace {

IdealPresentation top_forms_checked(const GroebnerBasis& grlex_basis, size_t expected_dim) {
    std::vector<Polynomial> tops;
    for (const auto& g : grlex_basis.basis) tops.push_back(g.top_degree_form());
    IdealPresentation T = IdealPresentation::make(std::move(tops));
    GroebnerBasis check = buchberger(T, MonomialOrder::grlex);
    if (standard_monomials(check).size() != expected_dim)
        throw std::logic_error("associated_graded: quotient dimension changed");
    return T;
}

}  // namespace

IdealPresentation associated_graded(const std::vector<std::vector<Rational>>& points) {
    GroebnerBasis G = vanishing_ideal(points, MonomialOrder::grlex);
    return top_forms_checked(G, points.size());
}

IdealPresentation associated_graded(const IdealPresentation& ideal) {
    GroebnerBasis G = buchberger(ideal, MonomialOrder::grlex);
    return top_forms_checked(G, standard_monomials(G).size());
}

bool ideal_equal(const IdealPresentation& A, const IdealPresentation& B, MonomialOrder ord) {
    if (A.arity != B.arity) throw std::invalid_argument("ideal_equal: arity mismatch");
    GroebnerBasis GA = buchberger(A, ord);
    GroebnerBasis GB = buchberger(B, ord);
    for (const auto& g : A.generators)
        if (!normal_form(g, GB).is_zero()) return false;
    for (const auto& g : B.generators)
        if (!normal_form(g, GA).is_zero()) return false;
    return true;
}

}  // namespace pwq
