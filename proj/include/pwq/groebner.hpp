#pragma once

#include <filesystem>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "pwq/polyring.hpp"
#include "pwq/qpolynomial.hpp"

namespace pwq {

struct InfiniteQuotientError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IdealPresentation {
    int arity = 0;
    std::vector<Polynomial> generators;
    bool homogeneous = false;

    // Validates nonzero generators of common arity and sets the flag.
    static IdealPresentation make(std::vector<Polynomial> gens);
};

struct GroebnerBasis {
    MonomialOrder order = MonomialOrder::lex;
    std::vector<Polynomial> basis;  // monic, sorted by ascending leading monomial
    bool reduced = true;

    int arity() const { return basis.empty() ? 0 : basis.front().arity(); }
};

// Buchberger with Gebauer-Moller pair elimination and normal pair
// selection. Returns the reduced basis; re-verifies that every input
// generator reduces to zero.
GroebnerBasis buchberger(const IdealPresentation& ideal, MonomialOrder ord);

// Full remainder of the division algorithm: no term of the result is
// divisible by any basis leading monomial.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G);

struct StandardMonomialSet {
    std::vector<std::vector<Exponents>> by_degree;

    size_t size() const {
        size_t s = 0;
        for (const auto& d : by_degree) s += d.size();
        return s;
    }
    std::vector<Exponents> all() const;
};

// All monomials outside the leading-monomial ideal, grouped by total
// degree. Throws InfiniteQuotientError when some variable has no pure
// power among the leading monomials.
StandardMonomialSet standard_monomials(const GroebnerBasis& G);

// Degree census of the standard monomials; requires a homogeneous basis.
QPolynomial hilbert_series(const GroebnerBasis& G);

// Reduced Groebner basis of I(X) for a finite set of distinct points, via
// Buchberger-Moller: candidate monomials in increasing order, each either
// joining the standard set or yielding a basis element from the linear
// relation among evaluation vectors.
GroebnerBasis vanishing_ideal(const std::vector<std::vector<Rational>>& points,
                              MonomialOrder ord = MonomialOrder::lex);

// T(X) / gr(I): top-degree forms of the reduced graded-lex basis. The
// quotient dimension is checked against the input (point count or the
// input ideal's standard monomial count).
IdealPresentation associated_graded(const std::vector<std::vector<Rational>>& points);
IdealPresentation associated_graded(const IdealPresentation& ideal);

// Mutual containment via reduction of generators.
bool ideal_equal(const IdealPresentation& A, const IdealPresentation& B, MonomialOrder ord);

// Groebner bases keyed by (tag, order); optional JSON disk layer under a
// directory, written via temp-file-plus-rename so concurrent writers are
// safe. A content hash of the generators guards stale files.
class GroebnerCache {
public:
    GroebnerCache() = default;
    explicit GroebnerCache(std::filesystem::path dir);

    GroebnerBasis get(const std::string& tag, const IdealPresentation& ideal, MonomialOrder ord);
    const std::filesystem::path& directory() const { return dir_; }

private:
    std::optional<GroebnerBasis> load_disk(const std::string& key, const std::string& hash,
                                           int arity) const;
    void store_disk(const std::string& key, const std::string& hash,
                    const IdealPresentation& ideal, const GroebnerBasis& gb) const;

    std::filesystem::path dir_;
    std::mutex mu_;
    std::unordered_map<std::string, GroebnerBasis> mem_;
};

}  // namespace pwq
