#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "pwq/codes.hpp"
#include "pwq/groebner.hpp"
#include "pwq/symfunc.hpp"

namespace pwq {

using Json = nlohmann::json;

// X_{n,k}: one point (alpha_{w_1},...,alpha_{w_n}) per word of W_{n,k}.
struct PointLocus {
    int n = 0;
    int k = 0;
    std::vector<Rational> alpha;
    std::vector<std::vector<Rational>> points;
};

PointLocus locus(int n, int k, const std::vector<Rational>& alpha);
std::vector<Rational> default_alpha(int n);  // 1, 2, ..., n

// J_{n,k} = < x_i^d e_{n-r}^{(i)} : 1 <= r <= d <= n > + < e_n, ..., e_{n-k+1} >,
// duplicates dropped. J_{n,1} = J_n since e_n = x_i e_{n-1}^{(i)}.
IdealPresentation ideal_J(int n, int k);

// I_{n,k} = < x_1^k, ..., x_n^k, e_n, ..., e_{n-k+1} >.
IdealPresentation ideal_I_hrs(int n, int k);

// (x_i - alpha_1)...(x_i - alpha_d) * sum_{a+b=n-r} (-1)^a e_a^{(i)} h_b(alpha_1..alpha_d).
// Vanishes on every X_{n,k}; top form is +-x_i^d e_{n-r}^{(i)}. i is 1-based.
Polynomial vanishing_poly_f(int i, int d, int r, const std::vector<Rational>& alpha, int n,
                            int k);

// sum_{a+b=d} (-1)^a e_a h_b(alpha_1..alpha_k); vanishes on X_{n,k} for
// d > n-k; top form is +-e_d.
Polynomial vanishing_poly_g(int d, int k, const std::vector<Rational>& alpha, int n);

struct QuotientRing {
    std::string tag;
    int n = 0;
    int k = 0;
    IdealPresentation ideal;
    GroebnerBasis gb;  // lex
    StandardMonomialSet std_monomials;
    QPolynomial hilbert;

    size_t dimension() const { return std_monomials.size(); }
};

QuotientRing quotient_S(int n, int k, GroebnerCache* cache = nullptr);  // Q[x]/J_{n,k}
QuotientRing quotient_R(int n, int k, GroebnerCache* cache = nullptr);  // Q[x]/I_{n,k}

// Every generator stays in the ideal under every adjacent transposition.
bool is_sn_stable(const QuotientRing& Q);

// Trace of the canonical cycle-type-mu permutation on each graded piece,
// read off the standard monomial basis through normal forms. Checks
// S_n-stability first.
QPolynomial graded_character(const QuotientRing& Q, const Partition& mu);

SchurSymmetricFunction graded_frobenius(const QuotientRing& Q);

// rev_q after omega, reflecting about the input's own top q-degree.
SchurSymmetricFunction rev_omega_twist(const SchurSymmetricFunction& C);

// Fixes the c_function shape convention by matching rev_omega_twist(C_{n,n})
// against graded_frobenius(R_{n,n}) at n = 2, 3. Memoized per process.
ShapeConvention calibrate_convention(GroebnerCache* cache = nullptr);

struct VerifyReport {
    std::string theorem;
    int n = 0;
    int k = 0;
    bool pass = false;
    Json details;
    long long elapsed_ms = 0;

    Json to_json() const;
};

// J_{n,k} equals the associated graded ideal of I(X_{n,k});
// additionally every vanishing_poly_f/g output vanishes on the locus and
// reduces to zero in I(X_{n,k}).
VerifyReport verify_orbit_harmonics(int n, int k, const std::vector<Rational>& alpha,
                                    GroebnerCache* cache = nullptr);

// Hilbert and graded Frobenius decompositions of S_{n,k} over
// R_{n,j}, plus the exactness of multiplication by e_{n-k} checked by rank.
VerifyReport verify_decomposition(int n, int k, GroebnerCache* cache = nullptr);

// The graded Frobenius formula for S_{n,k} and the per-ring identity
// grFrob(R_{n,j}) = rev_omega_twist(C_{n,j}).
VerifyReport verify_frobenius_formula(int n, int k, GroebnerCache* cache = nullptr);

// Ungraded structure: q = 1 characters of S_{n,k} against fixed packed words.
VerifyReport verify_ungraded(int n, int k, GroebnerCache* cache = nullptr);

// Rank over Q by Gaussian elimination (rows consumed).
int matrix_rank(std::vector<std::vector<Rational>> M);

}  // namespace pwq
