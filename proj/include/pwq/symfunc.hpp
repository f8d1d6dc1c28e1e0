#pragma once

#include <map>
#include <string>
#include <vector>

#include "pwq/qpolynomial.hpp"
#include "pwq/rational.hpp"

namespace pwq {

// Weakly decreasing positive parts.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p);
    int size() const;  // |lambda|
    int length() const { return static_cast<int>(parts.size()); }
    Partition conjugate() const;
    bool operator==(const Partition&) const = default;
    bool operator<(const Partition& o) const { return parts < o.parts; }
    std::string str() const;
};

std::vector<Partition> partitions_of(int n);
long long z_of(const Partition& mu);  // prod i^{m_i} m_i!

struct StandardYoungTableau {
    std::vector<std::vector<int>> rows;

    Partition shape() const;
    int size() const;
    StandardYoungTableau transposed() const;
};

std::vector<StandardYoungTableau> enumerate_syt(const Partition& lambda);
long long hook_length_count(const Partition& lambda);

// Descents: i with i+1 in a strictly lower row; maj is their sum.
std::pair<int, int> des_maj(const StandardYoungTableau& T);

// Irreducible character chi^lambda(mu) by the Murnaghan-Nakayama rule.
long long mn_character(const Partition& lambda, const Partition& mu);

// Schur coefficients of a class function: c_lambda = sum_mu f(mu) chi^lambda(mu) / z_mu.
// Requires a value for every partition of n.
std::map<Partition, Rational> schur_expand(const std::map<Partition, Rational>& classfn, int n);

// Finite Schur expansion with q-polynomial coefficients; all partitions of
// a common size n. Zero coefficients are never stored.
class SchurSymmetricFunction {
public:
    SchurSymmetricFunction() = default;
    explicit SchurSymmetricFunction(int n) : n_(n) {}

    int n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Partition, QPolynomial>& terms() const { return terms_; }
    QPolynomial coeff(const Partition& lambda) const;
    void set_coeff(const Partition& lambda, QPolynomial c);
    void add_term(const Partition& lambda, const QPolynomial& c);

    SchurSymmetricFunction& operator+=(const SchurSymmetricFunction& o);
    friend SchurSymmetricFunction operator+(SchurSymmetricFunction a,
                                            const SchurSymmetricFunction& b) {
        return a += b;
    }
    SchurSymmetricFunction shifted(int j) const;  // multiply by q^j

    SchurSymmetricFunction omega() const;  // s_lambda -> s_{lambda'}
    int max_q_degree() const;              // -1 when zero
    // Reflect every q-coefficient about D; D defaults to max_q_degree().
    SchurSymmetricFunction rev_q(int D) const;
    SchurSymmetricFunction rev_q() const;

    long long dimension_at_one() const;  // sum of multiplicities times chi^lambda(1^n)

    bool operator==(const SchurSymmetricFunction&) const = default;
    std::string str() const;

private:
    int n_ = 0;
    std::map<Partition, QPolynomial> terms_;
};

enum class ShapeConvention { shape, conjugate_shape };

// C_{n,k}: over standard Young tableaux with n boxes,
//   q^{maj(T) + C(n-k,2) - (n-k) des(T)} [des(T) choose n-k]_q
// attached to shape(T) or its conjugate per the convention flag. The
// des-exponent sign is the one that makes the graded Frobenius identities
// of the quotient rings hold; see the calibration tests.
SchurSymmetricFunction c_function(int n, int k, ShapeConvention conv = ShapeConvention::shape);

// Number of words in W_{n,k} fixed by the canonical permutation of cycle
// type mu (letters constant on cycles).
long long packed_fixed_points(int n, int k, const Partition& mu);

}  // namespace pwq
