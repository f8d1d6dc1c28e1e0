#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pwq {

// Polynomial in one formal parameter q with integer coefficients.
// Coefficient sequence is kept trimmed: no trailing zeros.
class QPolynomial {
public:
    QPolynomial() = default;
    QPolynomial(long long c) { if (c != 0) coeffs_.push_back(c); }  // implicit: constants embed
    explicit QPolynomial(std::vector<long long> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static QPolynomial monomial(int deg, long long c = 1) {
        if (c == 0) return {};
        std::vector<long long> v(deg + 1, 0);
        v[deg] = c;
        return QPolynomial(std::move(v));
    }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
    long long coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(coeffs_.size())) ? coeffs_[i] : 0;
    }
    const std::vector<long long>& coeffs() const { return coeffs_; }

    QPolynomial& operator+=(const QPolynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
        for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }
    QPolynomial& operator-=(const QPolynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
        for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }
    friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
    friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
    friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<long long> v(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
        for (size_t i = 0; i < a.coeffs_.size(); ++i)
            for (size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return QPolynomial(std::move(v));
    }

    // Multiplication by q^j.
    QPolynomial shifted(int j) const {
        if (is_zero()) return {};
        if (j < 0) throw std::invalid_argument("QPolynomial::shifted: negative shift");
        std::vector<long long> v(coeffs_.size() + j, 0);
        for (size_t i = 0; i < coeffs_.size(); ++i) v[i + j] = coeffs_[i];
        return QPolynomial(std::move(v));
    }

    // Coefficient of q^i becomes coefficient of q^{D-i}.
    QPolynomial reversed(int D) const {
        if (D < degree()) throw std::invalid_argument("QPolynomial::reversed: D below degree");
        if (is_zero()) return {};
        std::vector<long long> v(D + 1, 0);
        for (size_t i = 0; i < coeffs_.size(); ++i) v[D - i] = coeffs_[i];
        return QPolynomial(std::move(v));
    }
    QPolynomial reversed() const { return is_zero() ? QPolynomial() : reversed(degree()); }

    // Exact division; throws if the remainder is nonzero.
    QPolynomial divided_exactly(const QPolynomial& d) const {
        if (d.is_zero()) throw std::invalid_argument("QPolynomial: division by zero");
        std::vector<long long> rem = coeffs_;
        std::vector<long long> quo(
            coeffs_.size() >= d.coeffs_.size() ? coeffs_.size() - d.coeffs_.size() + 1 : 0, 0);
        const long long lead = d.coeffs_.back();
        for (int i = static_cast<int>(rem.size()) - 1;
             i >= static_cast<int>(d.coeffs_.size()) - 1; --i) {
            if (rem[i] == 0) continue;
            if (rem[i] % lead != 0) throw std::domain_error("QPolynomial: inexact division");
            long long f = rem[i] / lead;
            int off = i - (static_cast<int>(d.coeffs_.size()) - 1);
            quo[off] = f;
            for (size_t j = 0; j < d.coeffs_.size(); ++j) rem[off + j] -= f * d.coeffs_[j];
        }
        for (long long c : rem)
            if (c != 0) throw std::domain_error("QPolynomial: inexact division");
        return QPolynomial(std::move(quo));
    }

    long long at_one() const {
        long long s = 0;
        for (long long c : coeffs_) s += c;
        return s;
    }

    bool operator==(const QPolynomial& o) const = default;

    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        for (int i = 0; i <= degree(); ++i) {
            long long c = coeffs_[i];
            if (c == 0) continue;
            if (!out.empty()) { out += c > 0 ? " + " : " - "; c = c > 0 ? c : -c; }
            else if (c < 0) { out += "-"; c = -c; }
            if (i == 0) out += std::to_string(c);
            else {
                if (c != 1) out += std::to_string(c);
                out += "q";
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

private:
    void trim() { while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back(); }
    std::vector<long long> coeffs_;
};

// q-analogs: [n]_q, [n]!_q and the Gaussian binomial. The binomial is 0
// outside 0 <= k <= n and is computed by exact division of q-factorials.
inline QPolynomial q_int(int n) {
    if (n <= 0) return {};
    return QPolynomial(std::vector<long long>(n, 1));
}

inline QPolynomial q_factorial(int n) {
    QPolynomial out(1);
    for (int i = 1; i <= n; ++i) out = out * q_int(i);
    return out;
}

inline QPolynomial q_binomial(int n, int k) {
    if (k < 0 || k > n) return {};
    return q_factorial(n).divided_exactly(q_factorial(k) * q_factorial(n - k));
}

}  // namespace pwq
