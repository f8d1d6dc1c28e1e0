#include "pwq/symfunc.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "pwq/codes.hpp"

namespace pwq {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw std::invalid_argument("Partition: parts must weakly decrease");
    }
}

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

Partition Partition::conjugate() const {
    if (parts.empty()) return {};
    std::vector<int> c(parts[0], 0);
    for (int p : parts)
        for (int i = 0; i < p; ++i) ++c[i];
    return Partition(std::move(c));
}

std::string Partition::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
    os << "]";
    return os.str();
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, int mx) -> void {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rest, mx); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

long long z_of(const Partition& mu) {
    long long z = 1;
    int run = 0, prev = -1;
    auto flush = [&]() {
        for (int i = 1; i <= run; ++i) z *= i;  // m_i!
    };
    for (int p : mu.parts) {
        if (p != prev) { flush(); run = 0; prev = p; }
        ++run;
        z *= p;
    }
    flush();
    return z;
}

Partition StandardYoungTableau::shape() const {
    std::vector<int> p;
    for (const auto& r : rows) p.push_back(static_cast<int>(r.size()));
    return Partition(std::move(p));
}

int StandardYoungTableau::size() const {
    int n = 0;
    for (const auto& r : rows) n += static_cast<int>(r.size());
    return n;
}

StandardYoungTableau StandardYoungTableau::transposed() const {
    StandardYoungTableau t;
    if (rows.empty()) return t;
    t.rows.resize(rows[0].size());
    for (const auto& r : rows)
        for (size_t c = 0; c < r.size(); ++c) t.rows[c].push_back(r[c]);
    return t;
}

std::vector<StandardYoungTableau> enumerate_syt(const Partition& lambda) {
    int n = lambda.size();
    std::vector<std::vector<int>> rows(lambda.length());
    std::vector<StandardYoungTableau> out;
    auto rec = [&](auto&& self, int v) -> void {
        if (v > n) {
            out.push_back({rows});
            return;
        }
        for (int r = 0; r < lambda.length(); ++r) {
            int c = static_cast<int>(rows[r].size());
            if (c >= lambda.parts[r]) continue;
            if (r > 0 && static_cast<int>(rows[r - 1].size()) <= c) continue;
            rows[r].push_back(v);
            self(self, v + 1);
            rows[r].pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

long long hook_length_count(const Partition& lambda) {
    int n = lambda.size();
    Partition conj = lambda.conjugate();
    // n! / prod hooks, computed as an exact integer via rational accumulation
    Rational acc(1);
    for (int i = 2; i <= n; ++i) acc *= i;
    for (int r = 0; r < lambda.length(); ++r)
        for (int c = 0; c < lambda.parts[r]; ++c) {
            int hook = (lambda.parts[r] - c) + (conj.parts[c] - r) - 1;
            acc /= hook;
        }
    if (acc.get_den() != 1) throw std::logic_error("hook_length_count: non-integer");
    return static_cast<long long>(acc.get_num().get_si());
}

std::pair<int, int> des_maj(const StandardYoungTableau& T) {
    int n = T.size();
    std::vector<int> rowof(n + 1, 0);
    for (size_t r = 0; r < T.rows.size(); ++r)
        for (int v : T.rows[r]) rowof[v] = static_cast<int>(r);
    int des = 0, maj = 0;
    for (int i = 1; i < n; ++i)
        if (rowof[i + 1] > rowof[i]) { ++des; maj += i; }
    return {des, maj};
}

namespace {

// Beta-set form of the Murnaghan-Nakayama recursion: removing a border
// strip of size p moves a bead down by p; the sign counts jumped beads.
long long mn_rec(const std::vector<int>& lam, const std::vector<int>& mu, size_t mu_pos,
                 std::map<std::pair<std::vector<int>, size_t>, long long>& memo) {
    if (lam.empty()) return 1;
    auto key = std::make_pair(lam, mu_pos);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    int p = mu[mu_pos];
    int L = static_cast<int>(lam.size());
    std::vector<int> beta(L);
    for (int j = 0; j < L; ++j) beta[j] = lam[j] + (L - 1 - j);
    long long total = 0;
    for (int j = 0; j < L; ++j) {
        int b = beta[j];
        if (b < p) continue;
        int target = b - p;
        bool occupied = false;
        int between = 0;
        for (int x : beta) {
            if (x == target) occupied = true;
            if (x > target && x < b) ++between;
        }
        if (occupied) continue;
        std::vector<int> nb = beta;
        nb[j] = target;
        std::sort(nb.rbegin(), nb.rend());
        std::vector<int> nl;
        for (int t = 0; t < L; ++t) {
            int part = nb[t] - (L - 1 - t);
            if (part > 0) nl.push_back(part);
        }
        long long sub = mn_rec(nl, mu, mu_pos + 1, memo);
        total += (between % 2 == 0) ? sub : -sub;
    }
    memo.emplace(std::move(key), total);
    return total;
}

}  // namespace

long long mn_character(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size())
        throw std::invalid_argument("mn_character: |lambda| != |mu|");
    std::map<std::pair<std::vector<int>, size_t>, long long> memo;
    return mn_rec(lambda.parts, mu.parts, 0, memo);
}

std::map<Partition, Rational> schur_expand(const std::map<Partition, Rational>& classfn, int n) {
    std::vector<Partition> mus = partitions_of(n);
    for (const auto& mu : mus)
        if (!classfn.contains(mu))
            throw std::invalid_argument("schur_expand: missing class " + mu.str());
    std::map<Partition, Rational> out;
    for (const auto& lam : mus) {
        Rational c(0);
        for (const auto& mu : mus)
            c += classfn.at(mu) * to_rational(mn_character(lam, mu)) / to_rational(z_of(mu));
        if (c != 0) out.emplace(lam, c);
    }
    return out;
}

QPolynomial SchurSymmetricFunction::coeff(const Partition& lambda) const {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? QPolynomial() : it->second;
}

void SchurSymmetricFunction::set_coeff(const Partition& lambda, QPolynomial c) {
    if (lambda.size() != n_)
        throw std::invalid_argument("SchurSymmetricFunction: partition size mismatch");
    if (c.is_zero()) terms_.erase(lambda);
    else terms_[lambda] = std::move(c);
}

void SchurSymmetricFunction::add_term(const Partition& lambda, const QPolynomial& c) {
    set_coeff(lambda, coeff(lambda) + c);
}

SchurSymmetricFunction& SchurSymmetricFunction::operator+=(const SchurSymmetricFunction& o) {
    if (n_ != o.n_ && !o.is_zero() && !is_zero())
        throw std::invalid_argument("SchurSymmetricFunction: degree mismatch");
    if (is_zero()) n_ = o.n_;
    for (const auto& [lam, c] : o.terms_) add_term(lam, c);
    return *this;
}

SchurSymmetricFunction SchurSymmetricFunction::shifted(int j) const {
    SchurSymmetricFunction out(n_);
    for (const auto& [lam, c] : terms_) out.set_coeff(lam, c.shifted(j));
    return out;
}

SchurSymmetricFunction SchurSymmetricFunction::omega() const {
    SchurSymmetricFunction out(n_);
    for (const auto& [lam, c] : terms_) out.set_coeff(lam.conjugate(), c);
    return out;
}

int SchurSymmetricFunction::max_q_degree() const {
    int d = -1;
    for (const auto& [lam, c] : terms_) d = std::max(d, c.degree());
    return d;
}

SchurSymmetricFunction SchurSymmetricFunction::rev_q(int D) const {
    SchurSymmetricFunction out(n_);
    for (const auto& [lam, c] : terms_) out.set_coeff(lam, c.reversed(D));
    return out;
}

SchurSymmetricFunction SchurSymmetricFunction::rev_q() const {
    if (is_zero()) return *this;
    return rev_q(max_q_degree());
}

long long SchurSymmetricFunction::dimension_at_one() const {
    long long total = 0;
    for (const auto& [lam, c] : terms_) total += c.at_one() * hook_length_count(lam);
    return total;
}

std::string SchurSymmetricFunction::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [lam, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")*s" << lam.str();
    }
    return os.str();
}

SchurSymmetricFunction c_function(int n, int k, ShapeConvention conv) {
    if (k < 1 || k > n) throw std::invalid_argument("c_function: need 1 <= k <= n");
    SchurSymmetricFunction out(n);
    const int r = n - k;
    for (const auto& lam : partitions_of(n)) {
        Partition key = conv == ShapeConvention::shape ? lam : lam.conjugate();
        for (const auto& T : enumerate_syt(lam)) {
            auto [des, maj] = des_maj(T);
            QPolynomial b = q_binomial(des, r);
            if (b.is_zero()) continue;
            int expo = maj + r * (r - 1) / 2 - r * des;
            out.add_term(key, b.shifted(expo));
        }
    }
    return out;
}

long long packed_fixed_points(int n, int k, const Partition& mu) {
    if (mu.size() != n) throw std::invalid_argument("packed_fixed_points: |mu| != n");
    Permutation sigma = Permutation::canonical_of_cycle_type(mu.parts, n);
    long long count = 0;
    for (const auto& w : enumerate_packed_words(n, k))
        if (permute_word(w, sigma) == w) ++count;
    return count;
}

}  // namespace pwq
