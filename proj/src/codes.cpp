#include "pwq/codes.hpp"

#include <algorithm>
#include <set>

namespace pwq {

PackedWord::PackedWord(std::vector<int> w) : letters(std::move(w)) {
    if (letters.empty()) throw std::invalid_argument("PackedWord: empty word");
    std::vector<bool> used;
    for (int v : letters) {
        if (v < 1) throw std::invalid_argument("PackedWord: letters must be positive");
        if (v > static_cast<int>(used.size())) used.resize(v, false);
        used[v - 1] = true;
    }
    for (bool b : used)
        if (!b) throw std::invalid_argument("PackedWord: letter set is not {1..m}");
}

int PackedWord::max_letter() const {
    return *std::max_element(letters.begin(), letters.end());
}

OrderedSetPartition::OrderedSetPartition(std::vector<std::vector<int>> b) : blocks(std::move(b)) {
    int n = 0;
    for (auto& blk : blocks) {
        if (blk.empty()) throw std::invalid_argument("OrderedSetPartition: empty block");
        std::sort(blk.begin(), blk.end());
        n += static_cast<int>(blk.size());
    }
    std::vector<bool> seen(n, false);
    for (const auto& blk : blocks)
        for (int v : blk) {
            if (v < 1 || v > n || seen[v - 1])
                throw std::invalid_argument("OrderedSetPartition: blocks must partition {1..n}");
            seen[v - 1] = true;
        }
}

int OrderedSetPartition::size() const {
    int n = 0;
    for (const auto& blk : blocks) n += static_cast<int>(blk.size());
    return n;
}

std::vector<PackedWord> enumerate_packed_words(int n, int k) {
    if (n < 1) throw std::invalid_argument("enumerate_packed_words: n must be >= 1");
    if (k < 1 || k > n) throw std::invalid_argument("enumerate_packed_words: need 1 <= k <= n");
    std::vector<PackedWord> out;
    std::vector<int> w(n);
    // letters bounded by n; lexicographic via increasing letter loops
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == n) {
            int mx = *std::max_element(w.begin(), w.end());
            if (mx < k) return;
            std::vector<bool> used(mx, false);
            for (int v : w) used[v - 1] = true;
            if (std::all_of(used.begin(), used.end(), [](bool b) { return b; }))
                out.emplace_back(w);
            return;
        }
        for (int v = 1; v <= n; ++v) {
            w[pos] = v;
            self(self, pos + 1);
        }
    };
    rec(rec, 0);
    return out;
}

OrderedSetPartition word_to_osp(const PackedWord& w) {
    std::vector<std::vector<int>> blocks(w.max_letter());
    for (int i = 0; i < w.size(); ++i) blocks[w.letters[i] - 1].push_back(i + 1);
    return OrderedSetPartition(std::move(blocks));
}

PackedWord osp_to_word(const OrderedSetPartition& sigma) {
    std::vector<int> w(sigma.size());
    for (int j = 0; j < sigma.block_count(); ++j)
        for (int i : sigma.blocks[j]) w[i - 1] = j + 1;
    return PackedWord(std::move(w));
}

namespace {

// c_i = #{l > j : min(B_l) > i}, plus the block offset for non-minimal i:
// j-1 in the plain code, j in the boosted one (blocks 1-based).
CodeSequence code_impl(const OrderedSetPartition& sigma, bool boosted) {
    int n = sigma.size();
    int k = sigma.block_count();
    std::vector<int> mins(k), blockof(n + 1);
    for (int j = 0; j < k; ++j) {
        mins[j] = sigma.blocks[j].front();
        for (int v : sigma.blocks[j]) blockof[v] = j;
    }
    CodeSequence c;
    c.flavor = boosted ? CodeFlavor::boosted : CodeFlavor::plain;
    c.entries.resize(n);
    for (int i = 1; i <= n; ++i) {
        int j = blockof[i];
        int cnt = 0;
        for (int l = j + 1; l < k; ++l)
            if (mins[l] > i) ++cnt;
        if (i != mins[j]) cnt += boosted ? j + 1 : j;
        c.entries[i - 1] = cnt;
    }
    return c;
}

}  // namespace

CodeSequence coinversion_code(const OrderedSetPartition& sigma) { return code_impl(sigma, false); }
CodeSequence boosted_code(const OrderedSetPartition& sigma) { return code_impl(sigma, true); }

SkipSequence skip_sequence(const std::vector<int>& S, int n) {
    SkipSequence out;
    out.entries.assign(n, 0);
    out.source = S;
    std::sort(out.source.begin(), out.source.end());
    for (size_t j = 0; j < out.source.size(); ++j) {
        int s = out.source[j];
        if (s < 1 || s > n) throw std::invalid_argument("skip_sequence: element out of range");
        if (j > 0 && out.source[j] == out.source[j - 1])
            throw std::invalid_argument("skip_sequence: repeated element");
        out.entries[s - 1] = s - static_cast<int>(j);  // s - (j+1) + 1
    }
    return out;
}

namespace {

// Insertion with coinversion labels. Empty blocks are labeled 0..e-1 right
// to left; nonempty blocks continue e, e+1, ... left to right, raised by
// one in the boosted variant.
OrderedSetPartition insert_impl(const std::vector<int>& entries, int k, bool boosted) {
    if (k < 1) throw InvalidCodeError("insertion needs at least one block");
    std::vector<std::vector<int>> blocks(k);
    for (int step = 0; step < static_cast<int>(entries.size()); ++step) {
        int ci = entries[step];
        if (ci < 0) throw InvalidCodeError("negative code entry");
        std::vector<int> empties, nonempties;
        for (int b = 0; b < k; ++b)
            (blocks[b].empty() ? empties : nonempties).push_back(b);
        int e = static_cast<int>(empties.size());
        if (ci < e) {
            blocks[empties[e - 1 - ci]].push_back(step + 1);
        } else {
            int lab = ci - e;
            if (boosted) {
                if (lab == 0) throw InvalidCodeError("no block carries the requested label");
                --lab;
            }
            if (lab >= static_cast<int>(nonempties.size()))
                throw InvalidCodeError("no block carries the requested label");
            blocks[nonempties[lab]].push_back(step + 1);
        }
    }
    for (const auto& b : blocks)
        if (b.empty()) throw InvalidCodeError("insertion left an empty block");
    return OrderedSetPartition(std::move(blocks));
}

}  // namespace

OrderedSetPartition insert_from_code(const CodeSequence& c, int k) {
    if (c.flavor != CodeFlavor::plain)
        throw std::invalid_argument("insert_from_code: plain code expected");
    return insert_impl(c.entries, k, false);
}

std::pair<CodeSequence, int> unboost(const CodeSequence& c) {
    int n = static_cast<int>(c.entries.size());
    std::vector<bool> marked(n, false);
    int t = 0;
    for (int i = n - 1; i >= 0; --i) {
        if (c.entries[i] < 0) throw std::invalid_argument("unboost: negative entry");
        if (c.entries[i] <= t) {
            marked[i] = true;
            ++t;
        }
    }
    CodeSequence plain;
    plain.flavor = CodeFlavor::plain;
    plain.entries.resize(n);
    for (int i = 0; i < n; ++i) plain.entries[i] = c.entries[i] - (marked[i] ? 0 : 1);
    return {plain, t};
}

OrderedSetPartition insert_from_boosted(const CodeSequence& c) {
    if (c.flavor != CodeFlavor::boosted)
        throw std::invalid_argument("insert_from_boosted: boosted code expected");
    auto [plain, blocks] = unboost(c);
    return insert_impl(c.entries, blocks, true);
}

namespace {

bool dominates(const std::vector<int>& c, const std::vector<int>& pattern) {
    for (size_t i = 0; i < c.size(); ++i)
        if (c[i] < pattern[i]) return false;
    return true;
}

// Visit all size-d subsets of {1..n}; f gets the sorted subset.
template <typename F>
void for_subsets(int n, int d, F&& f) {
    std::vector<int> s(d);
    for (int i = 0; i < d; ++i) s[i] = i + 1;
    if (d > n) return;
    while (true) {
        f(s);
        int i = d - 1;
        while (i >= 0 && s[i] == n - d + i + 1) --i;
        if (i < 0) break;
        ++s[i];
        for (int j = i + 1; j < d; ++j) s[j] = s[j - 1] + 1;
    }
}

}  // namespace

bool is_valid_code(const std::vector<int>& c, int n, int k) {
    if (static_cast<int>(c.size()) != n) throw std::invalid_argument("is_valid_code: length mismatch");
    for (int ci : c)
        if (ci < 0 || ci >= k) return false;
    bool ok = true;
    for_subsets(n, n - k + 1, [&](const std::vector<int>& S) {
        if (!ok) return;
        if (dominates(c, skip_sequence(S, n).reversed())) ok = false;
    });
    return ok;
}

bool is_valid_boosted_code(const std::vector<int>& c, int n, int k) {
    if (static_cast<int>(c.size()) != n)
        throw std::invalid_argument("is_valid_boosted_code: length mismatch");
    for (int ci : c)
        if (ci < 0 || ci >= n) return false;
    bool ok = true;
    for_subsets(n, n - k + 1, [&](const std::vector<int>& S) {
        if (!ok) return;
        if (dominates(c, skip_sequence(S, n).reversed())) ok = false;
    });
    if (!ok) return false;
    // condition (iii): d spliced into a reverse skip sequence of [n-1];
    // d = n duplicates condition (i) but is checked all the same.
    for (int d = 1; d <= n && ok; ++d) {
        for_subsets(n - 1, n - d, [&](const std::vector<int>& T) {
            if (!ok) return;
            std::vector<int> gs = skip_sequence(T, n - 1).reversed();
            for (int i = 1; i <= n; ++i) {
                std::vector<int> pat(gs.begin(), gs.begin() + (n - i));
                pat.push_back(d);
                pat.insert(pat.end(), gs.begin() + (n - i), gs.end());
                if (dominates(c, pat)) { ok = false; return; }
            }
        });
    }
    return ok;
}

PackedWord permute_word(const PackedWord& w, const Permutation& pi) {
    if (pi.size() != w.size()) throw std::invalid_argument("permute_word: size mismatch");
    std::vector<int> out(w.size());
    for (int i = 0; i < w.size(); ++i) out[i] = w.letters[pi(i)];
    return PackedWord(std::move(out));
}

}  // namespace pwq
