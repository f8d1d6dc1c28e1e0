#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "pwq/perm.hpp"

namespace pwq {

// Thrown when a code sequence cannot be inserted (no block carries the
// requested label) or fails the validity predicates.
struct InvalidCodeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Word w_1...w_n over the positive integers whose letter set is {1,...,m}.
struct PackedWord {
    std::vector<int> letters;

    explicit PackedWord(std::vector<int> w);
    int size() const { return static_cast<int>(letters.size()); }
    int max_letter() const;
    bool operator==(const PackedWord&) const = default;
    bool operator<(const PackedWord& o) const { return letters < o.letters; }
};

// (B_1 | ... | B_k): nonempty disjoint blocks, union {1,...,n}, each block
// stored sorted increasing.
struct OrderedSetPartition {
    std::vector<std::vector<int>> blocks;

    explicit OrderedSetPartition(std::vector<std::vector<int>> b);
    int size() const;  // n
    int block_count() const { return static_cast<int>(blocks.size()); }
    bool operator==(const OrderedSetPartition&) const = default;
};

enum class CodeFlavor { plain, boosted };

struct CodeSequence {
    std::vector<int> entries;
    CodeFlavor flavor = CodeFlavor::plain;

    bool operator==(const CodeSequence&) const = default;
};

// gamma(S): gamma_{s_j} = s_j - j + 1 for S = {s_1 < ... < s_d}, zero off S.
struct SkipSequence {
    std::vector<int> entries;
    std::vector<int> source;  // S, sorted, 1-based

    std::vector<int> reversed() const {  // gamma(S)*
        return std::vector<int>(entries.rbegin(), entries.rend());
    }
};

// All of W_{n,k} (packed words of length n using letters 1..k at least),
// in lexicographic order of letter sequences.
std::vector<PackedWord> enumerate_packed_words(int n, int k);

OrderedSetPartition word_to_osp(const PackedWord& w);
PackedWord osp_to_word(const OrderedSetPartition& sigma);

CodeSequence coinversion_code(const OrderedSetPartition& sigma);
CodeSequence boosted_code(const OrderedSetPartition& sigma);

SkipSequence skip_sequence(const std::vector<int>& S, int n);

// Inverse of coinversion_code for a k-block partition.
OrderedSetPartition insert_from_code(const CodeSequence& c, int k);

// Unboosting: right-to-left pass marking the first entry <= 0, then <= 1,
// and so on; unmarked entries drop by one. Returns the plain code and the
// number of marks (= block count). Total on nonnegative sequences.
std::pair<CodeSequence, int> unboost(const CodeSequence& c);

// Inverse of boosted_code.
OrderedSetPartition insert_from_boosted(const CodeSequence& c);

// The two characterization predicates (k-block codes and >=k-block boosted
// codes). Brute-force over the quantified subsets; intended for n <= 12.
bool is_valid_code(const std::vector<int>& c, int n, int k);
bool is_valid_boosted_code(const std::vector<int>& c, int n, int k);

// (pi . w)_i = w_{pi(i)}.
PackedWord permute_word(const PackedWord& w, const Permutation& pi);

}  // namespace pwq
