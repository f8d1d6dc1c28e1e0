#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "pwq/codes.hpp"

using namespace pwq;

namespace {

OrderedSetPartition osp(std::vector<std::vector<int>> blocks) {
    return OrderedSetPartition(std::move(blocks));
}

std::vector<int> entries(std::initializer_list<int> v) { return std::vector<int>(v); }

}  // namespace

TEST_CASE("packed word validation") {
    CHECK_NOTHROW(PackedWord({2, 1, 2}));
    CHECK_THROWS_AS(PackedWord({1, 3}), std::invalid_argument);   // 2 missing
    CHECK_THROWS_AS(PackedWord({2, 2}), std::invalid_argument);   // 1 missing
    CHECK_THROWS_AS(PackedWord({0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(PackedWord({}), std::invalid_argument);
}

TEST_CASE("enumerate_packed_words matches the paper's W_3 and brute force") {
    auto w3 = enumerate_packed_words(3, 1);
    std::set<std::vector<int>> got;
    for (const auto& w : w3) got.insert(w.letters);
    std::set<std::vector<int>> expected = {
        {1, 2, 3}, {2, 1, 3}, {1, 3, 2}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1}, {1, 1, 2},
        {1, 2, 1}, {2, 1, 1}, {1, 2, 2}, {2, 1, 2}, {2, 2, 1}, {1, 1, 1}};
    CHECK(got == expected);
    CHECK(w3.size() == 13);

    CHECK(enumerate_packed_words(1, 1).size() == 1);
    CHECK(enumerate_packed_words(4, 1).size() == 75);

    // lexicographic order and agreement with the filtered brute force
    for (int n = 1; n <= 5; ++n)
        for (int k = 1; k <= n; ++k) {
            auto lib = enumerate_packed_words(n, k);
            auto ref = oracle::packed_words_bruteforce(n, k);
            REQUIRE(lib.size() == ref.size());
            for (size_t i = 0; i < lib.size(); ++i) CHECK(lib[i].letters == ref[i]);
        }

    CHECK(enumerate_packed_words(6, 1).size() == oracle::fubini(6));
    CHECK(oracle::fubini(5) == 541);

    CHECK_THROWS_AS(enumerate_packed_words(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_packed_words(3, 4), std::invalid_argument);
}

TEST_CASE("|W_{n,k}| counts ordered set partitions with >= k blocks") {
    for (int n = 1; n <= 5; ++n) {
        auto all = oracle::osps_recursive(n);
        for (int k = 1; k <= n; ++k) {
            size_t expect = 0;
            for (const auto& s : all)
                if (static_cast<int>(s.size()) >= k) ++expect;
            CHECK(enumerate_packed_words(n, k).size() == expect);
        }
    }
}

TEST_CASE("word/OSP bijection") {
    CHECK(word_to_osp(PackedWord({2, 1, 2})) == osp({{2}, {1, 3}}));
    CHECK(osp_to_word(osp({{6}, {1, 3}, {2, 5, 7}, {4}})).letters ==
          std::vector<int>{2, 3, 2, 4, 3, 1, 3});
    CHECK(word_to_osp(PackedWord({1, 1, 1})) == osp({{1, 2, 3}}));

    for (const auto& w : enumerate_packed_words(5, 1))
        CHECK(osp_to_word(word_to_osp(w)) == w);
    for (const auto& blocks : oracle::osps_recursive(5)) {
        OrderedSetPartition s(blocks);
        CHECK(word_to_osp(osp_to_word(s)) == s);
    }
}

TEST_CASE("coinversion code examples") {
    CHECK(coinversion_code(osp({{6}, {1, 3}, {2, 5, 7}, {4}})).entries ==
          entries({2, 1, 2, 0, 2, 0, 2}));
    // the zero code belongs to ({m..n} | m-1 | ... | 1) for every block count
    for (int n = 1; n <= 6; ++n)
        for (int m = 1; m <= n; ++m) {
            std::vector<std::vector<int>> blocks;
            std::vector<int> first;
            for (int j = m; j <= n; ++j) first.push_back(j);
            blocks.push_back(first);
            for (int j = m - 1; j >= 1; --j) blocks.push_back({j});
            OrderedSetPartition s(std::move(blocks));
            CHECK(coinversion_code(s).entries == std::vector<int>(n, 0));
            CHECK(insert_from_code(CodeSequence{std::vector<int>(n, 0), CodeFlavor::plain},
                                   s.block_count()) == s);
        }
    CHECK(coinversion_code(osp({{2}, {1}})).entries == entries({0, 0}));
    CHECK(coinversion_code(osp({{1}, {2}})).entries == entries({1, 0}));
}

TEST_CASE("boosted code examples") {
    CHECK(boosted_code(osp({{3, 7}, {1, 2, 4}, {6}, {5, 8}})).entries ==
          entries({2, 4, 2, 4, 0, 0, 1, 4}));
    CHECK(boosted_code(osp({{1, 2, 3}})).entries == entries({0, 1, 1}));

    // non-minimal entries exceed the plain entries by exactly one;
    // permutation-shaped partitions boost nothing
    for (const auto& blocks : oracle::osps_recursive(5)) {
        OrderedSetPartition s(blocks);
        auto plain = coinversion_code(s).entries;
        auto boost = boosted_code(s).entries;
        std::set<int> mins;
        for (const auto& b : s.blocks) mins.insert(b.front());
        for (int i = 1; i <= 5; ++i) {
            int diff = boost[i - 1] - plain[i - 1];
            CHECK(diff == (mins.count(i) ? 0 : 1));
        }
        if (s.block_count() == 5) CHECK(plain == boost);
    }
}

TEST_CASE("skip sequences") {
    auto g = skip_sequence({2, 3, 6}, 7);
    CHECK(g.entries == entries({0, 2, 2, 0, 0, 4, 0}));
    CHECK(g.reversed() == entries({0, 4, 0, 0, 2, 2, 0}));
    CHECK(skip_sequence({}, 4).entries == std::vector<int>(4, 0));
    CHECK(skip_sequence({1, 2, 3, 4, 5}, 5).entries == std::vector<int>(5, 1));
    CHECK_THROWS_AS(skip_sequence({0}, 3), std::invalid_argument);
    CHECK_THROWS_AS(skip_sequence({4}, 3), std::invalid_argument);
}

TEST_CASE("insertion from plain codes") {
    CodeSequence c{{2, 1, 2, 0, 2, 0, 2}, CodeFlavor::plain};
    CHECK(insert_from_code(c, 4) == osp({{6}, {1, 3}, {2, 5, 7}, {4}}));
    CHECK(insert_from_code(CodeSequence{{0, 0, 0}, CodeFlavor::plain}, 3) ==
          osp({{3}, {2}, {1}}));
    CHECK(insert_from_code(CodeSequence{{1, 0}, CodeFlavor::plain}, 2) == osp({{1}, {2}}));
    CHECK_THROWS_AS(insert_from_code(CodeSequence{{3, 0}, CodeFlavor::plain}, 2),
                    InvalidCodeError);
}

TEST_CASE("unboosting") {
    CodeSequence b{{2, 4, 2, 4, 0, 0, 1, 4}, CodeFlavor::boosted};
    auto [plain, blocks] = unboost(b);
    CHECK(plain.entries == entries({2, 3, 2, 3, 0, 0, 0, 3}));
    CHECK(blocks == 4);

    auto [p2, b2] = unboost(CodeSequence{{0, 0, 0}, CodeFlavor::boosted});
    CHECK(p2.entries == entries({0, 0, 0}));
    CHECK(b2 == 3);

    auto [p3, b3] = unboost(CodeSequence{{0, 1, 1}, CodeFlavor::boosted});
    CHECK(p3.entries == entries({0, 0, 0}));
    CHECK(b3 == 1);
}

TEST_CASE("insertion from boosted codes") {
    CHECK(insert_from_boosted(CodeSequence{{2, 4, 2, 4, 0, 0, 1, 4}, CodeFlavor::boosted}) ==
          osp({{3, 7}, {1, 2, 4}, {6}, {5, 8}}));
    CHECK(insert_from_boosted(CodeSequence{{0, 1, 1}, CodeFlavor::boosted}) ==
          osp({{1, 2, 3}}));
    CHECK(insert_from_boosted(CodeSequence{{0, 0}, CodeFlavor::boosted}) == osp({{2}, {1}}));
    CHECK_THROWS_AS(insert_from_boosted(CodeSequence{{0, 2}, CodeFlavor::boosted}),
                    InvalidCodeError);
}

TEST_CASE("validity predicate examples") {
    CHECK(is_valid_boosted_code({2, 4, 2, 4, 0, 0, 1, 4}, 8, 4));
    CHECK_FALSE(is_valid_boosted_code({0, 2}, 2, 1));
    for (int n = 1; n <= 5; ++n)
        for (int k = 1; k <= n; ++k)
            CHECK(is_valid_boosted_code(std::vector<int>(n, 0), n, k));
    CHECK_THROWS_AS(is_valid_boosted_code({0, 0}, 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(is_valid_code({0, 0}, 3, 1), std::invalid_argument);
}

TEST_CASE("round trips and unboost lemma over all partitions, n <= 5") {
    for (int n = 1; n <= 5; ++n) {
        for (const auto& blocks : oracle::osps_recursive(n)) {
            OrderedSetPartition s(blocks);
            auto bc = boosted_code(s);
            CHECK(insert_from_boosted(bc) == s);
            auto [plain, cnt] = unboost(bc);
            CHECK(plain == coinversion_code(s));
            CHECK(cnt == s.block_count());
            CHECK(insert_from_code(coinversion_code(s), s.block_count()) == s);
        }
    }
}

TEST_CASE("characterization of codes by the dominance conditions, n <= 4") {
    for (int n = 1; n <= 4; ++n) {
        auto all = oracle::osps_recursive(n);
        for (int k = 1; k <= n; ++k) {
            std::set<std::vector<int>> boosted_set, plain_set;
            for (const auto& blocks : all) {
                OrderedSetPartition s(blocks);
                if (s.block_count() >= k) boosted_set.insert(boosted_code(s).entries);
                if (s.block_count() == k) plain_set.insert(coinversion_code(s).entries);
            }
            std::set<std::vector<int>> boosted_pred, plain_pred;
            std::vector<int> c(n, 0);
            while (true) {
                if (is_valid_boosted_code(c, n, k)) boosted_pred.insert(c);
                if (is_valid_code(c, n, k)) plain_pred.insert(c);
                int i = n - 1;
                while (i >= 0 && c[i] == n - 1) { c[i] = 0; --i; }
                if (i < 0) break;
                ++c[i];
            }
            CHECK(boosted_set == boosted_pred);
            CHECK(plain_set == plain_pred);
        }
    }
}

TEST_CASE("permute_word: examples, action law, W_{n,k} closure") {
    PackedWord w({1, 1, 2});
    CHECK(permute_word(w, Permutation::transposition(3, 0, 2)).letters == entries({2, 1, 1}));
    CHECK(permute_word(w, Permutation::identity(3)) == w);
    // 3-cycle sending position 1->2->3->1 (0-based images)
    Permutation rho(std::vector<int>{1, 2, 0});
    CHECK(permute_word(PackedWord({1, 2, 3}), rho).letters == entries({2, 3, 1}));

    Permutation pi(std::vector<int>{2, 0, 1});
    for (const auto& word : enumerate_packed_words(4, 2)) {
        Permutation a(std::vector<int>{1, 3, 0, 2}), b(std::vector<int>{3, 2, 1, 0});
        CHECK(permute_word(permute_word(word, b), a) == permute_word(word, b.compose(a)));
    }
    // letter permutation preserves W_{n,k} as a set
    for (int n = 1; n <= 4; ++n)
        for (int k = 1; k <= n; ++k) {
            auto words = enumerate_packed_words(n, k);
            std::set<std::vector<int>> set0;
            for (const auto& x : words) set0.insert(x.letters);
            Permutation cyc = Permutation::canonical_of_cycle_type({n}, n);
            std::set<std::vector<int>> set1;
            for (const auto& x : words) set1.insert(permute_word(x, cyc).letters);
            CHECK(set0 == set1);
        }

    CHECK_THROWS_AS(permute_word(w, Permutation::identity(4)), std::invalid_argument);
}
