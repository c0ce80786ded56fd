#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "subword/word.hpp"

using namespace subword;

namespace {
Word W(const std::string& s, int n) { return word_from_string(s, n); }
} // namespace

TEST_CASE("word construction and canonical order") {
    CHECK(W("abab", 2).rank() == 4);
    CHECK(W("-", 3).rank() == 0);
    CHECK(W("abab", 2).str() == "abab");
    CHECK_THROWS_AS(W("abc", 2), std::invalid_argument);
    CHECK(W("b", 2) < W("aa", 2));  // length-major order
    CHECK(W("ab", 2) < W("ba", 2)); // lexicographic inside a rank
}

TEST_CASE("subword relation") {
    CHECK(is_subword(W("-", 2), W("abab", 2)));
    CHECK(is_subword(W("ab", 2), W("abab", 2)));
    CHECK(is_subword(W("bb", 2), W("abab", 2)));
    CHECK_FALSE(is_subword(W("bb", 2), W("aba", 2)));
    CHECK_FALSE(is_subword(W("abab", 2), W("ab", 2)));

    // reflexive, antisymmetric on samples, transitive closure sanity
    for (const Word& w : all_words(2, 3)) CHECK(is_subword(w, w));
}

TEST_CASE("embedding counts") {
    CHECK(count_embeddings(W("ab", 2), W("abab", 2)) == 3);
    CHECK(count_embeddings(W("-", 2), W("abab", 2)) == 1);
    CHECK(count_embeddings(W("a", 2), W("aaaa", 2)) == 4);
    CHECK(count_embeddings(W("ba", 2), W("aab", 2)) == 0);

    // embeddings of u split by whether the last position of v is used
    for (const Word& u : all_words(2, 2))
        for (const Word& v : all_words(2, 4)) {
            Word v_prefix(2, std::vector<uint8_t>(v.letters.begin(), v.letters.end() - 1));
            Integer with_last = 0;
            if (!u.letters.empty() && u.letters.back() == v.letters.back()) {
                Word u_prefix(2, std::vector<uint8_t>(u.letters.begin(), u.letters.end() - 1));
                with_last = count_embeddings(u_prefix, v_prefix);
            }
            CHECK(count_embeddings(u, v) == count_embeddings(u, v_prefix) + with_last);
        }
}

TEST_CASE("repetition sets and normality") {
    CHECK(repetition_set(W("abab", 2)).empty());
    CHECK(repetition_set(W("aab", 2)) == std::vector<int>{2});
    CHECK(repetition_set(W("aaa", 2)) == std::vector<int>{2, 3});
    CHECK(is_normal(W("abcabc", 3)));
    CHECK_FALSE(is_normal(W("aabb", 2)));
    CHECK(is_normal(W("-", 2)));

    CHECK(count_normal(3, 2) == 6);
    CHECK(count_normal(4, 1) == 4);
    for (int n = 1; n <= 3; ++n)
        for (int j = 1; j <= 5; ++j) {
            Integer c = 0;
            for (const Word& w : all_words(n, j)) c += is_normal(w) ? 1 : 0;
            CHECK(count_normal(n, j) == c);
        }
}

TEST_CASE("normal embeddings cover the repetition set") {
    CHECK(count_normal_embeddings(W("ab", 2), W("abab", 2)) == 3);
    CHECK(count_normal_embeddings(W("a", 2), W("aa", 2)) == 1);
    CHECK(count_normal_embeddings(W("a", 2), W("aaa", 2)) == 0);
    CHECK(count_normal_embeddings(W("aa", 2), W("aaa", 2)) == 1);

    // brute-force oracle over index subsets
    for (const Word& u : all_words(2, 2))
        for (const Word& v : all_words(2, 5)) {
            auto rep = repetition_set(v);
            Integer expected = 0;
            for (unsigned mask = 0; mask < (1u << 5); ++mask) {
                std::vector<uint8_t> picked;
                bool covers = true;
                for (int j = 0; j < 5; ++j)
                    if (mask & (1u << j)) picked.push_back(v.letters[static_cast<size_t>(j)]);
                for (int pos : rep)
                    if (!(mask & (1u << (pos - 1)))) covers = false;
                if (covers && picked == u.letters) ++expected;
            }
            CHECK(count_normal_embeddings(u, v) == expected);
        }
}

TEST_CASE("mobius closed form equals interval recursion") {
    CHECK(mobius_interval(W("ab", 2), W("abab", 2)) == 3);
    CHECK(mobius_interval(W("-", 2), W("aa", 2)) == 0);
    CHECK_THROWS_AS(mobius_interval(W("bb", 2), W("aba", 2)), std::invalid_argument);

    // mu(empty, alpha) is (-1)^{|alpha|} exactly on normal words
    for (int n = 2; n <= 3; ++n)
        for (int j = 0; j <= 4; ++j)
            for (const Word& a : all_words(n, j)) {
                Integer m = mobius_interval(W("-", n), a);
                if (is_normal(a))
                    CHECK(m == (j % 2 == 0 ? 1 : -1));
                else
                    CHECK(m == 0);
            }

    // every interval of the length <= 3 poset over two letters
    for (int j = 0; j <= 3; ++j)
        for (const Word& v : all_words(2, j))
            for (const Word& u : subwords_of(v))
                CHECK(mobius_interval(u, v) == mobius_recursive(u, v));
}

TEST_CASE("mobius recursion restricted to normal words") {
    CHECK(mobius_recursive(W("ab", 2), W("abab", 2)) == 3);
    CHECK(mobius_recursive(W("ab", 2), W("abab", 2), true) == 1);
    CHECK_THROWS_AS(mobius_recursive(W("aa", 2), W("aab", 2), true), std::invalid_argument);
}

TEST_CASE("zeta counts against enumeration") {
    CHECK(zeta_counts(2, 1, 3) == 7);
    CHECK(zeta_counts(3, 2, 2) == 1);
    for (int n = 2; n <= 3; ++n)
        for (int b = 0; b <= 3; ++b) {
            CHECK(zeta_counts(n, 0, b) == ipow(Integer(n), static_cast<unsigned>(b)));
            for (int p = b; p <= 4; ++p)
                for (const Word& beta : all_words(n, b)) {
                    Integer c = 0;
                    for (const Word& a : all_words(n, p)) c += is_subword(beta, a) ? 1 : 0;
                    CHECK(zeta_counts(n, b, p) == c);
                }
        }
}

TEST_CASE("mobius generating function matches level sums") {
    for (int n = 2; n <= 3; ++n)
        for (int k = 0; k <= 3; ++k)
            for (const Word& beta : all_words(n, k))
                for (int j = 0; j <= 4; ++j) {
                    Integer sum = 0;
                    for (const Word& a : all_words(n, j))
                        if (is_subword(beta, a)) sum += mobius_interval(beta, a);
                    CHECK(sum == mobius_gf_coefficient(n, k, j));
                }
}

TEST_CASE("subword enumeration is deduplicated and complete") {
    auto subs = subwords_of(W("abab", 2));
    CHECK(subs.size() == 12); // -, a, b, aa, ab, ba, bb, aab, aba, abb, bab, abab
    std::set<Word> expect;
    for (unsigned mask = 0; mask < 16; ++mask) {
        std::vector<uint8_t> s;
        const auto& L = W("abab", 2).letters;
        for (int j = 0; j < 4; ++j)
            if (mask & (1u << j)) s.push_back(L[static_cast<size_t>(j)]);
        expect.insert(Word(2, s));
    }
    CHECK(subs.size() == expect.size());
    CHECK(std::set<Word>(subs.begin(), subs.end()) == expect);
}

TEST_CASE("alphabet permutations act on words") {
    CHECK(apply_permutation(W("abab", 3), {2, 0, 1}).str() == "caca");
    CHECK(apply_permutation(W("-", 2), {1, 0}).str() == "-");
}
