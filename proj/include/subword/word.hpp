#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "subword/numeric.hpp"

namespace subword {

// A word over the alphabet {0, .., alphabet-1}.  Rank in subword order is the
// length.  Words order by length first, then lexicographically, which fixes a
// canonical element order inside every rank level.
struct Word {
    int alphabet = 0;
    std::vector<uint8_t> letters;

    Word() = default;
    Word(int n, std::vector<uint8_t> w);

    int rank() const { return static_cast<int>(letters.size()); }

    std::strong_ordering operator<=>(const Word& o) const {
        if (auto c = letters.size() <=> o.letters.size(); c != 0) return c;
        if (auto c = letters <=> o.letters; c != 0) return c;
        return alphabet <=> o.alphabet;
    }
    bool operator==(const Word&) const = default;

    std::string str() const; // letters rendered a, b, c, ...
};

// Parses "abab" style spellings; "-" denotes the empty word.
Word word_from_string(const std::string& s, int alphabet);

// u <= v in subword order: u embeds as a subsequence of v.
bool is_subword(const Word& u, const Word& v);

// Number of embeddings of u into v as index sets.
Integer count_embeddings(const Word& u, const Word& v);

// 1-based positions i >= 2 of v with v[i-1] == v[i]; embeddings counted by
// count_normal_embeddings must cover every such position.
std::vector<int> repetition_set(const Word& v);

// Embeddings of u into v whose support contains the repetition set of v.
Integer count_normal_embeddings(const Word& u, const Word& v);

// No two adjacent letters equal.
bool is_normal(const Word& w);

// Number of normal words of length j over n letters: n (n-1)^{j-1} for j >= 1.
Integer count_normal(int n, int j);

// Mobius function of the interval [u, v] in subword order, by the normal
// embedding formula: (-1)^{|v| - |u|} times the number of normal embeddings.
Integer mobius_interval(const Word& u, const Word& v);

// Same value computed from the defining recursion over the explicit interval;
// when normal_only is set the interval is taken inside the normal word poset.
Integer mobius_recursive(const Word& u, const Word& v, bool normal_only = false);

// Number of words of length p over n letters lying above some fixed word of
// length beta_len; independent of the word chosen.
Integer zeta_counts(int n, int beta_len, int p);

// Coefficient of t^j in t^k (1 - t) / (1 + (n-1) t)^{k+1}, the generating
// function whose coefficients sum mobius_interval over all words of length j
// above a fixed length-k word.
Integer mobius_gf_coefficient(int n, int k, int j);

// All n^len words of a given length, in canonical order.
std::vector<Word> all_words(int n, int len);

// Distinct subwords of w, every length from 0 to |w|, in canonical order.
std::vector<Word> subwords_of(const Word& w);

// Relabels letters by a permutation of the alphabet.
Word apply_permutation(const Word& w, const std::vector<int>& perm);

} // namespace subword
