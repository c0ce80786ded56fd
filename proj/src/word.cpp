#include "subword/word.hpp"

#include <algorithm>
#include <stdexcept>

#include "subword/combinatorics.hpp"

namespace subword {

Word::Word(int n, std::vector<uint8_t> w) : alphabet(n), letters(std::move(w)) {
    if (n < 0) throw std::invalid_argument("Word: negative alphabet");
    for (uint8_t c : letters)
        if (c >= alphabet) throw std::invalid_argument("Word: letter outside alphabet");
}

std::string Word::str() const {
    if (letters.empty()) return "-";
    std::string s;
    s.reserve(letters.size());
    for (uint8_t c : letters) s.push_back(static_cast<char>('a' + c));
    return s;
}

Word word_from_string(const std::string& s, int alphabet) {
    std::vector<uint8_t> w;
    if (s != "-") {
        w.reserve(s.size());
        for (char c : s) {
            if (c < 'a' || c >= 'a' + alphabet)
                throw std::invalid_argument("word_from_string: letter outside alphabet");
            w.push_back(static_cast<uint8_t>(c - 'a'));
        }
    }
    return Word(alphabet, std::move(w));
}

bool is_subword(const Word& u, const Word& v) {
    size_t i = 0;
    for (size_t j = 0; j < v.letters.size() && i < u.letters.size(); ++j)
        if (u.letters[i] == v.letters[j]) ++i;
    return i == u.letters.size();
}

Integer count_embeddings(const Word& u, const Word& v) {
    const size_t m = u.letters.size();
    const size_t p = v.letters.size();
    if (m > p) return 0;
    // d[i] = embeddings of the length-i prefix of u into the processed prefix of v
    std::vector<Integer> d(m + 1, 0);
    d[0] = 1;
    for (size_t j = 0; j < p; ++j)
        for (size_t i = std::min(m, j + 1); i >= 1; --i)
            if (u.letters[i - 1] == v.letters[j]) d[i] += d[i - 1];
    return d[m];
}

std::vector<int> repetition_set(const Word& v) {
    std::vector<int> r;
    for (size_t j = 1; j < v.letters.size(); ++j)
        if (v.letters[j] == v.letters[j - 1]) r.push_back(static_cast<int>(j) + 1);
    return r;
}

Integer count_normal_embeddings(const Word& u, const Word& v) {
    const size_t m = u.letters.size();
    const size_t p = v.letters.size();
    if (m > p) return 0;
    // Same prefix DP, except that a repeated position of v must be covered:
    // skipping it kills the embedding count accumulated so far.
    std::vector<Integer> d(m + 1, 0);
    d[0] = 1;
    for (size_t j = 0; j < p; ++j) {
        const bool forced = j >= 1 && v.letters[j] == v.letters[j - 1];
        for (size_t i = std::min(m, j + 1); i >= 1; --i) {
            Integer used = (u.letters[i - 1] == v.letters[j]) ? d[i - 1] : Integer(0);
            d[i] = forced ? used : d[i] + used;
        }
        if (forced) d[0] = 0;
    }
    return d[m];
}

bool is_normal(const Word& w) {
    for (size_t j = 1; j < w.letters.size(); ++j)
        if (w.letters[j] == w.letters[j - 1]) return false;
    return true;
}

Integer count_normal(int n, int j) {
    if (n < 0 || j < 0) throw std::invalid_argument("count_normal: negative argument");
    if (j == 0) return 1;
    return Integer(n) * ipow(Integer(n - 1), static_cast<unsigned>(j - 1));
}

Integer mobius_interval(const Word& u, const Word& v) {
    if (!is_subword(u, v)) throw std::invalid_argument("mobius_interval: u is not a subword of v");
    Integer nm = count_normal_embeddings(u, v);
    return (v.rank() - u.rank()) % 2 == 0 ? nm : -nm;
}

Integer mobius_recursive(const Word& u, const Word& v, bool normal_only) {
    if (!is_subword(u, v)) throw std::invalid_argument("mobius_recursive: u is not a subword of v");
    if (normal_only && !(is_normal(u) && is_normal(v)))
        throw std::invalid_argument("mobius_recursive: endpoints must be normal");
    std::vector<Word> interval;
    for (const Word& w : subwords_of(v))
        if (is_subword(u, w) && (!normal_only || is_normal(w))) interval.push_back(w);
    // canonical order is length-major, so interval[0] == u and interval.back() == v
    std::vector<Integer> mu(interval.size());
    for (size_t t = 0; t < interval.size(); ++t) {
        Integer acc = 0;
        for (size_t s = 0; s < t; ++s)
            if (is_subword(interval[s], interval[t])) acc += mu[s];
        mu[t] = (t == 0) ? Integer(1) : -acc;
    }
    return mu.back();
}

Integer zeta_counts(int n, int beta_len, int p) {
    if (n < 1 || beta_len < 0 || p < beta_len)
        throw std::invalid_argument("zeta_counts: need n >= 1 and p >= beta_len >= 0");
    Integer total = 0;
    for (int i = 0; i <= p - beta_len; ++i)
        total += binomial(p, i) * ipow(Integer(n - 1), static_cast<unsigned>(i));
    return total;
}

Integer mobius_gf_coefficient(int n, int k, int j) {
    // expand (1 + (n-1) t)^{-(k+1)}: coefficient of t^m is C(-(k+1), m) (n-1)^m
    auto c = [&](int m) -> Integer {
        if (m < 0) return 0;
        return binomial(-(k + 1), m) * ipow(Integer(n - 1), static_cast<unsigned>(m));
    };
    return c(j - k) - c(j - k - 1);
}

std::vector<Word> all_words(int n, int len) {
    if (n < 0 || len < 0) throw std::invalid_argument("all_words: negative argument");
    std::vector<Word> out;
    if (len == 0) {
        out.emplace_back(n, std::vector<uint8_t>{});
        return out;
    }
    if (n == 0) return out;
    std::vector<uint8_t> w(static_cast<size_t>(len), 0);
    for (;;) {
        out.emplace_back(n, w);
        int pos = len - 1;
        while (pos >= 0 && w[static_cast<size_t>(pos)] == n - 1) {
            w[static_cast<size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++w[static_cast<size_t>(pos)];
    }
    return out;
}

std::vector<Word> subwords_of(const Word& w) {
    const size_t p = w.letters.size();
    if (p > 20) throw std::invalid_argument("subwords_of: word too long");
    std::vector<Word> out;
    out.reserve(size_t(1) << p);
    for (size_t mask = 0; mask < (size_t(1) << p); ++mask) {
        std::vector<uint8_t> sub;
        for (size_t j = 0; j < p; ++j)
            if (mask & (size_t(1) << j)) sub.push_back(w.letters[j]);
        out.emplace_back(w.alphabet, std::move(sub));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Word apply_permutation(const Word& w, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != w.alphabet)
        throw std::invalid_argument("apply_permutation: permutation size mismatch");
    std::vector<uint8_t> out;
    out.reserve(w.letters.size());
    for (uint8_t c : w.letters) out.push_back(static_cast<uint8_t>(perm[c]));
    return Word(w.alphabet, std::move(out));
}

} // namespace subword
