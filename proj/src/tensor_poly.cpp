#include "subword/tensor_poly.hpp"

#include <algorithm>
#include <stdexcept>

#include "subword/combinatorics.hpp"

namespace subword {

TensorPowerPoly TensorPowerPoly::monomial(int degree, Integer coeff) {
    if (degree < 0) throw std::invalid_argument("monomial: negative degree");
    std::vector<Integer> c(static_cast<size_t>(degree) + 1, 0);
    c.back() = std::move(coeff);
    return TensorPowerPoly(std::move(c));
}

void TensorPowerPoly::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

Integer TensorPowerPoly::coeff(int j) const {
    if (j < 0 || j >= static_cast<int>(c.size())) return 0;
    return c[static_cast<size_t>(j)];
}

Integer TensorPowerPoly::eval(const Integer& x) const {
    Integer r = 0;
    for (size_t j = c.size(); j-- > 0;) r = r * x + c[j];
    return r;
}

TensorPowerPoly& TensorPowerPoly::operator+=(const TensorPowerPoly& o) {
    if (o.c.size() > c.size()) c.resize(o.c.size(), 0);
    for (size_t j = 0; j < o.c.size(); ++j) c[j] += o.c[j];
    trim();
    return *this;
}

TensorPowerPoly& TensorPowerPoly::operator-=(const TensorPowerPoly& o) {
    if (o.c.size() > c.size()) c.resize(o.c.size(), 0);
    for (size_t j = 0; j < o.c.size(); ++j) c[j] -= o.c[j];
    trim();
    return *this;
}

TensorPowerPoly operator*(const TensorPowerPoly& a, const TensorPowerPoly& b) {
    if (a.c.empty() || b.c.empty()) return {};
    std::vector<Integer> c(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) c[i + j] += a.c[i] * b.c[j];
    return TensorPowerPoly(std::move(c));
}

TensorPowerPoly alpha_poly(const RankSet& S) {
    TensorPowerPoly p = TensorPowerPoly::one();
    int prev = 0; // chains below the smallest selected rank start at the empty word
    for (int s : S.ranks) {
        std::vector<Integer> factor(static_cast<size_t>(s - prev) + 1, 0);
        for (int i = 0; i <= s - prev; ++i) factor[static_cast<size_t>(i)] = binomial(s, i);
        p = p * TensorPowerPoly(std::move(factor));
        prev = s;
    }
    return p;
}

TensorPowerPoly beta_poly(const RankSet& T) {
    const int m = T.size();
    TensorPowerPoly total;
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        std::vector<int> sub;
        for (int i = 0; i < m; ++i)
            if (mask & (1u << i)) sub.push_back(T.ranks[static_cast<size_t>(i)]);
        TensorPowerPoly a = alpha_poly(RankSet(T.k, std::move(sub)));
        if ((m - __builtin_popcount(mask)) % 2 == 0)
            total += a;
        else
            total -= a;
    }
    return total;
}

TensorPowerPoly consecutive_ranks_poly(int r, int k) {
    if (r < 1 || r > k) throw std::invalid_argument("consecutive_ranks_poly: need 1 <= r <= k");
    std::vector<Integer> c(static_cast<size_t>(k) + 1, 0);
    for (int i = 1 + k - r; i <= k; ++i)
        c[static_cast<size_t>(i)] = binomial(k, i) * binomial(i - 1, k - r);
    return TensorPowerPoly(std::move(c));
}

TensorPowerPoly rank_deletion_poly(int r, int k) {
    if (r < 1 || r > k) throw std::invalid_argument("rank_deletion_poly: need 1 <= r <= k");
    std::vector<Integer> c(static_cast<size_t>(k) + 1, 0);
    c[static_cast<size_t>(k)] = binomial(k, r) - 1;
    if (k >= 1) c[static_cast<size_t>(k) - 1] = binomial(k, r);
    return TensorPowerPoly(std::move(c));
}

TensorPowerPoly two_ranks_poly(int s1, int s2) {
    if (s1 < 1 || s2 <= s1) throw std::invalid_argument("two_ranks_poly: need 1 <= s1 < s2");
    std::vector<Integer> c(static_cast<size_t>(s2) + 1, 0);
    for (int v = 2; v <= s2; ++v) {
        Integer sum = 0;
        for (int j = 1; j <= std::min(v, s2 - s1); ++j)
            sum += binomial(s2 - j, v - j) * binomial(s1 + j - 1, j);
        // chains through both ranks minus the chains collapsing onto rank s1
        c[static_cast<size_t>(v)] = (v <= s1) ? sum - binomial(s1, v) : sum;
    }
    return TensorPowerPoly(std::move(c));
}

std::pair<TensorPowerPoly, TensorPowerPoly> two_ranks_chain_forms(int s1, int s2) {
    if (s1 < 1 || s2 <= s1)
        throw std::invalid_argument("two_ranks_chain_forms: need 1 <= s1 < s2");
    // form 1: (sum_{j<=s1} C(s1,j) x^j) (sum_{i<=s2-s1} C(s2,i) x^i)
    std::vector<Integer> f1a(static_cast<size_t>(s1) + 1, 0);
    for (int j = 0; j <= s1; ++j) f1a[static_cast<size_t>(j)] = binomial(s1, j);
    std::vector<Integer> f1b(static_cast<size_t>(s2 - s1) + 1, 0);
    for (int i = 0; i <= s2 - s1; ++i) f1b[static_cast<size_t>(i)] = binomial(s2, i);
    TensorPowerPoly form1 = TensorPowerPoly(std::move(f1a)) * TensorPowerPoly(std::move(f1b));

    // form 2: (x+1)^{s1} sum_{i+j=s2-s1} C(s1+j-1, j) x^j (x+1)^i
    TensorPowerPoly xp1(std::vector<Integer>{1, 1});
    std::vector<TensorPowerPoly> xp1_pow(static_cast<size_t>(s2) + 1);
    xp1_pow[0] = TensorPowerPoly::one();
    for (int i = 1; i <= s2; ++i) xp1_pow[static_cast<size_t>(i)] = xp1_pow[static_cast<size_t>(i - 1)] * xp1;
    TensorPowerPoly inner;
    for (int j = 0; j <= s2 - s1; ++j) {
        int i = s2 - s1 - j;
        inner += TensorPowerPoly::monomial(j, binomial(s1 + j - 1, j)) * xp1_pow[static_cast<size_t>(i)];
    }
    TensorPowerPoly form2 = xp1_pow[static_cast<size_t>(s1)] * inner;
    return {form1, form2};
}

Integer alternating_coeff_sum(const TensorPowerPoly& p) {
    Integer s = 0;
    for (size_t j = 1; j < p.c.size(); ++j)
        s += (j % 2 == 1) ? p.c[j] : -p.c[j];
    return s;
}

} // namespace subword
