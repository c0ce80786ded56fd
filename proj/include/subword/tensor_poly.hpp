#pragma once

#include <utility>
#include <vector>

#include "subword/numeric.hpp"
#include "subword/rank_set.hpp"

namespace subword {

// Virtual-module bookkeeping polynomial: the coefficient of x^j records the
// multiplicity of the j-th tensor power of the (n-1,1) reflection module.
// Evaluating at x = f - 1 gives the character value at a permutation with f
// fixed points; x = n - 1 gives the dimension.
struct TensorPowerPoly {
    std::vector<Integer> c; // c[j] multiplies x^j

    TensorPowerPoly() = default;
    explicit TensorPowerPoly(std::vector<Integer> coeffs) : c(std::move(coeffs)) { trim(); }
    static TensorPowerPoly one() { return TensorPowerPoly({Integer(1)}); }
    static TensorPowerPoly monomial(int degree, Integer coeff = 1);

    void trim();
    int degree() const { return static_cast<int>(c.size()) - 1; } // -1 for the zero polynomial
    Integer coeff(int j) const;
    bool is_zero() const { return c.empty(); }

    Integer eval(const Integer& x) const;

    TensorPowerPoly& operator+=(const TensorPowerPoly& o);
    TensorPowerPoly& operator-=(const TensorPowerPoly& o);
    friend TensorPowerPoly operator+(TensorPowerPoly a, const TensorPowerPoly& b) { return a += b; }
    friend TensorPowerPoly operator-(TensorPowerPoly a, const TensorPowerPoly& b) { return a -= b; }
    friend TensorPowerPoly operator*(const TensorPowerPoly& a, const TensorPowerPoly& b);
    bool operator==(const TensorPowerPoly&) const = default;
};

// Flag f-vector polynomial of the rank selection S: counts chains hitting
// exactly the ranks of S, as a polynomial in x = n - 1.  Product over the
// ranks of S of sum_{i=0}^{s_p - s_{p-1}} C(s_p, i) x^i, with s_0 = 0.
TensorPowerPoly alpha_poly(const RankSet& S);

// Rank-selected homology polynomial beta(T) = sum_{S subset T} (-1)^{|T|-|S|} alpha(S).
TensorPowerPoly beta_poly(const RankSet& T);

// Closed form of beta([r, k]) for a run of consecutive top ranks:
// coefficient of x^i is C(k, i) C(i-1, k-r), supported on 1+k-r <= i <= k.
TensorPowerPoly consecutive_ranks_poly(int r, int k);

// Closed form of beta([1, k] minus {r}): (C(k,r) - 1) x^k + C(k,r) x^{k-1}.
TensorPowerPoly rank_deletion_poly(int r, int k);

// Closed form of beta({s1, s2}) for 1 <= s1 < s2.  With
// c_v = sum_{j=1}^{min(v, s2-s1)} C(s2-j, v-j) C(s1+j-1, j), the coefficient
// of x^v is c_v - C(s1, v) for v <= s1 and c_v above that.
TensorPowerPoly two_ranks_poly(int s1, int s2);

// The two factored chain-count expressions for alpha({s1, s2}); both multiply
// out to the same polynomial.
std::pair<TensorPowerPoly, TensorPowerPoly> two_ranks_chain_forms(int s1, int s2);

// sum_{j>=1} (-1)^{j-1} c_j; equals c_0 - p(-1), the obstruction to the
// degree-0 and degree-1 hook coordinates of p vanishing after the reflection
// correction.
Integer alternating_coeff_sum(const TensorPowerPoly& p);

} // namespace subword
