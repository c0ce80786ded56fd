#pragma once

#include <map>
#include <optional>
#include <vector>

#include "subword/combinatorics.hpp"
#include "subword/numeric.hpp"
#include "subword/tensor_poly.hpp"

namespace subword {

// Homogeneous symmetric function of fixed degree, stored in the power-sum
// basis with exact rational coefficients.  Zero coefficients are never kept.
struct SymFunc {
    int degree = 0;
    std::map<IntPartition, Rational> coeffs;

    bool is_zero() const { return coeffs.empty(); }
    Rational at(const IntPartition& lam) const {
        auto it = coeffs.find(lam);
        return it == coeffs.end() ? Rational(0) : it->second;
    }
    bool operator==(const SymFunc&) const = default;
};

SymFunc sym_zero(int n);
SymFunc p_basis(const IntPartition& lam);
SymFunc h_complete(int n);

SymFunc add(SymFunc f, const SymFunc& g);
SymFunc subtract(SymFunc f, const SymFunc& g);
SymFunc scale(SymFunc f, const Rational& c);

// Ordinary product: p_lam . p_mu concatenates the parts.
SymFunc multiply(const SymFunc& f, const SymFunc& g);

// Kronecker (internal) product: diagonal on the power-sum basis,
// p_lam * p_mu = delta z_lam p_lam.
SymFunc internal_product(const SymFunc& f, const SymFunc& g);

// Image under ch of the class function g -> Q(fix(g) - 1); the monomial x^j
// stands for the j-th tensor power of the reflection representation.
SymFunc frobenius_of_fixpoly(const TensorPowerPoly& Q, int n);

// ch of the reflection representation itself, s_{(n-1,1)}.
SymFunc reflection_char(int n);

// Irreducible symmetric-group character value chi^lam(mu) by the border-strip
// recursion on beta-sets.
Integer mn_character(const IntPartition& lam, const IntPartition& mu);

// Full expansion <f, s_lam> over all partitions of the degree.
std::map<IntPartition, Rational> schur_expand(const SymFunc& f);

// <f, h_n>: multiplicity of the trivial representation, i.e. the plain sum of
// power-sum coefficients.
Rational trivial_inner_product(const SymFunc& f);

// Coordinates in the hook-shaped h-basis {h_1^d h_{n-d}}.  Because
// h_1^{n-1} h_1 = h_1^n, the d = n-1 slot is folded into d = n, so the key
// set is {0,...,n-2} plus {n}.
struct HookHVector {
    int n = 0;
    std::map<int, Rational> coeffs;

    Rational at(int d) const {
        auto it = coeffs.find(d);
        return it == coeffs.end() ? Rational(0) : it->second;
    }
    bool is_zero() const { return coeffs.empty(); }
    bool nonnegative() const;
    bool integral() const;
    // smallest slot with a nonzero coefficient, or n+1 when zero
    int min_support() const;
    bool operator==(const HookHVector&) const = default;
};

std::vector<int> hook_slots(int n);

// The basis function for slot d: h_1^d h_{n-d}, with d = n-1 meaning h_1^n
// and d > n meaning zero.
SymFunc hook_h(int n, int d);

// Exact change of basis into the hook-shaped h functions; empty when f lies
// outside their span.
std::optional<HookHVector> to_hook_h(const SymFunc& f);
SymFunc from_hook_h(const HookHVector& v);

// Internal product with s_{(n-1,1)} carried out directly in hook coordinates:
// slot d maps to (d-1) e_d + e_{d+1} for d <= n-2 (slot n-1 folding into n)
// and the slot n is an eigenvector with eigenvalue n-1.
HookHVector refl_product_step(const HookHVector& v);

// Coefficient g_n(k,d) of h_1^d h_{n-d} in the k-fold internal power of
// s_{(n-1,1)}: (-1)^k at d = 0, else sum_{i=d}^k (-1)^{k-i} S(i-1, d-1).
Integer g_coeff(int n, int k, int d);

// ch of U_{n,k}, defined by s^{*k} = (-1)^{k-1} s + ch U: slots d >= 2 carry
// g(k,d), with d = n-1 and d = n folded together.
HookHVector u_module(int n, int k);

// Multiplicity of the trivial representation in the k-th tensor power of the
// reflection representation: sum of g(k,d) over 2 <= d <= min(n,k).
Integer trivial_multiplicity(int n, int k);

// The monic degree-n polynomial P with P(x) = 0 at every admissible character
// value x = f-1, giving the rewrite x^n = sum_j a_j x^j of tensor powers.
struct ReductionIdentity {
    int n = 0;
    std::vector<Integer> poly;  // P coefficients by exponent, poly[n] = 1
    std::map<int, Integer> a;   // a_j for j = 1..n-1
};

ReductionIdentity reduction_polynomial(int n);

} // namespace subword
