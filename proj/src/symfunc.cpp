#include "subword/symfunc.hpp"

#include <algorithm>
#include <stdexcept>

#include "subword/linalg.hpp"

namespace subword {

namespace {

void drop_zeros(SymFunc& f) {
    for (auto it = f.coeffs.begin(); it != f.coeffs.end();)
        it = it->second == 0 ? f.coeffs.erase(it) : std::next(it);
}

void require_degree(const SymFunc& f, const SymFunc& g, const char* who) {
    if (f.degree != g.degree) throw std::invalid_argument(std::string(who) + ": degree mismatch");
}

IntPartition concat_parts(const IntPartition& a, const IntPartition& b) {
    std::vector<int> parts = a.parts;
    parts.insert(parts.end(), b.parts.begin(), b.parts.end());
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return IntPartition(std::move(parts));
}

} // namespace

SymFunc sym_zero(int n) {
    SymFunc f;
    f.degree = n;
    return f;
}

SymFunc p_basis(const IntPartition& lam) {
    SymFunc f;
    f.degree = lam.sum();
    f.coeffs[lam] = 1;
    return f;
}

SymFunc h_complete(int n) {
    SymFunc f;
    f.degree = n;
    for (const IntPartition& lam : partitions_of(n)) f.coeffs[lam] = Rational(1, lam.centralizer());
    return f;
}

SymFunc add(SymFunc f, const SymFunc& g) {
    require_degree(f, g, "add");
    for (const auto& [lam, c] : g.coeffs) f.coeffs[lam] += c;
    drop_zeros(f);
    return f;
}

SymFunc subtract(SymFunc f, const SymFunc& g) {
    require_degree(f, g, "subtract");
    for (const auto& [lam, c] : g.coeffs) f.coeffs[lam] -= c;
    drop_zeros(f);
    return f;
}

SymFunc scale(SymFunc f, const Rational& c) {
    if (c == 0) return sym_zero(f.degree);
    for (auto& [lam, v] : f.coeffs) v *= c;
    return f;
}

SymFunc multiply(const SymFunc& f, const SymFunc& g) {
    SymFunc out = sym_zero(f.degree + g.degree);
    for (const auto& [la, c1] : f.coeffs)
        for (const auto& [mu, c2] : g.coeffs) out.coeffs[concat_parts(la, mu)] += c1 * c2;
    drop_zeros(out);
    return out;
}

SymFunc internal_product(const SymFunc& f, const SymFunc& g) {
    require_degree(f, g, "internal_product");
    SymFunc out = sym_zero(f.degree);
    for (const auto& [lam, c] : f.coeffs) {
        auto it = g.coeffs.find(lam);
        if (it == g.coeffs.end()) continue;
        Rational v = c * it->second * Rational(lam.centralizer());
        if (v != 0) out.coeffs[lam] = v;
    }
    return out;
}

SymFunc frobenius_of_fixpoly(const TensorPowerPoly& Q, int n) {
    if (n < 1) throw std::invalid_argument("frobenius_of_fixpoly: need n >= 1");
    SymFunc out = sym_zero(n);
    for (const IntPartition& lam : partitions_of(n)) {
        Integer val = Q.eval(Integer(lam.count_ones() - 1));
        if (val != 0) out.coeffs[lam] = Rational(val, lam.centralizer());
    }
    return out;
}

SymFunc reflection_char(int n) { return frobenius_of_fixpoly(TensorPowerPoly::monomial(1, 1), n); }

namespace {

// One border strip per remaining part of mu, removed via the beta-set of lam:
// replace b by b - t when b - t is free; the sign counts the occupied values
// jumped over.
Integer mn_rec(const std::vector<int>& beta, const std::vector<int>& parts, std::size_t idx) {
    if (idx == parts.size()) return 1;
    const int t = parts[idx];
    Integer total = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        const int b = beta[i];
        if (b < t) continue;
        if (std::binary_search(beta.begin(), beta.end(), b - t)) continue;
        int crossed = 0;
        for (int x : beta)
            if (x > b - t && x < b) ++crossed;
        std::vector<int> next = beta;
        next[i] = b - t;
        std::sort(next.begin(), next.end());
        Integer sub = mn_rec(next, parts, idx + 1);
        total += crossed % 2 == 0 ? sub : -sub;
    }
    return total;
}

} // namespace

Integer mn_character(const IntPartition& lam, const IntPartition& mu) {
    if (lam.sum() != mu.sum()) throw std::invalid_argument("mn_character: unequal sizes");
    const int l = static_cast<int>(lam.parts.size());
    std::vector<int> beta;
    beta.reserve(lam.parts.size());
    for (int i = 0; i < l; ++i) beta.push_back(lam.parts[static_cast<std::size_t>(i)] + (l - 1 - i));
    std::sort(beta.begin(), beta.end());
    return mn_rec(beta, mu.parts, 0);
}

std::map<IntPartition, Rational> schur_expand(const SymFunc& f) {
    std::map<IntPartition, Rational> out;
    for (const IntPartition& lam : partitions_of(f.degree)) {
        Rational acc = 0;
        for (const auto& [mu, c] : f.coeffs) acc += c * Rational(mn_character(lam, mu));
        if (acc != 0) out[lam] = acc;
    }
    return out;
}

Rational trivial_inner_product(const SymFunc& f) {
    Rational acc = 0;
    for (const auto& [lam, c] : f.coeffs) acc += c;
    return acc;
}

bool HookHVector::nonnegative() const {
    for (const auto& [d, c] : coeffs)
        if (c < 0) return false;
    return true;
}

bool HookHVector::integral() const {
    for (const auto& [d, c] : coeffs)
        if (denominator(c) != 1) return false;
    return true;
}

int HookHVector::min_support() const {
    for (const auto& [d, c] : coeffs)
        if (c != 0) return d;
    return n + 1;
}

std::vector<int> hook_slots(int n) {
    std::vector<int> slots;
    for (int d = 0; d <= n - 2; ++d) slots.push_back(d);
    slots.push_back(n);
    return slots;
}

SymFunc hook_h(int n, int d) {
    if (d < 0 || d > n) return sym_zero(n);
    if (d == n - 1) d = n;
    SymFunc out = h_complete(n - d);
    const SymFunc h1 = h_complete(1);
    for (int i = 0; i < d; ++i) out = multiply(out, h1);
    return out;
}

std::optional<HookHVector> to_hook_h(const SymFunc& f) {
    const int n = f.degree;
    const std::vector<int> slots = hook_slots(n);
    std::vector<SymFunc> basis;
    basis.reserve(slots.size());
    for (int d : slots) basis.push_back(hook_h(n, d));

    const std::vector<IntPartition> lams = partitions_of(n);
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> rhs;
    rows.reserve(lams.size());
    rhs.reserve(lams.size());
    for (const IntPartition& lam : lams) {
        std::vector<Rational> row;
        row.reserve(slots.size());
        for (const SymFunc& b : basis) row.push_back(b.at(lam));
        rows.push_back(std::move(row));
        rhs.push_back(f.at(lam));
    }
    auto sol = solve_rational(std::move(rows), std::move(rhs));
    if (!sol) return std::nullopt;
    HookHVector v;
    v.n = n;
    for (std::size_t i = 0; i < slots.size(); ++i)
        if ((*sol)[i] != 0) v.coeffs[slots[i]] = (*sol)[i];
    return v;
}

SymFunc from_hook_h(const HookHVector& v) {
    SymFunc out = sym_zero(v.n);
    for (const auto& [d, c] : v.coeffs) out = add(out, scale(hook_h(v.n, d), c));
    return out;
}

HookHVector refl_product_step(const HookHVector& v) {
    const int n = v.n;
    const auto merged = [n](int d) { return d == n - 1 ? n : d; };
    HookHVector out;
    out.n = n;
    for (const auto& [d, c] : v.coeffs) {
        if (d == n) {
            out.coeffs[n] += c * Rational(n - 1);
            continue;
        }
        out.coeffs[d] += c * Rational(d - 1);
        out.coeffs[merged(d + 1)] += c;
    }
    for (auto it = out.coeffs.begin(); it != out.coeffs.end();)
        it = it->second == 0 ? out.coeffs.erase(it) : std::next(it);
    return out;
}

Integer g_coeff(int n, int k, int d) {
    if (k < 1 || d < 0 || d > n) throw std::invalid_argument("g_coeff: need k >= 1, 0 <= d <= n");
    if (d == 0) return k % 2 == 0 ? 1 : -1;
    Integer total = 0;
    for (int i = d; i <= k; ++i) {
        Integer term = stirling2(i - 1, d - 1);
        total += (k - i) % 2 == 0 ? term : -term;
    }
    return total;
}

HookHVector u_module(int n, int k) {
    if (n < 2 || k < 1) throw std::invalid_argument("u_module: need n >= 2, k >= 1");
    HookHVector v;
    v.n = n;
    for (int d = 2; d <= n - 2; ++d) {
        Integer g = g_coeff(n, k, d);
        if (g != 0) v.coeffs[d] = Rational(g);
    }
    Integer top = g_coeff(n, k, n);
    if (n >= 3) top += g_coeff(n, k, n - 1);
    if (top != 0) v.coeffs[n] = Rational(top);
    return v;
}

Integer trivial_multiplicity(int n, int k) {
    if (n < 2 || k < 1) throw std::invalid_argument("trivial_multiplicity: need n >= 2, k >= 1");
    Integer total = 0;
    for (int d = 2; d <= std::min(n, k); ++d) total += g_coeff(n, k, d);
    return total;
}

namespace {

std::vector<Integer> poly_times_linear(std::vector<Integer> p, const Integer& root) {
    // multiply by (t - root)
    std::vector<Integer> out(p.size() + 1, 0);
    for (std::size_t i = 0; i < p.size(); ++i) {
        out[i + 1] += p[i];
        out[i] -= p[i] * root;
    }
    return out;
}

} // namespace

ReductionIdentity reduction_polynomial(int n) {
    if (n < 3) throw std::invalid_argument("reduction_polynomial: need n >= 3");

    // product form: (t+1) t prod_{i=1..n-1, i != n-2} (t - i)
    std::vector<Integer> prod = {0, 1}; // t
    prod = poly_times_linear(prod, Integer(-1));
    for (int i = 1; i <= n - 1; ++i)
        if (i != n - 2) prod = poly_times_linear(prod, Integer(i));

    // division form: (t+1) * t(t-1)...(t-(n-1)) divided by (t - (n-2))
    std::vector<Integer> numer = {1}; // falling factorial, then the (t+1) factor
    for (int j = 0; j <= n - 1; ++j) numer = poly_times_linear(numer, Integer(j));
    numer = poly_times_linear(numer, Integer(-1));
    std::vector<Integer> quot(numer.size() - 1, 0);
    Integer carry = 0; // synthetic division by (t - (n-2))
    for (std::size_t i = numer.size(); i-- > 1;) {
        carry = numer[i] + carry * (n - 2);
        quot[i - 1] = carry;
    }
    if (numer[0] + carry * (n - 2) != 0)
        throw std::logic_error("reduction_polynomial: nonzero remainder");
    if (quot != prod) throw std::logic_error("reduction_polynomial: construction mismatch");

    ReductionIdentity out;
    out.n = n;
    out.poly = std::move(prod);
    for (int j = 1; j <= n - 1; ++j)
        out.a[j] = -out.poly[static_cast<std::size_t>(j)];
    return out;
}

} // namespace subword
