#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "subword/linalg.hpp"
#include "subword/rank_set.hpp"
#include "subword/symfunc.hpp"

using namespace subword;

namespace {

IntPartition part(std::vector<int> parts) { return IntPartition(std::move(parts)); }

SymFunc tensor_power_char(int n, int k) {
    return frobenius_of_fixpoly(TensorPowerPoly::monomial(k), n);
}

// ch of the irreducible indexed by lam, from its character values
SymFunc irreducible_char(const IntPartition& lam) {
    SymFunc f = sym_zero(lam.sum());
    for (const IntPartition& mu : partitions_of(lam.sum())) {
        Integer chi = mn_character(lam, mu);
        if (chi != 0) f.coeffs[mu] = Rational(chi, mu.centralizer());
    }
    return f;
}

Integer hook_length_dimension(const IntPartition& lam) {
    // n! over the product of hook lengths
    const auto& p = lam.parts;
    std::vector<int> conj(p.empty() ? 0 : static_cast<size_t>(p[0]), 0);
    for (int part_len : p)
        for (int j = 0; j < part_len; ++j) ++conj[static_cast<size_t>(j)];
    Integer hooks = 1;
    for (size_t i = 0; i < p.size(); ++i)
        for (int j = 0; j < p[i]; ++j)
            hooks *= Integer(p[i] - j + conj[static_cast<size_t>(j)] - static_cast<int>(i) - 1);
    Integer fact = 1;
    for (int i = 2; i <= lam.sum(); ++i) fact *= i;
    return fact / hooks;
}

std::vector<RankSet> nonempty_subsets(int k) {
    std::vector<RankSet> out;
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
        std::vector<int> ranks;
        for (int i = 1; i <= k; ++i)
            if (mask & (1u << (i - 1))) ranks.push_back(i);
        out.emplace_back(k, std::move(ranks));
    }
    return out;
}

} // namespace

TEST_CASE("power-sum basics") {
    CHECK(h_complete(1) == p_basis(part({1})));
    SymFunc h2 = h_complete(2);
    CHECK(h2.at(part({1, 1})) == Rational(1, 2));
    CHECK(h2.at(part({2})) == Rational(1, 2));
    CHECK(multiply(p_basis(part({2})), p_basis(part({1}))) == p_basis(part({2, 1})));
    CHECK(subtract(h2, h2).is_zero());
    CHECK(scale(h2, Rational(2)).at(part({2})) == 1);
    CHECK_THROWS_AS(add(h_complete(2), h_complete(3)), std::invalid_argument);
}

TEST_CASE("frobenius characteristic of fix polynomials") {
    for (int n = 1; n <= 6; ++n)
        CHECK(frobenius_of_fixpoly(TensorPowerPoly::one(), n) == h_complete(n));

    SymFunc refl2 = reflection_char(2);
    CHECK(refl2.at(part({1, 1})) == Rational(1, 2));
    CHECK(refl2.at(part({2})) == Rational(-1, 2));

    for (int n = 2; n <= 6; ++n) {
        TensorPowerPoly one_plus_x({Integer(1), Integer(1)});
        CHECK(frobenius_of_fixpoly(one_plus_x, n) ==
              multiply(h_complete(1), h_complete(n - 1)));
    }
}

TEST_CASE("kronecker product basics and the stirling decomposition") {
    SymFunc f = tensor_power_char(4, 2);
    CHECK(internal_product(f, h_complete(4)) == f);
    CHECK(internal_product(f, reflection_char(4)) ==
          internal_product(reflection_char(4), f));

    for (int n : {2, 4, 5})
        for (int k = 1; k <= 5; ++k) {
            SymFunc natural = multiply(h_complete(1), h_complete(n - 1));
            SymFunc lhs = h_complete(n);
            for (int i = 0; i < k; ++i) lhs = internal_product(lhs, natural);
            SymFunc rhs = sym_zero(n);
            for (int j = 1; j <= std::min(n, k); ++j)
                rhs = add(rhs, scale(hook_h(n, j), Rational(stirling2(k, j))));
            CHECK(lhs == rhs);
        }
}

TEST_CASE("internal product with the reflection representation, slot by slot") {
    for (int n : {4, 5}) {
        SymFunc refl = reflection_char(n);
        for (int a = 1; a <= n - 1; ++a) {
            SymFunc va = hook_h(n, a);
            SymFunc expect = add(scale(hook_h(n, a), Rational(a - 1)), hook_h(n, a + 1));
            CHECK(internal_product(va, refl) == expect);
        }
        CHECK(internal_product(hook_h(n, n), refl) == scale(hook_h(n, n), Rational(n - 1)));
    }
}

TEST_CASE("murnaghan-nakayama characters") {
    for (int n = 1; n <= 6; ++n)
        for (const IntPartition& mu : partitions_of(n)) {
            CHECK(mn_character(part({n}), mu) == 1);
            if (n >= 2) {
                std::vector<int> hook = {n - 1, 1};
                CHECK(mn_character(part(std::move(hook)), mu) == mu.count_ones() - 1);
            }
        }
    for (int n = 2; n <= 7; ++n) {
        std::vector<int> column(static_cast<size_t>(n), 1);
        CHECK(mn_character(part(std::move(column)), part({n})) ==
              (n % 2 == 1 ? 1 : -1));
    }

    // frozen tables, partitions in the order (1^n) < ... < (n)
    CHECK(mn_character(part({2, 1}), part({1, 1, 1})) == 2);
    CHECK(mn_character(part({2, 1}), part({2, 1})) == 0);
    CHECK(mn_character(part({2, 1}), part({3})) == -1);
    CHECK(mn_character(part({2, 2}), part({1, 1, 1, 1})) == 2);
    CHECK(mn_character(part({2, 2}), part({2, 1, 1})) == 0);
    CHECK(mn_character(part({2, 2}), part({2, 2})) == 2);
    CHECK(mn_character(part({2, 2}), part({3, 1})) == -1);
    CHECK(mn_character(part({2, 2}), part({4})) == 0);
    CHECK(mn_character(part({3, 1}), part({2, 2})) == -1);
    CHECK(mn_character(part({2, 1, 1}), part({4})) == 1);

    for (int n = 1; n <= 6; ++n) {
        std::vector<int> ones(static_cast<size_t>(n), 1);
        IntPartition id = part(std::move(ones));
        for (const IntPartition& lam : partitions_of(n))
            CHECK(mn_character(lam, id) == hook_length_dimension(lam));
    }

    for (int n = 1; n <= 5; ++n)
        for (const IntPartition& lam : partitions_of(n))
            for (const IntPartition& nu : partitions_of(n)) {
                Rational dot = 0;
                for (const IntPartition& mu : partitions_of(n))
                    dot += Rational(mn_character(lam, mu) * mn_character(nu, mu),
                                    mu.centralizer());
                CHECK(dot == (lam == nu ? 1 : 0));
            }
}

TEST_CASE("schur expansions") {
    for (int n = 2; n <= 6; ++n) {
        auto hn = schur_expand(h_complete(n));
        CHECK(hn.size() == 1);
        CHECK(hn.at(part({n})) == 1);
        auto refl = schur_expand(reflection_char(n));
        CHECK(refl.size() == 1);
        CHECK(refl.at(part({n - 1, 1})) == 1);
    }

    for (int n : {4, 5}) {
        SymFunc diff = subtract(tensor_power_char(n, 2), tensor_power_char(n, 1));
        auto s = schur_expand(diff);
        CHECK(s.size() == 3);
        CHECK(s.at(part({n})) == 1);
        CHECK(s.at(part({n - 2, 2})) == 1);
        CHECK(s.at(part({n - 2, 1, 1})) == 1);
    }

    for (int n = 2; n <= 5; ++n)
        for (int k = 1; k <= 5; ++k)
            for (const auto& [lam, c] : schur_expand(tensor_power_char(n, k))) {
                CHECK(denominator(c) == 1);
                CHECK(c > 0);
            }
}

TEST_CASE("hook h-basis round trips and span membership") {
    for (int n = 2; n <= 6; ++n)
        for (int d : hook_slots(n)) {
            auto v = to_hook_h(hook_h(n, d));
            REQUIRE(v.has_value());
            CHECK(v->coeffs == std::map<int, Rational>{{d, Rational(1)}});
            CHECK(from_hook_h(*v) == hook_h(n, d));
        }

    HookHVector mix;
    mix.n = 5;
    mix.coeffs = {{0, Rational(2)}, {2, Rational(-3)}, {5, Rational(1, 2)}};
    auto back = to_hook_h(from_hook_h(mix));
    REQUIRE(back.has_value());
    CHECK(*back == mix);

    for (int n = 4; n <= 6; ++n)
        CHECK_FALSE(to_hook_h(irreducible_char(part({n - 2, 2}))).has_value());
}

TEST_CASE("tensor powers expand with the g coefficients") {
    for (int n = 2; n <= 5; ++n)
        for (int k = 1; k <= 5; ++k) {
            auto v = to_hook_h(tensor_power_char(n, k));
            REQUIRE(v.has_value());
            std::map<int, Rational> expect;
            for (int d = 0; d <= n - 2; ++d) {
                Integer g = g_coeff(n, k, d);
                if (g != 0) expect[d] = Rational(g);
            }
            Integer top = g_coeff(n, k, n) + g_coeff(n, k, n - 1);
            if (top != 0) expect[n] = Rational(top);
            CHECK(v->coeffs == expect);
        }
}

TEST_CASE("hook-coordinate reflection step matches the kronecker product") {
    for (int n = 2; n <= 6; ++n)
        for (int d : hook_slots(n)) {
            HookHVector e;
            e.n = n;
            e.coeffs[d] = 1;
            CHECK(from_hook_h(refl_product_step(e)) ==
                  internal_product(hook_h(n, d), reflection_char(n)));
        }
}

TEST_CASE("g table: examples, triple agreement, nonnegativity") {
    for (int k = 1; k <= 8; ++k) {
        CHECK(g_coeff(8, k, 2) == (k % 2 == 0 ? 1 : 0));
        if (k >= 2) CHECK(g_coeff(8, k, k - 1) == binomial(k - 1, 2) - 1);
        CHECK(g_coeff(8, k, k) == 1);
        for (int d = k + 1; d <= 8; ++d) CHECK(g_coeff(8, k, d) == 0);
    }

    for (int n = 2; n <= 8; ++n)
        for (int k = 1; k <= 8; ++k) {
            // alternating binomial-stirling form
            for (int d = 0; d <= n; ++d) {
                Integer alt = 0;
                for (int r = 0; r <= k - d; ++r) {
                    Integer term = binomial(k, r) * stirling2(k - r, d);
                    alt += r % 2 == 0 ? term : -term;
                }
                CHECK(g_coeff(n, k, d) == alt);
            }
            // iterated hook-coordinate reflection products
            HookHVector w;
            w.n = n;
            w.coeffs[0] = 1;
            for (int i = 0; i < k; ++i) w = refl_product_step(w);
            for (int d = 0; d <= n - 2; ++d) CHECK(w.at(d) == Rational(g_coeff(n, k, d)));
            CHECK(w.at(n) == Rational(g_coeff(n, k, n) + g_coeff(n, k, n - 1)));
            // nonnegativity in the permutation-module range
            for (int d = 2; d <= std::min(n, k); ++d) CHECK(g_coeff(n, k, d) >= 0);
        }
}

TEST_CASE("u modules") {
    for (int n = 2; n <= 8; ++n) {
        CHECK(u_module(n, 1).is_zero());
        // a single natural-squared orbit; for n = 3 the d = 2 slot is the merged one
        CHECK(u_module(n, 2).coeffs == std::map<int, Rational>{{n == 3 ? 3 : 2, Rational(1)}});
        for (int k = 1; k <= 8; ++k) {
            HookHVector u = u_module(n, k);
            CHECK(u.nonnegative());
            CHECK(u.integral());
            CHECK(u.min_support() >= 2);
        }
    }
    for (int n = 2; n <= 5; ++n)
        for (int k = 1; k <= 5; ++k) {
            Rational sign(k % 2 == 1 ? 1 : -1);
            CHECK(from_hook_h(u_module(n, k)) ==
                  subtract(tensor_power_char(n, k), scale(reflection_char(n), sign)));
        }
}

TEST_CASE("trivial multiplicity") {
    for (int n = 2; n <= 8; ++n)
        for (int k = 2; k <= std::min(n, 6); ++k)
            CHECK(trivial_multiplicity(n, k) == bell_no_singletons(k));
    CHECK(trivial_multiplicity(3, 4) == bell_no_singletons(4) - 1);
    CHECK(trivial_multiplicity(3, 5) == bell_no_singletons(5) - binomial(4, 2));
    CHECK(trivial_multiplicity(4, 6) == bell_no_singletons(6) - binomial(5, 2));
    CHECK(trivial_multiplicity(3, 4) == 3);
    CHECK(trivial_multiplicity(3, 5) == 5);

    for (int n = 2; n <= 6; ++n)
        for (int k = 2; k <= 6; ++k)
            CHECK(Rational(trivial_multiplicity(n, k)) ==
                  trivial_inner_product(tensor_power_char(n, k)));
}

TEST_CASE("reduction polynomials") {
    const std::map<int, std::vector<Integer>> frozen = {
        {3, {2, 1}},
        {4, {-3, 1, 3}},
        {5, {8, -6, -7, 6}},
        {6, {-30, 31, 20, -30, 10}},
        {7, {144, -180, -64, 165, -79, 15}},
        {8, {-840, 1198, 189, -1029, 630, -168, 21}},
    };
    for (const auto& [n, coeffs] : frozen) {
        ReductionIdentity red = reduction_polynomial(n);
        REQUIRE(static_cast<int>(red.a.size()) == n - 1);
        for (int j = 1; j <= n - 1; ++j)
            CHECK(red.a.at(j) == coeffs[static_cast<size_t>(j - 1)]);
    }

    for (int n = 3; n <= 8; ++n) {
        ReductionIdentity red = reduction_polynomial(n);
        CHECK(red.poly[static_cast<size_t>(n)] == 1);
        CHECK(red.poly[0] == 0);
        CHECK(red.a.at(n - 1) == binomial(n - 1, 2));
        Integer fact2 = 1, fact3 = 1;
        for (int i = 2; i <= n - 2; ++i) fact2 *= i;
        for (int i = 2; i <= n - 3; ++i) fact3 *= i;
        Integer a1 = fact2 + fact3;
        if (n % 2 == 0) a1 = -a1;
        CHECK(red.a.at(1) == a1);

        // the identity x^n = sum a_j x^j holds at every admissible value
        for (int f = 0; f <= n; ++f) {
            if (f == n - 1) continue;
            Integer x(f - 1);
            Integer lhs = ipow(x, static_cast<unsigned>(n));
            Integer rhs = 0;
            for (const auto& [j, aj] : red.a) rhs += aj * ipow(x, static_cast<unsigned>(j));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("admissible character values form a basis (nonzero determinant)") {
    for (int n = 3; n <= 8; ++n) {
        std::vector<Integer> nodes;
        for (int f = 0; f <= n; ++f)
            if (f != n - 1 && f != 1) nodes.push_back(Integer(f - 1));
        REQUIRE(static_cast<int>(nodes.size()) == n - 1);
        std::vector<std::vector<Integer>> m;
        for (const Integer& x : nodes) {
            std::vector<Integer> row;
            for (int j = 1; j <= n - 1; ++j) row.push_back(ipow(x, static_cast<unsigned>(j)));
            m.push_back(std::move(row));
        }
        CHECK(exact_determinant(std::move(m)) != 0);
    }
}

TEST_CASE("whitney homology stirling expansion") {
    for (int n = 2; n <= 7; ++n) {
        TensorPowerPoly wh1({Integer(1), Integer(1)});
        auto v1 = to_hook_h(frobenius_of_fixpoly(wh1, n));
        REQUIRE(v1.has_value());
        CHECK(v1->coeffs == std::map<int, Rational>{{n >= 3 ? 1 : 2, Rational(1)}});

        for (int j = 2; j <= 7; ++j) {
            TensorPowerPoly whj = TensorPowerPoly::monomial(j);
            whj += TensorPowerPoly::monomial(j - 1);
            auto v = to_hook_h(frobenius_of_fixpoly(whj, n));
            REQUIRE(v.has_value());
            std::map<int, Rational> expect;
            for (int d = 2; d <= std::min(j, n - 2); ++d) {
                Integer s = stirling2(j - 1, d - 1);
                if (s != 0) expect[d] = Rational(s);
            }
            Integer top = stirling2(j - 1, n - 1) + stirling2(j - 1, n - 2);
            if (top != 0) expect[n] = Rational(top);
            CHECK(v->coeffs == expect);
            CHECK(v->nonnegative());
        }
    }
}

TEST_CASE("chain modules are h-positive with unit natural part") {
    for (int n = 2; n <= 5; ++n)
        for (int k = 1; k <= 4; ++k)
            for (const RankSet& S : nonempty_subsets(k)) {
                auto v = to_hook_h(frobenius_of_fixpoly(alpha_poly(S), n));
                REQUIRE(v.has_value());
                CHECK(v->nonnegative());
                CHECK(v->integral());
                CHECK(v->min_support() >= 1);
                if (n >= 3) CHECK(v->at(1) == 1);
            }
}

TEST_CASE("homology modules live in the hook span with the predicted fringe") {
    for (int n = 3; n <= 5; ++n)
        for (int k = 1; k <= 4; ++k)
            for (const RankSet& T : nonempty_subsets(k)) {
                Rational sign(T.size() % 2 == 0 ? 1 : -1);
                SymFunc F = frobenius_of_fixpoly(beta_poly(T), n);
                auto v1 = to_hook_h(F);
                REQUIRE(v1.has_value());
                CHECK(v1->integral());
                CHECK(v1->at(0) == sign);
                CHECK(v1->at(1) == -sign);
                auto v2 = to_hook_h(add(F, scale(reflection_char(n), sign)));
                REQUIRE(v2.has_value());
                CHECK(v2->integral());
                CHECK(v2->min_support() >= 2);
            }
}
