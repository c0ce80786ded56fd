#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "subword/combinatorics.hpp"

using namespace subword;

namespace {

// Enumeration oracle: set partitions of an m-set filtered by a predicate.
Integer count_set_partitions(int m,
                             const std::function<bool(const std::vector<std::vector<int>>&)>& keep) {
    Integer c = 0;
    for_each_set_partition(m, [&](const std::vector<std::vector<int>>& blocks) {
        if (keep(blocks)) ++c;
    });
    return c;
}

// Enumeration oracle: permutations of {0..m-1} with exactly j cycles.
Integer count_permutations_with_cycles(int m, int j) {
    std::vector<int> perm(static_cast<size_t>(m));
    std::iota(perm.begin(), perm.end(), 0);
    Integer c = 0;
    do {
        std::vector<bool> seen(static_cast<size_t>(m), false);
        int cycles = 0;
        for (int s = 0; s < m; ++s) {
            if (seen[static_cast<size_t>(s)]) continue;
            ++cycles;
            for (int t = s; !seen[static_cast<size_t>(t)]; t = perm[static_cast<size_t>(t)])
                seen[static_cast<size_t>(t)] = true;
        }
        if (cycles == j) ++c;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return c;
}

bool no_consecutive_pair(const std::vector<std::vector<int>>& blocks) {
    for (const auto& b : blocks)
        for (size_t i = 0; i + 1 < b.size(); ++i)
            if (b[i + 1] == b[i] + 1) return false; // blocks are sorted
    return true;
}

bool no_singleton(const std::vector<std::vector<int>>& blocks) {
    for (const auto& b : blocks)
        if (b.size() == 1) return false;
    return true;
}

} // namespace

TEST_CASE("binomial basics and negative upper argument") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(4, 7) == 0);
    CHECK(binomial(6, -1) == 0);
    CHECK(binomial(-3, 2) == 6);   // (-1)^2 C(4,2)
    CHECK(binomial(-1, 3) == -1);  // (-1)^3 C(3,3)
    for (long long m = 0; m <= 12; ++m)
        for (long long j = 1; j <= m; ++j)
            CHECK(binomial(m, j) == binomial(m - 1, j - 1) + binomial(m - 1, j));
}

TEST_CASE("stirling2 matches block-count enumeration") {
    CHECK(stirling2(3, 2) == 3);
    CHECK(stirling2(4, 2) == 7);
    CHECK(stirling2(0, 0) == 1);
    CHECK(stirling2(5, 0) == 0);
    for (int m = 0; m <= 8; ++m)
        for (int d = 0; d <= m; ++d)
            CHECK(stirling2(m, d) == count_set_partitions(m, [&](const auto& blocks) {
                      return static_cast<int>(blocks.size()) == d;
                  }));
}

TEST_CASE("stirling_cycle matches cycle-count enumeration") {
    CHECK(stirling_cycle(3, 1) == 2);
    CHECK(stirling_cycle(4, 2) == 11);
    for (int m = 0; m <= 7; ++m) CHECK(stirling_cycle(m, m) == 1);
    for (int m = 1; m <= 6; ++m)
        for (int j = 1; j <= m; ++j)
            CHECK(stirling_cycle(m, j) == count_permutations_with_cycles(m, j));
}

TEST_CASE("stirling_cycle generating identity x(x+1)...(x+m-1)") {
    // sum_j c(m,j) x^j = rising factorial; compare coefficients by evaluation
    // at enough integer points.
    for (int m = 1; m <= 8; ++m) {
        for (int x = -4; x <= 4; ++x) {
            Integer rising = 1;
            for (int i = 0; i < m; ++i) rising *= x + i;
            Integer sum = 0;
            for (int j = 0; j <= m; ++j) sum += stirling_cycle(m, j) * ipow(Integer(x), static_cast<unsigned>(j));
            CHECK(sum == rising);
        }
    }
}

TEST_CASE("reduced_stirling matches no-consecutive enumeration") {
    CHECK(reduced_stirling(3, 2) == 1); // only 13|2
    CHECK(reduced_stirling(4, 2) == 1); // only 13|24
    for (int j = 2; j <= 8; ++j) CHECK(reduced_stirling(j, 1) == 0);
    for (int j = 0; j <= 8; ++j)
        for (int d = 0; d <= j; ++d)
            CHECK(reduced_stirling(j, d) == count_set_partitions(j, [&](const auto& blocks) {
                      return static_cast<int>(blocks.size()) == d && no_consecutive_pair(blocks);
                  }));
}

TEST_CASE("reduced_stirling shift identity") {
    for (int m = 0; m <= 8; ++m)
        for (int d = 0; d <= m; ++d)
            CHECK(reduced_stirling(m + 1, d) == stirling2(m, d - 1));
}

TEST_CASE("bell numbers and singleton-free bell numbers") {
    CHECK(bell(0) == 1);
    CHECK(bell(4) == 15);
    CHECK(bell_no_singletons(0) == 1);
    CHECK(bell_no_singletons(1) == 0);
    CHECK(bell_no_singletons(4) == 4);
    CHECK(bell_no_singletons(5) == 11);
    for (int m = 0; m <= 8; ++m) {
        CHECK(bell(m) == count_set_partitions(m, [](const auto&) { return true; }));
        CHECK(bell_no_singletons(m) == count_set_partitions(m, no_singleton));
    }
}

TEST_CASE("integer partitions") {
    CHECK(partitions_of(5).size() == 7);
    CHECK(partitions_of(0).size() == 1);
    CHECK(partitions_of(0)[0].parts.empty());
    auto p4 = partitions_of(4);
    REQUIRE(p4.size() == 5);
    CHECK(p4.front().parts == std::vector<int>{4});
    CHECK(p4.back().parts == std::vector<int>{1, 1, 1, 1});

    CHECK_THROWS_AS(IntPartition({2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(IntPartition({3, 0}), std::invalid_argument);
}

TEST_CASE("centralizer orders sum to n! over partitions of n") {
    CHECK(IntPartition({1, 1, 1}).centralizer() == 6);
    CHECK(IntPartition({3}).centralizer() == 3);
    CHECK(IntPartition({2, 1}).centralizer() == 2);
    for (int n = 1; n <= 8; ++n) {
        Integer factorial = 1;
        for (int i = 2; i <= n; ++i) factorial *= i;
        Rational total = 0;
        for (const auto& lam : partitions_of(n))
            total += Rational(1) / Rational(lam.centralizer());
        CHECK(total == 1);
        // sum over lambda of n!/z_lambda counts permutations by cycle type
        Integer perms = 0;
        for (const auto& lam : partitions_of(n)) {
            Rational q = Rational(factorial) / Rational(lam.centralizer());
            REQUIRE(denominator(q) == 1);
            perms += numerator(q);
        }
        CHECK(perms == factorial);
    }
}
