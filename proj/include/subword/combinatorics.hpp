#pragma once

#include <compare>
#include <functional>
#include <vector>

#include "subword/numeric.hpp"

namespace subword {

// Binomial coefficient with the negative-upper-argument convention
// C(m, j) = (-1)^j C(j - m - 1, j) for m < 0; zero whenever j < 0.
Integer binomial(long long m, long long j);

// Stirling numbers of the second kind: partitions of an m-set into d blocks.
Integer stirling2(long long m, long long d);

// Unsigned Stirling numbers of the first kind: permutations of an m-set
// with j cycles.
Integer stirling_cycle(long long m, long long j);

// Partitions of {1..j} into d blocks such that no block contains two
// consecutive integers.  Satisfies reduced_stirling(m+1, d) = stirling2(m, d-1).
Integer reduced_stirling(long long j, long long d);

// Number of set partitions of an m-set.
Integer bell(long long m);

// Set partitions of an m-set with every block of size >= 2, via
// inclusion-exclusion over the set of singletons.
Integer bell_no_singletons(long long m);

// Integer partition in weakly decreasing order.  Empty vector is the unique
// partition of 0.
struct IntPartition {
    std::vector<int> parts;

    IntPartition() = default;
    explicit IntPartition(std::vector<int> p);

    int sum() const;
    int count_ones() const;
    int multiplicity(int part) const;

    // Order of the centralizer of a permutation with this cycle type,
    // z = prod_i i^{m_i} m_i!.
    Integer centralizer() const;

    auto operator<=>(const IntPartition&) const = default;
};

// All partitions of n, in reverse lexicographic order starting from (n).
std::vector<IntPartition> partitions_of(int n);

// Enumerates set partitions of {0..m-1} through restricted growth strings;
// the callback receives the blocks, each sorted, ordered by least element.
void for_each_set_partition(int m,
                            const std::function<void(const std::vector<std::vector<int>>&)>& visit);

} // namespace subword
