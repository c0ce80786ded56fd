#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "subword/linalg.hpp"
#include "subword/poset.hpp"
#include "subword/rank_set.hpp"

namespace subword {

inline constexpr std::size_t default_chain_cap = 5'000'000;

struct chain_cap_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Face counts and reduced Betti numbers of an order complex, dimension by
// dimension; reduced_euler includes the empty face, so it equals the Mobius
// number of the bounded poset.
struct ChainComplexSummary {
    std::vector<Integer> face_counts;
    std::vector<Integer> betti;
    Integer reduced_euler = -1;

    Integer top_betti() const { return betti.empty() ? Integer(0) : betti.back(); }
};

// Character of a module recorded per fixed-point count.  Every character in
// this artifact depends on a permutation only through its number of fixed
// points, and no permutation of n letters fixes exactly n-1 of them.
struct FixCharacter {
    int n = 0;
    std::map<int, Integer> values; // keys {0..n} minus {n-1}

    Integer dimension() const { return values.at(n); }
};

std::vector<int> admissible_fix_counts(int n);

// Reduced Betti numbers of the order complex of P (bounds stripped), by exact
// integer boundary ranks.  Throws chain_cap_error past the face cap.
ChainComplexSummary betti_numbers(const SubwordPoset& P,
                                  std::size_t chain_cap = default_chain_cap);

// Character of the unique nonvanishing homology of the rank selection T:
// the Lefschetz trace at fix-count f is the Mobius number of the fixed-point
// poset, and concentration lets the sign (-1)^{|T|-1} recover the homology
// character.
FixCharacter lefschetz_character(int n, int k, const RankSet& T);

// Character of the permutation module on maximal chains: the trace at
// fix-count f counts the chains of the poset over an f-letter alphabet.
FixCharacter chain_character(int n, int k, const RankSet& T);

// Dimensions of the Whitney homology pieces WH_i of the full selection,
// i = 0..k, from lower-interval Mobius values.
std::vector<Integer> whitney_dims(int n, int k);

// Dimensions of the dual Whitney pieces: entry i holds dim WH*_{k+1-i},
// the contribution of the rank-i elements through their upper intervals.
std::vector<Integer> dual_whitney_dims(int n, int k);

} // namespace subword
