#pragma once

#include <vector>

#include "subword/poset.hpp"
#include "subword/report.hpp"

namespace subword {

// Rank selection of the poset of normal words (no equal adjacent letters),
// with conceptual bounds.
SubwordPoset build_normal(int n, int k, const RankSet& T);

// Character-level agreement of the Whitney homology of the full subword and
// normal-word posets: for every admissible fix count, the per-rank sums of
// lower-interval Mobius values coincide.  Guarded to n <= 4, k <= 4.
bool compare_whitney(int n, int k);

// The smallest interval where the posets' upper-interval Mobius values split:
// (ab, abab) carries +3 in subword order but +1 among normal words.
struct DualWhitneyCounterexample {
    Integer subword_mobius;
    Integer normal_mobius;
    int subword_open_elements = 0;
    int normal_open_elements = 0;
};

DualWhitneyCounterexample dual_whitney_counterexample();

// Every interval (x, y) with y below the artificial top has Mobius value
// (-1)^(rank difference), checked exhaustively.  Guarded to n <= 3, k <= 4.
bool eulerian_intervals(int n, int k);

// Reduced Betti numbers of every open lower interval (0hat, alpha), alpha
// normal, agree between the two posets.  Guarded to n <= 3, k <= 4.
bool lower_interval_homology_agrees(int n, int k);

// The two-letter showcase: rank selection {1,3}, the deleted-bottom-rank
// family [2,k], and the chain modules, with exact expected values.
std::vector<CheckResult> n2_examples();

} // namespace subword
