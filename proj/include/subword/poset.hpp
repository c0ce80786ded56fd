#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <vector>

#include "subword/rank_set.hpp"
#include "subword/word.hpp"

namespace subword {

// Explicit rank-selected poset.  Elements are stored level by level in
// canonical word order; the full order relation (not just covers) is stored
// as per-element lists of comparable elements, indexed by global element id.
// Conceptual bottom and top bounds are never stored as elements; Mobius
// queries account for them through with_bounds.
struct SubwordPoset {
    int alphabet = 0;
    RankSet rank_set;
    bool with_bounds = true;
    bool normal_only = false;

    std::vector<std::vector<Word>> levels;
    std::vector<std::map<Word, int>> level_index;
    std::vector<std::size_t> offsets; // offsets[i] = global id of levels[i][0]

    std::vector<std::vector<std::size_t>> down; // all comparable elements below, ascending
    std::vector<std::vector<std::size_t>> up;   // all comparable elements above, ascending

    std::size_t element_count() const { return down.size(); }
    int level_count() const { return static_cast<int>(levels.size()); }
    std::size_t gid(int level, int idx) const { return offsets[static_cast<size_t>(level)] + static_cast<size_t>(idx); }
    int level_of(std::size_t g) const;
    const Word& word_at(std::size_t g) const;

    // u <= v between stored elements
    bool leq(std::size_t u, std::size_t v) const;
};

// Rank-selected subword poset over n letters: all words whose length lies in
// T, plus conceptual bounds.  With normal_only, levels keep normal words only.
SubwordPoset build_poset(int n, int k, const RankSet& T, bool with_bounds = true,
                         bool normal_only = false);

// The rank-selected poset over the f letters fixed by a permutation with f
// fixed points; isomorphic to the literal restriction of P to those letters.
SubwordPoset fixed_subposet(const SubwordPoset& P, int f);

// Open interval (bottom, alpha): all proper nonempty subwords of alpha,
// stratified by length, optionally restricted to normal words.
SubwordPoset interval_open_poset(const Word& alpha, bool normal_only = false);

// mu(0hat, 1hat) of P with bounds attached, by the defining recursion.
Integer poset_mobius(const SubwordPoset& P);

// mu(0hat, x) for every stored element.
std::vector<Integer> mobius_from_bottom(const SubwordPoset& P);

// mu(x, 1hat) for every stored element, by the dual recursion.
std::vector<Integer> mobius_to_top(const SubwordPoset& P);

// Number of chains hitting every level.
Integer maximal_chain_count(const SubwordPoset& P);

// Visits every nonempty chain of stored elements (bounds excluded) as a
// strictly increasing list of global ids.  Returns false if the visitor
// aborted the walk.
bool for_each_chain(const SubwordPoset& P,
                    const std::function<bool(const std::vector<std::size_t>&)>& visit);

} // namespace subword
