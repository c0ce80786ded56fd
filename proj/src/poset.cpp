#include "subword/poset.hpp"

#include <algorithm>
#include <stdexcept>

namespace subword {

int SubwordPoset::level_of(std::size_t g) const {
    int lo = 0, hi = level_count() - 1;
    while (lo < hi) {
        int mid = (lo + hi + 1) / 2;
        if (offsets[static_cast<size_t>(mid)] <= g)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

const Word& SubwordPoset::word_at(std::size_t g) const {
    int lv = level_of(g);
    return levels[static_cast<size_t>(lv)][g - offsets[static_cast<size_t>(lv)]];
}

bool SubwordPoset::leq(std::size_t u, std::size_t v) const {
    if (u == v) return true;
    return std::binary_search(down[v].begin(), down[v].end(), u);
}

// Fills index maps and the stored order relation from the level lists.
static void finish_poset(SubwordPoset& P) {
    P.level_index.clear();
    P.offsets.clear();
    std::size_t total = 0;
    for (const auto& lv : P.levels) {
        P.offsets.push_back(total);
        std::map<Word, int> idx;
        for (size_t i = 0; i < lv.size(); ++i) idx[lv[i]] = static_cast<int>(i);
        P.level_index.push_back(std::move(idx));
        total += lv.size();
    }
    P.down.assign(total, {});
    P.up.assign(total, {});

    // map selected rank -> level position
    std::map<int, int> level_of_rank;
    for (int i = 0; i < P.level_count(); ++i)
        level_of_rank[P.rank_set.ranks[static_cast<size_t>(i)]] = i;

    for (int j = 0; j < P.level_count(); ++j) {
        for (size_t b = 0; b < P.levels[static_cast<size_t>(j)].size(); ++b) {
            const Word& v = P.levels[static_cast<size_t>(j)][b];
            std::size_t vg = P.gid(j, static_cast<int>(b));
            for (const Word& s : subwords_of(v)) {
                if (s.rank() == v.rank()) continue;
                auto it = level_of_rank.find(s.rank());
                if (it == level_of_rank.end()) continue;
                int i = it->second;
                auto found = P.level_index[static_cast<size_t>(i)].find(s);
                if (found == P.level_index[static_cast<size_t>(i)].end()) continue;
                P.down[vg].push_back(P.gid(i, found->second));
            }
            std::sort(P.down[vg].begin(), P.down[vg].end());
        }
    }
    for (std::size_t v = 0; v < total; ++v)
        for (std::size_t u : P.down[v]) P.up[u].push_back(v);
    // up lists come out ascending because v runs in increasing order
}

SubwordPoset build_poset(int n, int k, const RankSet& T, bool with_bounds, bool normal_only) {
    if (n < 0) throw std::invalid_argument("build_poset: negative alphabet");
    if (T.k != k) throw std::invalid_argument("build_poset: rank set bound mismatch");
    SubwordPoset P;
    P.alphabet = n;
    P.rank_set = T;
    P.with_bounds = with_bounds;
    P.normal_only = normal_only;
    for (int r : T.ranks) {
        std::vector<Word> level;
        for (Word& w : all_words(n, r))
            if (!normal_only || is_normal(w)) level.push_back(std::move(w));
        P.levels.push_back(std::move(level));
    }
    finish_poset(P);
    return P;
}

SubwordPoset fixed_subposet(const SubwordPoset& P, int f) {
    if (f < 0 || f > P.alphabet) throw std::invalid_argument("fixed_subposet: need 0 <= f <= n");
    return build_poset(f, P.rank_set.k, P.rank_set, P.with_bounds, P.normal_only);
}

SubwordPoset interval_open_poset(const Word& alpha, bool normal_only) {
    SubwordPoset P;
    P.alphabet = alpha.alphabet;
    const int top = alpha.rank();
    if (top < 2) {
        P.rank_set = RankSet(std::max(top - 1, 0), {});
        finish_poset(P);
        return P;
    }
    std::vector<int> ranks;
    for (int r = 1; r <= top - 1; ++r) ranks.push_back(r);
    P.rank_set = RankSet(top - 1, std::move(ranks));
    P.levels.assign(static_cast<size_t>(top - 1), {});
    for (const Word& s : subwords_of(alpha)) {
        if (s.rank() == 0 || s.rank() == top) continue;
        if (normal_only && !is_normal(s)) continue;
        P.levels[static_cast<size_t>(s.rank() - 1)].push_back(s);
    }
    P.normal_only = normal_only;
    finish_poset(P);
    return P;
}

Integer poset_mobius(const SubwordPoset& P) {
    Integer acc_all = 0;
    for (const Integer& m : mobius_from_bottom(P)) acc_all += m;
    return -(Integer(1) + acc_all);
}

std::vector<Integer> mobius_from_bottom(const SubwordPoset& P) {
    const std::size_t total = P.element_count();
    std::vector<Integer> mu(total);
    for (std::size_t v = 0; v < total; ++v) {
        Integer acc = 1; // mu(0hat, 0hat)
        for (std::size_t u : P.down[v]) acc += mu[u];
        mu[v] = -acc;
    }
    return mu;
}

std::vector<Integer> mobius_to_top(const SubwordPoset& P) {
    const std::size_t total = P.element_count();
    std::vector<Integer> mu(total);
    for (std::size_t v = total; v-- > 0;) {
        Integer acc = 1; // mu(1hat, 1hat)
        for (std::size_t w : P.up[v]) acc += mu[w];
        mu[v] = -acc;
    }
    return mu;
}

Integer maximal_chain_count(const SubwordPoset& P) {
    if (P.levels.empty()) return 1;
    std::vector<Integer> cnt(P.element_count(), 0);
    for (int j = 0; j < P.level_count(); ++j) {
        const std::size_t lo = P.offsets[static_cast<size_t>(j)];
        const std::size_t hi = lo + P.levels[static_cast<size_t>(j)].size();
        for (std::size_t v = lo; v < hi; ++v) {
            if (j == 0) {
                cnt[v] = 1;
                continue;
            }
            const std::size_t prev_lo = P.offsets[static_cast<size_t>(j - 1)];
            for (std::size_t u : P.down[v])
                if (u >= prev_lo && u < lo) cnt[v] += cnt[u];
        }
    }
    Integer total = 0;
    const std::size_t last_lo = P.offsets.back();
    for (std::size_t v = last_lo; v < P.element_count(); ++v) total += cnt[v];
    return total;
}

static bool chain_dfs(const SubwordPoset& P, std::vector<std::size_t>& chain,
                      const std::function<bool(const std::vector<std::size_t>&)>& visit) {
    if (!visit(chain)) return false;
    for (std::size_t next : P.up[chain.back()]) {
        chain.push_back(next);
        if (!chain_dfs(P, chain, visit)) return false;
        chain.pop_back();
    }
    return true;
}

bool for_each_chain(const SubwordPoset& P,
                    const std::function<bool(const std::vector<std::size_t>&)>& visit) {
    std::vector<std::size_t> chain;
    for (std::size_t start = 0; start < P.element_count(); ++start) {
        chain.assign(1, start);
        if (!chain_dfs(P, chain, visit)) return false;
    }
    return true;
}

} // namespace subword
