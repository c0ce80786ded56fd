#include "subword/normal_poset.hpp"

#include <stdexcept>
#include <string>

#include "subword/homology.hpp"
#include "subword/tensor_poly.hpp"

namespace subword {

SubwordPoset build_normal(int n, int k, const RankSet& T) {
    return build_poset(n, k, T, true, true);
}

bool compare_whitney(int n, int k) {
    if (n > 4 || k > 4) throw std::invalid_argument("compare_whitney: guarded to n <= 4, k <= 4");
    for (int f : admissible_fix_counts(n)) {
        SubwordPoset all = build_poset(f, k, RankSet::full(k));
        SubwordPoset normal = build_normal(f, k, RankSet::full(k));
        std::vector<Integer> mu_all = mobius_from_bottom(all);
        std::vector<Integer> mu_normal = mobius_from_bottom(normal);
        for (int j = 0; j < k; ++j) {
            Integer sum_all = 0, sum_normal = 0;
            for (std::size_t i = 0; i < all.levels[static_cast<size_t>(j)].size(); ++i)
                sum_all += mu_all[all.gid(j, static_cast<int>(i))];
            for (std::size_t i = 0; i < normal.levels[static_cast<size_t>(j)].size(); ++i)
                sum_normal += mu_normal[normal.gid(j, static_cast<int>(i))];
            if (sum_all != sum_normal) return false;
        }
    }
    return true;
}

DualWhitneyCounterexample dual_whitney_counterexample() {
    const Word u = word_from_string("ab", 2);
    const Word v = word_from_string("abab", 2);
    DualWhitneyCounterexample out;
    out.subword_mobius = mobius_recursive(u, v, false);
    out.normal_mobius = mobius_recursive(u, v, true);
    for (const Word& z : subwords_of(v)) {
        if (z == u || z == v || !is_subword(u, z)) continue;
        ++out.subword_open_elements;
        if (is_normal(z)) ++out.normal_open_elements;
    }
    return out;
}

bool eulerian_intervals(int n, int k) {
    if (n > 3 || k > 4) throw std::invalid_argument("eulerian_intervals: guarded to n <= 3, k <= 4");
    for (int r = 1; r <= k; ++r)
        for (const Word& y : all_words(n, r)) {
            if (!is_normal(y)) continue;
            for (const Word& x : subwords_of(y)) {
                if (x == y || !is_normal(x)) continue;
                Integer expected = (y.rank() - x.rank()) % 2 == 0 ? 1 : -1;
                if (mobius_recursive(x, y, true) != expected) return false;
            }
        }
    return true;
}

bool lower_interval_homology_agrees(int n, int k) {
    if (n > 3 || k > 4)
        throw std::invalid_argument("lower_interval_homology_agrees: guarded to n <= 3, k <= 4");
    for (int r = 1; r <= k; ++r)
        for (const Word& alpha : all_words(n, r)) {
            if (!is_normal(alpha)) continue;
            ChainComplexSummary full = betti_numbers(interval_open_poset(alpha, false));
            ChainComplexSummary normal = betti_numbers(interval_open_poset(alpha, true));
            if (full.betti != normal.betti) return false;
        }
    return true;
}

namespace {

std::string range_name(int k) { return "[2," + std::to_string(k) + "]"; }

RankSet top_ranks(int k) {
    std::vector<int> ranks;
    for (int r = 2; r <= k; ++r) ranks.push_back(r);
    return RankSet(k, std::move(ranks));
}

Integer fixed_point_trace(const SubwordPoset& P, int f) {
    Integer mu = poset_mobius(fixed_subposet(P, f));
    return P.level_count() % 2 == 0 ? -mu : mu;
}

} // namespace

std::vector<CheckResult> n2_examples() {
    std::vector<CheckResult> checks;

    // rank selection {1,3} of the three-letter-deep two-letter poset
    {
        RankSet T(3, {1, 3});
        ChainComplexSummary a = betti_numbers(build_poset(2, 3, T));
        checks.push_back(make_check("subword {1,3} homology dimension", Integer(5), a.top_betti()));
        checks.push_back(make_check("subword {1,3} lower betti", Integer(0), a.betti.front()));
        checks.push_back(make_check("subword {1,3} swap trace", Integer(1),
                                    lefschetz_character(2, 3, T).values.at(0)));

        SubwordPoset N = build_normal(2, 3, T);
        ChainComplexSummary b = betti_numbers(N);
        checks.push_back(make_check("normal {1,3} homology dimension", Integer(1), b.top_betti()));
        checks.push_back(make_check("normal {1,3} lower betti", Integer(0), b.betti.front()));
        checks.push_back(make_check("normal {1,3} swap trace", Integer(1), fixed_point_trace(N, 0)));
    }

    // the family with the bottom rank deleted
    for (int k = 2; k <= 5; ++k) {
        const RankSet T = top_ranks(k);
        const std::string tag = range_name(k);
        const Integer sign_t = (k - 1) % 2 == 0 ? 1 : -1; // (-1)^{|T|}

        TensorPowerPoly beta = beta_poly(T);
        checks.push_back(
            make_check("subword " + tag + " dimension", Integer(2 * k - 1), beta.eval(1)));
        checks.push_back(make_check("subword " + tag + " swap trace", sign_t, beta.eval(-1)));
        ChainComplexSummary a = betti_numbers(build_poset(2, k, T));
        checks.push_back(
            make_check("subword " + tag + " top betti", Integer(2 * k - 1), a.top_betti()));

        SubwordPoset N = build_normal(2, k, T);
        ChainComplexSummary b = betti_numbers(N);
        Integer lower = 0;
        for (std::size_t d = 0; d + 1 < b.betti.size(); ++d) lower += b.betti[d];
        checks.push_back(make_check("normal " + tag + " homology dimension", Integer(1), b.top_betti()));
        checks.push_back(make_check("normal " + tag + " lower betti sum", Integer(0), lower));
        checks.push_back(make_check("normal " + tag + " swap trace", sign_t, fixed_point_trace(N, 0)));

        // chain module: 2^{|T|-1} copies of the regular representation
        checks.push_back(make_check("normal " + tag + " chain count",
                                    ipow(Integer(2), static_cast<unsigned>(k - 1)),
                                    maximal_chain_count(N)));
        checks.push_back(make_check("normal " + tag + " fixed chains under swap", Integer(0),
                                    maximal_chain_count(fixed_subposet(N, 0))));
    }

    // chain modules over the full rank set
    for (int k = 2; k <= 5; ++k) {
        SubwordPoset N = build_normal(2, k, RankSet::full(k));
        checks.push_back(make_check("normal [1," + std::to_string(k) + "] chain count",
                                    ipow(Integer(2), static_cast<unsigned>(k)),
                                    maximal_chain_count(N)));
        checks.push_back(make_check("normal [1," + std::to_string(k) + "] fixed chains under swap",
                                    Integer(0), maximal_chain_count(fixed_subposet(N, 0))));
    }

    return checks;
}

} // namespace subword
