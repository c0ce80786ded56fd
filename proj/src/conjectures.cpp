#include "subword/conjectures.hpp"

#include <queue>
#include <set>
#include <stdexcept>

#include "subword/homology.hpp"

namespace subword {

std::string to_string(ConjStatus s) {
    switch (s) {
    case ConjStatus::holds: return "holds";
    case ConjStatus::fails: return "fails";
    case ConjStatus::inconclusive_canonical_form: return "inconclusive-canonical-form";
    }
    throw std::logic_error("to_string: bad ConjStatus");
}

const ConjectureRecord* ConjectureReport::first_failure() const {
    for (const ConjectureRecord& r : records)
        if (r.conj1 == ConjStatus::fails || r.conj2 == ConjStatus::fails) return &r;
    return nullptr;
}

namespace {

RankSet rank_set_from_mask(int k, unsigned mask) {
    std::vector<int> ranks;
    for (int i = 1; i <= k; ++i)
        if (mask & (1u << (i - 1))) ranks.push_back(i);
    return RankSet(k, std::move(ranks));
}

bool has_negative(const TensorPowerPoly& p) {
    for (const Integer& c : p.c)
        if (c < 0) return true;
    return false;
}

} // namespace

bool rewrite_search(const TensorPowerPoly& p, int n, int depth) {
    const ReductionIdentity red = reduction_polynomial(n);
    auto nonneg = [](const std::vector<Integer>& c) {
        for (const Integer& v : c)
            if (v < 0) return false;
        return true;
    };
    std::set<std::vector<Integer>> seen{p.c};
    std::queue<std::vector<Integer>> frontier;
    frontier.push(p.c);
    if (nonneg(p.c)) return true;
    for (int step = 0; step < depth; ++step) {
        std::queue<std::vector<Integer>> next;
        while (!frontier.empty()) {
            std::vector<Integer> cur = std::move(frontier.front());
            frontier.pop();
            for (std::size_t m = static_cast<std::size_t>(n); m < cur.size(); ++m) {
                if (cur[m] == 0) continue;
                std::vector<Integer> rewritten = cur;
                const Integer mult = rewritten[m];
                rewritten[m] = 0;
                for (const auto& [j, aj] : red.a)
                    rewritten[m - static_cast<std::size_t>(n) + static_cast<std::size_t>(j)] +=
                        mult * aj;
                while (!rewritten.empty() && rewritten.back() == 0) rewritten.pop_back();
                if (!seen.insert(rewritten).second) continue;
                if (nonneg(rewritten)) return true;
                next.push(std::move(rewritten));
            }
        }
        frontier = std::move(next);
    }
    return false;
}

ConjectureReport scan(int n, int k) {
    if (n < 2 || k < 1) throw std::invalid_argument("scan: need n >= 2, k >= 1");
    ConjectureReport report;
    report.n = n;
    report.k = k;
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
        ConjectureRecord rec;
        rec.T = rank_set_from_mask(k, mask);
        rec.beta = beta_poly(rec.T);

        if (!has_negative(rec.beta)) {
            rec.conj1 = ConjStatus::holds;
        } else if (rec.T.max() >= n) {
            rec.conj1 = ConjStatus::inconclusive_canonical_form;
            if (n >= 3) {
                rec.rewrite_searched = true;
                rec.rewrite_found = rewrite_search(rec.beta, n, 3);
            }
        } else {
            rec.conj1 = ConjStatus::fails;
        }

        const Rational sign = rec.T.size() % 2 == 0 ? 1 : -1;
        SymFunc corrected =
            add(frobenius_of_fixpoly(rec.beta, n), scale(reflection_char(n), sign));
        std::optional<HookHVector> hook = to_hook_h(corrected);
        if (!hook) throw std::logic_error("scan: corrected module left the hook h span");
        if (!hook->integral()) throw std::logic_error("scan: non-integer hook h coordinate");
        rec.hook = *hook;
        rec.conj2 = hook->nonnegative() && hook->min_support() >= 2 ? ConjStatus::holds
                                                                    : ConjStatus::fails;

        if (rec.conj1 == ConjStatus::fails) ++report.conj1_failures;
        if (rec.conj2 == ConjStatus::fails) ++report.conj2_failures;
        report.records.push_back(std::move(rec));
    }
    return report;
}

namespace {

// alternating coefficient sum cancels the reflection correction and every
// degree >= 2 multiplicity is a valid u-module coefficient
bool proven_shape_ok(const RankSet& T) {
    TensorPowerPoly beta = beta_poly(T);
    Integer correction = T.size() % 2 == 0 ? 1 : -1;
    if (alternating_coeff_sum(beta) + correction != 0) return false;
    for (int j = 2; j <= beta.degree(); ++j)
        if (beta.coeff(j) < 0) return false;
    return true;
}

} // namespace

bool check_proven_cases(int n, int k) {
    if (n < 2 || k < 1) throw std::invalid_argument("check_proven_cases: need n >= 2, k >= 1");
    for (int r = 1; r <= k; ++r) {
        std::vector<int> run;
        for (int i = r; i <= k; ++i) run.push_back(i);
        if (!proven_shape_ok(RankSet(k, std::move(run)))) return false;
    }
    if (k >= 2)
        for (int r = 1; r <= k; ++r) {
            std::vector<int> rest;
            for (int i = 1; i <= k; ++i)
                if (i != r) rest.push_back(i);
            if (!proven_shape_ok(RankSet(k, std::move(rest)))) return false;
        }
    for (int s1 = 1; s1 < k; ++s1)
        for (int s2 = s1 + 1; s2 <= k; ++s2)
            if (!proven_shape_ok(RankSet(k, {s1, s2}))) return false;
    return true;
}

bool cross_validate(int n, int k) {
    if (n > 4 || k > 4) throw std::invalid_argument("cross_validate: guarded to n <= 4, k <= 4");
    if (n < 2 || k < 1) throw std::invalid_argument("cross_validate: need n >= 2, k >= 1");
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
        const RankSet T = rank_set_from_mask(k, mask);
        const TensorPowerPoly beta = beta_poly(T);
        const FixCharacter chi = lefschetz_character(n, k, T);
        for (int f : admissible_fix_counts(n))
            if (chi.values.at(f) != beta.eval(Integer(f - 1))) return false;
        ChainComplexSummary s = betti_numbers(build_poset(n, k, T));
        if (s.top_betti() != beta.eval(Integer(n - 1))) return false;
    }
    return true;
}

} // namespace subword
