#pragma once

#include <string>
#include <vector>

#include "subword/rank_set.hpp"
#include "subword/symfunc.hpp"
#include "subword/tensor_poly.hpp"

namespace subword {

enum class ConjStatus { holds, fails, inconclusive_canonical_form };

std::string to_string(ConjStatus s);

// Findings for one rank selection T: the canonical tensor-power expansion of
// the homology, the hook-basis coordinates of the reflection-corrected module,
// and the verdicts on both nonnegativity conjectures.
struct ConjectureRecord {
    RankSet T;
    TensorPowerPoly beta;
    HookHVector hook; // coordinates of ch(beta) + (-1)^{|T|} s_{(n-1,1)}
    ConjStatus conj1 = ConjStatus::holds;
    ConjStatus conj2 = ConjStatus::holds;
    bool rewrite_searched = false;
    bool rewrite_found = false;
};

struct ConjectureReport {
    int n = 0;
    int k = 0;
    std::vector<ConjectureRecord> records; // nonempty T in colex order
    int conj1_failures = 0;
    int conj2_failures = 0;

    bool has_failure() const { return conj1_failures + conj2_failures > 0; }
    // earliest record in colex order with a failing status, or nullptr
    const ConjectureRecord* first_failure() const;
};

// Evaluates both conjectures on every nonempty rank selection of [1, k].
// The first is tested against the canonical expansion; a negative coefficient
// is a counterexample when the expansion is forced (max T < n) and triggers a
// bounded rewrite search otherwise.  Hook-span membership and integrality of
// the second are established facts and violations throw.
ConjectureReport scan(int n, int k);

// Breadth-first search, up to the given number of applications of the rewrite
// x^n = sum_j a_j(n) x^j to single monomials, for a representative of p with
// no negative coefficient.
bool rewrite_search(const TensorPowerPoly& p, int n, int depth);

// The three families with proven almost-h-positivity: consecutive top ranks
// [r, k], one deleted rank [1, k] \ {r}, and pairs {s1, s2}.  Verifies the
// vanishing alternating coefficient sum and nonnegativity of every tensor
// power multiplicity of degree >= 2.  The coefficient calculus is alphabet
// independent, so n only enters the precondition.
bool check_proven_cases(int n, int k);

// Brute-force agreement between the polynomial calculus and the chain
// complexes: character values at every admissible fix count and top Betti
// number against dimension, for every nonempty T.  Guarded to n <= 4, k <= 4.
bool cross_validate(int n, int k);

} // namespace subword
