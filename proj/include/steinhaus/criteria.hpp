#pragma once

// Closed-form existence criteria and named Jackson families. Each rule is
// usable as a fast pre-check and as an oracle against the search engine;
// rules answer Inapplicable rather than guessing outside their shape.

#include <optional>
#include <string>
#include <vector>

#include "steinhaus/core.hpp"

namespace steinhaus {

enum class Verdict { Exists, NotAtThisPeriod, Jackson, Inapplicable };

struct CriterionResult {
  std::string criterion;
  Verdict verdict = Verdict::Inapplicable;
  std::optional<PeriodicSet> witness;  // present iff verdict == Exists
};

// Three-point rational sets {0, n, m}, 0 < n < m coprime: Steinhaus with
// witness 3Z exactly when {n mod 3, m mod 3} = {1, 2}, Jackson otherwise.
CriterionResult classify_three_point_rational(int n, int m);

// Period n+1 exists iff the n+1 points are pairwise distinct mod n+1.
CriterionResult period_n1_exists(const GapTuple& t);

// Period 2(n+1): points distinct mod 2(n+1) and some residue missing
// from the difference set mod 2(n+1).
CriterionResult period_2n_exists(const GapTuple& t);

// Period M = (k+1)(n+1): points distinct mod M and residues
// 0 = x_0 < ... < x_k < M whose pairwise differences avoid the
// difference set mod M; exhaustive backtracking, lexicographically
// smallest residue list.
CriterionResult period_m_exists(const GapTuple& t, int k);

// Sufficient arithmetic-progression condition at period M = (k+1)(n+1) > d:
// some 0 < x < M with x, 2x, ..., kx all outside the difference set mod M.
// Failure yields Inapplicable, not NotAtThisPeriod.
CriterionResult sufficient_ap(const GapTuple& t, long long M);

// (a,b,b) with a+b odd is Jackson.
CriterionResult rule_abb(const GapTuple& t);

// (1,1,4k+3) is Jackson.
CriterionResult rule_114k3(const GapTuple& t);

// (c,b,2c) -- any tuple similar to (1,r,2) with rational r -- is Jackson.
CriterionResult rule_1r2(const GapTuple& t);

// Runs the unparameterised criteria whose preconditions hold and returns
// those that produced a definitive verdict (Exists or Jackson), in a
// fixed order. Used for classification provenance.
std::vector<CriterionResult> fired_criteria(const GapTuple& t);

const char* to_string(Verdict v);

}  // namespace steinhaus
