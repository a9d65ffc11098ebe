#include "steinhaus/criteria.hpp"

#include <algorithm>
#include <numeric>

namespace steinhaus {
namespace {

bool points_distinct_mod(const GapTuple& t, long long M) {
  std::vector<char> seen(static_cast<std::size_t>(M), 0);
  for (int a : t.points()) {
    auto r = static_cast<std::size_t>(a % M);
    if (seen[r]) return false;
    seen[r] = 1;
  }
  return true;
}

// Membership table of D* reduced mod M.
std::vector<char> diffs_mod(const GapTuple& t, long long M) {
  std::vector<char> in(static_cast<std::size_t>(M), 0);
  for (int v : difference_set(t).values)
    in[static_cast<std::size_t>(((v % M) + M) % M)] = 1;
  return in;
}

CriterionResult exists(std::string id, long long M, std::vector<int> residues) {
  return CriterionResult{std::move(id), Verdict::Exists,
                         PeriodicSet::create(M, std::move(residues))};
}

}  // namespace

CriterionResult classify_three_point_rational(int n, int m) {
  if (n <= 0 || n >= m) throw std::invalid_argument("need 0 < n < m");
  if (std::gcd(n, m) != 1) throw std::invalid_argument("n and m must be coprime");
  bool steinhaus = std::min(n % 3, m % 3) == 1 && std::max(n % 3, m % 3) == 2;
  if (steinhaus) return exists("three_point_rational", 3, {0});
  return CriterionResult{"three_point_rational", Verdict::Jackson, std::nullopt};
}

CriterionResult period_n1_exists(const GapTuple& t) {
  const long long M = t.point_count();
  if (points_distinct_mod(t, M)) return exists("period_n1", M, {0});
  return CriterionResult{"period_n1", Verdict::NotAtThisPeriod, std::nullopt};
}

CriterionResult period_2n_exists(const GapTuple& t) {
  const long long M = 2LL * t.point_count();
  CriterionResult miss{"period_2n", Verdict::NotAtThisPeriod, std::nullopt};
  if (!points_distinct_mod(t, M)) return miss;
  auto in_diffs = diffs_mod(t, M);
  for (long long x = 1; x < M; ++x) {
    if (!in_diffs[static_cast<std::size_t>(x)] &&
        !in_diffs[static_cast<std::size_t>(M - x)])
      return exists("period_2n", M, {0, static_cast<int>(x)});
  }
  return miss;
}

CriterionResult period_m_exists(const GapTuple& t, int k) {
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  const long long M = static_cast<long long>(k + 1) * t.point_count();
  CriterionResult miss{"period_m", Verdict::NotAtThisPeriod, std::nullopt};
  if (!points_distinct_mod(t, M)) return miss;
  auto in_diffs = diffs_mod(t, M);

  // Backtracking over 0 = x_0 < x_1 < ... < x_k < M, candidates increasing,
  // pruned by the D* mod M table.
  std::vector<int> chosen{0};
  auto compatible = [&](int x) {
    for (int y : chosen) {
      long long diff = ((x - y) % M + M) % M;
      if (in_diffs[static_cast<std::size_t>(diff)]) return false;
    }
    return true;
  };
  // Iterative DFS: frame i holds the candidate tried at depth i.
  std::vector<int> next_cand{1};
  while (true) {
    if (static_cast<int>(chosen.size()) == k + 1)
      return exists("period_m", M, chosen);
    int start = next_cand.back();
    int found = -1;
    for (int x = start; x < M; ++x) {
      if (compatible(x)) {
        found = x;
        break;
      }
    }
    if (found >= 0) {
      next_cand.back() = found + 1;
      chosen.push_back(found);
      next_cand.push_back(found + 1);
    } else {
      next_cand.pop_back();
      if (chosen.size() == 1) return miss;
      chosen.pop_back();
    }
  }
}

CriterionResult sufficient_ap(const GapTuple& t, long long M) {
  const long long N = t.point_count();
  if (M <= t.diameter()) throw std::invalid_argument("period must exceed the diameter");
  if (M % N != 0) throw std::invalid_argument("period must be a multiple of n+1");
  const long long k = M / N - 1;
  CriterionResult miss{"sufficient_ap", Verdict::Inapplicable, std::nullopt};
  if (!points_distinct_mod(t, M)) return miss;  // cannot happen for M > d
  if (k == 0) return exists("sufficient_ap", M, {0});
  auto in_diffs = diffs_mod(t, M);
  for (long long x = 1; x < M; ++x) {
    bool ok = true;
    for (long long i = 1; i <= k && ok; ++i)
      ok = !in_diffs[static_cast<std::size_t>(i * x % M)];
    if (!ok) continue;
    std::vector<int> residues{0};
    for (long long i = 1; i <= k; ++i)
      residues.push_back(static_cast<int>(i * x % M));
    std::sort(residues.begin(), residues.end());
    return exists("sufficient_ap", M, std::move(residues));
  }
  return miss;
}

CriterionResult rule_abb(const GapTuple& t) {
  CriterionResult miss{"rule_abb", Verdict::Inapplicable, std::nullopt};
  if (t.arity() != 3) return miss;
  const auto& g = t.gaps();
  auto hit = [](int a, int b) { return (a + b) % 2 == 1; };
  if ((g[1] == g[2] && hit(g[0], g[1])) || (g[0] == g[1] && hit(g[2], g[0])))
    return CriterionResult{"rule_abb", Verdict::Jackson, std::nullopt};
  return miss;
}

CriterionResult rule_114k3(const GapTuple& t) {
  CriterionResult miss{"rule_114k3", Verdict::Inapplicable, std::nullopt};
  if (t.arity() != 3) return miss;
  const auto& g = t.gaps();
  auto hit = [](int a, int b, int c) { return a == 1 && b == 1 && c % 4 == 3; };
  if (hit(g[0], g[1], g[2]) || hit(g[2], g[1], g[0]))
    return CriterionResult{"rule_114k3", Verdict::Jackson, std::nullopt};
  return miss;
}

CriterionResult rule_1r2(const GapTuple& t) {
  CriterionResult miss{"rule_1r2", Verdict::Inapplicable, std::nullopt};
  if (t.arity() != 3) return miss;
  const auto& g = t.gaps();
  if (g[2] == 2 * g[0] || g[0] == 2 * g[2])
    return CriterionResult{"rule_1r2", Verdict::Jackson, std::nullopt};
  return miss;
}

std::vector<CriterionResult> fired_criteria(const GapTuple& t) {
  std::vector<CriterionResult> out;
  auto keep = [&out](CriterionResult r) {
    if (r.verdict == Verdict::Exists || r.verdict == Verdict::Jackson)
      out.push_back(std::move(r));
  };
  if (t.arity() == 2) {
    int n = t.points()[1];
    int m = t.points()[2];
    if (std::gcd(n, m) == 1) keep(classify_three_point_rational(n, m));
  }
  keep(period_n1_exists(t));
  keep(period_2n_exists(t));
  keep(rule_abb(t));
  keep(rule_114k3(t));
  keep(rule_1r2(t));
  return out;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Exists: return "exists";
    case Verdict::NotAtThisPeriod: return "not_at_this_period";
    case Verdict::Jackson: return "jackson";
    case Verdict::Inapplicable: return "inapplicable";
  }
  return "?";
}

}  // namespace steinhaus
