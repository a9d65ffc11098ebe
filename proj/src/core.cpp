#include "steinhaus/core.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace steinhaus {

GapTuple GapTuple::create(std::vector<int> gaps, int diameter_cap) {
  if (gaps.empty()) throw std::invalid_argument("gap tuple must have at least one gap");
  if (diameter_cap > kDiameterHardLimit)
    throw std::invalid_argument("diameter cap beyond 63 does not fit a machine word");
  long long d = 0;
  for (int g : gaps) {
    if (g < 1) throw std::invalid_argument("gaps must be positive integers");
    d += g;
  }
  if (d > diameter_cap)
    throw CapError("diameter " + std::to_string(d) + " exceeds cap " +
                   std::to_string(diameter_cap));
  std::vector<int> points;
  points.reserve(gaps.size() + 1);
  points.push_back(0);
  int acc = 0;
  for (int g : gaps) {
    acc += g;
    points.push_back(acc);
  }
  return GapTuple(std::move(gaps), std::move(points));
}

bool DifferenceSet::contains(int x) const {
  return std::binary_search(values.begin(), values.end(), x);
}

std::vector<int> DifferenceSet::positive() const {
  std::vector<int> out;
  for (int v : values)
    if (v > 0) out.push_back(v);
  return out;
}

PeriodicSet PeriodicSet::create(long long period, std::vector<int> residues) {
  if (period < 1) throw std::invalid_argument("period must be positive");
  int prev = -1;
  for (int r : residues) {
    if (r < 0 || r >= period) throw std::invalid_argument("residue out of [0, period)");
    if (r <= prev) throw std::invalid_argument("residues must be strictly increasing");
    prev = r;
  }
  return PeriodicSet{period, std::move(residues)};
}

GapTuple canonicalize(const GapTuple& t) {
  std::vector<int> gaps = t.gaps();
  int g = 0;
  for (int x : gaps) g = std::gcd(g, x);
  for (int& x : gaps) x /= g;
  std::vector<int> rev(gaps.rbegin(), gaps.rend());
  if (rev < gaps) gaps = std::move(rev);
  return GapTuple::create(std::move(gaps));
}

DifferenceSet difference_set(const GapTuple& t) {
  std::set<int> vals;
  const auto& pts = t.points();
  for (int x : pts)
    for (int y : pts) vals.insert(x - y);
  return DifferenceSet{std::vector<int>(vals.begin(), vals.end())};
}

bool verify_periodic(const GapTuple& t, const PeriodicSet& s) {
  const long long M = s.period;
  std::vector<char> member(static_cast<std::size_t>(M), 0);
  for (int r : s.residues) member[static_cast<std::size_t>(r)] = 1;
  const auto& pts = t.points();
  for (long long c = 0; c < M; ++c) {
    int forward = 0;
    int backward = 0;
    for (int a : pts) {
      forward += member[static_cast<std::size_t>((c + a) % M)];
      backward += member[static_cast<std::size_t>(((c - a) % M + M) % M)];
    }
    if (forward != 1 || backward != 1) return false;
  }
  return true;
}

PeriodicSet normalize_residues(const PeriodicSet& s) {
  if (s.residues.empty()) return s;
  const long long M = s.period;
  std::vector<int> best;
  for (int pivot : s.residues) {
    std::vector<int> rot;
    rot.reserve(s.residues.size());
    for (int r : s.residues)
      rot.push_back(static_cast<int>(((r - pivot) % M + M) % M));
    std::sort(rot.begin(), rot.end());
    if (best.empty() || rot < best) best = std::move(rot);
  }
  return PeriodicSet{M, std::move(best)};
}

const char* to_string(Status s) {
  return s == Status::Steinhaus ? "steinhaus" : "jackson";
}

}  // namespace steinhaus
