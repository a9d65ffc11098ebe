#include "steinhaus/chromatic.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace steinhaus {
namespace {

// Appended-color validity: the new color must differ from the window color
// at offset m - delta for every delta in D (positions count from the
// oldest window entry, codes are base-k with the oldest in the low digit).
struct ColorAutomaton {
  int k;
  int m;
  std::vector<int> deltas;
  std::vector<std::uint64_t> pow;  // pow[j] = k^j

  ColorAutomaton(const DistanceSet& d, int colors)
      : k(colors), m(d.max()), deltas(d.distances) {
    pow.resize(static_cast<std::size_t>(m) + 1, 1);
    for (int j = 1; j <= m; ++j)
      pow[static_cast<std::size_t>(j)] = pow[static_cast<std::size_t>(j - 1)] *
                                         static_cast<std::uint64_t>(k);
  }

  int color_at(std::uint64_t code, int pos) const {
    return static_cast<int>(code / pow[static_cast<std::size_t>(pos)] %
                            static_cast<std::uint64_t>(k));
  }

  bool can_append(std::uint64_t code, int c) const {
    for (int delta : deltas)
      if (color_at(code, m - delta) == c) return false;
    return true;
  }

  std::uint64_t append(std::uint64_t code, int c) const {
    return code / static_cast<std::uint64_t>(k) +
           static_cast<std::uint64_t>(c) * pow[static_cast<std::size_t>(m - 1)];
  }
};

std::vector<int> canonical_colors(std::vector<int> colors) {
  std::unordered_map<int, int> remap;
  for (int& c : colors) {
    auto [it, fresh] = remap.emplace(c, static_cast<int>(remap.size()));
    c = it->second;
    (void)fresh;
  }
  return colors;
}

// Depth-first cycle search over the implicit automaton starting from one
// internally proper window. status: absent = unseen, -1 = dead (no cycle
// below), >= 0 = on the current stack at that depth.
std::optional<std::vector<int>> dfs_cycle(const ColorAutomaton& aut, std::uint64_t start,
                                          std::unordered_map<std::uint64_t, long long>& status) {
  struct Frame {
    std::uint64_t code;
    int next_color;
  };
  std::vector<Frame> stack;
  stack.push_back({start, 0});
  status[start] = 0;
  while (!stack.empty()) {
    Frame& f = stack.back();
    bool descended = false;
    while (f.next_color < aut.k) {
      int c = f.next_color++;
      if (!aut.can_append(f.code, c)) continue;
      std::uint64_t next = aut.append(f.code, c);
      auto it = status.find(next);
      if (it == status.end()) {
        status[next] = static_cast<long long>(stack.size());
        stack.push_back({next, 0});
        descended = true;
        break;
      }
      if (it->second >= 0) {
        // Closed a cycle: colors appended along stack[depth+1..] plus c.
        std::vector<int> cycle_colors;
        for (std::size_t j = static_cast<std::size_t>(it->second) + 1; j < stack.size(); ++j)
          cycle_colors.push_back(aut.color_at(stack[j].code, aut.m - 1));
        cycle_colors.push_back(c);
        return cycle_colors;
      }
    }
    if (descended) continue;
    status[stack.back().code] = -1;
    stack.pop_back();
  }
  return std::nullopt;
}

}  // namespace

DistanceSet DistanceSet::create(std::vector<int> distances) {
  if (distances.empty()) throw std::invalid_argument("distance set must be nonempty");
  for (int d : distances)
    if (d < 1) throw std::invalid_argument("distances must be positive");
  std::sort(distances.begin(), distances.end());
  distances.erase(std::unique(distances.begin(), distances.end()), distances.end());
  return DistanceSet{std::move(distances)};
}

bool is_proper(const PeriodicColoring& c, const DistanceSet& d) {
  const long long p = c.period;
  if (p < 1 || static_cast<long long>(c.colors.size()) != p) return false;
  for (long long i = 0; i < p; ++i)
    for (int delta : d.distances)
      if (c.colors[static_cast<std::size_t>(i)] ==
          c.colors[static_cast<std::size_t>((i + delta) % p)])
        return false;
  return true;
}

std::optional<PeriodicColoring> k_colorable(const DistanceSet& d, int k,
                                            const ChromaticLimits& limits) {
  if (k < 1) throw std::invalid_argument("need at least one color");
  const int m = d.max();
  if (m > kDiameterCap) throw CapError("max distance exceeds cap");
  unsigned __int128 space = 1;
  for (int j = 0; j < m; ++j) {
    space *= static_cast<unsigned>(k);
    if (space > limits.state_cap)
      throw CapError("coloring state space k^max(D) exceeds cap");
  }

  ColorAutomaton aut(d, k);
  std::unordered_map<std::uint64_t, long long> status;

  // Enumerate internally proper start windows in lexicographic order.
  // Validity is invariant under color permutation, so every cycle passes
  // through a window in first-occurrence canonical form: only restricted
  // growth strings need to be tried as starts. Everything a failed search
  // visits stays dead and is never re-entered.
  std::vector<int> window(static_cast<std::size_t>(m), 0);
  std::vector<int> max_used(static_cast<std::size_t>(m), 0);
  std::vector<std::uint64_t> prefix_code(static_cast<std::size_t>(m) + 1, 0);
  int pos = 0;
  window[0] = -1;
  while (pos >= 0) {
    int c = ++window[static_cast<std::size_t>(pos)];
    int prev_max = pos ? max_used[static_cast<std::size_t>(pos - 1)] : -1;
    if (c >= k || c > prev_max + 1) {
      --pos;
      continue;
    }
    bool ok = true;
    for (int delta : d.distances) {
      if (delta > pos) break;
      if (window[static_cast<std::size_t>(pos - delta)] == c) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    max_used[static_cast<std::size_t>(pos)] = std::max(prev_max, c);
    prefix_code[static_cast<std::size_t>(pos) + 1] =
        prefix_code[static_cast<std::size_t>(pos)] +
        static_cast<std::uint64_t>(c) * aut.pow[static_cast<std::size_t>(pos)];
    if (pos + 1 < m) {
      ++pos;
      window[static_cast<std::size_t>(pos)] = -1;
      continue;
    }
    std::uint64_t code = prefix_code[static_cast<std::size_t>(m)];
    if (status.count(code)) continue;
    if (auto cycle = dfs_cycle(aut, code, status)) {
      PeriodicColoring coloring{static_cast<long long>(cycle->size()),
                                canonical_colors(std::move(*cycle))};
      if (!is_proper(coloring, d))
        throw std::logic_error("automaton produced an improper coloring");
      return coloring;
    }
  }
  return std::nullopt;
}

std::optional<int> chromatic_number(const DistanceSet& d, int k_max,
                                    const ChromaticLimits& limits) {
  for (int k = 1; k <= k_max; ++k)
    if (k_colorable(d, k, limits)) return k;
  return std::nullopt;
}

PeriodicColoring steinhaus_to_coloring(const GapTuple& t, const PeriodicSet& s) {
  if (!verify_periodic(t, s))
    throw std::invalid_argument("steinhaus_to_coloring requires a verified witness");
  const long long M = s.period;
  std::vector<char> member(static_cast<std::size_t>(M), 0);
  for (int r : s.residues) member[static_cast<std::size_t>(r)] = 1;
  const auto& pts = t.points();
  std::vector<int> colors(static_cast<std::size_t>(M), -1);
  for (long long x = 0; x < M; ++x) {
    for (std::size_t j = 0; j < pts.size(); ++j) {
      long long r = ((x - pts[j]) % M + M) % M;
      if (!member[static_cast<std::size_t>(r)]) continue;
      if (colors[static_cast<std::size_t>(x)] != -1)
        throw std::logic_error("classes A[j] + S fail to partition");
      colors[static_cast<std::size_t>(x)] = static_cast<int>(j);
    }
    if (colors[static_cast<std::size_t>(x)] == -1)
      throw std::logic_error("classes A[j] + S fail to cover");
  }
  PeriodicColoring out{M, std::move(colors)};
  if (!is_proper(out, DistanceSet::create(difference_set(t).positive())))
    throw std::logic_error("induced coloring is improper");
  return out;
}

PeriodicSet coloring_to_steinhaus(const GapTuple& t, const PeriodicColoring& c) {
  const int want = t.point_count();
  std::set<int> used(c.colors.begin(), c.colors.end());
  if (static_cast<int>(used.size()) != want || *used.begin() < 0 ||
      *used.rbegin() >= want)
    throw std::invalid_argument("coloring must use exactly n+1 colors 0..n");
  if (!is_proper(c, DistanceSet::create(difference_set(t).positive())))
    throw std::invalid_argument("coloring is not proper for the forbidden distances");
  std::vector<int> residues;
  for (long long i = 0; i < c.period; ++i)
    if (c.colors[static_cast<std::size_t>(i)] == 0) residues.push_back(static_cast<int>(i));
  PeriodicSet s = PeriodicSet::create(c.period, std::move(residues));
  if (!verify_periodic(t, s))
    throw std::logic_error("class of color 0 is not a Steinhaus set");
  return s;
}

}  // namespace steinhaus
