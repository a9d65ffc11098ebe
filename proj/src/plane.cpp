#include "steinhaus/plane.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_set>

namespace steinhaus {
namespace {

std::vector<Rat> signature_of(const std::vector<RatPoint>& pts, const Rat& y_unit_sq) {
  std::vector<Rat> sig;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      Rat d = squared_distance(pts[i], pts[j], y_unit_sq);
      if (!d.is_positive()) throw std::invalid_argument("pattern has repeated points");
      sig.push_back(d);
    }
  std::sort(sig.begin(), sig.end());
  return sig;
}

PatternSpec make_pattern(std::vector<RatPoint> pts, Rat y_unit_sq) {
  PatternSpec p{std::move(pts), y_unit_sq, {}};
  p.signature = signature_of(p.points, p.y_unit_sq);
  return p;
}

// Does some vertex bijection carry the pattern's squared-distance matrix
// onto the tuple's? Multiset equality alone can admit false congruences.
bool congruent(const std::vector<std::vector<Rat>>& tuple_d,
               const std::vector<std::vector<Rat>>& pat_d) {
  const std::size_t m = pat_d.size();
  std::vector<int> perm(m);
  for (std::size_t i = 0; i < m; ++i) perm[i] = static_cast<int>(i);
  do {
    bool ok = true;
    for (std::size_t u = 0; u < m && ok; ++u)
      for (std::size_t v = u + 1; v < m && ok; ++v)
        ok = tuple_d[u][v] == pat_d[static_cast<std::size_t>(perm[u])]
                                   [static_cast<std::size_t>(perm[v])];
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

Rat squared_distance(const RatPoint& a, const RatPoint& b, const Rat& y_unit_sq) {
  Rat dx = a.x - b.x;
  Rat dy = a.y - b.y;
  return dx * dx + y_unit_sq * (dy * dy);
}

PatternSpec make_pattern_square(const Rat& side) {
  if (!side.is_positive()) throw std::invalid_argument("square side must be positive");
  return make_pattern({{0, 0}, {side, 0}, {side, side}, {0, side}}, 1);
}

PatternSpec make_pattern_rectangle(const Rat& width, const Rat& height_sq) {
  if (!width.is_positive() || !height_sq.is_positive())
    throw std::invalid_argument("rectangle needs positive width and squared height");
  // Height is one vertical unit u with u^2 = height_sq.
  return make_pattern({{0, 0}, {width, 0}, {width, 1}, {0, 1}}, height_sq);
}

PatternSpec make_pattern_collinear(const GapTuple& t) {
  std::vector<RatPoint> pts;
  for (int a : t.points()) pts.push_back({a, 0});
  return make_pattern(std::move(pts), 1);
}

std::vector<RatPoint> gen_grid(int cols, int rows, const Rat& spacing_x,
                               const Rat& spacing_y) {
  if (cols < 1 || rows < 1) throw std::invalid_argument("grid needs cols, rows >= 1");
  if (!spacing_x.is_positive() || !spacing_y.is_positive())
    throw std::invalid_argument("grid spacing must be positive");
  std::vector<RatPoint> pts;
  pts.reserve(static_cast<std::size_t>(cols) * static_cast<std::size_t>(rows));
  for (int i = 0; i < cols; ++i)
    for (int j = 0; j < rows; ++j)
      pts.push_back({spacing_x * i, spacing_y * j});
  return pts;
}

std::vector<RatPoint> gen_tipped_lattice(int cols, int rows, int a, int b, int c,
                                         const RatPoint& origin) {
  if (cols < 1 || rows < 1) throw std::invalid_argument("lattice needs cols, rows >= 1");
  if (a < 1 || b < 1 || c < 1 ||
      static_cast<long long>(a) * a + static_cast<long long>(b) * b !=
          static_cast<long long>(c) * c)
    throw std::invalid_argument("tipped lattice needs a Pythagorean triple a^2+b^2=c^2");
  const Rat ux(a, c), uy(b, c);  // unit column direction
  std::vector<RatPoint> pts;
  pts.reserve(static_cast<std::size_t>(cols) * static_cast<std::size_t>(rows));
  for (int i = 0; i < cols; ++i)
    for (int j = 0; j < rows; ++j)
      pts.push_back({origin.x + ux * i - uy * j, origin.y + uy * i + ux * j});
  return pts;
}

std::vector<std::vector<int>> enumerate_copies(const std::vector<RatPoint>& points,
                                               const PatternSpec& pattern) {
  const std::size_t m = pattern.points.size();
  if (m != 3 && m != 4)
    throw std::invalid_argument("copy enumeration supports 3- and 4-point patterns");

  std::vector<std::vector<Rat>> pat_d(m, std::vector<Rat>(m, Rat(0)));
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = 0; v < m; ++v)
      pat_d[u][v] = squared_distance(pattern.points[u], pattern.points[v],
                                     pattern.y_unit_sq);
  std::map<Rat, int> sig_count;
  for (const Rat& d : pattern.signature) ++sig_count[d];

  const int n = static_cast<int>(points.size());
  std::vector<std::vector<int>> copies;
  std::vector<int> tuple;
  std::map<Rat, int> used;

  // Depth-first over index tuples i_0 < i_1 < ...; a partial tuple survives
  // only while its pairwise distances fit inside the signature multiset.
  auto extend = [&](auto&& self, int start) -> void {
    if (tuple.size() == m) {
      std::vector<std::vector<Rat>> td(m, std::vector<Rat>(m, Rat(0)));
      for (std::size_t u = 0; u < m; ++u)
        for (std::size_t v = 0; v < m; ++v)
          td[u][v] = squared_distance(points[static_cast<std::size_t>(tuple[u])],
                                      points[static_cast<std::size_t>(tuple[v])],
                                      pattern.y_unit_sq);
      if (congruent(td, pat_d)) copies.push_back(tuple);
      return;
    }
    for (int i = start; i < n; ++i) {
      std::vector<Rat> added;
      bool ok = true;
      for (int j : tuple) {
        Rat d = squared_distance(points[static_cast<std::size_t>(j)],
                                 points[static_cast<std::size_t>(i)], pattern.y_unit_sq);
        auto it = sig_count.find(d);
        if (it == sig_count.end() || used[d] >= it->second) {
          ok = false;
          break;
        }
        ++used[d];
        added.push_back(d);
      }
      if (ok) {
        tuple.push_back(i);
        self(self, i + 1);
        tuple.pop_back();
      }
      for (const Rat& d : added) --used[d];
    }
  };
  extend(extend, 0);
  return copies;
}

// ---------------------------------------------------------------------------
// Exactly-one transversal solver over the enumerated copies.
// ---------------------------------------------------------------------------

namespace {

class TransversalSolver {
 public:
  TransversalSolver(int point_count, const std::vector<std::vector<int>>& copies)
      : copies_(copies),
        value_(static_cast<std::size_t>(point_count), 0),
        occ_(static_cast<std::size_t>(point_count)),
        in_count_(copies.size(), 0),
        unknown_count_(copies.size(), 0) {
    for (std::size_t ci = 0; ci < copies_.size(); ++ci) {
      unknown_count_[ci] = static_cast<int>(copies_[ci].size());
      for (int p : copies_[ci]) occ_[static_cast<std::size_t>(p)].push_back(ci);
    }
  }

  bool solve(SolveStats& stats) {
    if (!propagate(stats)) return false;
    struct Decision {
      int point;
      std::size_t trail_size;
      bool tried_out;
    };
    std::vector<Decision> decisions;
    while (true) {
      int point = pick_branch_point();
      if (point < 0) return true;  // every copy resolved
      ++stats.nodes;
      decisions.push_back({point, trail_.size(), false});
      bool ok = set(point, 1) && propagate(stats);
      while (!ok) {
        while (!decisions.empty() && decisions.back().tried_out) {
          rewind(decisions.back().trail_size);
          decisions.pop_back();
        }
        if (decisions.empty()) return false;
        Decision& d = decisions.back();
        rewind(d.trail_size);
        d.tried_out = true;
        ok = set(d.point, -1) && propagate(stats);
      }
    }
  }

  std::vector<int> chosen() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < value_.size(); ++i)
      if (value_[i] == 1) out.push_back(static_cast<int>(i));
    return out;
  }

 private:
  // Fail-first: the undecided point in the most unresolved copies, ties by
  // lowest index. Returns -1 when every copy already has its point.
  int pick_branch_point() const {
    std::vector<int> score(value_.size(), 0);
    bool any = false;
    for (std::size_t ci = 0; ci < copies_.size(); ++ci) {
      if (in_count_[ci] != 0) continue;
      any = true;
      for (int p : copies_[ci])
        if (value_[static_cast<std::size_t>(p)] == 0) ++score[static_cast<std::size_t>(p)];
    }
    if (!any) return -1;
    int best = -1;
    for (std::size_t i = 0; i < score.size(); ++i)
      if (score[i] > 0 && (best < 0 || score[i] > score[static_cast<std::size_t>(best)]))
        best = static_cast<int>(i);
    return best;
  }

  bool set(int point, signed char val) {
    auto p = static_cast<std::size_t>(point);
    if (value_[p] != 0) return value_[p] == val;
    value_[p] = val;
    trail_.push_back(point);
    for (std::size_t ci : occ_[p]) {
      --unknown_count_[ci];
      if (val == 1) ++in_count_[ci];
      pending_.push_back(ci);
    }
    return true;
  }

  bool propagate(SolveStats& stats) {
    while (!pending_.empty()) {
      std::size_t ci = pending_.back();
      pending_.pop_back();
      if (in_count_[ci] > 1) return fail();
      if (in_count_[ci] == 1) {
        // One chosen point forces the rest of the copy out.
        for (int p : copies_[ci])
          if (value_[static_cast<std::size_t>(p)] == 0) {
            ++stats.propagations;
            if (!set(p, -1)) return fail();
          }
        continue;
      }
      if (unknown_count_[ci] == 0) return fail();  // all excluded
      if (unknown_count_[ci] == 1) {
        // All but one excluded forces the last one in.
        for (int p : copies_[ci])
          if (value_[static_cast<std::size_t>(p)] == 0) {
            ++stats.propagations;
            if (!set(p, 1)) return fail();
            break;
          }
      }
    }
    return true;
  }

  bool fail() {
    pending_.clear();
    return false;
  }

  void rewind(std::size_t trail_size) {
    pending_.clear();
    while (trail_.size() > trail_size) {
      int point = trail_.back();
      trail_.pop_back();
      auto p = static_cast<std::size_t>(point);
      for (std::size_t ci : occ_[p]) {
        ++unknown_count_[ci];
        if (value_[p] == 1) --in_count_[ci];
      }
      value_[p] = 0;
    }
  }

  const std::vector<std::vector<int>>& copies_;
  std::vector<signed char> value_;  // 0 unknown, 1 in, -1 out
  std::vector<std::vector<std::size_t>> occ_;
  std::vector<int> in_count_;
  std::vector<int> unknown_count_;
  std::vector<int> trail_;
  std::vector<std::size_t> pending_;
};

}  // namespace

PlaneInstance make_instance(std::vector<RatPoint> points, PatternSpec pattern) {
  auto copies = enumerate_copies(points, pattern);
  return PlaneInstance{std::move(points), std::move(pattern), std::move(copies)};
}

WitnessResult check_witness(const PlaneInstance& instance, std::size_t copy_cap) {
  if (instance.copies.size() > copy_cap)
    throw CapError("instance has " + std::to_string(instance.copies.size()) +
                   " copies, cap is " + std::to_string(copy_cap));
  WitnessResult result;
  result.copy_count = instance.copies.size();
  TransversalSolver solver(static_cast<int>(instance.points.size()), instance.copies);
  result.sat = solver.solve(result.stats);
  if (result.sat) {
    result.assignment = solver.chosen();
    if (!assignment_meets_copies(instance.copies, result.assignment))
      throw std::logic_error("solver returned an invalid transversal");
  }
  return result;
}

WitnessResult check_witness(const std::vector<RatPoint>& points, const PatternSpec& pattern,
                            std::size_t copy_cap) {
  return check_witness(make_instance(points, pattern), copy_cap);
}

bool assignment_meets_copies(const std::vector<std::vector<int>>& copies,
                             const std::vector<int>& chosen) {
  std::unordered_set<int> in(chosen.begin(), chosen.end());
  for (const auto& copy : copies) {
    int hits = 0;
    for (int p : copy) hits += in.count(p) ? 1 : 0;
    if (hits != 1) return false;
  }
  return true;
}

std::vector<RatPoint> parse_points(std::istream& in) {
  std::vector<RatPoint> pts;
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream row(line);
    std::string xs, ys, extra;
    if (!(row >> xs >> ys) || (row >> extra))
      throw std::invalid_argument("bad points line: '" + line + "'");
    pts.push_back({Rat::parse(xs), Rat::parse(ys)});
  }
  return pts;
}

std::vector<RatPoint> parse_points_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open points file: " + path);
  return parse_points(in);
}

std::vector<RatPoint> dedup_points(std::vector<RatPoint> points) {
  std::unordered_set<RatPoint, RatPointHash> seen;
  std::vector<RatPoint> out;
  out.reserve(points.size());
  for (auto& p : points)
    if (seen.insert(p).second) out.push_back(p);
  return out;
}

}  // namespace steinhaus
