#pragma once

// Finite-witness machinery for plane patterns: exact-rational point sets,
// enumeration of congruent copies of a 3- or 4-point pattern, and an
// exactly-one transversal checker. UNSAT on a finite point set certifies
// that the pattern admits no Steinhaus set.
//
// Points live in Q x Q*u where the vertical unit u satisfies u^2 =
// pattern.y_unit_sq (a rational): squared distance is dx^2 + u^2 * dy^2.
// With y_unit_sq = 1 this is the ordinary rational plane; rectangles of
// irrational height but rational squared height use the same lattice
// arithmetic exactly.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "steinhaus/core.hpp"
#include "steinhaus/rational.hpp"

namespace steinhaus {

struct PatternSpec {
  std::vector<RatPoint> points;
  Rat y_unit_sq = 1;
  std::vector<Rat> signature;  // sorted multiset of pairwise squared distances
};

Rat squared_distance(const RatPoint& a, const RatPoint& b, const Rat& y_unit_sq);

PatternSpec make_pattern_square(const Rat& side);
PatternSpec make_pattern_rectangle(const Rat& width, const Rat& height_sq);
PatternSpec make_pattern_collinear(const GapTuple& t);

std::vector<RatPoint> gen_grid(int cols, int rows, const Rat& spacing_x,
                               const Rat& spacing_y);

// Unit lattice rotated by the Pythagorean angle (a, b, c): points
// origin + i*(a/c, b/c) + j*(-b/c, a/c). Requires a^2 + b^2 = c^2.
std::vector<RatPoint> gen_tipped_lattice(int cols, int rows, int a, int b, int c,
                                         const RatPoint& origin);

// All sorted index tuples congruent to the pattern (some vertex bijection
// preserves every squared distance; reflections allowed). Pattern must
// have 3 or 4 points.
std::vector<std::vector<int>> enumerate_copies(const std::vector<RatPoint>& points,
                                               const PatternSpec& pattern);

// A finite candidate witness set with its enumerated copies.
struct PlaneInstance {
  std::vector<RatPoint> points;
  PatternSpec pattern;
  std::vector<std::vector<int>> copies;  // sorted index tuples, no repeats
};

PlaneInstance make_instance(std::vector<RatPoint> points, PatternSpec pattern);

struct SolveStats {
  std::uint64_t nodes = 0;
  std::uint64_t propagations = 0;
};

struct WitnessResult {
  bool sat = false;
  std::vector<int> assignment;  // chosen point indices, sorted
  std::size_t copy_count = 0;
  SolveStats stats;
};

inline constexpr std::size_t kCopyCap = 10000;

// Exhaustive backtracking with exactly-one propagation over the enumerated
// copies. SAT returns an assignment meeting every copy in exactly one
// point; UNSAT certifies that no subset does.
WitnessResult check_witness(const PlaneInstance& instance, std::size_t copy_cap = kCopyCap);
WitnessResult check_witness(const std::vector<RatPoint>& points, const PatternSpec& pattern,
                            std::size_t copy_cap = kCopyCap);

// Independent recount that `chosen` meets every copy exactly once.
bool assignment_meets_copies(const std::vector<std::vector<int>>& copies,
                             const std::vector<int>& chosen);

// One point per line: "x_num/x_den y_num/y_den", denominator 1 may be
// omitted; lines starting with '#' are ignored.
std::vector<RatPoint> parse_points(std::istream& in);
std::vector<RatPoint> parse_points_file(const std::string& path);

std::vector<RatPoint> dedup_points(std::vector<RatPoint> points);

}  // namespace steinhaus
