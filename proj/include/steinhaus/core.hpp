#pragma once

// Core domain types for the integer Steinhaus/Jackson decision toolkit:
// gap tuples, their point sets and difference sets, periodic candidate
// sets given by (period, residues), and direct verification of the
// exactly-one condition against every translated and reflected copy.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace steinhaus {

// Diameter cap keeping window states inside one 64-bit word.
inline constexpr int kDiameterCap = 62;

// Absolute representational limit (d+1 bits must fit a uint64_t).
inline constexpr int kDiameterHardLimit = 63;

// Thrown when a configured resource cap would be exceeded. Callers must
// treat this as "no answer", never as a verdict.
struct CapError : std::runtime_error {
  explicit CapError(const std::string& what) : std::runtime_error(what) {}
};

// A tuple of positive integer gaps (a_1,...,a_n). The derived point set
// is A = {0, a_1, a_1+a_2, ..., d} with diameter d = a_1+...+a_n.
class GapTuple {
 public:
  static GapTuple create(std::vector<int> gaps, int diameter_cap = kDiameterCap);

  const std::vector<int>& gaps() const { return gaps_; }
  const std::vector<int>& points() const { return points_; }
  int arity() const { return static_cast<int>(gaps_.size()); }
  int point_count() const { return arity() + 1; }
  int diameter() const { return points_.back(); }

  bool operator==(const GapTuple&) const = default;

 private:
  explicit GapTuple(std::vector<int> gaps, std::vector<int> points)
      : gaps_(std::move(gaps)), points_(std::move(points)) {}

  std::vector<int> gaps_;
  std::vector<int> points_;
};

// Signed pairwise differences of the point set; symmetric about 0.
struct DifferenceSet {
  std::vector<int> values;  // sorted, includes 0 and negatives

  bool contains(int x) const;
  // The positive part (the forbidden distances D(F)).
  std::vector<int> positive() const;
};

// The set {x : x mod period in residues}.
struct PeriodicSet {
  long long period = 1;
  std::vector<int> residues;  // strictly increasing, in [0, period)

  static PeriodicSet create(long long period, std::vector<int> residues);

  bool operator==(const PeriodicSet&) const = default;
};

struct EngineStats {
  std::uint64_t valid_states = 0;  // valid windows of the shift automaton
  std::uint64_t search_nodes = 0;  // branch nodes spent deciding
};

enum class Status { Jackson, Steinhaus };

struct Classification {
  Status status = Status::Jackson;
  std::optional<PeriodicSet> witness;
  std::optional<long long> minimal_period;
  std::vector<std::string> provenance;
  EngineStats stats;
};

// Divide by gcd, then take the lexicographically smaller of the result
// and its reversal. Jackson status is invariant under this map.
GapTuple canonicalize(const GapTuple& t);

DifferenceSet difference_set(const GapTuple& t);

// True iff every translate c+A and every reflected copy c-A meets the
// periodic set in exactly one point; one full period of offsets covers
// all of Z.
bool verify_periodic(const GapTuple& t, const PeriodicSet& s);

// Rotate residues so 0 is a member and the residue list is
// lexicographically minimal among all rotations.
PeriodicSet normalize_residues(const PeriodicSet& s);

const char* to_string(Status s);

}  // namespace steinhaus
