#pragma once

// The complete decision procedure over the window shift automaton.
//
// A window is the membership pattern of a candidate set on d+1 consecutive
// integers; it is valid when both the translated point set and its
// reflection inside the window are hit exactly once. Bi-infinite walks of
// the shift automaton are exactly the Steinhaus sets, and closed walks of
// length p are exactly the periodic ones of period p.
//
// Because positions 0 and d each belong to both constraint sets, the bit
// entering (or leaving) a shifted window is forced: every valid window has
// at most one successor and at most one predecessor, so the automaton is a
// disjoint union of simple paths and simple cycles.

#include <cstdint>
#include <optional>
#include <vector>

#include "steinhaus/core.hpp"

namespace steinhaus {

struct EngineLimits {
  std::uint64_t max_nodes = 1ull << 40;  // branch nodes across one decision
  std::uint64_t state_cap = 1ull << 22;  // materialized window states
};

// Materialized window automaton. States are (d+1)-bit words, bit i set iff
// integer t+i belongs to the candidate set; adjacency is computed on the
// fly from the shift rule.
class WindowGraph {
 public:
  WindowGraph(GapTuple tuple, std::vector<std::uint64_t> states);

  const GapTuple& tuple() const { return tuple_; }
  const std::vector<std::uint64_t>& states() const { return states_; }

  bool is_valid(std::uint64_t w) const;
  std::optional<std::uint64_t> successor(std::uint64_t w) const;
  std::optional<std::uint64_t> predecessor(std::uint64_t w) const;

  bool has_cycle() const;
  // Shortest cycle length, absent when acyclic.
  std::optional<long long> girth() const;
  // Longest walk (edge count); throws std::logic_error on a cyclic graph.
  long long longest_walk() const;

 private:
  GapTuple tuple_;
  std::vector<std::uint64_t> states_;  // sorted ascending
  std::uint64_t translate_mask_ = 0;   // positions of A
  std::uint64_t reflect_mask_ = 0;     // positions of d - A
  std::uint64_t full_mask_ = 0;
  int d_ = 0;
};

// Exact count of valid windows, without materializing them.
std::uint64_t count_window_states(const GapTuple& t);

// Enumerates every valid window: one position chosen from A, one from d-A
// (the same position when they coincide), free bits arbitrary. States are
// ordered by numeric value. Throws CapError past limits.state_cap.
WindowGraph build_window_graph(const GapTuple& t, const EngineLimits& limits = {});

// Full decision. Steinhaus iff the automaton has a cycle; on success the
// witness comes from a shortest closed walk, rotation-normalized.
// Provenance lists the closed-form criteria that also fired.
Classification decide(const GapTuple& t, const EngineLimits& limits = {});

// Shortest closed-walk length (= minimal period over all periodic
// Steinhaus sets), absent when Jackson.
std::optional<long long> minimal_period(const GapTuple& t, const EngineLimits& limits = {});

// A verified witness of the requested period (absent if none), or of the
// minimal period when no period is given.
std::optional<PeriodicSet> construct(const GapTuple& t,
                                     std::optional<long long> period = std::nullopt,
                                     const EngineLimits& limits = {});

// Independent naive oracle: for p = n+1, 2(n+1), ... up to max_period,
// try every residue set with |R| = p/(n+1) and 0 in R in lexicographic
// order against verify_periodic. Never touches the automaton.
std::optional<PeriodicSet> oracle_enumerate(const GapTuple& t, long long max_period);

// Longest walk length L of the acyclic automaton of a Jackson tuple: no
// integer interval of more than L + d + 1 points admits a subset meeting
// every contained copy exactly once. Throws when t is Steinhaus.
long long max_witness_interval(const GapTuple& t, const EngineLimits& limits = {});

// p <= d * 2^d, evaluated without overflow.
bool within_period_bound(long long p, int d);

}  // namespace steinhaus
