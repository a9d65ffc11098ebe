#pragma once

// Distance-graph colorings of the integers G(Z, D) and the bridge between
// Steinhaus sets and |F|-colorings: a verified periodic witness induces a
// proper coloring by the classes A[j] + S, and conversely every class of a
// proper (n+1)-coloring is itself a Steinhaus set.

#include <cstdint>
#include <optional>
#include <vector>

#include "steinhaus/core.hpp"

namespace steinhaus {

struct DistanceSet {
  std::vector<int> distances;  // sorted, distinct, all positive

  static DistanceSet create(std::vector<int> distances);
  int max() const { return distances.back(); }
};

struct PeriodicColoring {
  long long period = 1;
  std::vector<int> colors;  // length == period
};

struct ChromaticLimits {
  // k^max(D) may not exceed this.
  std::uint64_t state_cap = 1ull << 40;
};

bool is_proper(const PeriodicColoring& c, const DistanceSet& d);

// Searches the window automaton over color vectors of length max(D) for a
// cycle (new color must differ from the window at every offset in D).
// Periodic colorings suffice for G(Z, D), so an exhausted automaton
// certifies non-k-colorability. Colors are canonicalized to first
// occurrence order.
std::optional<PeriodicColoring> k_colorable(const DistanceSet& d, int k,
                                            const ChromaticLimits& limits = {});

// Smallest k <= k_max with k_colorable present.
std::optional<int> chromatic_number(const DistanceSet& d, int k_max,
                                    const ChromaticLimits& limits = {});

// Coloring of period M where x gets color j iff x lies in A[j] + S.
// Requires a verified witness; the classes partition Z.
PeriodicColoring steinhaus_to_coloring(const GapTuple& t, const PeriodicSet& s);

// The class of color 0 of a proper coloring with exactly n+1 colors.
PeriodicSet coloring_to_steinhaus(const GapTuple& t, const PeriodicColoring& c);

}  // namespace steinhaus
