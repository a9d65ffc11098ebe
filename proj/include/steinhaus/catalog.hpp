#pragma once

// Persistent catalog of classified tuples. One record per canonical tuple;
// rows round-trip bit-exactly through the semicolon-separated format
//   gaps;status;min_period;residues;provenance;states;nodes
// with comma-separated list fields.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "steinhaus/core.hpp"
#include "steinhaus/engine.hpp"

namespace steinhaus {

struct CatalogRecord {
  std::vector<int> gaps;
  std::string status;  // steinhaus | jackson | cap
  std::optional<long long> min_period;
  std::vector<int> residues;
  std::vector<std::string> provenance;
  std::uint64_t states = 0;
  std::uint64_t nodes = 0;

  bool operator==(const CatalogRecord&) const = default;
};

const std::string& catalog_header();
std::string to_csv(const CatalogRecord& r);
CatalogRecord parse_csv(const std::string& line);

CatalogRecord classify_record(const GapTuple& t, const EngineLimits& limits = {});

// Classifies every canonical tuple of the given arity with gaps <= max_gap,
// in lexicographic order. Tuples run on a work queue across `threads`
// workers; output order and bytes are independent of the thread count.
std::vector<CatalogRecord> enumerate_catalog(int arity, int max_gap,
                                             const EngineLimits& limits = {},
                                             unsigned threads = 0);

}  // namespace steinhaus
