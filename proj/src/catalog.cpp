#include "steinhaus/catalog.hpp"

#include <atomic>
#include <sstream>
#include <thread>

namespace steinhaus {
namespace {

template <typename T>
std::string join(const std::vector<T>& xs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out << ',';
    out << xs[i];
  }
  return out.str();
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  if (s.empty()) return out;
  for (const auto& tok : split(s, ',')) out.push_back(std::stoi(tok));
  return out;
}

}  // namespace

const std::string& catalog_header() {
  static const std::string header = "gaps;status;min_period;residues;provenance;states;nodes";
  return header;
}

std::string to_csv(const CatalogRecord& r) {
  std::ostringstream out;
  out << join(r.gaps) << ';' << r.status << ';';
  if (r.min_period) out << *r.min_period;
  out << ';' << join(r.residues) << ';' << join(r.provenance) << ';' << r.states << ';'
      << r.nodes;
  return out.str();
}

CatalogRecord parse_csv(const std::string& line) {
  auto fields = split(line, ';');
  if (fields.size() != 7)
    throw std::invalid_argument("catalog row needs 7 fields: '" + line + "'");
  CatalogRecord r;
  r.gaps = parse_int_list(fields[0]);
  r.status = fields[1];
  if (!fields[2].empty()) r.min_period = std::stoll(fields[2]);
  r.residues = parse_int_list(fields[3]);
  if (!fields[4].empty()) r.provenance = split(fields[4], ',');
  r.states = std::stoull(fields[5]);
  r.nodes = std::stoull(fields[6]);
  return r;
}

CatalogRecord classify_record(const GapTuple& t, const EngineLimits& limits) {
  CatalogRecord r;
  r.gaps = t.gaps();
  try {
    Classification c = decide(t, limits);
    r.status = to_string(c.status);
    r.min_period = c.minimal_period;
    if (c.witness) r.residues = c.witness->residues;
    r.provenance = c.provenance;
    r.states = c.stats.valid_states;
    r.nodes = c.stats.search_nodes;
  } catch (const CapError&) {
    r.status = "cap";
  }
  return r;
}

std::vector<CatalogRecord> enumerate_catalog(int arity, int max_gap,
                                             const EngineLimits& limits, unsigned threads) {
  if (arity < 1 || max_gap < 1) throw std::invalid_argument("need arity, max_gap >= 1");
  if (static_cast<long long>(arity) * max_gap > kDiameterCap)
    throw CapError("arity * max_gap exceeds the diameter cap");

  std::vector<GapTuple> tuples;
  std::vector<int> gaps(static_cast<std::size_t>(arity), 1);
  while (true) {
    GapTuple t = GapTuple::create(gaps);
    if (canonicalize(t) == t) tuples.push_back(t);
    int i = arity - 1;
    while (i >= 0 && gaps[static_cast<std::size_t>(i)] == max_gap) --i;
    if (i < 0) break;
    ++gaps[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < arity; ++j) gaps[static_cast<std::size_t>(j)] = 1;
  }

  std::vector<CatalogRecord> records(tuples.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(tuples.size()) + 1);
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= tuples.size()) return;
      records[i] = classify_record(tuples[i], limits);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 0; w + 1 < threads; ++w) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return records;
}

}  // namespace steinhaus
