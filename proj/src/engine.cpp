#include "steinhaus/engine.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_map>

#include "steinhaus/criteria.hpp"

namespace steinhaus {
namespace {

// --------------------------------------------------------------------------
// Exactly-one backtracking solver.
//
// Variables are positions, clauses are position lists (repeats allowed; a
// repeated position can never be the chosen one). Branching picks the
// lowest unknown variable and tries IN before OUT, so the first model has
// the lexicographically smallest member set.
// --------------------------------------------------------------------------
class ExactlyOneSolver {
 public:
  ExactlyOneSolver(int var_count, std::vector<std::vector<int>> clauses)
      : clauses_(std::move(clauses)),
        value_(static_cast<std::size_t>(var_count), kUnknown),
        occ_(static_cast<std::size_t>(var_count)) {
    for (std::size_t ci = 0; ci < clauses_.size(); ++ci) {
      for (int v : clauses_[ci]) occ_[static_cast<std::size_t>(v)].push_back(ci);
      unknown_count_.push_back(static_cast<int>(clauses_[ci].size()));
      in_count_.push_back(0);
    }
  }

  void assume_in(int var) { assumptions_.push_back(var); }

  // Model (sorted IN vars) or nullopt after exhaustive search.
  std::optional<std::vector<int>> solve(std::uint64_t node_budget, std::uint64_t& nodes) {
    for (int var : assumptions_) {
      if (!assign(var, kIn) || !propagate()) return std::nullopt;
    }
    struct Decision {
      int var;
      std::size_t trail_size;
      bool tried_out;
    };
    std::vector<Decision> decisions;
    while (true) {
      int var = first_unknown();
      if (var < 0) {
        std::vector<int> members;
        for (std::size_t i = 0; i < value_.size(); ++i)
          if (value_[i] == kIn) members.push_back(static_cast<int>(i));
        return members;
      }
      if (++nodes > node_budget) throw CapError("search node budget exceeded");
      decisions.push_back({var, trail_.size(), false});
      bool ok = assign(var, kIn) && propagate();
      while (!ok) {
        // Unwind to the most recent decision with an untried branch.
        while (!decisions.empty() && decisions.back().tried_out) {
          rewind(decisions.back().trail_size);
          decisions.pop_back();
        }
        if (decisions.empty()) return std::nullopt;
        Decision& d = decisions.back();
        rewind(d.trail_size);
        d.tried_out = true;
        ok = assign(d.var, kOut) && propagate();
      }
    }
  }

 private:
  enum Value : signed char { kOut = -1, kUnknown = 0, kIn = 1 };

  int first_unknown() const {
    for (std::size_t i = 0; i < value_.size(); ++i)
      if (value_[i] == kUnknown) return static_cast<int>(i);
    return -1;
  }

  bool assign(int var, Value val) {
    auto v = static_cast<std::size_t>(var);
    if (value_[v] != kUnknown) return value_[v] == val;
    value_[v] = val;
    trail_.push_back(var);
    for (std::size_t ci : occ_[v]) {
      --unknown_count_[ci];
      if (val == kIn) ++in_count_[ci];
      pending_.push_back(ci);
    }
    return true;
  }

  bool propagate() {
    while (!pending_.empty()) {
      std::size_t ci = pending_.back();
      pending_.pop_back();
      if (in_count_[ci] > 1) return fail();
      if (in_count_[ci] == 1) {
        for (int v : clauses_[ci])
          if (value_[static_cast<std::size_t>(v)] == kUnknown && !assign(v, kOut))
            return fail();
        continue;
      }
      // No member yet.
      if (unknown_count_[ci] == 0) return fail();
      int unique_var = -1;
      int multiplicity = 0;
      for (int v : clauses_[ci]) {
        if (value_[static_cast<std::size_t>(v)] != kUnknown) continue;
        if (unique_var == -1) unique_var = v;
        if (v == unique_var)
          ++multiplicity;
        else {
          unique_var = -2;
          break;
        }
      }
      if (unique_var >= 0) {
        // Last candidate standing; a repeated position cannot be chosen.
        if (multiplicity > 1) return fail();
        if (!assign(unique_var, kIn)) return fail();
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
      int var = trail_.back();
      trail_.pop_back();
      auto v = static_cast<std::size_t>(var);
      for (std::size_t ci : occ_[v]) {
        ++unknown_count_[ci];
        if (value_[v] == kIn) --in_count_[ci];
      }
      value_[v] = kUnknown;
    }
  }

  std::vector<std::vector<int>> clauses_;
  std::vector<Value> value_;
  std::vector<std::vector<std::size_t>> occ_;
  std::vector<int> unknown_count_;
  std::vector<int> in_count_;
  std::vector<int> trail_;
  std::vector<std::size_t> pending_;
  std::vector<int> assumptions_;
};

// Window constraints of one period p, wrapped cyclically: for every offset
// c both the translate clause {(c+a) mod p} and the reflection clause
// {(c-a) mod p} must be met exactly once.
std::vector<std::vector<int>> cyclic_clauses(const GapTuple& t, long long p) {
  std::vector<std::vector<int>> clauses;
  clauses.reserve(2 * static_cast<std::size_t>(p));
  for (long long c = 0; c < p; ++c) {
    std::vector<int> fwd, bwd;
    for (int a : t.points()) {
      fwd.push_back(static_cast<int>((c + a) % p));
      bwd.push_back(static_cast<int>(((c - a) % p + p) % p));
    }
    clauses.push_back(std::move(fwd));
    clauses.push_back(std::move(bwd));
  }
  return clauses;
}

// Direct search for a period-p set: membership of residues 0..p-1 with 0
// forced in (rotation freedom). Returns the lexicographically smallest
// residue set, or nullopt after exhausting the space.
std::optional<std::vector<int>> cyclic_witness(const GapTuple& t, long long p,
                                               std::uint64_t node_budget,
                                               std::uint64_t& nodes) {
  ExactlyOneSolver solver(static_cast<int>(p), cyclic_clauses(t, p));
  solver.assume_in(0);
  return solver.solve(node_budget, nodes);
}

// Is there a valid run of `length` consecutive integers, i.e. a membership
// pattern whose every complete window is valid? UNSAT certifies that no
// bi-infinite sequence -- hence no Steinhaus set -- exists.
bool run_exists(const GapTuple& t, long long length, std::uint64_t node_budget,
                std::uint64_t& nodes) {
  const int d = t.diameter();
  if (length <= d) return true;
  std::vector<std::vector<int>> clauses;
  clauses.reserve(2 * static_cast<std::size_t>(length - d));
  for (long long w = 0; w + d < length; ++w) {
    std::vector<int> fwd, bwd;
    for (int a : t.points()) {
      fwd.push_back(static_cast<int>(w + a));
      bwd.push_back(static_cast<int>(w + d - a));
    }
    clauses.push_back(std::move(fwd));
    clauses.push_back(std::move(bwd));
  }
  ExactlyOneSolver solver(static_cast<int>(length), std::move(clauses));
  return solver.solve(node_budget, nodes).has_value();
}

PeriodicSet make_witness(const GapTuple& t, long long p, std::vector<int> residues) {
  std::sort(residues.begin(), residues.end());
  PeriodicSet s = normalize_residues(PeriodicSet::create(p, std::move(residues)));
  if (!verify_periodic(t, s)) throw std::logic_error("engine produced an invalid witness");
  return s;
}

std::vector<std::string> provenance_of(const GapTuple& t) {
  std::vector<std::string> ids;
  for (const auto& r : fired_criteria(t)) ids.push_back(r.criterion);
  return ids;
}

}  // namespace

// --------------------------------------------------------------------------
// Materialized window graph
// --------------------------------------------------------------------------

WindowGraph::WindowGraph(GapTuple tuple, std::vector<std::uint64_t> states)
    : tuple_(std::move(tuple)), states_(std::move(states)), d_(tuple_.diameter()) {
  for (int a : tuple_.points()) {
    translate_mask_ |= 1ull << a;
    reflect_mask_ |= 1ull << (d_ - a);
  }
  full_mask_ = (d_ + 1 == 64) ? ~0ull : (1ull << (d_ + 1)) - 1;
}

bool WindowGraph::is_valid(std::uint64_t w) const {
  return std::popcount(w & translate_mask_) == 1 &&
         std::popcount(w & reflect_mask_) == 1;
}

std::optional<std::uint64_t> WindowGraph::successor(std::uint64_t w) const {
  const std::uint64_t shifted = w >> 1;
  const int need_a = 1 - std::popcount(shifted & translate_mask_);
  const int need_r = 1 - std::popcount(shifted & reflect_mask_);
  if (need_a != need_r || need_a < 0 || need_a > 1) return std::nullopt;
  return shifted | (static_cast<std::uint64_t>(need_a) << d_);
}

std::optional<std::uint64_t> WindowGraph::predecessor(std::uint64_t w) const {
  const std::uint64_t shifted = (w << 1) & full_mask_;
  const int need_a = 1 - std::popcount(shifted & translate_mask_);
  const int need_r = 1 - std::popcount(shifted & reflect_mask_);
  if (need_a != need_r || need_a < 0 || need_a > 1) return std::nullopt;
  return shifted | static_cast<std::uint64_t>(need_a);
}

bool WindowGraph::has_cycle() const { return girth().has_value(); }

std::optional<long long> WindowGraph::girth() const {
  // Both degrees are at most one, so components are paths or simple
  // cycles; follow each orbit once with run stamps.
  std::unordered_map<std::uint64_t, std::pair<std::size_t, long long>> seen;  // state -> (run, step)
  std::optional<long long> best;
  std::size_t run = 0;
  for (std::uint64_t start : states_) {
    if (seen.count(start)) continue;
    ++run;
    std::uint64_t cur = start;
    long long step = 0;
    while (true) {
      auto it = seen.find(cur);
      if (it != seen.end()) {
        if (it->second.first == run) {
          long long len = step - it->second.second;
          if (!best || len < *best) best = len;
        }
        break;
      }
      seen.emplace(cur, std::make_pair(run, step));
      auto next = successor(cur);
      if (!next) break;
      cur = *next;
      ++step;
    }
  }
  return best;
}

long long WindowGraph::longest_walk() const {
  std::unordered_map<std::uint64_t, long long> len;  // edges walkable from state
  len.reserve(states_.size() * 2);
  long long best = 0;
  for (std::uint64_t start : states_) {
    if (auto it = len.find(start); it != len.end()) {
      best = std::max(best, it->second);
      continue;
    }
    std::vector<std::uint64_t> chain;
    std::uint64_t cur = start;
    long long tail = -1;  // length below the chain; -1 when the chain dead-ends
    while (true) {
      if (auto it = len.find(cur); it != len.end()) {
        tail = it->second;
        break;
      }
      chain.push_back(cur);
      if (chain.size() > states_.size())
        throw std::logic_error("longest_walk on a cyclic window graph");
      auto next = successor(cur);
      if (!next) break;
      cur = *next;
    }
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) len[*it] = ++tail;
    best = std::max(best, len[start]);
  }
  return best;
}

std::uint64_t count_window_states(const GapTuple& t) {
  const int d = t.diameter();
  std::uint64_t a_mask = 0, r_mask = 0;
  for (int a : t.points()) {
    a_mask |= 1ull << a;
    r_mask |= 1ull << (d - a);
  }
  const int shared = std::popcount(a_mask & r_mask);
  const int a_only = std::popcount(a_mask & ~r_mask);
  const int r_only = std::popcount(r_mask & ~a_mask);
  const int free_bits = d + 1 - std::popcount(a_mask | r_mask);
  const std::uint64_t pairs =
      static_cast<std::uint64_t>(shared) +
      static_cast<std::uint64_t>(a_only) * static_cast<std::uint64_t>(r_only);
  if (free_bits >= 64) throw CapError("window state count overflows");
  return pairs << free_bits;
}

WindowGraph build_window_graph(const GapTuple& t, const EngineLimits& limits) {
  const std::uint64_t total = count_window_states(t);
  if (total > limits.state_cap)
    throw CapError("window graph has " + std::to_string(total) +
                   " states, cap is " + std::to_string(limits.state_cap));
  const int d = t.diameter();
  std::uint64_t a_mask = 0, r_mask = 0;
  for (int a : t.points()) {
    a_mask |= 1ull << a;
    r_mask |= 1ull << (d - a);
  }
  std::vector<int> free_pos;
  for (int i = 0; i <= d; ++i)
    if (!((a_mask | r_mask) >> i & 1)) free_pos.push_back(i);

  std::vector<std::uint64_t> states;
  states.reserve(total);
  auto emit_fills = [&](std::uint64_t base) {
    for (std::uint64_t m = 0; m < (1ull << free_pos.size()); ++m) {
      std::uint64_t w = base;
      for (std::size_t i = 0; i < free_pos.size(); ++i)
        if (m >> i & 1) w |= 1ull << free_pos[i];
      states.push_back(w);
    }
  };
  for (int pa = 0; pa <= d; ++pa) {
    if (!(a_mask >> pa & 1)) continue;
    if (r_mask >> pa & 1) {
      emit_fills(1ull << pa);  // shared hit
    } else {
      for (int pr = 0; pr <= d; ++pr)
        if ((r_mask >> pr & 1) && !(a_mask >> pr & 1))
          emit_fills((1ull << pa) | (1ull << pr));
    }
  }
  std::sort(states.begin(), states.end());
  WindowGraph g(t, std::move(states));
  return g;
}

// --------------------------------------------------------------------------
// Decision procedure
// --------------------------------------------------------------------------

Classification decide(const GapTuple& t, const EngineLimits& limits) {
  Classification result;
  result.stats.valid_states = count_window_states(t);
  result.provenance = provenance_of(t);

  const int d = t.diameter();
  const long long N = t.point_count();
  std::uint64_t nodes = 0;

  auto finish_jackson = [&]() {
    result.status = Status::Jackson;
    result.stats.search_nodes = nodes;
    return result;
  };
  auto finish_steinhaus = [&](long long p, std::vector<int> residues) {
    result.status = Status::Steinhaus;
    result.minimal_period = p;
    result.witness = make_witness(t, p, std::move(residues));
    result.stats.search_nodes = nodes;
    return result;
  };

  // Dovetail two complete escapes:
  //  - ascending periods p = kN: a cyclic witness at the first SAT p is a
  //    shortest closed walk of the automaton;
  //  - growing run lengths T: an UNSAT run length means every walk is
  //    shorter than T, so no cycle exists at all.
  // One of the two always terminates: cycles are found at the minimal
  // period, and acyclic automata have a finite longest walk.
  if (!run_exists(t, 2LL * (d + 1), limits.max_nodes, nodes)) return finish_jackson();
  for (long long k = 1;; ++k) {
    const long long p = k * N;
    if (auto witness = cyclic_witness(t, p, limits.max_nodes, nodes))
      return finish_steinhaus(p, std::move(*witness));
    if (k >= 2 && (k & (k - 1)) == 0) {
      if (!run_exists(t, 2LL * (d + 1) * k, limits.max_nodes, nodes))
        return finish_jackson();
    }
    if (!within_period_bound(p, d))
      throw std::logic_error("period bound passed without resolution");
  }
}

std::optional<long long> minimal_period(const GapTuple& t, const EngineLimits& limits) {
  return decide(t, limits).minimal_period;
}

std::optional<PeriodicSet> construct(const GapTuple& t, std::optional<long long> period,
                                     const EngineLimits& limits) {
  if (!period) {
    Classification c = decide(t, limits);
    return c.witness;
  }
  const long long p = *period;
  if (p < 1 || p % t.point_count() != 0) return std::nullopt;
  std::uint64_t nodes = 0;
  auto residues = cyclic_witness(t, p, limits.max_nodes, nodes);
  if (!residues) return std::nullopt;
  return make_witness(t, p, std::move(*residues));
}

std::optional<PeriodicSet> oracle_enumerate(const GapTuple& t, long long max_period) {
  const long long N = t.point_count();
  for (long long p = N; p <= max_period; p += N) {
    const long long members = p / N;
    // 0 is always a member; choose the remaining members from [1, p) in
    // lexicographic order.
    std::vector<int> extra(static_cast<std::size_t>(members - 1));
    for (std::size_t i = 0; i < extra.size(); ++i) extra[i] = static_cast<int>(i) + 1;
    while (true) {
      std::vector<int> residues{0};
      residues.insert(residues.end(), extra.begin(), extra.end());
      PeriodicSet s = PeriodicSet::create(p, std::move(residues));
      if (verify_periodic(t, s)) return s;
      // Next combination.
      int i = static_cast<int>(extra.size()) - 1;
      while (i >= 0 && extra[static_cast<std::size_t>(i)] ==
                           static_cast<int>(p) - static_cast<int>(extra.size()) + i)
        --i;
      if (i < 0) break;
      ++extra[static_cast<std::size_t>(i)];
      for (std::size_t j = static_cast<std::size_t>(i) + 1; j < extra.size(); ++j)
        extra[j] = extra[j - 1] + 1;
    }
  }
  return std::nullopt;
}

long long max_witness_interval(const GapTuple& t, const EngineLimits& limits) {
  if (decide(t, limits).status == Status::Steinhaus)
    throw std::invalid_argument("max_witness_interval requires a Jackson tuple");
  WindowGraph g = build_window_graph(t, limits);
  return g.longest_walk();
}

bool within_period_bound(long long p, int d) {
  const auto bound = static_cast<unsigned __int128>(static_cast<unsigned>(d)) << d;
  return static_cast<unsigned __int128>(p) <= bound;
}

}  // namespace steinhaus
