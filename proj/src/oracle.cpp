#include "irrlab/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <set>

#include "irrlab/errors.hpp"

namespace irrlab {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Feasible: return "feasible";
    case Verdict::Infeasible: return "infeasible";
    case Verdict::Unknown: return "unknown";
  }
  return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

// Elements live as mixed-radix ranks so the hot path never allocates.
struct CodeArith {
  std::vector<Order> radix;
  std::vector<Order> stride;

  explicit CodeArith(const Group& g) : radix(g.factors()) {
    stride.assign(radix.size(), 1);
    for (std::size_t i = radix.size(); i-- > 1;)
      stride[i - 1] = stride[i] * radix[i];
  }

  Order rank(const Elem& e) const {
    Order r = 0;
    for (std::size_t i = 0; i < radix.size(); ++i) r += e[i] * stride[i];
    return r;
  }

  Order add(Order a, Order b) const {
    Order out = 0;
    for (std::size_t i = 0; i < radix.size(); ++i) {
      Order da = (a / stride[i]) % radix[i];
      Order db = (b / stride[i]) % radix[i];
      out += ((da + db) % radix[i]) * stride[i];
    }
    return out;
  }

  Order neg(Order a) const {
    Order out = 0;
    for (std::size_t i = 0; i < radix.size(); ++i) {
      Order da = (a / stride[i]) % radix[i];
      out += ((radix[i] - da) % radix[i]) * stride[i];
    }
    return out;
  }
};

// Symmetry breaking, all solution-preserving:
//   - within a part, universe indices increase;
//   - equal-size parts are ordered by their first index;
//   - when every remaining part has the same size and the remaining parts
//     must use every remaining element, the smallest available element opens
//     the next part (it has to open some part, and those parts commute).
// The last slot of a part is resolved by direct lookup of the needed value.
struct Searcher {
  const CodeArith& ca;
  const std::vector<Order>& uni;        // codes, ascending
  const std::vector<std::int32_t>& pos; // code -> universe index, -1 if absent
  const std::vector<Order>& sizes;      // descending
  const std::vector<Order>& suffix;     // suffix sums of sizes
  const std::vector<char>& uniform_tail;
  std::uint64_t node_limit;
  Clock::time_point deadline;

  std::vector<char> used;
  std::vector<std::vector<std::int32_t>> chosen;
  Order remaining;
  std::uint64_t nodes = 0;
  bool stopped = false;

  bool tick() {
    if (++nodes > node_limit || ((nodes & 1023) == 0 && Clock::now() > deadline)) {
      stopped = true;
      return false;
    }
    return true;
  }

  std::int32_t min_available() const {
    for (std::size_t i = 0; i < uni.size(); ++i)
      if (!used[i]) return static_cast<std::int32_t>(i);
    return -1;
  }

  bool solve_part(std::size_t pi) {
    if (pi == sizes.size()) return true;
    if (!tick()) return false;
    if (remaining < suffix[pi]) return false;
    std::int32_t start = 0;
    if (pi > 0 && sizes[pi] == sizes[pi - 1]) start = chosen[pi - 1][0] + 1;
    if (uniform_tail[pi] && remaining == suffix[pi]) {
      std::int32_t f = min_available();
      if (f < start) return false;
      return open_with(pi, f);
    }
    for (std::int32_t f = start; f < static_cast<std::int32_t>(uni.size()); ++f) {
      if (used[f]) continue;
      if (open_with(pi, f)) return true;
      if (stopped) return false;
    }
    return false;
  }

  bool open_with(std::size_t pi, std::int32_t f) {
    used[f] = 1;
    --remaining;
    chosen[pi].push_back(f);
    bool ok = sizes[pi] == 1 ? uni[f] == 0 && solve_part(pi + 1)
                             : fill(pi, 1, f + 1, uni[f]);
    if (!ok) {
      chosen[pi].pop_back();
      used[f] = 0;
      ++remaining;
    }
    return ok;
  }

  bool fill(std::size_t pi, Order slot, std::int32_t from, Order sum) {
    if (!tick()) return false;
    if (slot == sizes[pi] - 1) {
      std::int32_t idx = pos[ca.neg(sum)];
      if (idx < from || used[idx]) return false;
      used[idx] = 1;
      --remaining;
      chosen[pi].push_back(idx);
      if (solve_part(pi + 1)) return true;
      chosen[pi].pop_back();
      used[idx] = 0;
      ++remaining;
      return false;
    }
    for (std::int32_t i = from; i < static_cast<std::int32_t>(uni.size()); ++i) {
      if (used[i]) continue;
      used[i] = 1;
      --remaining;
      chosen[pi].push_back(i);
      if (fill(pi, slot + 1, i + 1, ca.add(sum, uni[i]))) return true;
      chosen[pi].pop_back();
      used[i] = 0;
      ++remaining;
      if (stopped) return false;
    }
    return false;
  }
};

ZeroSumPart wrap_part(const Group& g, const std::vector<Elem>& elems) {
  if (elems.size() == 2) return inverse_pair(g, elems[0]);
  if (elems.size() == 3) return zero_triple(g, {elems[0], elems[1], elems[2]});
  ZeroSumPart p;
  p.kind = PartKind::Composite;
  p.elems = elems;
  return p;
}

}  // namespace

OracleOutcome oracle_partition(const Group& g, const std::vector<Order>& sizes,
                               const std::vector<Elem>& forbidden,
                               const SearchBudget& budget) {
  for (Order s : sizes)
    if (s < 1) throw input_error("part sizes must be at least 1");

  std::set<Elem> excl;
  for (const Elem& e : forbidden) excl.insert(g.canon(e));

  CodeArith ca(g);
  std::vector<Order> uni;
  std::vector<std::int32_t> pos(static_cast<std::size_t>(g.order()), -1);
  for (const Elem& e : g.enumerate()) {
    if (excl.count(e)) continue;
    pos[static_cast<std::size_t>(ca.rank(e))] =
        static_cast<std::int32_t>(uni.size());
    uni.push_back(ca.rank(e));
  }

  OracleOutcome out;
  Order total = std::accumulate(sizes.begin(), sizes.end(), Order{0});
  if (total > static_cast<Order>(uni.size())) {
    out.verdict = Verdict::Infeasible;
    return out;
  }

  // Sort sizes descending; remember where each sorted part goes back.
  std::vector<std::size_t> perm(sizes.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(),
                   [&](std::size_t a, std::size_t b) { return sizes[a] > sizes[b]; });
  std::vector<Order> sorted;
  sorted.reserve(sizes.size());
  for (std::size_t i : perm) sorted.push_back(sizes[i]);

  std::vector<Order> suffix(sorted.size() + 1, 0);
  std::vector<char> uniform_tail(sorted.size() + 1, 1);
  for (std::size_t i = sorted.size(); i-- > 0;) {
    suffix[i] = suffix[i + 1] + sorted[i];
    uniform_tail[i] =
        i + 1 == sorted.size() ? 1 : (uniform_tail[i + 1] && sorted[i] == sorted[i + 1]);
  }

  auto t0 = Clock::now();
  Searcher s{ca,
             uni,
             pos,
             sorted,
             suffix,
             uniform_tail,
             budget.node_limit,
             t0 + std::chrono::milliseconds(budget.time_ms),
             {},
             {},
             static_cast<Order>(uni.size()),
             0,
             false};
  s.used.assign(uni.size(), 0);
  s.chosen.assign(sorted.size(), {});
  bool found = s.solve_part(0);
  out.nodes = s.nodes;
  out.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
  if (!found) {
    out.verdict = s.stopped ? Verdict::Unknown : Verdict::Infeasible;
    return out;
  }

  // enumerate() is rank-ordered, so a code doubles as an index into it
  std::vector<Elem> all = g.enumerate();
  auto elem_of = [&](std::int32_t idx) {
    return all[static_cast<std::size_t>(uni[static_cast<std::size_t>(idx)])];
  };

  PartitionResult pr;
  pr.group = g;
  pr.path = PartitionPath::Oracle;
  pr.excluded.assign(excl.begin(), excl.end());
  pr.parts.resize(sizes.size());
  for (std::size_t i = 0; i < perm.size(); ++i) {
    std::vector<Elem> elems;
    elems.reserve(s.chosen[i].size());
    for (std::int32_t idx : s.chosen[i]) elems.push_back(elem_of(idx));
    pr.parts[perm[i]] = wrap_part(g, elems);
  }
  SizeDemand demand{sizes};
  pr.certificate = verify_partition(g, pr, demand);
  out.verdict = Verdict::Feasible;
  out.partition = std::move(pr);
  return out;
}

}  // namespace irrlab
