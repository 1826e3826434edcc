#include "irrlab/theorem.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "irrlab/blocks.hpp"
#include "irrlab/errors.hpp"
#include "irrlab/pools.hpp"

namespace irrlab {

namespace {

// Selects exactly s triples, closed under triple negation so the unselected
// elements stay pairable. Non-T pools pair adjacently, so any even-length
// prefix is closed; every pool size is even, hence even prefixes across pool
// boundaries stay closed too. The T pool is only ever taken whole.
std::vector<std::array<Elem, 3>> select_triples(
    const std::vector<TriplePool>& pools, std::size_t s) {
  std::size_t cap_w = 0;
  std::size_t cap_t = 0;
  for (const auto& p : pools)
    (p.tag == PoolTag::T ? cap_t : cap_w) += p.triples.size();

  std::vector<std::array<Elem, 3>> out;
  out.reserve(s);
  if (s > cap_w + cap_t)
    throw construction_error("demand needs " + std::to_string(s) +
                             " zero-sum triples but the pools supply only " +
                             std::to_string(cap_w + cap_t));
  std::size_t from_w = s <= cap_w ? s : s - cap_t;
  for (const auto& p : pools) {
    if (p.tag == PoolTag::T) continue;
    for (std::size_t i = 0; from_w > 0 && i < p.triples.size(); ++i, --from_w)
      out.push_back(p.triples[i]);
  }
  if (s > cap_w)
    for (const auto& p : pools)
      if (p.tag == PoolTag::T)
        out.insert(out.end(), p.triples.begin(), p.triples.end());
  return out;
}

std::vector<TriplePool> dispatch_pools(const Group& g) {
  TwoOddSplit base = factor_2_odd(g);
  if (base.L.order() > 2) return build_pools_search(base).pools;

  bool three_group = true;
  for (const auto& pc : primary_pieces(g))
    if (pc.prime != 2 && pc.prime != 3) three_group = false;
  if (three_group) return build_pools_case22(g);

  // Merge the smallest piece of prime >= 5 that leaves |H'| >= 7 into L.
  std::optional<Piece> pick;
  for (const auto& pc : primary_pieces(g)) {
    if (pc.prime < 5) continue;
    if (base.H.order() / pc.q < 7) continue;
    if (!pick || pc.q < pick->q) pick = pc;
  }
  if (pick) return build_pools_search(merged_split(g, *pick)).pools;
  return build_pools_search(base).pools;  // Z2 x Z5 x Z5
}

// Stitches parts of the demanded sizes out of zero-sum triples and inverse
// pairs, consuming both streams in order: an odd part takes one triple.
std::vector<ZeroSumPart> assemble(const SizeDemand& demand,
                                  const std::vector<ZeroSumPart>& triples,
                                  const std::vector<ZeroSumPart>& pairs) {
  if (triples.size() != demand.odd_count() ||
      2 * pairs.size() + 3 * triples.size() !=
          static_cast<std::size_t>(demand.total()))
    throw construction_error("block supply does not match the demand");
  std::vector<ZeroSumPart> parts;
  parts.reserve(demand.sizes.size());
  std::size_t ti = 0;
  std::size_t pi = 0;
  for (Order r : demand.sizes) {
    ZeroSumPart part;
    part.kind = PartKind::Composite;
    if (r % 2) part.blocks.push_back(triples[ti++]);
    for (Order c = (r % 2 ? r - 3 : r) / 2; c > 0; --c)
      part.blocks.push_back(pairs[pi++]);
    for (const auto& b : part.blocks)
      part.elems.insert(part.elems.end(), b.elems.begin(), b.elems.end());
    parts.push_back(std::move(part));
  }
  return parts;
}

std::string first_failure(const Certificate& c) {
  for (const auto& chk : c.checks)
    if (!chk.pass) return chk.name + ": " + chk.detail;
  return "unknown check";
}

}  // namespace

PartitionResult theorem_zero_sum(const Group& g, const SizeDemand& demand) {
  for (Order r : demand.sizes)
    if (r < 4)
      throw input_error("constructive route needs every part size >= 4, got " +
                        std::to_string(r));
  if (demand.total() != g.order() - 2)
    throw input_error("part sizes must sum to |group| - 2 = " +
                      std::to_string(g.order() - 2) + ", got " +
                      std::to_string(demand.total()));
  auto ivs = g.involutions();
  if (ivs.size() != 1)
    throw input_error("constructive route needs exactly one involution; " +
                      g.name() + " has " + std::to_string(ivs.size()));
  const Elem iota = ivs.front();

  PartitionResult pr;
  pr.group = g;
  pr.excluded = {g.zero(), iota};

  if (g.order() == 2) {
    pr.certificate = verify_partition(g, pr, demand);
    return pr;
  }

  std::vector<ZeroSumPart> triples;
  std::vector<ZeroSumPart> pairs;
  bool used_search = false;
  if (g.is_cyclic()) {
    pr.path = PartitionPath::Zeng;
    Order n = g.order();
    Order s = static_cast<Order>(demand.odd_count());
    auto reg = cyclic_form(g);
    for (const auto& zp :
         zeng_partition(n, s, (n - 2 - 3 * s) / 2, &used_search)) {
      if (zp.elems.size() == 3)
        triples.push_back(zero_triple(
            g, {reg.to_gamma(zp.elems[0]), reg.to_gamma(zp.elems[1]),
                reg.to_gamma(zp.elems[2])}));
      else
        pairs.push_back(inverse_pair(g, reg.to_gamma(zp.elems[0])));
    }
  } else {
    pr.path = PartitionPath::Theorem;
    auto pools = dispatch_pools(g);
    auto picked = select_triples(pools, demand.odd_count());

    std::set<Elem> used;
    used.insert(g.zero());
    used.insert(iota);
    for (const auto& t : picked) {
      triples.push_back(zero_triple(g, t));
      for (const auto& e : t) used.insert(e);
    }
    // Everything not consumed by a selected triple pairs with its negation;
    // the selection is negation-closed, so the sweep cannot strand anyone.
    for (const auto& x : g.enumerate()) {
      if (used.count(x)) continue;
      Elem nx = g.neg(x);
      if (nx == x || used.count(nx))
        throw construction_error("leftover elements are not negation-paired at " +
                                 g.format(x));
      used.insert(x);
      used.insert(nx);
      pairs.push_back(inverse_pair(g, x));
    }
  }

  pr.parts = assemble(demand, triples, pairs);
  pr.certificate = verify_partition(g, pr, demand);
  if (used_search)
    pr.certificate.warn("cyclic block family came from exhaustive search");
  if (!pr.certificate.pass())
    throw construction_error("built partition failed verification (" +
                             first_failure(pr.certificate) + ")");
  return pr;
}

namespace {

PartitionResult oracle_route(const Group& g, const SizeDemand& demand,
                             const SearchBudget& budget) {
  OracleOutcome out = oracle_partition(g, demand.sizes, {}, budget);
  switch (out.verdict) {
    case Verdict::Feasible:
      break;
    case Verdict::Infeasible:
      throw infeasible_error("no zero-sum partition with these sizes exists in " +
                             g.name());
    case Verdict::Unknown:
      throw resource_error("exhaustive search ran out of budget after " +
                           std::to_string(out.nodes) + " nodes");
  }
  PartitionResult pr = std::move(*out.partition);
  pr.certificate = verify_partition(g, pr, demand);
  if (!pr.certificate.pass())
    throw construction_error("search result failed verification (" +
                             first_failure(pr.certificate) + ")");
  return pr;
}

}  // namespace

PartitionResult general_partition(const Group& g, const SizeDemand& demand,
                                  const GeneralOptions& opts) {
  for (Order r : demand.sizes)
    if (r < 2)
      throw input_error("part sizes must be at least 2, got " +
                        std::to_string(r));
  auto ivs = g.involutions();
  const bool single = ivs.size() == 1;
  const Order cap = g.order() - (single ? 2 : 1);
  if (demand.total() > cap)
    throw input_error("sizes sum to " + std::to_string(demand.total()) +
                      " but only " + std::to_string(cap) +
                      " elements of " + g.name() + " are usable");

  const bool theorem_shape =
      single && std::all_of(demand.sizes.begin(), demand.sizes.end(),
                            [](Order r) { return r >= 4; });
  if (theorem_shape) {
    Order pad = g.order() - 2 - demand.total();
    if (pad >= 1 && pad <= 3)
      throw input_error("demand leaves a slack of " + std::to_string(pad) +
                        " in " + g.name() +
                        "; the constructive route needs slack 0 or >= 4");
    SizeDemand padded = demand;
    if (pad >= 4) padded.sizes.push_back(pad);
    try {
      PartitionResult pr = theorem_zero_sum(g, padded);
      pr.pad_parts = pad >= 4 ? 1 : 0;
      pr.certificate = verify_partition(g, pr, demand);
      if (!pr.certificate.pass())
        throw construction_error("padded partition failed verification (" +
                                 first_failure(pr.certificate) + ")");
      return pr;
    } catch (const construction_error& e) {
      if (!opts.allow_oracle) throw;
      PartitionResult pr = oracle_route(g, demand, opts.budget);
      pr.certificate.warn(std::string("constructive route failed (") + e.what() +
                          "); fell back to exhaustive search");
      return pr;
    }
  }

  if (!opts.allow_oracle)
    throw unsupported_error(
        "demand is outside the constructive route (needs a single involution "
        "and every part size >= 4)");
  return oracle_route(g, demand, opts.budget);
}

CrossReport cross_validate(const Group& g, const SizeDemand& demand,
                           const SearchBudget& budget) {
  CrossReport rep;
  rep.group = g;
  rep.demand = demand;
  try {
    GeneralOptions opts;
    opts.allow_oracle = false;
    opts.budget = budget;
    rep.theorem_result = general_partition(g, demand, opts);
    rep.theorem_verdict = "feasible";
  } catch (const input_error&) {
    rep.theorem_verdict = "not-applicable";
  } catch (const unsupported_error&) {
    rep.theorem_verdict = "not-applicable";
  } catch (const resource_error&) {
    rep.theorem_verdict = "unknown";
  } catch (const construction_error& e) {
    rep.theorem_verdict = std::string("defect: ") + e.what();
  }

  rep.oracle_outcome = oracle_partition(g, demand.sizes, {}, budget);
  rep.oracle_verdict = to_string(rep.oracle_outcome.verdict);
  if (rep.oracle_outcome.verdict == Verdict::Feasible &&
      !rep.oracle_outcome.partition->certificate.pass())
    rep.oracle_verdict = "defect: search result failed verification";

  const bool theorem_defect = rep.theorem_verdict.rfind("defect", 0) == 0;
  const bool oracle_defect = rep.oracle_verdict.rfind("defect", 0) == 0;
  rep.disagreement = theorem_defect || oracle_defect ||
                     (rep.theorem_verdict == "feasible" &&
                      rep.oracle_outcome.verdict == Verdict::Infeasible);
  return rep;
}

}  // namespace irrlab
