#include "irrlab/pools.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "irrlab/blocks.hpp"
#include "irrlab/errors.hpp"

namespace irrlab {

const char* to_string(PoolTag t) {
  switch (t) {
    case PoolTag::W0: return "W0";
    case PoolTag::W1: return "W1";
    case PoolTag::W2: return "W2";
    case PoolTag::T: return "T";
    case PoolTag::W1p: return "W1p";
    case PoolTag::W3p: return "W3p";
    case PoolTag::Sp: return "Sp";
  }
  return "?";
}

namespace {

// Partner[i] is the triple whose element set negates triple i; looked up,
// never assumed, and required to be adjacent for the W-style pools.
void finish_partners(const Group& g, TriplePool& pool) {
  std::map<std::vector<Elem>, std::size_t> by_set;
  for (std::size_t i = 0; i < pool.triples.size(); ++i) {
    std::vector<Elem> key(pool.triples[i].begin(), pool.triples[i].end());
    std::sort(key.begin(), key.end());
    if (!by_set.emplace(std::move(key), i).second)
      throw construction_error("duplicate triple in pool");
  }
  pool.partner.assign(pool.triples.size(), 0);
  for (std::size_t i = 0; i < pool.triples.size(); ++i) {
    std::vector<Elem> key;
    for (const Elem& e : pool.triples[i]) key.push_back(g.neg(e));
    std::sort(key.begin(), key.end());
    auto it = by_set.find(key);
    if (it == by_set.end() || it->second == i)
      throw construction_error("pool is not negation closed");
    pool.partner[i] = it->second;
  }
  for (std::size_t i = 0; i < pool.triples.size(); ++i) {
    if (pool.partner[pool.partner[i]] != i)
      throw construction_error("pool partner map is not an involution");
    if (pool.tag != PoolTag::T && pool.partner[i] != (i ^ 1))
      throw construction_error("pool partners are not adjacent");
  }
}

// Recomputed invariants for every emitted pool: canonical nonzero
// non-involution elements, zero sums, disjointness across all pools.
void validate_pools(const Group& g, const std::vector<TriplePool>& pools) {
  std::set<Elem> used;
  for (const TriplePool& pool : pools) {
    for (const auto& tri : pool.triples) {
      Elem sum = g.zero();
      for (const Elem& e : tri) {
        g.check(e);
        if (g.is_zero(e))
          throw construction_error("pool triple contains zero");
        if (g.neg(e) == e)
          throw construction_error("pool triple contains an involution");
        if (!used.insert(e).second)
          throw construction_error("pools overlap at " + g.format(e));
        sum = g.add(sum, e);
      }
      if (!g.is_zero(sum))
        throw construction_error("pool triple does not sum to zero");
    }
  }
}

}  // namespace

std::optional<std::vector<TriplePool>> build_pools_at(const TwoOddSplit& split,
                                                      Order l_eff,
                                                      std::uint64_t node_budget) {
  const Group& gamma = split.iso.gamma();
  const Group& L = split.L;
  const Group& H = split.H;
  if (L.arity() != 1 || L.order() % 2)
    throw input_error("pool construction needs one even cyclic L factor");
  if (H.order() % 2 == 0) throw input_error("pool construction needs H odd");
  Order nL = L.order();
  Order classes = (nL - 2) / 2;
  if (l_eff < 0 || l_eff > classes || (classes - l_eff) % 3)
    throw input_error("leftover count does not fit the class count");
  Order J = (classes - l_eff) / 3;

  PairedTriples pt = zeng_paired(nL, J, node_budget);
  if (pt.status == SearchStatus::Budget)
    throw resource_error("class cover budget exhausted for " + L.name());
  if (pt.status == SearchStatus::Exhausted) return std::nullopt;

  SkolemParts sk;
  if (H.order() > 1) sk = skolem_parts(H, node_budget);
  std::vector<std::array<Elem, 3>> C;
  for (const ZeroSumPart& b : sk.good6)
    C.push_back({b.elems[0], b.elems[1], b.elems[2]});
  std::size_t k = C.size();

  auto E = [&](Order a, const Elem& h) { return split.embed(L.canon({a}), h); };
  auto at = [&](const std::array<Elem, 3>& c, int t) -> const Elem& {
    return c[static_cast<std::size_t>(t % 3)];
  };

  std::vector<TriplePool> pools;

  TriplePool w0{PoolTag::W0, {}, {}};
  for (std::size_t i = 0; i < pt.tuples.size(); ++i)
    for (int h = 0; h < 3; ++h)
      for (std::size_t j = 0; j < k; ++j) {
        const auto& A = pt.tuples[i];
        std::array<Elem, 3> plus = {E(A[0], at(C[j], h)), E(A[1], at(C[j], h + 1)),
                                    E(A[2], at(C[j], h + 2))};
        std::array<Elem, 3> minus = {gamma.neg(plus[0]), gamma.neg(plus[1]),
                                     gamma.neg(plus[2])};
        w0.triples.push_back(std::move(plus));
        w0.triples.push_back(std::move(minus));
      }
  pools.push_back(std::move(w0));

  if (l_eff == 0) {
    TriplePool w1{PoolTag::W1, {}, {}};
    for (std::size_t j = 0; j < k; ++j) {
      std::array<Elem, 3> plus = {E(0, C[j][0]), E(0, C[j][1]), E(0, C[j][2])};
      std::array<Elem, 3> minus = {gamma.neg(plus[0]), gamma.neg(plus[1]),
                                   gamma.neg(plus[2])};
      w1.triples.push_back(std::move(plus));
      w1.triples.push_back(std::move(minus));
    }
    pools.push_back(std::move(w1));
  } else {
    Order b1 = pt.pair_reps.front();
    TriplePool w2{PoolTag::W2, {}, {}};
    for (int h = 0; h < 3; ++h)
      for (std::size_t j = 0; j < k; ++j) {
        std::array<Elem, 3> plus = {E(b1, at(C[j], h)), E(-b1, at(C[j], h + 1)),
                                    E(0, at(C[j], h + 2))};
        std::array<Elem, 3> minus = {gamma.neg(plus[0]), gamma.neg(plus[1]),
                                     gamma.neg(plus[2])};
        w2.triples.push_back(std::move(plus));
        w2.triples.push_back(std::move(minus));
      }
    pools.push_back(std::move(w2));
  }

  if (!sk.pair_reps.empty()) {
    const Elem& d1 = sk.pair_reps.front();
    TriplePool t{PoolTag::T, {}, {}};
    for (std::size_t i = 0; i < pt.tuples.size(); ++i)
      for (int h = 0; h < 3; ++h) {
        const auto& A = pt.tuples[i];
        t.triples.push_back({E(A[static_cast<std::size_t>(h)], d1),
                             E(A[static_cast<std::size_t>((h + 1) % 3)], H.neg(d1)),
                             E(A[static_cast<std::size_t>((h + 2) % 3)], H.zero())});
      }
    pools.push_back(std::move(t));
  }

  for (TriplePool& pool : pools) finish_partners(gamma, pool);
  validate_pools(gamma, pools);
  return pools;
}

std::vector<TriplePool> build_pools(const TwoOddSplit& split) {
  Order canonical = ((split.L.order() - 2) % 6) / 2;
  auto pools = build_pools_at(split, canonical);
  if (!pools)
    throw construction_error("no class-paired cover for " + split.L.name() +
                             " at its canonical leftover count");
  return *pools;
}

PoolsAtLeftover build_pools_search(const TwoOddSplit& split) {
  Order classes = (split.L.order() - 2) / 2;
  Order l0 = ((split.L.order() - 2) % 6) / 2;
  for (Order l = l0; l <= classes; l += 3) {
    auto pools = build_pools_at(split, l);
    if (pools) return {std::move(*pools), l};
  }
  throw construction_error("no class-paired cover of " + split.L.name() +
                           " at any leftover count");
}

std::vector<TriplePool> build_pools_case22(const Group& gamma) {
  std::vector<Piece> pieces = primary_pieces(gamma);
  std::vector<Piece> odd;
  std::size_t evens = 0;
  bool z2 = false;
  for (const Piece& p : pieces) {
    if (p.prime == 2) {
      ++evens;
      z2 = p.q == 2;
    } else {
      if (p.prime != 3)
        throw input_error("case 2.2 pools need an odd part that is a 3-group");
      odd.push_back(p);
    }
  }
  if (evens != 1 || !z2)
    throw input_error("case 2.2 pools need even part exactly Z2");
  if (odd.size() < 2)
    throw input_error("cyclic groups take the single-factor route");

  Order h_order = 1;
  for (const Piece& p : odd) h_order *= p.q;

  if (h_order == 9) {
    auto pools = build_pools_at(factor_2_odd(gamma), 0);
    if (!pools) throw construction_error("empty L cover unexpectedly missing");
    return *pools;
  }

  auto z3 = std::find_if(odd.begin(), odd.end(),
                         [](const Piece& p) { return p.q == 3; });
  if (z3 == odd.end()) {
    // all pieces at least 9: merge the smallest one and use the generic
    // pools; 2*3^e - 2 = 4 mod 6 makes the leftover count 2
    const Piece* best = &odd.front();
    for (const Piece& p : odd)
      if (p.q < best->q) best = &p;
    auto pools = build_pools_at(merged_split(gamma, *best), 2);
    if (!pools)
      throw construction_error("no class-paired cover for the merged factor");
    return *pools;
  }

  TwoOddSplit ms = merged_split(gamma, *z3);  // L = Z6
  const Group& G = ms.iso.gamma();
  const Group& H = ms.H;
  SkolemParts sk = skolem_parts(H);
  if (sk.pair_reps.size() != 1)
    throw construction_error("3-group should leave exactly one pair class");
  const Elem& d1 = sk.pair_reps.front();
  std::vector<std::array<Elem, 3>> C;
  for (const ZeroSumPart& b : sk.good6)
    C.push_back({b.elems[0], b.elems[1], b.elems[2]});

  auto E = [&](Order a, const Elem& h) { return ms.embed(ms.L.canon({a}), h); };
  auto at = [&](const std::array<Elem, 3>& c, int t) -> const Elem& {
    return c[static_cast<std::size_t>(t % 3)];
  };
  auto neg3 = [&](const std::array<Elem, 3>& tri) {
    return std::array<Elem, 3>{G.neg(tri[0]), G.neg(tri[1]), G.neg(tri[2])};
  };

  // leftover-L blocks around the class {1, 5} of Z6
  TriplePool w1p{PoolTag::W1p, {}, {}};
  for (int h = 0; h < 3; ++h)
    for (std::size_t j = 0; j < C.size(); ++j) {
      std::array<Elem, 3> plus = {E(1, at(C[j], h)), E(-1, at(C[j], h + 1)),
                                  E(0, at(C[j], h + 2))};
      w1p.triples.push_back(plus);
      w1p.triples.push_back(neg3(plus));
    }

  // constant-L blocks over {2, 4}; they sum to zero because 3 * 2 = 0 mod 6
  TriplePool w3p{PoolTag::W3p, {}, {}};
  for (std::size_t j = 0; j < C.size(); ++j) {
    std::array<Elem, 3> p1 = {E(2, C[j][0]), E(2, C[j][1]), E(2, C[j][2])};
    std::array<Elem, 3> p3 = {E(2, H.neg(C[j][0])), E(2, H.neg(C[j][1])),
                              E(2, H.neg(C[j][2]))};
    w3p.triples.push_back(p1);
    w3p.triples.push_back(neg3(p1));
    w3p.triples.push_back(p3);
    w3p.triples.push_back(neg3(p3));
  }

  // constant-L triples through the leftover pair of H
  TriplePool sp{PoolTag::Sp, {}, {}};
  std::array<Elem, 3> q1 = {E(4, d1), E(4, H.zero()), E(4, H.neg(d1))};
  sp.triples.push_back(q1);
  sp.triples.push_back(neg3(q1));

  std::vector<TriplePool> pools;
  pools.push_back(std::move(w1p));
  pools.push_back(std::move(w3p));
  pools.push_back(std::move(sp));
  for (TriplePool& pool : pools) finish_partners(G, pool);
  validate_pools(G, pools);
  return pools;
}

TwoOddSplit merged_split(const Group& gamma, const Piece& odd_piece) {
  if (odd_piece.prime == 2) throw input_error("piece to merge must be odd");
  std::vector<Piece> pieces = primary_pieces(gamma);
  std::vector<Piece> evens;
  for (const Piece& p : pieces)
    if (p.prime == 2) evens.push_back(p);
  if (evens.size() != 1)
    throw input_error("merged split needs exactly one even piece");
  if (std::find(pieces.begin(), pieces.end(), odd_piece) == pieces.end())
    throw input_error("piece to merge is not part of the group");

  std::vector<std::vector<Piece>> slots = {{evens[0], odd_piece}};
  std::vector<Order> hfac;
  for (const Piece& p : pieces) {
    if (p == evens[0] || p == odd_piece) continue;
    slots.push_back({p});
    hfac.push_back(p.q);
  }
  Regrouping iso(gamma, std::move(slots));
  Group L({evens[0].q * odd_piece.q});
  Group H = hfac.empty() ? Group() : Group(std::move(hfac));
  return TwoOddSplit{std::move(iso), 1, std::move(L), std::move(H)};
}

}  // namespace irrlab
