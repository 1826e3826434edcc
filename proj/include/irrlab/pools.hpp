#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "irrlab/group.hpp"

namespace irrlab {

enum class PoolTag { W0, W1, W2, T, W1p, W3p, Sp };
const char* to_string(PoolTag t);

// A pool of zero-sum triples over gamma, disjoint from {0} and the
// involution, closed under negation: triple partner[i] has exactly the
// negated elements of triple i. Pools other than T pair adjacently
// (partner[i] == i ^ 1).
struct TriplePool {
  PoolTag tag;
  std::vector<std::array<Elem, 3>> triples;
  std::vector<std::size_t> partner;
};

// Triple pools over gamma ~ L x H with L a single even cyclic factor and H
// of odd order, built from a class-paired cover of Z_|L| with l_eff leftover
// classes and the six-element block decomposition of H. Returns nullopt when
// no class-paired cover with that leftover count exists. Emitted pools:
// W0 (tuple x block mixes), W1 (zero-L blocks, l_eff = 0) or W2 (leftover-L
// blocks, l_eff >= 1), and T (tuple x leftover-H, present when H has a
// leftover pair). Every pool is validated from scratch before returning.
std::optional<std::vector<TriplePool>> build_pools_at(
    const TwoOddSplit& split, Order l_eff,
    std::uint64_t node_budget = 10'000'000);

// build_pools_at at the canonical leftover count ((|L|-2) mod 6) / 2;
// throws construction_error when that cover does not exist.
std::vector<TriplePool> build_pools(const TwoOddSplit& split);

// Scans leftover counts from the canonical value upward in steps of 3 and
// returns the first that admits a cover, with the count that succeeded.
struct PoolsAtLeftover {
  std::vector<TriplePool> pools;
  Order l_eff = 0;
};
PoolsAtLeftover build_pools_search(const TwoOddSplit& split);

// Pools for gamma = Z2 x (non-cyclic 3-group). Order 18 uses the generic
// route over L = Z2. With a Z3 piece available, Z2 merges with it into a
// Z6 view and the pools exploit 3*2 = 0 mod 6: W1p (leftover-L blocks),
// W3p (constant-L blocks), Sp (constant-L leftover triples). Otherwise the
// smallest 3-piece merges into L and the generic pools apply.
std::vector<TriplePool> build_pools_case22(const Group& gamma);

// Regrouping of gamma onto L x H with the named odd primary piece merged
// into the unique even piece (L cyclic of order 2^a * q) and every other
// piece kept separate, in piece order.
TwoOddSplit merged_split(const Group& gamma, const Piece& odd_piece);

}  // namespace irrlab
