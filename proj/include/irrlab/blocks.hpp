#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "irrlab/group.hpp"
#include "irrlab/parts.hpp"

namespace irrlab {

// Zero-sum six-element block (c, d, -c-d, -c, -d, c+d); all six distinct.
// Such a block never contains zero or an involution.
ZeroSumPart good6_from_witnesses(const Group& g, const Elem& c, const Elem& d);

enum class SplitMode { Pairs, Triples };
// Pairs:   {c,-c}, {d,-d}, {c+d,-c-d}
// Triples: {c,d,-c-d}, {-c,-d,c+d}
std::vector<ZeroSumPart> split_good6(const Group& g, const ZeroSumPart& p,
                                     SplitMode mode);

enum class SearchStatus { Found, Exhausted, Budget };

// Negation-paired zero-sum triples over Z_n, n even. The 2*j_count tuples
// come in adjacent partner pairs (c, d, -c-d) / (-d, -c, c+d); together they
// cover every negation class except {0}, {n/2} and the leftover classes,
// whose representatives are listed ascending in pair_reps.
struct PairedTriples {
  SearchStatus status = SearchStatus::Exhausted;
  std::vector<std::array<Order, 3>> tuples;  // partner of tuple i is i^1
  std::vector<Order> pair_reps;
};
PairedTriples zeng_paired(Order n, Order j_count,
                          std::uint64_t node_budget = 10'000'000);

// Odd-order group split as k six-element blocks plus leftover classes,
// |H| = 6k + 2p + 1 with p the number of leftover classes.
struct SkolemParts {
  std::vector<ZeroSumPart> good6;
  std::vector<Elem> pair_reps;  // ascending
};
SkolemParts skolem_parts(const Group& h, std::uint64_t node_budget = 10'000'000);

// Z_n \ {0, n/2} as m zero-sum triples followed by l inverse pairs.
// Requires n even >= 4 and 3m + 2l = n - 2. Tries the class-paired
// construction first, then an exhaustive element-level search; when
// `used_search` is given it records whether the search was needed.
std::vector<ZeroSumPart> zeng_partition(Order n, Order m, Order l,
                                        bool* used_search = nullptr);

// H \ {0} as six-element blocks followed by inverse pairs, |H| odd.
std::vector<ZeroSumPart> skolem_partition(const Group& h);

}  // namespace irrlab
