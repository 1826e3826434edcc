#pragma once

#include <array>
#include <string>
#include <vector>

#include "irrlab/group.hpp"

namespace irrlab {

enum class PartKind { Pair, Triple, GoodSix, Composite };

// A zero-sum subset of the group. Element order is canonical per kind:
//   Pair     : (x, -x) with x the lexicographically smaller of the two
//   Triple   : elements sorted ascending
//   GoodSix  : (c, d, -c-d, -c, -d, c+d) for witnesses (c, d)
//   Composite: concatenation of its blocks, in block order
struct ZeroSumPart {
  PartKind kind = PartKind::Composite;
  std::vector<Elem> elems;
  std::vector<Elem> witnesses;      // GoodSix: {c, d}; otherwise empty
  std::vector<ZeroSumPart> blocks;  // Composite: constituent blocks
};

const char* to_string(PartKind k);

// Requested part sizes, in caller order.
struct SizeDemand {
  std::vector<Order> sizes;
  Order total() const;
  std::size_t odd_count() const;
};

enum class PartitionPath { Theorem, Zeng, Oracle };

const char* to_string(PartitionPath p);
PartitionPath path_from_string(const std::string& s);

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Certificate {
  std::vector<Check> checks;
  std::vector<std::string> warnings;
  bool pass() const;
  void add(const std::string& name, bool ok, const std::string& detail = "");
  void warn(std::string w);
};

struct PartitionResult {
  Group group;
  std::vector<Elem> excluded;  // elements deliberately left uncovered
  std::vector<ZeroSumPart> parts;
  std::size_t pad_parts = 0;  // trailing synthetic parts absorbing slack
  PartitionPath path = PartitionPath::Theorem;
  Certificate certificate;
};

// (x, -x) ordered canonically; requires x != -x and x != 0.
ZeroSumPart inverse_pair(const Group& g, const Elem& x);
// Zero-sum triple, elements stored ascending; validates the sum.
ZeroSumPart zero_triple(const Group& g, std::array<Elem, 3> t);

// Recomputes every promised property of the result from scratch:
// sizes against the demand, element validity, disjointness, per-part zero
// sums, avoidance of the excluded set, structural invariants per part kind,
// and exact coverage of the group for the constructive paths.
Certificate verify_partition(const Group& g, const PartitionResult& pr,
                             const SizeDemand& demand);

}  // namespace irrlab
