#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "irrlab/group.hpp"
#include "irrlab/parts.hpp"

namespace irrlab {

struct SearchBudget {
  std::int64_t time_ms = 10'000;
  std::uint64_t node_limit = 50'000'000;
};

enum class Verdict { Feasible, Infeasible, Unknown };
const char* to_string(Verdict v);

struct OracleOutcome {
  Verdict verdict = Verdict::Unknown;
  std::optional<PartitionResult> partition;  // present iff Feasible
  std::uint64_t nodes = 0;
  std::int64_t elapsed_ms = 0;
};

// Complete backtracking search for disjoint zero-sum parts of the given
// sizes drawn from the group minus `forbidden`. Symmetry breaking keeps the
// search canonical without losing solutions, so Infeasible is a proof of
// exhaustion. Unknown means a budget ran out first.
OracleOutcome oracle_partition(const Group& g, const std::vector<Order>& sizes,
                               const std::vector<Elem>& forbidden,
                               const SearchBudget& budget = {});

struct CrossReport {
  Group group;
  SizeDemand demand;
  std::string theorem_verdict;  // feasible | not-applicable | unknown | defect: ...
  std::string oracle_verdict;   // feasible | infeasible | unknown | defect: ...
  bool disagreement = false;
  std::optional<PartitionResult> theorem_result;
  OracleOutcome oracle_outcome;
};

// Runs the constructive route (oracle fallback disabled) and the exhaustive
// search on the same demand, then compares the verdicts.
CrossReport cross_validate(const Group& g, const SizeDemand& demand,
                           const SearchBudget& budget = {});

}  // namespace irrlab
