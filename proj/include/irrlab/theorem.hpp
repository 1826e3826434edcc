#pragma once

#include "irrlab/group.hpp"
#include "irrlab/oracle.hpp"
#include "irrlab/parts.hpp"

namespace irrlab {

// Constructive partition of gamma minus {0, involution} into zero-sum parts
// of the demanded sizes. Requires exactly one involution, every size at
// least 4 and sizes summing to |gamma| - 2. The result is verified from
// scratch before returning; construction_error signals a failed build,
// input_error a demand outside the theorem.
PartitionResult theorem_zero_sum(const Group& gamma, const SizeDemand& demand);

struct GeneralOptions {
  bool allow_oracle = true;
  SearchBudget budget;
};

// Entry point for arbitrary demands: routes to the constructive theorem
// when it applies (padding the demand with one synthetic part when the sum
// leaves a usable margin) and otherwise to the exhaustive search. Sizes must
// be at least 2 and sum to at most |gamma| - 2 (single involution) or
// |gamma| - 1 (otherwise).
PartitionResult general_partition(const Group& gamma, const SizeDemand& demand,
                                  const GeneralOptions& opts = {});

}  // namespace irrlab
