#pragma once

#include <vector>

#include "irrlab/digraph.hpp"
#include "irrlab/group.hpp"
#include "irrlab/parts.hpp"
#include "irrlab/theorem.hpp"

namespace irrlab {

// Net flow of every vertex under the arc labels psi: outgoing labels added,
// incoming labels subtracted.
std::vector<Elem> net_flows(const Group& g, const Digraph& d,
                            const std::vector<Elem>& psi);

// Arc labels whose net flow at every vertex equals the prescribed value.
// Requires the prescription to sum to zero on every weak component; labels
// on non-tree arcs of a spanning forest stay zero.
std::vector<Elem> realize_flows(const Group& g, const Digraph& d,
                                const std::vector<Elem>& phi);

struct ArcLabeling {
  Group group;
  std::vector<Elem> psi;  // one label per arc, in arc order
  std::vector<Elem> phi;  // realized net flows, in vertex order
  PartitionPath path = PartitionPath::Theorem;
  std::size_t pad_parts = 0;
  Certificate certificate;
};

// Group-irregular labeling: arc labels whose net flows are pairwise
// distinct. Solves one zero-sum partition demand per weak component and
// realizes the resulting flows. Succeeds for any group with a single
// involution once |group| >= |vertices| + 6 and every component has at
// least 4 vertices; other instances fall back to exhaustive search when
// allowed. The certificate re-checks the labeling from the arcs alone.
ArcLabeling label_digraph(const Group& g, const Digraph& d,
                          const GeneralOptions& opts = {});

// Recomputes net flows from psi and checks validity plus injectivity.
Certificate verify_labeling(const Group& g, const Digraph& d,
                            const std::vector<Elem>& psi);

}  // namespace irrlab
