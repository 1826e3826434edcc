#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace irrlab {

// Directed multigraph. Vertex ids are held sorted; arcs store vertex
// indices in input order. Parallel arcs are allowed, loops are not.
struct Digraph {
  std::vector<std::string> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> arcs;  // (tail, head)
  std::size_t index_of(const std::string& id) const;      // input_error if absent
};

// Line-oriented text format:
//   v <id>          declares a vertex ("v" itself is reserved)
//   <tail> <head>   declares an arc between declared vertices
// '#' starts a comment, blank lines are ignored. Errors carry the
// offending line number. Declarations may appear in any order.
Digraph parse_digraph(const std::string& text);
std::string format_digraph(const Digraph& d);

// Vertex index sets of the weak components (arc direction ignored),
// each ascending, ordered by smallest member.
std::vector<std::vector<std::size_t>> weak_components(const Digraph& d);

}  // namespace irrlab
