#include "irrlab/labeling.hpp"

#include <algorithm>
#include <cstddef>
#include <deque>
#include <set>
#include <string>
#include <vector>

#include "irrlab/errors.hpp"

namespace irrlab {

namespace {

struct BfsForest {
  std::vector<std::size_t> order;       // discovery order, roots ascending
  std::vector<std::size_t> parent_arc;  // SIZE_MAX at roots
};

BfsForest bfs_forest(const Digraph& d) {
  std::vector<std::vector<std::size_t>> adj(d.vertices.size());
  for (std::size_t a = 0; a < d.arcs.size(); ++a) {
    adj[d.arcs[a].first].push_back(a);
    adj[d.arcs[a].second].push_back(a);
  }
  BfsForest f;
  f.order.reserve(d.vertices.size());
  f.parent_arc.assign(d.vertices.size(), SIZE_MAX);
  std::vector<char> visited(d.vertices.size(), 0);
  for (std::size_t root = 0; root < d.vertices.size(); ++root) {
    if (visited[root]) continue;
    visited[root] = 1;
    std::deque<std::size_t> q{root};
    while (!q.empty()) {
      std::size_t v = q.front();
      q.pop_front();
      f.order.push_back(v);
      for (std::size_t a : adj[v]) {
        std::size_t w =
            d.arcs[a].first == v ? d.arcs[a].second : d.arcs[a].first;
        if (visited[w]) continue;
        visited[w] = 1;
        f.parent_arc[w] = a;
        q.push_back(w);
      }
    }
  }
  return f;
}

}  // namespace

std::vector<Elem> net_flows(const Group& g, const Digraph& d,
                            const std::vector<Elem>& psi) {
  if (psi.size() != d.arcs.size())
    throw input_error("expected " + std::to_string(d.arcs.size()) +
                      " arc labels, got " + std::to_string(psi.size()));
  std::vector<Elem> flow(d.vertices.size(), g.zero());
  for (std::size_t a = 0; a < d.arcs.size(); ++a) {
    g.check(psi[a]);
    const auto& [t, h] = d.arcs[a];
    flow[t] = g.add(flow[t], psi[a]);
    flow[h] = g.sub(flow[h], psi[a]);
  }
  return flow;
}

std::vector<Elem> realize_flows(const Group& g, const Digraph& d,
                                const std::vector<Elem>& phi) {
  if (phi.size() != d.vertices.size())
    throw input_error("expected " + std::to_string(d.vertices.size()) +
                      " net flows, got " + std::to_string(phi.size()));
  for (const auto& v : phi) g.check(v);
  for (const auto& comp : weak_components(d)) {
    Elem s = g.zero();
    for (std::size_t v : comp) s = g.add(s, phi[v]);
    if (!g.is_zero(s))
      throw input_error("net flows on the component of '" +
                        d.vertices[comp.front()] + "' sum to " + g.format(s) +
                        ", not zero");
  }

  std::vector<std::vector<std::size_t>> adj(d.vertices.size());
  for (std::size_t a = 0; a < d.arcs.size(); ++a) {
    adj[d.arcs[a].first].push_back(a);
    adj[d.arcs[a].second].push_back(a);
  }
  BfsForest f = bfs_forest(d);

  // Children precede parents in reverse discovery order, so every incident
  // arc except the parent arc is already final when a vertex settles.
  std::vector<Elem> psi(d.arcs.size(), g.zero());
  for (auto it = f.order.rbegin(); it != f.order.rend(); ++it) {
    std::size_t v = *it;
    if (f.parent_arc[v] == SIZE_MAX) continue;  // roots balance automatically
    Elem cur = g.zero();
    for (std::size_t a : adj[v])
      cur = d.arcs[a].first == v ? g.add(cur, psi[a]) : g.sub(cur, psi[a]);
    Elem delta = g.sub(phi[v], cur);
    std::size_t pa = f.parent_arc[v];
    psi[pa] = d.arcs[pa].first == v ? delta : g.neg(delta);
  }
  return psi;
}

Certificate verify_labeling(const Group& g, const Digraph& d,
                            const std::vector<Elem>& psi) {
  Certificate cert;
  if (psi.size() != d.arcs.size()) {
    cert.add("labels", false,
             "expected " + std::to_string(d.arcs.size()) + " labels, got " +
                 std::to_string(psi.size()));
    return cert;
  }
  bool valid = true;
  std::string detail;
  for (const auto& e : psi) {
    try {
      g.check(e);
    } catch (const input_error& ex) {
      valid = false;
      detail = ex.what();
      break;
    }
  }
  cert.add("labels", valid, detail);
  if (!valid) return cert;

  auto flow = net_flows(g, d, psi);
  std::set<Elem> seen;
  bool inj = true;
  for (std::size_t v = 0; v < flow.size(); ++v)
    if (!seen.insert(flow[v]).second) {
      inj = false;
      cert.add("flows-injective", false,
               "net flow " + g.format(flow[v]) + " repeats at vertex '" +
                   d.vertices[v] + "'");
      break;
    }
  if (inj)
    cert.add("flows-injective", true,
             std::to_string(flow.size()) + " distinct net flows");
  return cert;
}

ArcLabeling label_digraph(const Group& g, const Digraph& d,
                          const GeneralOptions& opts) {
  ArcLabeling trivial;
  trivial.group = g;
  if (d.vertices.empty()) {
    trivial.certificate = verify_labeling(g, d, {});
    return trivial;
  }

  auto comps = weak_components(d);
  SizeDemand demand;
  demand.sizes.reserve(comps.size());
  for (const auto& c : comps) {
    if (c.size() == 1)
      throw input_error("weak component of '" + d.vertices[c.front()] +
                        "' is a single vertex; every component needs at "
                        "least 2 vertices");
    demand.sizes.push_back(static_cast<Order>(c.size()));
  }

  PartitionResult pr = general_partition(g, demand, opts);

  // Within a component, elements in ascending order go to vertices in BFS
  // discovery order. Discovery visits components consecutively by smallest
  // vertex, matching the component (and hence part) order.
  ArcLabeling lab;
  lab.group = g;
  lab.path = pr.path;
  lab.pad_parts = pr.pad_parts;
  lab.phi.assign(d.vertices.size(), g.zero());
  BfsForest f = bfs_forest(d);
  std::size_t at = 0;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    std::vector<Elem> elems = pr.parts[i].elems;
    std::sort(elems.begin(), elems.end());
    for (std::size_t k = 0; k < comps[i].size(); ++k)
      lab.phi[f.order[at++]] = elems[k];
  }
  lab.psi = realize_flows(g, d, lab.phi);

  lab.certificate = verify_labeling(g, d, lab.psi);
  auto realized = net_flows(g, d, lab.psi);
  lab.certificate.add("declared-flows", realized == lab.phi,
                      "net flows match the assigned partition elements");
  for (const auto& w : pr.certificate.warnings) lab.certificate.warn(w);
  if (!lab.certificate.pass())
    throw construction_error("labeling failed verification");
  return lab;
}

}  // namespace irrlab
