#include "irrlab/json_io.hpp"

#include <algorithm>
#include <string>

#include "irrlab/errors.hpp"

namespace irrlab {

namespace {

using nlohmann::json;

json elems_json(const Group& g, const std::vector<Elem>& es) {
  json a = json::array();
  for (const auto& e : es) a.push_back(g.format(e));
  return a;
}

std::vector<Elem> elems_from(const Group& g, const json& a,
                             const std::string& what) {
  if (!a.is_array()) throw input_error(what + " must be an array");
  std::vector<Elem> out;
  out.reserve(a.size());
  for (const auto& s : a) {
    if (!s.is_string())
      throw input_error(what + " must hold element strings");
    out.push_back(g.parse_element(s.get<std::string>()));
  }
  return out;
}

PartKind kind_from_string(const std::string& s) {
  if (s == "pair") return PartKind::Pair;
  if (s == "triple") return PartKind::Triple;
  if (s == "good6") return PartKind::GoodSix;
  if (s == "composite") return PartKind::Composite;
  throw input_error("unknown part kind '" + s + "'");
}

json part_rich_json(const Group& g, const ZeroSumPart& p) {
  json o;
  o["kind"] = to_string(p.kind);
  o["elements"] = elems_json(g, p.elems);
  o["witnesses"] = elems_json(g, p.witnesses);
  return o;
}

Certificate verify_partition_doc(const json& doc) {
  Group g = Group::parse(doc.at("group").get<std::string>());
  PartitionResult pr;
  pr.group = g;
  pr.excluded = elems_from(g, doc.at("excluded"), "excluded");
  pr.pad_parts = doc.value("pad_parts", 0);
  pr.path = path_from_string(doc.at("path").get<std::string>());
  const json& parts = doc.at("parts");
  if (!parts.is_array()) throw input_error("parts must be an array");
  SizeDemand demand;
  for (const auto& arr : parts) {
    ZeroSumPart p;
    p.elems = elems_from(g, arr, "part");
    pr.parts.push_back(std::move(p));
  }
  if (pr.pad_parts > pr.parts.size())
    throw input_error("pad_parts exceeds the part count");
  for (std::size_t i = 0; i + pr.pad_parts < pr.parts.size(); ++i)
    demand.sizes.push_back(static_cast<Order>(pr.parts[i].elems.size()));
  return verify_partition(g, pr, demand);
}

Certificate verify_blocks_doc(const json& doc) {
  Group g = Group::parse(doc.at("group").get<std::string>());
  PartitionResult pr;
  pr.group = g;
  pr.excluded = elems_from(g, doc.at("excluded"), "excluded");
  pr.path = PartitionPath::Zeng;  // blocks promise exact coverage
  SizeDemand demand;
  for (const auto& o : doc.at("parts")) {
    ZeroSumPart p;
    p.kind = kind_from_string(o.at("kind").get<std::string>());
    p.elems = elems_from(g, o.at("elements"), "elements");
    if (o.contains("witnesses"))
      p.witnesses = elems_from(g, o.at("witnesses"), "witnesses");
    demand.sizes.push_back(static_cast<Order>(p.elems.size()));
    pr.parts.push_back(std::move(p));
  }
  return verify_partition(g, pr, demand);
}

Certificate verify_labeling_doc(const json& doc) {
  Group g = Group::parse(doc.at("group").get<std::string>());
  Digraph d;
  std::vector<Elem> declared;
  for (const auto& o : doc.at("phi"))
    d.vertices.push_back(o.at("vertex").get<std::string>());
  if (!std::is_sorted(d.vertices.begin(), d.vertices.end()) ||
      std::adjacent_find(d.vertices.begin(), d.vertices.end()) !=
          d.vertices.end())
    throw input_error("phi vertices must be unique and sorted");
  declared.reserve(d.vertices.size());
  for (const auto& o : doc.at("phi"))
    declared.push_back(g.parse_element(o.at("value").get<std::string>()));

  std::vector<Elem> psi;
  for (const auto& o : doc.at("arcs")) {
    std::size_t t = d.index_of(o.at("tail").get<std::string>());
    std::size_t h = d.index_of(o.at("head").get<std::string>());
    if (t == h) throw input_error("loop at vertex '" + d.vertices[t] + "'");
    d.arcs.emplace_back(t, h);
    psi.push_back(g.parse_element(o.at("label").get<std::string>()));
  }

  Certificate cert = verify_labeling(g, d, psi);
  if (psi.size() == d.arcs.size()) {
    auto flows = net_flows(g, d, psi);
    bool match = true;
    std::string detail = "recomputed net flows equal the declared phi";
    for (std::size_t v = 0; v < flows.size(); ++v)
      if (flows[v] != declared[v]) {
        match = false;
        detail = "vertex '" + d.vertices[v] + "' declares " +
                 g.format(declared[v]) + " but the labels give " +
                 g.format(flows[v]);
        break;
      }
    cert.add("declared-flows", match, detail);
  }
  return cert;
}

Certificate verify_oracle_doc(const json& doc) {
  const std::string verdict = doc.at("verdict").get<std::string>();
  if (verdict != "feasible" && verdict != "infeasible" && verdict != "unknown")
    throw input_error("unknown verdict '" + verdict + "'");
  if (verdict == "feasible") {
    if (!doc.contains("partition"))
      throw input_error("feasible report without a partition");
    return verify_document(doc.at("partition"));
  }
  Certificate cert;
  cert.add("verdict", !doc.contains("partition"),
           verdict + " report carries no partition to re-check");
  return cert;
}

}  // namespace

json certificate_json(const Certificate& c) {
  json o;
  o["pass"] = c.pass();
  json checks = json::array();
  for (const auto& chk : c.checks) {
    json e;
    e["name"] = chk.name;
    e["pass"] = chk.pass;
    e["detail"] = chk.detail;
    checks.push_back(std::move(e));
  }
  o["checks"] = std::move(checks);
  o["warnings"] = c.warnings;
  return o;
}

json partition_json(const PartitionResult& pr) {
  json o;
  o["kind"] = "partition";
  o["group"] = pr.group.name();
  o["excluded"] = elems_json(pr.group, pr.excluded);
  json parts = json::array();
  for (const auto& p : pr.parts) parts.push_back(elems_json(pr.group, p.elems));
  o["parts"] = std::move(parts);
  o["pad_parts"] = pr.pad_parts;
  o["path"] = to_string(pr.path);
  o["certificate"] = certificate_json(pr.certificate);
  return o;
}

json blocks_json(const std::string& kind, const Group& g,
                 const std::vector<Elem>& excluded,
                 const std::vector<ZeroSumPart>& parts) {
  json o;
  o["kind"] = kind;
  o["group"] = g.name();
  o["excluded"] = elems_json(g, excluded);
  json ps = json::array();
  for (const auto& p : parts) ps.push_back(part_rich_json(g, p));
  o["parts"] = std::move(ps);
  o["certificate"] = certificate_json(verify_blocks_doc(o));
  return o;
}

json labeling_json(const Digraph& d, const ArcLabeling& lab) {
  json o;
  o["kind"] = "labeling";
  o["group"] = lab.group.name();
  json arcs = json::array();
  for (std::size_t a = 0; a < d.arcs.size(); ++a) {
    json e;
    e["tail"] = d.vertices[d.arcs[a].first];
    e["head"] = d.vertices[d.arcs[a].second];
    e["label"] = lab.group.format(lab.psi[a]);
    arcs.push_back(std::move(e));
  }
  o["arcs"] = std::move(arcs);
  json phi = json::array();
  for (std::size_t v = 0; v < d.vertices.size(); ++v) {
    json e;
    e["vertex"] = d.vertices[v];
    e["value"] = lab.group.format(lab.phi[v]);
    phi.push_back(std::move(e));
  }
  o["phi"] = std::move(phi);
  o["path"] = to_string(lab.path);
  o["certificate"] = certificate_json(lab.certificate);
  return o;
}

json oracle_json(const Group& g, const OracleOutcome& out) {
  json o;
  o["kind"] = "oracle";
  o["group"] = g.name();
  o["verdict"] = to_string(out.verdict);
  o["nodes"] = out.nodes;
  o["elapsed_ms"] = out.elapsed_ms;
  if (out.partition) o["partition"] = partition_json(*out.partition);
  return o;
}

json cross_json(const CrossReport& rep) {
  json o;
  o["group"] = rep.group.name();
  o["sizes"] = rep.demand.sizes;
  o["theorem"] = rep.theorem_verdict;
  o["oracle"] = rep.oracle_verdict;
  o["disagreement"] = rep.disagreement;
  return o;
}

Certificate verify_document(const json& doc) {
  std::string kind;
  try {
    kind = doc.at("kind").get<std::string>();
  } catch (const json::exception&) {
    throw input_error("document has no usable 'kind' field");
  }
  try {
    if (kind == "partition") return verify_partition_doc(doc);
    if (kind == "zeng" || kind == "skolem") return verify_blocks_doc(doc);
    if (kind == "labeling") return verify_labeling_doc(doc);
    if (kind == "oracle") return verify_oracle_doc(doc);
  } catch (const json::exception& e) {
    throw input_error("malformed " + kind + " document: " + e.what());
  }
  throw input_error("cannot verify documents of kind '" + kind + "'");
}

}  // namespace irrlab
