#include "irrlab/digraph.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <vector>

#include "irrlab/errors.hpp"

namespace irrlab {

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
  std::string body = line.substr(0, line.find('#'));
  std::istringstream in(body);
  std::vector<std::string> toks;
  std::string t;
  while (in >> t) toks.push_back(t);
  return toks;
}

[[noreturn]] void bad_line(std::size_t no, const std::string& msg) {
  throw input_error("line " + std::to_string(no) + ": " + msg);
}

}  // namespace

std::size_t Digraph::index_of(const std::string& id) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), id);
  if (it == vertices.end() || *it != id)
    throw input_error("unknown vertex '" + id + "'");
  return static_cast<std::size_t>(it - vertices.begin());
}

Digraph parse_digraph(const std::string& text) {
  struct Line {
    std::size_t no;
    std::vector<std::string> toks;
  };
  std::vector<Line> lines;
  {
    std::istringstream in(text);
    std::string raw;
    for (std::size_t no = 1; std::getline(in, raw); ++no) {
      auto toks = tokens_of(raw);
      if (!toks.empty()) lines.push_back({no, std::move(toks)});
    }
  }

  Digraph d;
  {
    std::map<std::string, std::size_t> seen;
    for (const auto& ln : lines) {
      if (ln.toks[0] != "v") continue;
      if (ln.toks.size() != 2) bad_line(ln.no, "vertex lines read 'v <id>'");
      if (ln.toks[1] == "v")
        bad_line(ln.no, "'v' is reserved and cannot name a vertex");
      if (!seen.emplace(ln.toks[1], ln.no).second)
        bad_line(ln.no, "vertex '" + ln.toks[1] + "' declared more than once");
      d.vertices.push_back(ln.toks[1]);
    }
  }
  std::sort(d.vertices.begin(), d.vertices.end());

  for (const auto& ln : lines) {
    if (ln.toks[0] == "v") continue;
    if (ln.toks.size() != 2) bad_line(ln.no, "arc lines read '<tail> <head>'");
    std::size_t t, h;
    try {
      t = d.index_of(ln.toks[0]);
      h = d.index_of(ln.toks[1]);
    } catch (const input_error& e) {
      bad_line(ln.no, e.what());
    }
    if (t == h) bad_line(ln.no, "loop at vertex '" + ln.toks[0] + "'");
    d.arcs.emplace_back(t, h);
  }
  return d;
}

std::string format_digraph(const Digraph& d) {
  std::ostringstream out;
  for (const auto& id : d.vertices) out << "v " << id << "\n";
  for (const auto& [t, h] : d.arcs)
    out << d.vertices[t] << " " << d.vertices[h] << "\n";
  return out.str();
}

std::vector<std::vector<std::size_t>> weak_components(const Digraph& d) {
  std::vector<std::size_t> root(d.vertices.size());
  for (std::size_t i = 0; i < root.size(); ++i) root[i] = i;
  auto find = [&](std::size_t x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  for (const auto& [t, h] : d.arcs) {
    std::size_t a = find(t), b = find(h);
    if (a != b) root[std::max(a, b)] = std::min(a, b);
  }
  std::map<std::size_t, std::vector<std::size_t>> comps;
  for (std::size_t i = 0; i < root.size(); ++i) comps[find(i)].push_back(i);
  std::vector<std::vector<std::size_t>> out;
  out.reserve(comps.size());
  for (auto& [r, vs] : comps) out.push_back(std::move(vs));
  return out;
}

}  // namespace irrlab
