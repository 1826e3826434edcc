#include "irrlab/parts.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace irrlab {

const char* to_string(PartKind k) {
  switch (k) {
    case PartKind::Pair: return "pair";
    case PartKind::Triple: return "triple";
    case PartKind::GoodSix: return "good6";
    case PartKind::Composite: return "composite";
  }
  return "?";
}

Order SizeDemand::total() const {
  Order t = 0;
  for (Order s : sizes) t += s;
  return t;
}

std::size_t SizeDemand::odd_count() const {
  std::size_t c = 0;
  for (Order s : sizes)
    if (s % 2) ++c;
  return c;
}

const char* to_string(PartitionPath p) {
  switch (p) {
    case PartitionPath::Theorem: return "theorem";
    case PartitionPath::Zeng: return "zeng";
    case PartitionPath::Oracle: return "oracle";
  }
  return "?";
}

PartitionPath path_from_string(const std::string& s) {
  if (s == "theorem") return PartitionPath::Theorem;
  if (s == "zeng") return PartitionPath::Zeng;
  if (s == "oracle") return PartitionPath::Oracle;
  throw input_error("unknown partition path '" + s + "'");
}

bool Certificate::pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.pass; });
}

void Certificate::add(const std::string& name, bool ok, const std::string& detail) {
  checks.push_back(Check{name, ok, detail});
}

void Certificate::warn(std::string w) { warnings.push_back(std::move(w)); }

ZeroSumPart inverse_pair(const Group& g, const Elem& x) {
  Elem a = g.canon(x);
  Elem b = g.neg(a);
  if (a == b || g.is_zero(a))
    throw input_error("inverse pair needs an element of order greater than 2");
  if (b < a) std::swap(a, b);
  ZeroSumPart p;
  p.kind = PartKind::Pair;
  p.elems = {std::move(a), std::move(b)};
  return p;
}

ZeroSumPart zero_triple(const Group& g, std::array<Elem, 3> t) {
  Elem s = g.add(g.add(t[0], t[1]), t[2]);
  if (!g.is_zero(s)) throw input_error("triple does not sum to zero");
  ZeroSumPart p;
  p.kind = PartKind::Triple;
  p.elems = {t[0], t[1], t[2]};
  std::sort(p.elems.begin(), p.elems.end());
  if (p.elems[0] == p.elems[1] || p.elems[1] == p.elems[2])
    throw input_error("triple has repeated elements");
  return p;
}

namespace {

// Structural invariants tied to the advertised kind of each part.
bool check_structure(const Group& g, const ZeroSumPart& p, std::string& detail,
                     std::size_t idx) {
  auto fail = [&](const std::string& why) {
    detail = "part " + std::to_string(idx) + ": " + why;
    return false;
  };
  switch (p.kind) {
    case PartKind::Pair:
      if (p.elems.size() != 2) return fail("pair with size != 2");
      if (g.neg(p.elems[0]) != p.elems[1]) return fail("pair is not (x, -x)");
      if (p.elems[1] < p.elems[0]) return fail("pair not canonically ordered");
      break;
    case PartKind::Triple:
      if (p.elems.size() != 3) return fail("triple with size != 3");
      break;
    case PartKind::GoodSix: {
      if (p.elems.size() != 6) return fail("good6 with size != 6");
      if (p.witnesses.size() != 2) return fail("good6 without two witnesses");
      const Elem& c = p.witnesses[0];
      const Elem& d = p.witnesses[1];
      std::vector<Elem> want = {c,        d,        g.neg(g.add(c, d)),
                                g.neg(c), g.neg(d), g.add(c, d)};
      if (p.elems != want) return fail("good6 elements do not match witnesses");
      break;
    }
    case PartKind::Composite: {
      if (p.blocks.empty()) break;  // plain composite: nothing extra to check
      std::vector<Elem> cat;
      for (const ZeroSumPart& b : p.blocks) {
        Elem s = g.zero();
        for (const Elem& e : b.elems) s = g.add(s, e);
        if (!g.is_zero(s)) return fail("composite block does not sum to zero");
        cat.insert(cat.end(), b.elems.begin(), b.elems.end());
      }
      if (cat != p.elems) return fail("composite elements differ from blocks");
      break;
    }
  }
  return true;
}

}  // namespace

Certificate verify_partition(const Group& g, const PartitionResult& pr,
                             const SizeDemand& demand) {
  Certificate cert;

  bool sizes_ok = pr.pad_parts <= pr.parts.size() &&
                  pr.parts.size() == demand.sizes.size() + pr.pad_parts;
  std::string sizes_detail;
  if (!sizes_ok) {
    sizes_detail = "expected " + std::to_string(demand.sizes.size()) + "+" +
                   std::to_string(pr.pad_parts) + " parts, found " +
                   std::to_string(pr.parts.size());
  } else {
    for (std::size_t i = 0; i < demand.sizes.size(); ++i) {
      if (static_cast<Order>(pr.parts[i].elems.size()) != demand.sizes[i]) {
        sizes_ok = false;
        sizes_detail = "part " + std::to_string(i) + " has size " +
                       std::to_string(pr.parts[i].elems.size()) + ", demanded " +
                       std::to_string(demand.sizes[i]);
        break;
      }
    }
  }
  cert.add("sizes", sizes_ok, sizes_detail);

  bool valid = true;
  std::string valid_detail;
  bool disjoint = true;
  std::string disjoint_detail;
  std::set<Elem> used;
  for (std::size_t i = 0; i < pr.parts.size() && valid; ++i) {
    for (const Elem& e : pr.parts[i].elems) {
      try {
        g.check(e);
      } catch (const input_error& ex) {
        valid = false;
        valid_detail = ex.what();
        break;
      }
      if (!used.insert(e).second && disjoint) {
        disjoint = false;
        disjoint_detail = "element " + g.format(e) + " repeats (part " +
                          std::to_string(i) + ")";
      }
    }
  }
  std::set<Elem> excl;
  for (const Elem& e : pr.excluded) {
    try {
      g.check(e);
    } catch (const input_error& ex) {
      if (valid) {
        valid = false;
        valid_detail = ex.what();
      }
      continue;
    }
    if (!excl.insert(e).second && disjoint) {
      disjoint = false;
      disjoint_detail = "excluded element " + g.format(e) + " repeats";
    }
  }
  cert.add("elements_valid", valid, valid_detail);
  cert.add("disjoint", disjoint, disjoint_detail);

  bool zero = true;
  std::string zero_detail;
  if (valid) {
    for (std::size_t i = 0; i < pr.parts.size(); ++i) {
      Elem s = g.zero();
      for (const Elem& e : pr.parts[i].elems) s = g.add(s, e);
      if (!g.is_zero(s)) {
        zero = false;
        zero_detail = "part " + std::to_string(i) + " sums to " + g.format(s);
        break;
      }
    }
  } else {
    zero = false;
    zero_detail = "skipped: invalid elements";
  }
  cert.add("zero_sum", zero, zero_detail);

  bool avoided = true;
  std::string avoided_detail;
  if (valid) {
    for (const Elem& e : excl) {
      if (used.count(e)) {
        avoided = false;
        avoided_detail = "excluded element " + g.format(e) + " is used";
        break;
      }
    }
  }
  cert.add("excluded_avoided", avoided, avoided_detail);

  bool structure = true;
  std::string structure_detail;
  if (valid) {
    for (std::size_t i = 0; i < pr.parts.size() && structure; ++i)
      structure = check_structure(g, pr.parts[i], structure_detail, i);
  }
  cert.add("structure", structure, structure_detail);

  if (pr.path != PartitionPath::Oracle) {
    // Constructive paths promise: parts + excluded = the whole group.
    bool cover = valid && disjoint && avoided &&
                 static_cast<Order>(used.size()) + static_cast<Order>(excl.size()) ==
                     g.order();
    std::string cover_detail;
    if (!cover)
      cover_detail = "covered " + std::to_string(used.size()) + " + excluded " +
                     std::to_string(excl.size()) + " of " +
                     std::to_string(g.order());
    cert.add("coverage", cover, cover_detail);
  }

  return cert;
}

}  // namespace irrlab
