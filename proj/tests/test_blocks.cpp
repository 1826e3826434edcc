#include <doctest.h>

#include <algorithm>
#include <set>

#include "irrlab/blocks.hpp"
#include "irrlab/errors.hpp"

using namespace irrlab;

namespace {

// union of parts == group minus excluded, parts disjoint and zero-sum
void check_exact(const Group& g, const std::vector<ZeroSumPart>& parts,
                 const std::set<Elem>& excluded) {
  std::set<Elem> seen(excluded.begin(), excluded.end());
  for (const ZeroSumPart& p : parts) {
    Elem sum = g.zero();
    for (const Elem& e : p.elems) {
      CHECK(g.canon(e) == e);
      CHECK_FALSE(seen.count(e));
      seen.insert(e);
      sum = g.add(sum, e);
    }
    CHECK(g.is_zero(sum));
  }
  CHECK(static_cast<Order>(seen.size()) == g.order());
}

std::vector<Order> flat(const ZeroSumPart& p) {
  std::vector<Order> out;
  for (const Elem& e : p.elems) out.push_back(e[0]);
  return out;
}

}  // namespace

TEST_CASE("six-element block from witnesses") {
  Group z7({7});
  ZeroSumPart p = good6_from_witnesses(z7, {1}, {2});
  CHECK(p.kind == PartKind::GoodSix);
  CHECK(flat(p) == std::vector<Order>{1, 2, 4, 6, 5, 3});
  CHECK(p.witnesses == std::vector<Elem>{{1}, {2}});

  // c = d collapses the block
  CHECK_THROWS_AS(good6_from_witnesses(z7, {1}, {1}), input_error);
  // d = -c collapses the block
  CHECK_THROWS_AS(good6_from_witnesses(z7, {2}, {5}), input_error);
  // d = 3c collides through -c-d = -4c exactly when 7c = 0
  CHECK_THROWS_AS(good6_from_witnesses(z7, {1}, {3}), input_error);
  CHECK_NOTHROW(good6_from_witnesses(Group({11}), {1}, {3}));
}

TEST_CASE("six-element block splits") {
  Group z7({7});
  ZeroSumPart p = good6_from_witnesses(z7, {1}, {2});

  auto pairs = split_good6(z7, p, SplitMode::Pairs);
  REQUIRE(pairs.size() == 3);
  CHECK(flat(pairs[0]) == std::vector<Order>{1, 6});
  CHECK(flat(pairs[1]) == std::vector<Order>{2, 5});
  CHECK(flat(pairs[2]) == std::vector<Order>{3, 4});
  for (const auto& q : pairs) CHECK(q.kind == PartKind::Pair);

  auto triples = split_good6(z7, p, SplitMode::Triples);
  REQUIRE(triples.size() == 2);
  CHECK(flat(triples[0]) == std::vector<Order>{1, 2, 4});
  CHECK(flat(triples[1]) == std::vector<Order>{3, 5, 6});
  for (const auto& t : triples) CHECK(t.kind == PartKind::Triple);

  ZeroSumPart fake = p;
  fake.elems[0] = {4};
  CHECK_THROWS_AS(split_good6(z7, fake, SplitMode::Pairs), input_error);
}

TEST_CASE("paired triples over even cyclic groups") {
  PairedTriples pt = zeng_paired(10, 1);
  REQUIRE(pt.status == SearchStatus::Found);
  REQUIRE(pt.tuples.size() == 2);
  CHECK(pt.tuples[0] == std::array<Order, 3>{1, 2, 7});
  CHECK(pt.tuples[1] == std::array<Order, 3>{8, 9, 3});
  CHECK(pt.pair_reps == std::vector<Order>{4});

  // partner tuples are elementwise negations as sets, for every n
  for (Order n = 4; n <= 30; n += 2) {
    Order classes = (n - 2) / 2;
    for (Order j = 0; 3 * j <= classes; ++j) {
      PairedTriples r = zeng_paired(n, j);
      if (r.status != SearchStatus::Found) continue;
      REQUIRE(r.tuples.size() == static_cast<std::size_t>(2 * j));
      for (std::size_t i = 0; i < r.tuples.size(); i += 2) {
        std::set<Order> neg_first;
        for (Order v : r.tuples[i]) neg_first.insert((n - v) % n);
        std::set<Order> second(r.tuples[i + 1].begin(), r.tuples[i + 1].end());
        CHECK(neg_first == second);
        CHECK((r.tuples[i][0] + r.tuples[i][1] + r.tuples[i][2]) % n == 0);
      }
    }
  }

  CHECK_THROWS_AS(zeng_paired(9, 1), input_error);
  CHECK_THROWS_AS(zeng_paired(10, 2), input_error);
}

TEST_CASE("even cyclic decomposition, fixed cases") {
  Group z10({10});
  auto parts = zeng_partition(10, 2, 1);
  REQUIRE(parts.size() == 3);
  CHECK(flat(parts[0]) == std::vector<Order>{1, 2, 7});
  CHECK(flat(parts[1]) == std::vector<Order>{3, 8, 9});
  CHECK(flat(parts[2]) == std::vector<Order>{4, 6});
  check_exact(z10, parts, {{0}, {5}});

  auto pairs_only = zeng_partition(10, 0, 4);
  REQUIRE(pairs_only.size() == 4);
  CHECK(flat(pairs_only[0]) == std::vector<Order>{1, 9});
  CHECK(flat(pairs_only[1]) == std::vector<Order>{2, 8});
  CHECK(flat(pairs_only[2]) == std::vector<Order>{3, 7});
  CHECK(flat(pairs_only[3]) == std::vector<Order>{4, 6});

  auto tiny = zeng_partition(4, 0, 1);
  REQUIRE(tiny.size() == 1);
  CHECK(flat(tiny[0]) == std::vector<Order>{1, 3});

  CHECK_THROWS_AS(zeng_partition(10, 1, 2), input_error);  // 3+4 != 8
  CHECK_THROWS_AS(zeng_partition(7, 1, 1), input_error);
}

TEST_CASE("even cyclic decomposition falls back when no paired cover exists") {
  // n = 14 with four triples has no class-paired cover; the element search
  // still finds one and the flag reports it.
  CHECK(zeng_paired(14, 2).status == SearchStatus::Exhausted);
  Group z14({14});
  bool used_search = false;
  auto parts = zeng_partition(14, 4, 0, &used_search);
  CHECK(used_search);
  REQUIRE(parts.size() == 4);
  CHECK(flat(parts[0]) == std::vector<Order>{1, 3, 10});
  CHECK(flat(parts[1]) == std::vector<Order>{2, 4, 8});
  CHECK(flat(parts[2]) == std::vector<Order>{5, 11, 12});
  CHECK(flat(parts[3]) == std::vector<Order>{6, 9, 13});
  check_exact(z14, parts, {{0}, {7}});

  used_search = true;
  zeng_partition(10, 2, 1, &used_search);
  CHECK_FALSE(used_search);
}

TEST_CASE("even cyclic decomposition sweep") {
  for (Order n = 4; n <= 24; n += 2) {
    Group g({n});
    for (Order m = 0; 3 * m <= n - 2; ++m) {
      if ((n - 2 - 3 * m) % 2) continue;
      Order l = (n - 2 - 3 * m) / 2;
      auto parts = zeng_partition(n, m, l);
      REQUIRE(parts.size() == static_cast<std::size_t>(m + l));
      for (Order i = 0; i < m; ++i)
        CHECK(parts[static_cast<std::size_t>(i)].elems.size() == 3);
      for (Order i = m; i < m + l; ++i)
        CHECK(parts[static_cast<std::size_t>(i)].elems.size() == 2);
      check_exact(g, parts, {{0}, {n / 2}});
    }
  }
}

TEST_CASE("odd-order block decomposition, fixed cases") {
  Group z9({9});
  SkolemParts sp = skolem_parts(z9);
  REQUIRE(sp.good6.size() == 1);
  CHECK(flat(sp.good6[0]) == std::vector<Order>{1, 2, 6, 8, 7, 3});
  CHECK(sp.pair_reps == std::vector<Elem>{{4}});

  Group z7({7});
  SkolemParts s7 = skolem_parts(z7);
  REQUIRE(s7.good6.size() == 1);
  CHECK(flat(s7.good6[0]) == std::vector<Order>{1, 2, 4, 6, 5, 3});
  CHECK(s7.pair_reps.empty());

  Group z33({3, 3});
  SkolemParts s33 = skolem_parts(z33);
  REQUIRE(s33.good6.size() == 1);
  CHECK(s33.good6[0].elems ==
        std::vector<Elem>{{0, 1}, {1, 0}, {2, 2}, {0, 2}, {2, 0}, {1, 1}});
  CHECK(s33.pair_reps == std::vector<Elem>{{1, 2}});

  CHECK_THROWS_AS(skolem_parts(Group({4})), input_error);
}

TEST_CASE("odd-order block decomposition sweep") {
  // every abelian group of odd order up to 81
  std::vector<std::vector<Order>> shapes;
  std::vector<Order> cur;
  auto rec = [&](auto&& self, Order max_first, Order budget) -> void {
    if (!cur.empty()) shapes.push_back(cur);
    for (Order f = 3; f <= max_first && f <= budget; f += 2) {
      cur.push_back(f);
      self(self, f, budget / f);
      cur.pop_back();
    }
  };
  rec(rec, 81, 81);
  CHECK(shapes.size() > 10);
  for (const auto& fs : shapes) {
    Group h(fs);
    auto parts = skolem_partition(h);
    Order p = (h.order() % 6 - 1) / 2;
    Order k = (h.order() - 2 * p - 1) / 6;
    REQUIRE(parts.size() == static_cast<std::size_t>(k + p));
    for (Order i = 0; i < k; ++i) {
      const auto& b = parts[static_cast<std::size_t>(i)];
      CHECK(b.kind == PartKind::GoodSix);
      REQUIRE(b.witnesses.size() == 2);
      CHECK(good6_from_witnesses(h, b.witnesses[0], b.witnesses[1]).elems ==
            b.elems);
    }
    for (Order i = k; i < k + p; ++i)
      CHECK(parts[static_cast<std::size_t>(i)].kind == PartKind::Pair);
    check_exact(h, parts, {h.zero()});
  }
}

TEST_CASE("odd-order decomposition of the trivial group is empty") {
  CHECK(skolem_partition(Group()).empty());
  CHECK(skolem_parts(Group()).good6.empty());
}
