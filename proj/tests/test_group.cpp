#include <doctest.h>

#include <algorithm>
#include <functional>
#include <vector>

#include "irrlab/group.hpp"

using namespace irrlab;

namespace {

// All factor lists (each >= 2, non-decreasing) with product <= max_order.
std::vector<std::vector<Order>> factor_lists(Order max_order) {
  std::vector<std::vector<Order>> out;
  std::vector<Order> cur;
  std::function<void(Order, Order)> rec = [&](Order prod, Order min_f) {
    if (!cur.empty()) out.push_back(cur);
    for (Order f = min_f; prod * f <= max_order; ++f) {
      cur.push_back(f);
      rec(prod * f, f);
      cur.pop_back();
    }
  };
  rec(1, 2);
  return out;
}

}  // namespace

TEST_CASE("parse and name") {
  Group g = Group::parse("Z4xZ9");
  CHECK(g.factors() == std::vector<Order>{4, 9});
  CHECK(g.order() == 36);
  CHECK(g.arity() == 2);
  CHECK(g.name() == "Z4xZ9");
  CHECK(Group::parse(" z4 X z9 ") == g);
  CHECK(Group::parse("Z17").name() == "Z17");

  CHECK_THROWS_AS(Group::parse(""), input_error);
  CHECK_THROWS_AS(Group::parse("Z1"), input_error);
  CHECK_THROWS_AS(Group::parse("Z4x"), input_error);
  CHECK_THROWS_AS(Group::parse("xZ4"), input_error);
  CHECK_THROWS_AS(Group::parse("Z4yZ9"), input_error);
  CHECK_THROWS_AS(Group::parse("Q8"), input_error);
  CHECK_THROWS_AS(Group::parse("Z"), input_error);
}

TEST_CASE("arithmetic") {
  Group g = Group::parse("Z4xZ9");
  CHECK(g.add({3, 7}, {2, 5}) == Elem{1, 3});
  CHECK(g.sub({1, 3}, {2, 5}) == Elem{3, 7});
  CHECK(g.canon({-1, 10}) == Elem{3, 1});
  CHECK(g.is_zero(g.zero()));
  CHECK_FALSE(g.is_zero({0, 1}));
  CHECK_THROWS_AS(g.check({4, 0}), input_error);
  CHECK_THROWS_AS(g.check({0, 0, 0}), input_error);

  Group z9 = Group::parse("Z9");
  CHECK(z9.neg({2}) == Elem{7});
  CHECK(z9.neg({0}) == Elem{0});
}

TEST_CASE("involutions") {
  Group g = Group::parse("Z2xZ2xZ3");
  std::vector<Elem> want{{0, 1, 0}, {1, 0, 0}, {1, 1, 0}};
  CHECK(g.involutions() == want);
  CHECK(Group::parse("Z12").involutions() == std::vector<Elem>{{6}});
  CHECK(Group::parse("Z9").involutions().empty());
  CHECK(Group::parse("Z4xZ9").involutions() == std::vector<Elem>{{2, 0}});
}

TEST_CASE("sum of all elements matches involution rule, orders up to 32") {
  for (const auto& fac : factor_lists(32)) {
    Group g(fac);
    // brute force
    Elem s = g.zero();
    for (const Elem& e : g.enumerate()) s = g.add(s, e);
    CHECK(g.sum_all() == s);
    auto inv = g.involutions();
    if (inv.size() == 1) {
      CHECK(s == inv[0]);
    } else {
      CHECK(g.is_zero(s));
    }
  }
}

TEST_CASE("enumerate order") {
  Group g = Group::parse("Z2xZ3");
  std::vector<Elem> want{{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {1, 2}};
  CHECK(g.enumerate() == want);
  Group big = Group::parse("Z1000xZ1001xZ1002");
  CHECK_THROWS_AS(big.enumerate(), resource_error);
}

TEST_CASE("invariant factors and cyclicity") {
  CHECK(Group::parse("Z2xZ9").invariant_factors() == std::vector<Order>{18});
  CHECK(Group::parse("Z2xZ9").is_cyclic());
  CHECK(Group::parse("Z4xZ9").invariant_factors() == std::vector<Order>{36});
  CHECK(Group::parse("Z2xZ4").invariant_factors() == std::vector<Order>{2, 4});
  CHECK_FALSE(Group::parse("Z2xZ4").is_cyclic());
  CHECK(Group::parse("Z2xZ2xZ3").invariant_factors() == std::vector<Order>{2, 6});
  CHECK(Group::parse("Z12xZ18").invariant_factors() == std::vector<Order>{6, 36});
  CHECK(Group().invariant_factors().empty());
  CHECK(Group().is_cyclic());
}

TEST_CASE("format and parse_element") {
  Group g = Group::parse("Z4xZ9");
  CHECK(g.format({3, 7}) == "(3,7)");
  CHECK(g.parse_element("(3,7)") == Elem{3, 7});
  CHECK(g.parse_element("( 3 , 7 )") == Elem{3, 7});
  CHECK(g.parse_element("(-1,10)") == Elem{3, 1});
  CHECK_THROWS_AS(g.parse_element("(3)"), input_error);
  CHECK_THROWS_AS(g.parse_element("(3,7,1)"), input_error);
  CHECK_THROWS_AS(g.parse_element("(3,a)"), input_error);
  CHECK_THROWS_AS(g.parse_element("(3,"), input_error);

  Group z9 = Group::parse("Z9");
  CHECK(z9.format({5}) == "5");
  CHECK(z9.parse_element("5") == Elem{5});
  CHECK(z9.parse_element("(5)") == Elem{5});
  CHECK(z9.parse_element("-2") == Elem{7});
}

TEST_CASE("primary pieces") {
  Group g = Group::parse("Z12xZ18");
  auto pcs = primary_pieces(g);
  REQUIRE(pcs.size() == 4);
  CHECK(pcs[0] == Piece{0, 2, 4});
  CHECK(pcs[1] == Piece{0, 3, 3});
  CHECK(pcs[2] == Piece{1, 2, 2});
  CHECK(pcs[3] == Piece{1, 3, 9});
}

TEST_CASE("cyclic_form round trip") {
  Group g = Group::parse("Z2xZ9");
  Regrouping iso = cyclic_form(g);
  CHECK(iso.view().name() == "Z18");
  CHECK(iso.to_view({1, 0}) == Elem{9});
  CHECK(iso.to_gamma({9}) == Elem{1, 0});
  for (const Elem& e : g.enumerate()) {
    Elem v = iso.to_view(e);
    CHECK(iso.to_gamma(v) == e);
  }
  // identity when the group is already Z_n
  Group z18 = Group::parse("Z18");
  Regrouping id = cyclic_form(z18);
  for (const Elem& e : z18.enumerate()) CHECK(id.to_view(e) == e);

  CHECK_THROWS_AS(cyclic_form(Group::parse("Z2xZ4")), input_error);
  CHECK_THROWS_AS(cyclic_form(Group()), input_error);
}

TEST_CASE("regrouping rejects bad slot layouts") {
  Group g = Group::parse("Z2xZ4");
  auto pcs = primary_pieces(g);  // (0,2,2), (1,2,4)
  REQUIRE(pcs.size() == 2);
  CHECK_THROWS_AS(Regrouping(g, {{pcs[0], pcs[1]}}), input_error);  // shared prime
  CHECK_THROWS_AS(Regrouping(g, {{pcs[0]}}), input_error);          // missing piece
  CHECK_THROWS_AS(Regrouping(g, {{pcs[0]}, {pcs[0]}}), input_error);
  CHECK_THROWS_AS(Regrouping(g, {{pcs[0]}, {}}), input_error);
}

TEST_CASE("factor_2_odd splits") {
  {
    TwoOddSplit s = factor_2_odd(Group::parse("Z12"));
    CHECK(s.L.name() == "Z4");
    CHECK(s.H.name() == "Z3");
    CHECK(s.l_count == 1);
    CHECK(s.embed({1}, {2}) == Elem{5});
    auto [l, h] = s.split({5});
    CHECK(l == Elem{1});
    CHECK(h == Elem{2});
  }
  {
    TwoOddSplit s = factor_2_odd(Group::parse("Z2xZ2xZ3"));
    CHECK(s.L.name() == "Z2xZ2");
    CHECK(s.H.name() == "Z3");
    CHECK(s.l_count == 2);
  }
  {
    TwoOddSplit s = factor_2_odd(Group::parse("Z45"));
    CHECK(s.l_count == 0);
    CHECK(s.L.order() == 1);
    CHECK(s.H.name() == "Z45");
  }
  {
    TwoOddSplit s = factor_2_odd(Group::parse("Z8"));
    CHECK(s.L.name() == "Z8");
    CHECK(s.H.order() == 1);
  }
  {
    // round trip through a mixed group
    Group g = Group::parse("Z12xZ18");
    TwoOddSplit s = factor_2_odd(g);
    CHECK(s.L.name() == "Z4xZ2");
    CHECK(s.H.name() == "Z3xZ9");
    for (const Elem& e : g.enumerate()) {
      auto [l, h] = s.split(e);
      CHECK(s.embed(l, h) == e);
    }
  }
}
