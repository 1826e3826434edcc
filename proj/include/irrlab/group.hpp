#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "irrlab/errors.hpp"

namespace irrlab {

using Order = std::int64_t;
using Elem = std::vector<Order>;

// Finite Abelian group presented as a direct product of cyclic factors.
// Elements are coordinate vectors, one residue per factor, kept in [0, m_i).
class Group {
 public:
  Group();  // trivial group: no factors, single element {}
  explicit Group(std::vector<Order> factors);

  // Accepts "Z4xZ9"; separators are case-insensitive, whitespace is ignored.
  static Group parse(const std::string& text);

  const std::vector<Order>& factors() const { return fac_; }
  Order order() const { return order_; }
  std::size_t arity() const { return fac_.size(); }
  std::string name() const;
  bool operator==(const Group& o) const { return fac_ == o.fac_; }

  Elem zero() const { return Elem(fac_.size(), 0); }
  bool is_zero(const Elem& e) const;
  Elem canon(Elem e) const;  // reduce arbitrary integers into range
  Elem add(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem sub(const Elem& a, const Elem& b) const;
  void check(const Elem& e) const;  // input_error when out of range

  // Elements of order exactly 2, sorted lexicographically.
  std::vector<Elem> involutions() const;
  // Sum over every element of the group, computed coordinate-wise.
  Elem sum_all() const;
  // All elements in mixed-radix order; resource_error above cap.
  std::vector<Elem> enumerate(std::size_t cap = 1'000'000) const;

  // Canonical divisibility chain d_1 | d_2 | ... | d_t, ascending.
  std::vector<Order> invariant_factors() const;
  bool is_cyclic() const { return invariant_factors().size() <= 1; }

  std::string format(const Elem& e) const;
  Elem parse_element(const std::string& text) const;

 private:
  std::vector<Order> fac_;
  Order order_ = 1;
};

// One prime-power piece of the primary decomposition.
struct Piece {
  std::size_t factor;  // index into Group::factors()
  Order prime;
  Order q;  // prime^e
  bool operator==(const Piece& o) const {
    return factor == o.factor && prime == o.prime && q == o.q;
  }
};

// Pieces ordered by (factor index, prime).
std::vector<Piece> primary_pieces(const Group& g);

// Isomorphism between gamma and a regrouped product of its primary pieces.
// Each slot merges pairwise-coprime pieces into one cyclic view factor.
class Regrouping {
 public:
  Regrouping(Group gamma, std::vector<std::vector<Piece>> slots);
  const Group& gamma() const { return gamma_; }
  const Group& view() const { return view_; }
  Elem to_view(const Elem& g) const;
  Elem to_gamma(const Elem& v) const;

 private:
  Group gamma_;
  Group view_;
  std::vector<std::vector<Piece>> slots_;
};

// gamma ~ L x H with L the product of the 2-power parts (one view factor per
// even gamma factor, kept in factor order) and H the product of the odd parts.
struct TwoOddSplit {
  Regrouping iso;
  std::size_t l_count;  // leading view factors that form L
  Group L;
  Group H;
  Elem embed(const Elem& l, const Elem& h) const;
  std::pair<Elem, Elem> split(const Elem& g) const;
};

TwoOddSplit factor_2_odd(const Group& g);

// Single-slot regrouping onto Z_n; requires g cyclic and nontrivial.
Regrouping cyclic_form(const Group& g);

}  // namespace irrlab
