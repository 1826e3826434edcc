#include "irrlab/group.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <tuple>

namespace irrlab {

namespace {

constexpr Order kMaxOrder = 4'000'000'000'000'000'000LL;

Order mul_checked(Order a, Order b) {
  __int128 p = static_cast<__int128>(a) * b;
  if (p > kMaxOrder) throw input_error("group order exceeds supported range");
  return static_cast<Order>(p);
}

std::vector<std::pair<Order, int>> factorize(Order n) {
  std::vector<std::pair<Order, int>> out;
  for (Order d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d) continue;
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.push_back({d, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

Order pow_ord(Order p, int e) {
  Order r = 1;
  while (e--) r = mul_checked(r, p);
  return r;
}

Order egcd(Order a, Order b, Order& x, Order& y) {
  if (b == 0) {
    x = 1;
    y = 0;
    return a;
  }
  Order x1, y1;
  Order g = egcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

Order modinv(Order a, Order m) {
  if (m == 1) return 0;
  Order x, y;
  Order g = egcd(((a % m) + m) % m, m, x, y);
  if (g != 1) throw construction_error("modular inverse does not exist");
  return ((x % m) + m) % m;
}

// Combine x = r1 (mod m1) with x = r2 (mod m2), m1 and m2 coprime.
std::pair<Order, Order> crt_fold(Order r1, Order m1, Order r2, Order m2) {
  Order inv = modinv(m1 % m2, m2);
  Order diff = ((r2 - r1) % m2 + m2) % m2;
  Order t = static_cast<Order>(static_cast<__int128>(diff) * inv % m2);
  return {r1 + m1 * t, mul_checked(m1, m2)};
}

}  // namespace

Group::Group() = default;

Group::Group(std::vector<Order> factors) : fac_(std::move(factors)) {
  for (Order m : fac_) {
    if (m < 2) throw input_error("cyclic factor must be at least 2");
    order_ = mul_checked(order_, m);
  }
}

Group Group::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw input_error("empty group spec");
  std::vector<Order> fac;
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (s[pos] != 'Z' && s[pos] != 'z')
      throw input_error("expected 'Z' at position " + std::to_string(pos) +
                        " in group spec '" + s + "'");
    ++pos;
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos)
      throw input_error("missing factor size after 'Z' in group spec '" + s + "'");
    Order v = 0;
    try {
      v = std::stoll(s.substr(start, pos - start));
    } catch (const std::out_of_range&) {
      throw input_error("factor size out of range in group spec '" + s + "'");
    }
    if (v < 2)
      throw input_error("factor size must be at least 2 in group spec '" + s + "'");
    fac.push_back(v);
    if (pos < s.size()) {
      if (s[pos] != 'x' && s[pos] != 'X')
        throw input_error("expected 'x' between factors in group spec '" + s + "'");
      ++pos;
      if (pos == s.size())
        throw input_error("trailing separator in group spec '" + s + "'");
    }
  }
  return Group(std::move(fac));
}

std::string Group::name() const {
  if (fac_.empty()) return "Z1";
  std::string out;
  for (std::size_t i = 0; i < fac_.size(); ++i) {
    if (i) out += 'x';
    out += 'Z';
    out += std::to_string(fac_[i]);
  }
  return out;
}

bool Group::is_zero(const Elem& e) const {
  check(e);
  return std::all_of(e.begin(), e.end(), [](Order v) { return v == 0; });
}

Elem Group::canon(Elem e) const {
  if (e.size() != fac_.size())
    throw input_error("element arity " + std::to_string(e.size()) +
                      " does not match group " + name());
  for (std::size_t i = 0; i < fac_.size(); ++i) {
    e[i] %= fac_[i];
    if (e[i] < 0) e[i] += fac_[i];
  }
  return e;
}

void Group::check(const Elem& e) const {
  if (e.size() != fac_.size())
    throw input_error("element arity " + std::to_string(e.size()) +
                      " does not match group " + name());
  for (std::size_t i = 0; i < fac_.size(); ++i)
    if (e[i] < 0 || e[i] >= fac_[i])
      throw input_error("coordinate " + std::to_string(i) + " of " + format(e) +
                        " is out of range for " + name());
}

Elem Group::add(const Elem& a, const Elem& b) const {
  if (a.size() != fac_.size() || b.size() != fac_.size())
    throw input_error("element arity does not match group " + name());
  Elem r(fac_.size());
  for (std::size_t i = 0; i < fac_.size(); ++i) r[i] = (a[i] + b[i]) % fac_[i];
  return r;
}

Elem Group::neg(const Elem& a) const {
  if (a.size() != fac_.size())
    throw input_error("element arity does not match group " + name());
  Elem r(fac_.size());
  for (std::size_t i = 0; i < fac_.size(); ++i) r[i] = (fac_[i] - a[i]) % fac_[i];
  return r;
}

Elem Group::sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }

std::vector<Elem> Group::involutions() const {
  std::vector<std::size_t> evens;
  for (std::size_t i = 0; i < fac_.size(); ++i)
    if (fac_[i] % 2 == 0) evens.push_back(i);
  if (evens.size() >= 30)
    throw resource_error("too many even factors to enumerate involutions");
  std::vector<Elem> out;
  for (std::uint64_t mask = 1; mask < (1ull << evens.size()); ++mask) {
    Elem e = zero();
    for (std::size_t b = 0; b < evens.size(); ++b)
      if (mask >> b & 1) e[evens[b]] = fac_[evens[b]] / 2;
    out.push_back(std::move(e));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Elem Group::sum_all() const {
  Elem e = zero();
  for (std::size_t i = 0; i < fac_.size(); ++i) {
    Order m = fac_[i];
    __int128 cnt = order_ / m;
    __int128 tri = static_cast<__int128>(m) * (m - 1) / 2;
    e[i] = static_cast<Order>((cnt % m) * (tri % m) % m);
  }
  return e;
}

std::vector<Elem> Group::enumerate(std::size_t cap) const {
  if (static_cast<std::uint64_t>(order_) > cap)
    throw resource_error("group too large to enumerate: order " +
                         std::to_string(order_));
  std::vector<Elem> out;
  out.reserve(static_cast<std::size_t>(order_));
  Elem cur = zero();
  for (Order k = 0; k < order_; ++k) {
    out.push_back(cur);
    for (std::size_t i = fac_.size(); i-- > 0;) {
      if (++cur[i] < fac_[i]) break;
      cur[i] = 0;
    }
  }
  return out;
}

std::vector<Order> Group::invariant_factors() const {
  std::map<Order, std::vector<Order>> by_prime;  // prime -> piece sizes
  for (const Piece& pc : primary_pieces(*this)) by_prime[pc.prime].push_back(pc.q);
  std::size_t t = 0;
  for (auto& [p, qs] : by_prime) {
    std::sort(qs.begin(), qs.end(), std::greater<>());
    t = std::max(t, qs.size());
  }
  std::vector<Order> inv(t, 1);
  for (auto& [p, qs] : by_prime)
    for (std::size_t j = 0; j < qs.size(); ++j) inv[j] = mul_checked(inv[j], qs[j]);
  std::reverse(inv.begin(), inv.end());
  return inv;
}

std::string Group::format(const Elem& e) const {
  if (fac_.size() == 1 && e.size() == 1) return std::to_string(e[0]);
  std::string out = "(";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(e[i]);
  }
  out += ')';
  return out;
}

Elem Group::parse_element(const std::string& text) const {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (!s.empty() && s.front() == '(') {
    if (s.back() != ')')
      throw input_error("unbalanced parentheses in element '" + text + "'");
    s = s.substr(1, s.size() - 2);
  }
  std::vector<Order> vals;
  std::size_t pos = 0;
  if (!s.empty()) {
    while (true) {
      std::size_t comma = s.find(',', pos);
      std::string tok = s.substr(pos, comma == std::string::npos ? comma : comma - pos);
      if (tok.empty()) throw input_error("empty coordinate in element '" + text + "'");
      std::size_t used = 0;
      Order v = 0;
      try {
        v = std::stoll(tok, &used);
      } catch (const std::exception&) {
        throw input_error("bad coordinate '" + tok + "' in element '" + text + "'");
      }
      if (used != tok.size())
        throw input_error("bad coordinate '" + tok + "' in element '" + text + "'");
      vals.push_back(v);
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  }
  if (vals.size() != fac_.size())
    throw input_error("element '" + text + "' has arity " +
                      std::to_string(vals.size()) + ", expected " +
                      std::to_string(fac_.size()) + " for " + name());
  return canon(std::move(vals));
}

std::vector<Piece> primary_pieces(const Group& g) {
  std::vector<Piece> out;
  for (std::size_t f = 0; f < g.factors().size(); ++f)
    for (auto [p, e] : factorize(g.factors()[f]))
      out.push_back(Piece{f, p, pow_ord(p, e)});
  return out;
}

Regrouping::Regrouping(Group gamma, std::vector<std::vector<Piece>> slots)
    : gamma_(std::move(gamma)), slots_(std::move(slots)) {
  std::vector<Piece> flat;
  std::vector<Order> mods;
  for (const auto& slot : slots_) {
    if (slot.empty()) throw input_error("regrouping slot may not be empty");
    Order m = 1;
    for (std::size_t i = 0; i < slot.size(); ++i) {
      for (std::size_t j = i + 1; j < slot.size(); ++j)
        if (slot[i].prime == slot[j].prime)
          throw input_error("regrouping slot mixes pieces sharing a prime");
      flat.push_back(slot[i]);
      m = mul_checked(m, slot[i].q);
    }
    mods.push_back(m);
  }
  auto key = [](const Piece& a, const Piece& b) {
    return std::tie(a.factor, a.prime, a.q) < std::tie(b.factor, b.prime, b.q);
  };
  std::vector<Piece> all = primary_pieces(gamma_);
  std::sort(flat.begin(), flat.end(), key);
  std::sort(all.begin(), all.end(), key);
  if (!(flat == all))
    throw input_error("regrouping does not cover the primary decomposition exactly");
  view_ = Group(std::move(mods));
}

Elem Regrouping::to_view(const Elem& g) const {
  gamma_.check(g);
  Elem v;
  v.reserve(slots_.size());
  for (const auto& slot : slots_) {
    Order r = 0, m = 1;
    for (const Piece& pc : slot)
      std::tie(r, m) = crt_fold(r, m, g[pc.factor] % pc.q, pc.q);
    v.push_back(r);
  }
  return v;
}

Elem Regrouping::to_gamma(const Elem& v) const {
  view_.check(v);
  std::vector<Order> r(gamma_.arity(), 0), m(gamma_.arity(), 1);
  for (std::size_t s = 0; s < slots_.size(); ++s)
    for (const Piece& pc : slots_[s])
      std::tie(r[pc.factor], m[pc.factor]) =
          crt_fold(r[pc.factor], m[pc.factor], v[s] % pc.q, pc.q);
  return r;
}

Elem TwoOddSplit::embed(const Elem& l, const Elem& h) const {
  Elem v = l;
  v.insert(v.end(), h.begin(), h.end());
  return iso.to_gamma(v);
}

std::pair<Elem, Elem> TwoOddSplit::split(const Elem& g) const {
  Elem v = iso.to_view(g);
  Elem l(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(l_count));
  Elem h(v.begin() + static_cast<std::ptrdiff_t>(l_count), v.end());
  return {std::move(l), std::move(h)};
}

TwoOddSplit factor_2_odd(const Group& g) {
  std::vector<std::vector<Piece>> lslots, hslots;
  for (std::size_t f = 0; f < g.factors().size(); ++f) {
    std::vector<Piece> two, odd;
    for (auto [p, e] : factorize(g.factors()[f])) {
      Piece pc{f, p, pow_ord(p, e)};
      (p == 2 ? two : odd).push_back(pc);
    }
    if (!two.empty()) lslots.push_back(std::move(two));
    if (!odd.empty()) hslots.push_back(std::move(odd));
  }
  std::size_t l_count = lslots.size();
  std::vector<std::vector<Piece>> slots = lslots;
  slots.insert(slots.end(), hslots.begin(), hslots.end());
  Regrouping iso(g, std::move(slots));
  const auto& vf = iso.view().factors();
  std::vector<Order> lf(vf.begin(), vf.begin() + static_cast<std::ptrdiff_t>(l_count));
  std::vector<Order> hf(vf.begin() + static_cast<std::ptrdiff_t>(l_count), vf.end());
  Group L = lf.empty() ? Group() : Group(std::move(lf));
  Group H = hf.empty() ? Group() : Group(std::move(hf));
  return TwoOddSplit{std::move(iso), l_count, std::move(L), std::move(H)};
}

Regrouping cyclic_form(const Group& g) {
  if (g.arity() == 0) throw input_error("cyclic_form requires a nontrivial group");
  if (!g.is_cyclic()) throw input_error("cyclic_form requires a cyclic group");
  std::vector<Piece> slot = primary_pieces(g);
  return Regrouping(g, {std::move(slot)});
}

}  // namespace irrlab
