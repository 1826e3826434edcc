#include "irrlab/gen.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "irrlab/errors.hpp"

namespace irrlab {

namespace {

void factor_lists_rec(Order n, Order lo, std::vector<Order>& cur,
                      std::vector<std::vector<Order>>& out) {
  if (n == 1) {
    out.push_back(cur);
    return;
  }
  for (Order f = lo; f <= n; ++f) {
    if (n % f) continue;
    cur.push_back(f);
    factor_lists_rec(n / f, f, cur, out);
    cur.pop_back();
  }
}

// prime -> exponent
std::map<Order, Order> factorize(Order n) {
  std::map<Order, Order> out;
  for (Order p = 2; p * p <= n; ++p)
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
  if (n > 1) ++out[n];
  return out;
}

void exp_partitions_rec(Order a, Order hi, std::vector<Order>& cur,
                        std::vector<std::vector<Order>>& out) {
  if (a == 0) {
    out.push_back(cur);
    return;
  }
  for (Order k = std::min(a, hi); k >= 1; --k) {
    cur.push_back(k);
    exp_partitions_rec(a - k, k, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<Order>> all_factor_lists(Order n) {
  if (n < 1) throw input_error("order must be positive");
  std::vector<std::vector<Order>> out;
  std::vector<Order> cur;
  factor_lists_rec(n, 2, cur, out);
  return out;
}

std::vector<Group> iso_classes(Order n) {
  if (n < 1) throw input_error("order must be positive");
  std::vector<std::vector<std::vector<Order>>> per_prime;  // piece choices
  for (const auto& [p, a] : factorize(n)) {
    std::vector<std::vector<Order>> parts;
    std::vector<Order> cur;
    exp_partitions_rec(a, a, cur, parts);
    for (auto& lam : parts)
      for (Order& e : lam) {
        Order q = 1;
        for (Order i = 0; i < e; ++i) q *= p;
        e = q;
      }
    per_prime.push_back(std::move(parts));
  }
  std::vector<Group> out;
  std::vector<std::size_t> pick(per_prime.size(), 0);
  while (true) {
    std::vector<Order> pieces;
    for (std::size_t i = 0; i < per_prime.size(); ++i)
      pieces.insert(pieces.end(), per_prime[i][pick[i]].begin(),
                    per_prime[i][pick[i]].end());
    std::sort(pieces.begin(), pieces.end());
    out.push_back(pieces.empty() ? Group() : Group(pieces));
    std::size_t i = 0;
    for (; i < pick.size(); ++i) {
      if (++pick[i] < per_prime[i].size()) break;
      pick[i] = 0;
    }
    if (i == pick.size()) break;
  }
  return out;
}

std::vector<Group> single_involution_classes(Order lo, Order hi) {
  std::vector<Group> out;
  for (Order n = std::max<Order>(lo, 1); n <= hi; ++n) {
    if (n % 2) continue;
    for (auto& g : iso_classes(n))
      if (g.involutions().size() == 1) out.push_back(std::move(g));
  }
  return out;
}

namespace {

void partitions_rec(Order total, Order lo, std::vector<Order>& cur,
                    std::vector<std::vector<Order>>& out) {
  if (total == 0) {
    out.push_back(cur);
    return;
  }
  for (Order r = lo; r <= total; ++r) {
    if (total - r != 0 && total - r < r) continue;
    cur.push_back(r);
    partitions_rec(total - r, r, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<Order>> partitions_min(Order total, Order lo) {
  std::vector<std::vector<Order>> out;
  std::vector<Order> cur;
  partitions_rec(total, std::max<Order>(lo, 1), cur, out);
  return out;
}

Order Rng::uniform(Order lo, Order hi) {
  if (lo > hi) throw input_error("empty range");
  return lo + static_cast<Order>(eng() %
                                 static_cast<std::uint64_t>(hi - lo + 1));
}

Digraph random_digraph(Rng& rng, std::size_t n, std::size_t min_comp) {
  if (min_comp < 2 || n < min_comp)
    throw input_error("need n >= min_comp >= 2");
  std::size_t width = std::to_string(n ? n - 1 : 0).size();
  Digraph d;
  d.vertices.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::string id = std::to_string(i);
    d.vertices.push_back("v" + std::string(width - id.size(), '0') + id);
  }

  std::size_t base = 0;
  while (base < n) {
    std::size_t remaining = n - base;
    std::size_t size = static_cast<std::size_t>(rng.uniform(
        static_cast<Order>(min_comp),
        static_cast<Order>(std::min(remaining, min_comp + 8))));
    if (remaining - size < min_comp) size = remaining;
    for (std::size_t i = 1; i < size; ++i) {
      std::size_t j = static_cast<std::size_t>(
          rng.uniform(0, static_cast<Order>(i) - 1));
      if (rng.coin())
        d.arcs.emplace_back(base + i, base + j);
      else
        d.arcs.emplace_back(base + j, base + i);
    }
    std::size_t extra =
        static_cast<std::size_t>(rng.uniform(0, static_cast<Order>(size)));
    for (std::size_t e = 0; e < extra; ++e) {
      std::size_t a = static_cast<std::size_t>(
          rng.uniform(0, static_cast<Order>(size) - 1));
      std::size_t b = static_cast<std::size_t>(
          rng.uniform(0, static_cast<Order>(size) - 2));
      if (b >= a) ++b;
      d.arcs.emplace_back(base + a, base + b);
    }
    base += size;
  }
  return d;
}

std::vector<Order> random_demand(Rng& rng, Order total, Order lo) {
  if (total != 0 && total < lo)
    throw input_error("total below the minimum part size");
  std::vector<Order> out;
  Order rem = total;
  while (rem > 0) {
    Order r = rem < 2 * lo ? rem
                           : rng.uniform(lo, std::min(rem - lo, lo + 8));
    if (rem - r < lo) r = rem;
    out.push_back(r);
    rem -= r;
  }
  return out;
}

}  // namespace irrlab
