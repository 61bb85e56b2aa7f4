#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <unordered_set>
#include <vector>

#include "cyclo/group.hpp"

namespace cyclo {

// ---------------------------------------------------------------------------
// arithmetic helpers (trial-division factorization, n <= 10^9)

inline std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t phi = n;
  for (auto [p, e] : factorize(n)) phi = phi / p * (p - 1);
  return phi;
}

inline std::uint64_t num_divisors(std::uint64_t n) {
  std::uint64_t d = 1;
  for (auto [p, e] : factorize(n)) d *= e + 1;
  return d;
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

inline std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  while (exp--) r *= base;
  return r;
}

// ---------------------------------------------------------------------------

/// Exact tally of the cyclic subgroups of a group: the total, a split by
/// subgroup order, and the involution count (= by_order[2]).
struct CyclicCensus {
  std::uint64_t total = 0;
  std::map<std::uint64_t, std::uint64_t> by_order;
  std::uint64_t involutions = 0;
};

/// Census restricted to the members of a subgroup; census(g) covers the
/// whole group. One pass over the elements: each span is keyed by its exact
/// member bitset, and once a cyclic subgroup is recorded all its generators
/// are marked absorbed so no span is walked twice.
inline CyclicCensus census(const Group& g, const SubgroupSet* within = nullptr) {
  CyclicCensus out;
  const std::size_t n = static_cast<std::size_t>(g.order());
  std::vector<bool> absorbed(n, false);
  std::unordered_set<DynBitset, DynBitsetHash> seen;
  std::vector<Group::index> powers;

  auto next_member = [&](std::size_t from) -> std::size_t {
    if (!within) return from < n ? from : DynBitset::npos;
    return within->members().next(from);
  };

  for (std::size_t x = next_member(0); x != DynBitset::npos; x = next_member(x + 1)) {
    if (absorbed[x]) continue;
    powers.clear();
    DynBitset span(n);
    span.set(0);
    Group::index y = static_cast<Group::index>(x);
    while (y != 0) {
      powers.push_back(y);  // powers[k] = x^(k+1)
      span.set(y);
      y = g.mul(y, static_cast<Group::index>(x));
    }
    const std::uint64_t m = powers.size() + 1;  // element order
    if (seen.insert(std::move(span)).second) {
      out.total += 1;
      out.by_order[m] += 1;
    }
    for (std::uint64_t k = 1; k < m; ++k)
      if (std::gcd(k, m) == 1) absorbed[powers[k - 1]] = true;
  }
  auto it = out.by_order.find(2);
  out.involutions = it == out.by_order.end() ? 0 : it->second;
  return out;
}

// ---------------------------------------------------------------------------

/// One term of the class-equation-style identity |G| = sum c(m) phi(m).
struct MillerTerm {
  std::uint64_t order;        // m
  std::uint64_t cyclic_count; // c(m)
  std::uint64_t phi;          // phi(m)
};

struct MillerReport {
  bool ok = false;
  std::uint64_t group_order = 0;
  std::uint64_t sum = 0;
  std::vector<MillerTerm> terms;
};

/// Verifies |G| = sum over m of c(m) * phi(m), term by term.
inline MillerReport check_miller(const Group& g, const CyclicCensus& c) {
  MillerReport rep;
  rep.group_order = g.order();
  for (auto [m, count] : c.by_order) {
    std::uint64_t phi = euler_phi(m);
    rep.terms.push_back({m, count, phi});
    rep.sum += count * phi;
  }
  rep.ok = rep.sum == rep.group_order;
  return rep;
}

inline MillerReport check_miller(const Group& g) { return check_miller(g, census(g)); }

// ---------------------------------------------------------------------------

struct RichardsReport {
  bool lower_ok = false;    // c >= d(|G|)
  bool upper_ok = false;    // c <= |G|
  bool lower_tight = false; // c == d(|G|)
  bool upper_tight = false; // c == |G|
  bool cyclic = false;      // some element has order |G|
  bool elem_abelian_2 = false;  // every non-identity element has order 2
  std::uint64_t c_total = 0;
  std::uint64_t divisor_count = 0;
  std::uint64_t order = 0;
};

/// Divisor-count lower bound and order upper bound on c(G), with the
/// equality characterizations (cyclic / elementary abelian 2-group).
inline RichardsReport check_richards(const Group& g, const CyclicCensus& c) {
  RichardsReport rep;
  rep.order = g.order();
  rep.c_total = c.total;
  rep.divisor_count = num_divisors(g.order());
  rep.lower_ok = rep.c_total >= rep.divisor_count;
  rep.upper_ok = rep.c_total <= rep.order;
  rep.lower_tight = rep.c_total == rep.divisor_count;
  rep.upper_tight = rep.c_total == rep.order;
  rep.cyclic = c.by_order.count(g.order()) > 0;
  rep.elem_abelian_2 = true;
  for (auto [m, count] : c.by_order)
    if (m != 1 && m != 2) rep.elem_abelian_2 = false;
  return rep;
}

inline RichardsReport check_richards(const Group& g) { return check_richards(g, census(g)); }

/// 1 + (p^n - 1)/(p - 1): the trivial subgroup plus one cyclic subgroup of
/// order p per projective point of (Z_p)^n.
inline std::uint64_t elementary_abelian_c(std::uint64_t p, unsigned n) {
  if (!is_prime(p)) throw BadParams("elementary_abelian_c needs a prime p");
  if (n < 1) throw BadParams("elementary_abelian_c needs n >= 1");
  return 1 + (ipow(p, n) - 1) / (p - 1);
}

inline bool is_cyclic(const Group& g) {
  for (Group::index x = 0; x < g.order(); ++x)
    if (element_order(g, x) == g.order()) return true;
  return false;
}

}  // namespace cyclo
