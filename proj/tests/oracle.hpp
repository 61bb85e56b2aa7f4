#pragma once

// Brute-force reference implementations, deliberately independent of the
// counting and structure code paths they are used to check.

#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "cyclo/group.hpp"

namespace oracle {

struct Census {
  std::uint64_t total = 0;
  std::map<std::uint64_t, std::uint64_t> by_order;
};

/// Enumerates <x> for every element as a sorted index vector and counts the
/// distinct sets with std::set. No hashing, no generator marking.
inline Census census(const cyclo::Group& g) {
  std::set<std::vector<cyclo::Group::index>> spans;
  for (cyclo::Group::index x = 0; x < g.order(); ++x) {
    std::vector<cyclo::Group::index> span{0};
    cyclo::Group::index y = x;
    while (y != 0) {
      span.push_back(y);
      y = g.mul(y, x);
    }
    std::sort(span.begin(), span.end());
    spans.insert(std::move(span));
  }
  Census out;
  out.total = spans.size();
  for (const auto& span : spans) out.by_order[span.size()] += 1;
  return out;
}

/// Counts x != e with x*x = e, without the element_order helper.
inline std::uint64_t involutions(const cyclo::Group& g) {
  std::uint64_t n = 0;
  for (cyclo::Group::index x = 1; x < g.order(); ++x)
    if (g.mul(x, x) == 0) ++n;
  return n;
}

/// Divisor count by full scan.
inline std::uint64_t d(std::uint64_t n) {
  std::uint64_t count = 0;
  for (std::uint64_t i = 1; i <= n; ++i)
    if (n % i == 0) ++count;
  return count;
}

/// Totient by gcd scan.
inline std::uint64_t phi(std::uint64_t n) {
  std::uint64_t count = 0;
  for (std::uint64_t i = 1; i <= n; ++i)
    if (std::gcd(i, n) == 1) ++count;
  return count;
}

/// Subgroup generated by all commutators of all element pairs (not just
/// generator pairs): the textbook definition of the derived subgroup.
inline std::vector<cyclo::Group::index> derived_members(const cyclo::Group& g) {
  std::vector<cyclo::Group::index> seeds;
  cyclo::DynBitset seen(g.order());
  for (cyclo::Group::index a = 0; a < g.order(); ++a)
    for (cyclo::Group::index b = 0; b < g.order(); ++b) {
      cyclo::Group::index c = g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b)));
      if (!seen.test(c)) {
        seen.set(c);
        seeds.push_back(c);
      }
    }
  return cyclo::SubgroupSet::span(g, seeds).member_list();
}

/// Membership-table subgroup test by definition.
inline bool is_subgroup(const cyclo::Group& g, const std::vector<cyclo::Group::index>& s) {
  std::set<cyclo::Group::index> in(s.begin(), s.end());
  if (!in.count(0)) return false;
  for (auto a : s) {
    if (!in.count(g.inv(a))) return false;
    for (auto b : s)
      if (!in.count(g.mul(a, b))) return false;
  }
  return true;
}

}  // namespace oracle
