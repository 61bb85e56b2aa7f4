#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "cyclo/counting.hpp"
#include "cyclo/group.hpp"
#include "cyclo/matrix_groups.hpp"

namespace cyclo {

// ---------------------------------------------------------------------------
// group family constructors

inline Group cyclic(std::uint64_t n, std::size_t cap = kDefaultClosureCap) {
  if (n < 1) throw BadParams("cyclic order must be >= 1");
  std::vector<Permutation> gens;
  if (n > 1) {
    std::vector<Permutation::point> images(n);
    for (std::uint64_t i = 0; i < n; ++i) images[i] = static_cast<Permutation::point>((i + 1) % n);
    gens.emplace_back(std::move(images));
  }
  Group g = Group::close(std::move(gens), {.cap = cap, .label = "Z" + std::to_string(n)});
  if (g.order() != n) throw Error("internal: cyclic order mismatch");
  return g;
}

/// Dihedral group of order 2n.
inline Group dihedral(std::uint64_t n, std::size_t cap = kDefaultClosureCap) {
  if (n < 1) throw BadParams("dihedral parameter must be >= 1");
  std::vector<Permutation> gens;
  if (n == 1) {
    gens.push_back(Permutation::from_cycles("(0 1)"));
  } else if (n == 2) {
    gens.push_back(Permutation::from_cycles("(0 1)", 4));
    gens.push_back(Permutation::from_cycles("(2 3)", 4));
  } else {
    std::vector<Permutation::point> rot(n), ref(n);
    for (std::uint64_t i = 0; i < n; ++i) {
      rot[i] = static_cast<Permutation::point>((i + 1) % n);
      ref[i] = static_cast<Permutation::point>((n - i) % n);
    }
    gens.emplace_back(std::move(rot));
    gens.emplace_back(std::move(ref));
  }
  Group g = Group::close(std::move(gens), {.cap = cap, .label = "D" + std::to_string(2 * n)});
  if (g.order() != 2 * n) throw Error("internal: dihedral order mismatch");
  return g;
}

/// Generalized quaternion group of order 2^k, k >= 3, realized by the left
/// regular action on its 2^k elements a^i b^j (b^2 = a^(2^(k-2)),
/// b a = a^-1 b).
inline Group generalized_quaternion(unsigned k, std::size_t cap = kDefaultClosureCap) {
  if (k < 3) throw BadParams("generalized quaternion needs exponent >= 3");
  if (k > 16) throw TooLarge("generalized quaternion exponent above 16");
  const std::uint64_t h = 1ull << (k - 1);  // order of a
  const std::uint64_t half = h / 2;         // b^2 = a^half
  const std::uint64_t n = 1ull << k;
  auto pt = [&](std::uint64_t i, std::uint64_t j) {
    return static_cast<Permutation::point>(i + j * h);
  };
  std::vector<Permutation::point> la(n), lb(n);
  for (std::uint64_t i = 0; i < h; ++i)
    for (std::uint64_t j = 0; j < 2; ++j) {
      la[pt(i, j)] = pt((i + 1) % h, j);  // a * a^i b^j
      // b * a^i b^j = a^-i b^(j+1)
      lb[pt(i, j)] = j == 0 ? pt((h - i) % h, 1) : pt((h - i + half) % h, 0);
    }
  Group g = Group::close({Permutation(std::move(la)), Permutation(std::move(lb))},
                         {.cap = cap, .label = "Q" + std::to_string(n)});
  if (g.order() != n) throw Error("internal: quaternion order mismatch");
  return g;
}

inline Group symmetric(unsigned n, std::size_t cap = kDefaultClosureCap) {
  if (n < 1) throw BadParams("symmetric degree must be >= 1");
  std::vector<Permutation> gens;
  if (n == 2) {
    gens.push_back(Permutation::from_cycles("(0 1)"));
  } else if (n >= 3) {
    std::string big = "(0";
    for (unsigned i = 1; i < n; ++i) big += " " + std::to_string(i);
    big += ")";
    gens.push_back(Permutation::from_cycles("(0 1)", n));
    gens.push_back(Permutation::from_cycles(big, n));
  }
  Group g = Group::close(std::move(gens), {.cap = cap, .label = "S" + std::to_string(n)});
  std::uint64_t target = 1;
  for (unsigned i = 2; i <= n; ++i) target *= i;
  if (g.order() != target) throw Error("internal: symmetric order mismatch");
  return g;
}

inline Group alternating(unsigned n, std::size_t cap = kDefaultClosureCap) {
  if (n < 3) throw BadParams("alternating degree must be >= 3");
  std::vector<Permutation> gens;
  gens.push_back(Permutation::from_cycles("(0 1 2)", n));
  if (n > 3) {
    // an even long cycle: the full n-cycle when n is odd, else an (n-1)-cycle
    std::string big = n % 2 ? "(0" : "(1";
    for (unsigned i = n % 2 ? 1 : 2; i < n; ++i) big += " " + std::to_string(i);
    big += ")";
    gens.push_back(Permutation::from_cycles(big, n));
  }
  Group g = Group::close(std::move(gens), {.cap = cap, .label = "A" + std::to_string(n)});
  std::uint64_t target = 1;
  for (unsigned i = 3; i <= n; ++i) target *= i;
  if (g.order() != target) throw Error("internal: alternating order mismatch");
  return g;
}

/// (Z_p)^n acting on n disjoint blocks of p points.
inline Group elementary_abelian(std::uint64_t p, unsigned n, std::size_t cap = kDefaultClosureCap) {
  if (!is_prime(p)) throw BadParams("elementary_abelian needs a prime, got " + std::to_string(p));
  if (n < 1) throw BadParams("elementary_abelian needs n >= 1");
  std::vector<Permutation> gens;
  const std::size_t degree = static_cast<std::size_t>(p) * n;
  for (unsigned block = 0; block < n; ++block) {
    std::vector<Permutation::point> images(degree);
    for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<Permutation::point>(i);
    for (std::uint64_t i = 0; i < p; ++i)
      images[block * p + i] = static_cast<Permutation::point>(block * p + (i + 1) % p);
    gens.emplace_back(std::move(images));
  }
  Group g = Group::close(std::move(gens),
                         {.cap = cap, .label = "E" + std::to_string(p) + "^" + std::to_string(n)});
  if (g.order() != ipow(p, n)) throw Error("internal: elementary abelian order mismatch");
  return g;
}

/// Direct product acting on the disjoint union of the factors' point sets.
inline Group direct_product(const Group& a, const Group& b,
                            std::size_t cap = kDefaultClosureCap) {
  if (a.order() * b.order() > cap)
    throw CapExceeded("direct product order " + std::to_string(a.order() * b.order()) +
                      " passes the cap");
  const std::size_t da = a.degree(), db = b.degree();
  std::vector<Permutation> gens;
  for (const Permutation& p : a.generators()) {
    std::vector<Permutation::point> images(da + db);
    for (std::size_t i = 0; i < da; ++i) images[i] = p(static_cast<Permutation::point>(i));
    for (std::size_t i = 0; i < db; ++i) images[da + i] = static_cast<Permutation::point>(da + i);
    gens.emplace_back(std::move(images));
  }
  for (const Permutation& p : b.generators()) {
    std::vector<Permutation::point> images(da + db);
    for (std::size_t i = 0; i < da; ++i) images[i] = static_cast<Permutation::point>(i);
    for (std::size_t i = 0; i < db; ++i)
      images[da + i] = static_cast<Permutation::point>(da + p(static_cast<Permutation::point>(i)));
    gens.emplace_back(std::move(images));
  }
  Group g = Group::close(std::move(gens),
                         {.cap = cap, .label = a.label() + " x " + b.label()});
  if (g.order() != a.order() * b.order()) throw Error("internal: direct product order mismatch");
  return g;
}

/// Semidirect product N x| H. The action maps each generator of h to an
/// automorphism of n given as a permutation of n's element indices. The
/// carrier is the pair action on |N|*|H| points. Each action permutation is
/// checked to be multiplicative on all of N, and the generator assignment is
/// checked to extend to a homomorphism from H into Aut(N).
inline Group semidirect_product(const Group& n, const Group& h,
                                const std::vector<Permutation>& actions,
                                std::size_t cap = kDefaultClosureCap) {
  if (actions.size() != h.generators().size())
    throw BadParams("need exactly one action automorphism per h generator");
  if (n.order() * h.order() > cap)
    throw CapExceeded("semidirect product order passes the cap");

  for (const Permutation& phi : actions) {
    if (phi.degree() != n.order())
      throw NotAnAutomorphism("action degree " + std::to_string(phi.degree()) +
                              " does not match |N| = " + std::to_string(n.order()));
    for (Group::index x = 0; x < n.order(); ++x)
      for (Group::index y = 0; y < n.order(); ++y)
        if (phi(static_cast<Permutation::point>(n.mul(x, y))) !=
            n.mul(phi(static_cast<Permutation::point>(x)), phi(static_cast<Permutation::point>(y))))
          throw NotAnAutomorphism("action permutation is not multiplicative on N");
  }

  // Extend generator images through h's closure derivations, then confirm
  // the extension really is a homomorphism h -> Aut(N).
  std::vector<Permutation> phi_of(h.order());
  phi_of[0] = Permutation::identity(n.order());
  for (Group::index e = 1; e < h.order(); ++e) {
    auto [parent, slot] = h.derivation(e);
    phi_of[e] = phi_of[parent] * actions[slot];
  }
  for (Group::index x = 0; x < h.order(); ++x)
    for (Group::index y = 0; y < h.order(); ++y)
      if (!(phi_of[h.mul(x, y)] == phi_of[x] * phi_of[y]))
        throw ActionIncompatible("generator images do not respect the relations of H");

  const std::uint64_t N = n.order();
  auto pt = [&](std::uint64_t x, std::uint64_t y) {
    return static_cast<Permutation::point>(x + N * y);
  };
  std::vector<Permutation> gens;
  for (Group::index gn : n.generator_indices()) {
    std::vector<Permutation::point> images(N * h.order());
    for (Group::index x = 0; x < N; ++x)
      for (Group::index y = 0; y < h.order(); ++y) images[pt(x, y)] = pt(n.mul(gn, x), y);
    gens.emplace_back(std::move(images));
  }
  for (std::size_t j = 0; j < actions.size(); ++j) {
    Group::index gh = h.generator_indices()[j];
    std::vector<Permutation::point> images(N * h.order());
    for (Group::index x = 0; x < N; ++x)
      for (Group::index y = 0; y < h.order(); ++y)
        images[pt(x, y)] = pt(actions[j](static_cast<Permutation::point>(x)), h.mul(gh, y));
    gens.emplace_back(std::move(images));
  }
  Group g = Group::close(std::move(gens),
                         {.cap = cap, .label = n.label() + " x| " + h.label()});
  if (g.order() != n.order() * h.order())
    throw ActionIncompatible("semidirect closure produced order " + std::to_string(g.order()));
  return g;
}

// ---------------------------------------------------------------------------
// registry of paper-named groups

/// 64-bit FNV-1a over the element-order multiset, serialized as
/// "order:count;" pairs in increasing order.
inline std::uint64_t order_multiset_checksum(const Group& g) {
  std::map<std::uint64_t, std::uint64_t> multiset;
  for (Group::index x = 0; x < g.order(); ++x) multiset[element_order(g, x)] += 1;
  std::string text;
  for (auto [ord, count] : multiset)
    text += std::to_string(ord) + ":" + std::to_string(count) + ";";
  std::uint64_t hash = 14695981039346656037ull;
  for (char c : text) {
    hash ^= static_cast<unsigned char>(c);
    hash *= 1099511628211ull;
  }
  return hash;
}

namespace detail {

struct NamedEntry {
  std::uint64_t order;
  std::uint64_t id;
  const char* label;
  Group (*build)();
  std::uint64_t checksum;  // pinned order_multiset_checksum of the intended group
};

inline Group build_36_3() {  // (Z2 x Z2) x| Z9, Z9 cycling the involutions through its order-3 quotient
  return semidirect_product(elementary_abelian(2, 2), cyclic(9),
                            {Permutation::from_cycles("(1 2 3)", 4)});
}

inline Group build_56_11() {  // (Z2)^3 x| Z7, companion matrix of x^3+x+1 acting on the 7 involutions
  return semidirect_product(elementary_abelian(2, 3), cyclic(7),
                            {Permutation::from_cycles("(1 2 3 4 6 7 5)", 8)});
}

inline Group build_108_3() {  // (Z2 x Z2) x| Z27 through the same order-3 quotient action
  return semidirect_product(elementary_abelian(2, 2), cyclic(27),
                            {Permutation::from_cycles("(1 2 3)", 4)});
}

inline Group build_24_3() { return sl2(3); }
inline Group build_120_5() { return sl2(5); }

// Checksums pinned from the committed constructions; build() re-verifies the
// element-order multiset so the registry cannot drift silently.
inline const std::vector<NamedEntry>& named_registry() {
  static const std::vector<NamedEntry> registry = {
      {24, 3, "SmallGroup(24,3)", &build_24_3, 0x82c8140fe3431912ull},
      {36, 3, "SmallGroup(36,3)", &build_36_3, 0x803aa2b3df3b38a1ull},
      {56, 11, "SmallGroup(56,11)", &build_56_11, 0xc44c62a7f64f7c2aull},
      {108, 3, "SmallGroup(108,3)", &build_108_3, 0x8c49ee1828da0e17ull},
      {120, 5, "SmallGroup(120,5)", &build_120_5, 0xc3811e71f3d8cdbdull},
  };
  return registry;
}

}  // namespace detail

/// Builds a group from the registry of paper-named SmallGroup ids and
/// verifies its element-order multiset against the pinned checksum.
inline Group named(std::uint64_t order, std::uint64_t id) {
  for (const auto& entry : detail::named_registry()) {
    if (entry.order != order || entry.id != id) continue;
    Group g = entry.build();
    if (order_multiset_checksum(g) != entry.checksum)
      throw Error(std::string("registry drift: ") + entry.label +
                  " no longer matches its pinned order multiset");
    g.set_label(entry.label);
    return g;
  }
  throw UnknownNamedGroup("no registry entry for SmallGroup(" + std::to_string(order) + "," +
                          std::to_string(id) + ")");
}

}  // namespace cyclo
