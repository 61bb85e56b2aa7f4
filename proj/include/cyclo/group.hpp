#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cyclo/dynbitset.hpp"
#include "cyclo/errors.hpp"
#include "cyclo/permutation.hpp"

namespace cyclo {

inline constexpr std::size_t kDefaultClosureCap = 200000;

struct CloseOptions {
  std::size_t cap = kDefaultClosureCap;
  std::string label;
};

/// Finite group with a faithful permutation carrier. The element table is
/// produced by breadth-first closure over the generators (in the given
/// order), so enumeration is deterministic; index 0 is the identity.
/// Immutable after construction.
class Group {
 public:
  using index = std::uint32_t;
  static constexpr index npos = static_cast<index>(-1);

  static Group close(std::vector<Permutation> generators, CloseOptions opts = {}) {
    Group g;
    g.label_ = std::move(opts.label);

    // Degenerate input: no generators yields the trivial group on 1 point.
    std::size_t degree = generators.empty() ? 1 : generators[0].degree();
    for (const auto& p : generators)
      if (p.degree() != degree)
        throw DegreeMismatch("generators act on different point counts");

    g.generators_ = std::move(generators);
    g.elements_.push_back(Permutation::identity(degree));
    g.buckets_[PermutationHash{}(g.elements_[0])].push_back(0);
    g.derivations_.emplace_back(0, npos);

    for (std::size_t at = 0; at < g.elements_.size(); ++at) {
      for (index j = 0; j < g.generators_.size(); ++j) {
        Permutation next = g.elements_[at] * g.generators_[j];
        if (g.lookup(next) != npos) continue;
        if (g.elements_.size() >= opts.cap)
          throw CapExceeded("closure passed the element cap of " + std::to_string(opts.cap));
        g.buckets_[PermutationHash{}(next)].push_back(static_cast<index>(g.elements_.size()));
        g.elements_.push_back(std::move(next));
        g.derivations_.emplace_back(static_cast<index>(at), j);
      }
    }

    g.gen_indices_.reserve(g.generators_.size());
    for (const auto& p : g.generators_) g.gen_indices_.push_back(g.lookup(p));

    g.inverses_.resize(g.elements_.size());
    for (index i = 0; i < g.elements_.size(); ++i)
      g.inverses_[i] = g.lookup(g.elements_[i].inverse());

    if (g.elements_.size() <= kMulTableLimit) {
      const index n = static_cast<index>(g.elements_.size());
      g.mul_table_.resize(static_cast<std::size_t>(n) * n);
      for (index a = 0; a < n; ++a)
        for (index b = 0; b < n; ++b)
          g.mul_table_[static_cast<std::size_t>(a) * n + b] =
              static_cast<std::uint16_t>(g.lookup(g.elements_[a] * g.elements_[b]));
    }
    return g;
  }

  std::uint64_t order() const { return elements_.size(); }
  std::size_t degree() const { return elements_[0].degree(); }

  const std::vector<Permutation>& elements() const { return elements_; }
  const Permutation& element(index i) const { return elements_[i]; }

  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<index>& generator_indices() const { return gen_indices_; }

  index mul(index a, index b) const {
    if (!mul_table_.empty()) return mul_table_[static_cast<std::size_t>(a) * elements_.size() + b];
    return lookup(elements_[a] * elements_[b]);
  }

  index inv(index a) const { return inverses_[a]; }

  index conj(index g, index x) const { return mul(mul(g, x), inverses_[g]); }

  std::optional<index> index_of(const Permutation& p) const {
    index i = lookup(p);
    if (i == npos) return std::nullopt;
    return i;
  }

  /// How element i was first reached during closure: (parent, generator slot).
  /// The identity reports (0, npos). Parents always precede children.
  std::pair<index, index> derivation(index i) const { return derivations_[i]; }

  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

 private:
  // Full multiplication table only for small groups; larger groups multiply
  // through the permutation carrier and cache inverses only.
  static constexpr std::size_t kMulTableLimit = 4096;

  // Elements are stored once; the index is hash buckets with a full
  // comparison against the table on collision.
  index lookup(const Permutation& p) const {
    auto it = buckets_.find(PermutationHash{}(p));
    if (it == buckets_.end()) return npos;
    for (index i : it->second)
      if (elements_[i] == p) return i;
    return npos;
  }

  std::vector<Permutation> elements_;
  std::unordered_map<std::uint64_t, std::vector<index>> buckets_;
  std::vector<Permutation> generators_;
  std::vector<index> gen_indices_;
  std::vector<index> inverses_;
  std::vector<std::uint16_t> mul_table_;
  std::vector<std::pair<index, index>> derivations_;
  std::string label_;
};

/// Subgroup of a parent group, stored as a membership bitset over the
/// parent's element indices.
class SubgroupSet {
 public:
  SubgroupSet(const Group& parent, DynBitset members)
      : parent_(&parent), members_(std::move(members)), size_(members_.count()) {
    if (!members_.test(0)) throw NotASubgroup("subgroup set does not contain the identity");
    if (size_ == 0 || parent.order() % size_ != 0)
      throw NotASubgroup("subgroup size " + std::to_string(size_) +
                         " does not divide the parent order (Lagrange)");
  }

  static SubgroupSet trivial(const Group& parent) {
    DynBitset b(parent.order());
    b.set(0);
    return SubgroupSet(parent, std::move(b));
  }

  static SubgroupSet whole(const Group& parent) {
    DynBitset b(parent.order());
    for (std::size_t i = 0; i < parent.order(); ++i) b.set(i);
    return SubgroupSet(parent, std::move(b));
  }

  /// Subgroup generated by the seed elements (BFS closure inside the parent).
  static SubgroupSet span(const Group& parent, std::span<const Group::index> seeds) {
    DynBitset members(parent.order());
    members.set(0);
    std::vector<Group::index> queue{0};
    for (std::size_t at = 0; at < queue.size(); ++at)
      for (Group::index s : seeds) {
        Group::index y = parent.mul(queue[at], s);
        if (!members.test(y)) {
          members.set(y);
          queue.push_back(y);
        }
      }
    return SubgroupSet(parent, std::move(members));
  }

  const Group& parent() const { return *parent_; }
  const DynBitset& members() const { return members_; }
  std::uint64_t size() const { return size_; }
  bool contains(Group::index i) const { return members_.test(i); }
  std::vector<Group::index> member_list() const { return members_.member_list(); }

  /// Small generating set extracted greedily: repeatedly adjoin the lowest
  /// member outside the current span. At most log2(size) generators.
  std::vector<Group::index> generating_set() const {
    std::vector<Group::index> gens;
    DynBitset covered(parent_->order());
    covered.set(0);
    std::size_t covered_count = 1;
    std::size_t next = members_.next(0);
    while (covered_count < size_) {
      while (next != DynBitset::npos && covered.test(next)) next = members_.next(next + 1);
      gens.push_back(static_cast<Group::index>(next));
      // re-span with the enlarged generating set
      SubgroupSet s = span(*parent_, gens);
      covered = s.members();
      covered_count = s.size();
    }
    return gens;
  }

  bool operator==(const SubgroupSet& other) const {
    return parent_ == other.parent_ && members_ == other.members_;
  }

 private:
  const Group* parent_;
  DynBitset members_;
  std::uint64_t size_;
};

/// Least k >= 1 with x^k = identity.
inline std::uint64_t element_order(const Group& g, Group::index x) {
  std::uint64_t k = 1;
  Group::index y = x;
  while (y != 0) {
    y = g.mul(y, x);
    ++k;
  }
  return k;
}

/// The cyclic subgroup {x^k}.
inline SubgroupSet cyclic_span(const Group& g, Group::index x) {
  DynBitset members(g.order());
  members.set(0);
  Group::index y = x;
  while (y != 0) {
    members.set(y);
    y = g.mul(y, x);
  }
  return SubgroupSet(g, std::move(members));
}

/// True iff s contains the identity and is closed under multiplication and
/// inverse. Exhaustive pairwise check.
inline bool is_subgroup(const Group& g, std::span<const Group::index> s) {
  DynBitset in(g.order());
  bool has_identity = false;
  for (Group::index i : s) {
    in.set(i);
    if (i == 0) has_identity = true;
  }
  if (!has_identity) return false;
  for (Group::index a : s) {
    if (!in.test(g.inv(a))) return false;
    for (Group::index b : s)
      if (!in.test(g.mul(a, b))) return false;
  }
  return true;
}

/// Generator conjugation suffices: h is normal iff x h x^-1 stays inside h
/// for every generator x of g.
inline bool is_normal(const Group& g, const SubgroupSet& h) {
  {
    auto list = h.member_list();
    if (!is_subgroup(g, list)) throw NotASubgroup("is_normal needs an actual subgroup");
  }
  for (Group::index x : g.generator_indices())
    for (std::size_t m = h.members().next(0); m != DynBitset::npos; m = h.members().next(m + 1))
      if (!h.contains(g.conj(x, static_cast<Group::index>(m)))) return false;
  return true;
}

struct QuotientMap {
  Group group;
  std::vector<Group::index> coset_of;          // parent element -> coset id
  std::vector<Group::index> coset_rep;         // coset id -> minimal parent element index
  std::vector<Group::index> coset_to_element;  // coset id -> quotient element index

  /// Image of a parent element in the quotient group's element table.
  Group::index element_image(Group::index parent_element) const {
    return coset_to_element[coset_of[parent_element]];
  }
};

/// Quotient by a normal subgroup. Cosets are labelled by their minimal
/// element index, in increasing order, and the quotient is re-closed from
/// the images of g's generators acting on cosets by left multiplication.
inline QuotientMap quotient_with_map(const Group& g, const SubgroupSet& n) {
  if (!is_normal(g, n)) throw NotNormal("quotient needs a normal subgroup");

  const auto n_members = n.member_list();
  const std::size_t cosets = static_cast<std::size_t>(g.order() / n.size());
  QuotientMap out;
  out.coset_of.assign(g.order(), Group::npos);
  out.coset_rep.reserve(cosets);
  for (Group::index e = 0; e < g.order(); ++e) {
    if (out.coset_of[e] != Group::npos) continue;
    Group::index id = static_cast<Group::index>(out.coset_rep.size());
    out.coset_rep.push_back(e);
    for (Group::index m : n_members) out.coset_of[g.mul(e, m)] = id;
  }

  auto left_action = [&](Group::index e) {
    std::vector<Permutation::point> images(cosets);
    for (std::size_t c = 0; c < cosets; ++c)
      images[c] = static_cast<Permutation::point>(out.coset_of[g.mul(e, out.coset_rep[c])]);
    return Permutation(std::move(images));
  };

  std::vector<Permutation> gens;
  gens.reserve(g.generators().size());
  for (Group::index gi : g.generator_indices()) gens.push_back(left_action(gi));
  out.group = Group::close(std::move(gens), {.cap = cosets, .label = g.label() + "/N"});
  if (out.group.order() != cosets)
    throw Error("internal: quotient closure produced wrong order");

  // The left action is constant on cosets, so one lookup per coset suffices.
  out.coset_to_element.resize(cosets);
  for (std::size_t c = 0; c < cosets; ++c) {
    auto idx = out.group.index_of(left_action(out.coset_rep[c]));
    if (!idx) throw Error("internal: coset action missing from quotient table");
    out.coset_to_element[c] = *idx;
  }
  return out;
}

inline Group quotient(const Group& g, const SubgroupSet& n) {
  return quotient_with_map(g, n).group;
}

/// Partition of the element indices into conjugacy classes. Classes are
/// listed by smallest member, members ascending.
inline std::vector<std::vector<Group::index>> conjugacy_classes(const Group& g) {
  std::vector<std::vector<Group::index>> classes;
  DynBitset seen(g.order());
  for (Group::index x = 0; x < g.order(); ++x) {
    if (seen.test(x)) continue;
    DynBitset in_class(g.order());
    in_class.set(x);
    std::vector<Group::index> queue{x};
    for (std::size_t at = 0; at < queue.size(); ++at)
      for (Group::index s : g.generator_indices()) {
        Group::index y = g.conj(s, queue[at]);
        if (!in_class.test(y)) {
          in_class.set(y);
          queue.push_back(y);
        }
      }
    for (Group::index m : queue) seen.set(m);
    classes.push_back(in_class.member_list());
  }
  return classes;
}

/// Smallest normal subgroup containing all seeds: conjugating a generating
/// set by the group generators and re-spanning until stable.
inline SubgroupSet normal_closure_of(const Group& g, std::vector<Group::index> seeds) {
  SubgroupSet h = SubgroupSet::span(g, seeds);
  std::vector<Group::index> queue = seeds;
  for (std::size_t at = 0; at < queue.size(); ++at)
    for (Group::index s : g.generator_indices()) {
      Group::index c = g.conj(s, queue[at]);
      if (!h.contains(c)) {
        seeds.push_back(c);
        queue.push_back(c);
        h = SubgroupSet::span(g, seeds);
      }
    }
  return h;
}

inline SubgroupSet normal_closure(const Group& g, Group::index seed) {
  if (seed == 0) throw BadParams("normal_closure needs a non-identity seed");
  return normal_closure_of(g, {seed});
}

/// {y : yx = xy}.
inline SubgroupSet centralizer(const Group& g, Group::index x) {
  DynBitset members(g.order());
  for (Group::index y = 0; y < g.order(); ++y)
    if (g.mul(y, x) == g.mul(x, y)) members.set(y);
  return SubgroupSet(g, std::move(members));
}

/// {y : y h y^-1 = h}.
inline SubgroupSet normalizer(const Group& g, const SubgroupSet& h) {
  const auto gens = h.generating_set();
  DynBitset members(g.order());
  for (Group::index y = 0; y < g.order(); ++y) {
    bool ok = true;
    for (Group::index s : gens)
      if (!h.contains(g.conj(y, s))) {
        ok = false;
        break;
      }
    if (ok) members.set(y);
  }
  return SubgroupSet(g, std::move(members));
}

inline SubgroupSet center(const Group& g) {
  DynBitset members(g.order());
  for (Group::index y = 0; y < g.order(); ++y) {
    bool ok = true;
    for (Group::index s : g.generator_indices())
      if (g.mul(y, s) != g.mul(s, y)) {
        ok = false;
        break;
      }
    if (ok) members.set(y);
  }
  return SubgroupSet(g, std::move(members));
}

inline bool is_abelian(const Group& g) {
  const auto& gens = g.generator_indices();
  for (Group::index a : gens)
    for (Group::index b : gens)
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

}  // namespace cyclo
