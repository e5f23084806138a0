#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "haarcay/bitset.hpp"

namespace haarcay {

/// Element of a FiniteGroup, identified by its row in the multiplication table.
/// Only meaningful relative to the group it came from.
using Elem = std::uint32_t;

/// Hard cap on the order of any group built from a table.
inline constexpr std::size_t kMaxGroupOrder = 1024;
/// Default bound for the automorphism enumeration.
inline constexpr std::size_t kDefaultAutOrderBound = 64;

/// A finite group stored as a closed multiplication table with named elements.
///
/// Instances are immutable. The constructor audits the full set of group
/// axioms (Latin square, identity, inverses, associativity) and throws
/// `Error{invalid_presentation}` naming the first axiom that fails.
class FiniteGroup {
public:
  FiniteGroup(std::size_t order, std::vector<Elem> table,
              std::vector<std::string> names);

  std::size_t order() const noexcept { return order_; }
  Elem identity() const noexcept { return identity_; }
  Elem mul(Elem x, Elem y) const noexcept { return table_[x * order_ + y]; }
  Elem inv(Elem x) const noexcept { return inverses_[x]; }
  const std::string &name(Elem x) const { return names_[x]; }
  const std::vector<std::string> &names() const noexcept { return names_; }
  const std::vector<Elem> &table() const noexcept { return table_; }

  /// x^k for any integer k (negative exponents use the inverse).
  Elem power(Elem x, long long k) const noexcept;
  std::size_t element_order(Elem x) const noexcept;
  bool is_abelian() const noexcept;
  /// g^-1 x g
  Elem conjugate(Elem x, Elem g) const noexcept { return mul(mul(inv(g), x), g); }

  /// Resolves a symbolic element. Accepts an exact element name, a raw
  /// index, or a product of factors `name` / `name^k` joined by `*`.
  std::optional<Elem> parse_element(std::string_view text) const;

private:
  std::size_t order_;
  std::vector<Elem> table_;
  std::vector<Elem> inverses_;
  Elem identity_ = 0;
  std::vector<std::string> names_;
};

/// Bijective homomorphism G -> G, stored as the image of every element.
struct GroupAutomorphism {
  std::vector<Elem> images;

  Elem operator()(Elem x) const noexcept { return images[x]; }
  bool operator==(const GroupAutomorphism &) const = default;
  auto operator<=>(const GroupAutomorphism &) const = default;

  static GroupAutomorphism identity(std::size_t order);
  GroupAutomorphism inverse() const;
  /// x -> other(self(x)).
  GroupAutomorphism then(const GroupAutomorphism &other) const;
};

bool is_automorphism(const FiniteGroup &g, const GroupAutomorphism &a);

/// A subgroup as a sorted list of member indices.
struct Subgroup {
  std::vector<Elem> members;

  std::size_t order() const noexcept { return members.size(); }
  bool contains(Elem x) const;
  bool operator==(const Subgroup &) const = default;
  auto operator<=>(const Subgroup &) const = default;
};

// Constructors -------------------------------------------------------------

FiniteGroup build_cyclic(std::size_t n);
FiniteGroup build_dihedral(std::size_t n);
FiniteGroup build_generalized_dihedral(const FiniteGroup &abelian);
FiniteGroup build_direct_product(const FiniteGroup &g, const FiniteGroup &h);
FiniteGroup build_quaternion();
/// <a,b | a^m = 1, b^s = a^t, b^-1 a b = a^r>, elements in normal form
/// b^j a^i stored at index j*m + i.
FiniteGroup build_metacyclic(long long m, long long r, long long s, long long t);
/// Reads the plain-text table format: order, order^2 indices, optional names.
FiniteGroup read_table_group(std::string_view text);

// Subgroups ------------------------------------------------------------------

Subgroup subgroup_generated(const FiniteGroup &g, std::span<const Elem> gens);
bool is_subgroup(const FiniteGroup &g, std::span<const Elem> members);
bool is_normal(const FiniteGroup &g, const Subgroup &n);
/// Every subgroup of g, sorted. Throws resource_limit beyond `max_count`.
std::vector<Subgroup> all_subgroups(const FiniteGroup &g, std::size_t max_count = 100000);
/// The subgroup as a group of its own, plus the embedding (index in sub ->
/// index in g).
std::pair<FiniteGroup, std::vector<Elem>> subgroup_as_group(const FiniteGroup &g,
                                                            const Subgroup &h);

// Automorphisms --------------------------------------------------------------

struct AutomorphismOptions {
  std::size_t max_group_order = kDefaultAutOrderBound;
  std::size_t max_count = 2'000'000;
};

/// Greedy irredundant generating sequence, preferring elements of large order.
std::vector<Elem> generating_sequence(const FiniteGroup &g);
/// Full automorphism list, sorted by image tuple.
std::vector<GroupAutomorphism> automorphisms(const FiniteGroup &g,
                                             const AutomorphismOptions &opts = {});
GroupAutomorphism inner_automorphism(const FiniteGroup &g, Elem x);
/// Enumerates isomorphisms G -> H; returns the first one found.
std::optional<std::vector<Elem>> find_group_isomorphism(const FiniteGroup &g,
                                                        const FiniteGroup &h);

// Normal structure -------------------------------------------------------------

bool has_complement(const FiniteGroup &g, const Subgroup &n);

struct Quotient {
  FiniteGroup group;
  std::vector<Elem> projection; ///< element of G -> coset index
};
Quotient quotient(const FiniteGroup &g, const Subgroup &n);
bool is_characteristic(const FiniteGroup &g, const Subgroup &n,
                       const AutomorphismOptions &opts = {});

/// Cyclic normal subgroups N with G/N cyclic, and whether any of them has a
/// complement. G is metacyclic iff `kernels` is non-empty; it is nonsplit
/// iff it is metacyclic and `split` is false.
struct MetacyclicStatus {
  std::vector<Subgroup> kernels;
  bool split = false;
  bool metacyclic() const noexcept { return !kernels.empty(); }
  bool nonsplit() const noexcept { return metacyclic() && !split; }
};
MetacyclicStatus metacyclic_status(const FiniteGroup &g);

/// Audits associativity, identity, inverses and the Latin-square property.
/// Returns the name of the first violated axiom, or nullopt.
std::optional<std::string> audit_group_axioms(std::size_t order,
                                              std::span<const Elem> table);

} // namespace haarcay
