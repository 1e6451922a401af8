#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "fb/group.h"

namespace fb {

/// A subgroup of a FiniteGroup, stored as its sorted member list plus an
/// O(1) position lookup. The parent group is passed explicitly to every
/// operation and must outlive nothing: a Subgroup keeps only indices.
class Subgroup {
 public:
  /// Validates that `members` is a subgroup of `g` (throws NotASubgroup).
  Subgroup(const FiniteGroup& g, std::vector<Element> members);

  /// Smallest subgroup containing `gens`.
  static Subgroup generated_by(const FiniteGroup& g, std::span<const Element> gens);
  static Subgroup trivial(const FiniteGroup& g);
  static Subgroup whole(const FiniteGroup& g);

  std::size_t order() const noexcept { return members_.size(); }
  std::size_t parent_order() const noexcept { return position_.size(); }
  const std::vector<Element>& members() const noexcept { return members_; }
  /// A small generating set, chosen greedily.
  const std::vector<Element>& generators() const noexcept { return generators_; }

  bool contains(Element x) const noexcept { return position_[x] >= 0; }
  /// Index of x in members(), or -1.
  std::int32_t position(Element x) const noexcept { return position_[x]; }

  bool is_subgroup_of(const Subgroup& other) const noexcept;
  bool is_normal_in(const FiniteGroup& g) const noexcept;

  /// Members of g K g^-1, sorted.
  std::vector<Element> conjugate_members(const FiniteGroup& g, Element x) const;
  Subgroup conjugate(const FiniteGroup& g, Element x) const;

  bool operator==(const Subgroup& other) const noexcept { return members_ == other.members_; }
  /// Ordering by (order, member list lexicographic).
  std::strong_ordering operator<=>(const Subgroup& other) const noexcept;

 private:
  struct Trusted {};
  Subgroup(Trusted, const FiniteGroup& g, std::vector<Element> members);
  void index_members(const FiniteGroup& g);

  std::vector<Element> members_;
  std::vector<std::int32_t> position_;
  std::vector<Element> generators_;
};

using SubgroupPtr = std::shared_ptr<const Subgroup>;

/// Closure of `gens` under multiplication; result sorted.
std::vector<Element> closure(const FiniteGroup& g, std::span<const Element> gens);

/// N_G(K).
Subgroup normalizer(const FiniteGroup& g, const Subgroup& k);

/// One representative per left coset sL, the least element of each coset.
std::vector<Element> left_transversal(const FiniteGroup& g, const Subgroup& l);

/// One representative s per double coset KsL, the least element of each,
/// in increasing order.
std::vector<Element> double_coset_reps(const FiniteGroup& g, const Subgroup& k,
                                       const Subgroup& l);

/// Number of left cosets sL fixed by K, i.e. with K <= sLs^-1.
std::size_t mark(const FiniteGroup& g, const Subgroup& k, const Subgroup& l);

/// Commutator subgroup [K,K].
Subgroup derived_subgroup(const FiniteGroup& g, const Subgroup& k);

}  // namespace fb
