#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace fb {

/// Index of a group element; elements of a group of order n are 0..n-1.
using Element = std::uint32_t;

struct GroupOptions {
  /// Associativity is checked on every triple up to this order and on a
  /// deterministic random sample of triples above it.
  std::size_t full_associativity_bound = 1000;
  std::size_t associativity_samples = 200000;
};

/// A finite group given by its Cayley table. Element 0 is the identity.
/// Immutable after construction; every constructor validates the group axioms.
class FiniteGroup {
 public:
  /// Builds a group from a Cayley table `table[a][b] = a*b`. If the identity
  /// is not element 0 it is swapped with element 0. Throws NotAGroup.
  static FiniteGroup from_cayley(const std::vector<std::vector<std::int64_t>>& table,
                                 const GroupOptions& options = {});

  /// Same as from_cayley for a flat row-major table; the identity must
  /// already be element 0.
  static FiniteGroup from_flat_table(std::size_t order, std::vector<Element> flat,
                                     const GroupOptions& options = {});

  std::size_t order() const noexcept { return order_; }
  static constexpr Element identity() noexcept { return 0; }

  Element mul(Element a, Element b) const noexcept { return table_[a * order_ + b]; }
  Element inv(Element a) const noexcept { return inverse_[a]; }
  /// g x g^-1
  Element conj(Element g, Element x) const noexcept { return mul(mul(g, x), inverse_[g]); }
  Element commutator(Element x, Element y) const noexcept {
    return mul(mul(x, y), mul(inverse_[x], inverse_[y]));
  }
  Element power(Element x, std::uint64_t k) const noexcept;

  std::size_t element_order(Element x) const noexcept { return element_orders_[x]; }
  std::span<const std::size_t> element_orders() const noexcept { return element_orders_; }
  bool is_abelian() const noexcept;

  /// Row `a` of the Cayley table.
  std::span<const Element> row(Element a) const noexcept {
    return {table_.data() + a * order_, order_};
  }
  std::vector<std::vector<std::int64_t>> cayley_table() const;

  /// Elements commuting with every element.
  std::vector<Element> center() const;
  /// Conjugacy class id per element; classes numbered by least member.
  std::vector<std::size_t> conjugacy_class_ids() const;
  /// Size of the conjugacy class of every element.
  std::vector<std::size_t> conjugacy_class_sizes() const;

  bool operator==(const FiniteGroup& other) const noexcept { return table_ == other.table_; }

 private:
  FiniteGroup(std::size_t order, std::vector<Element> table, const GroupOptions& options);

  std::size_t order_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::vector<std::size_t> element_orders_;
};

}  // namespace fb
