#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fb/abelianization.h"
#include "fb/error.h"
#include "fb/fiber.h"
#include "fb/group.h"
#include "fb/subgroup.h"

namespace fb {

/// A homomorphism K -> A stored as its value on each member of K
/// (aligned with domain().members()).
class Character {
 public:
  /// Validates the homomorphism property; throws DomainMismatch otherwise.
  Character(const FiniteGroup& g, const AbelianFiber& a, SubgroupPtr domain,
            std::vector<FiberElement> values);

  static Character trivial(SubgroupPtr domain);

  const Subgroup& domain() const noexcept { return *domain_; }
  const SubgroupPtr& domain_ptr() const noexcept { return domain_; }
  const std::vector<FiberElement>& values() const noexcept { return values_; }
  FiberElement operator()(Element x) const { return values_[static_cast<std::size_t>(domain_->position(x))]; }
  bool is_trivial() const noexcept;

  bool operator==(const Character& other) const noexcept {
    return domain_->members() == other.domain_->members() && values_ == other.values_;
  }

 private:
  struct Trusted {};
  Character(Trusted, SubgroupPtr domain, std::vector<FiberElement> values)
      : domain_(std::move(domain)), values_(std::move(values)) {}
  friend Character char_mul(const AbelianFiber&, const Character&, const Character&);
  friend Character char_inverse(const AbelianFiber&, const Character&);
  friend Character char_restrict(const Character&, SubgroupPtr);
  friend Character char_conjugate(const FiniteGroup&, Element, const Character&);
  friend class HomSet;

  SubgroupPtr domain_;
  std::vector<FiberElement> values_;
};

/// Pointwise product (sum in A). Throws DomainMismatch on different domains.
Character char_mul(const AbelianFiber& a, const Character& phi, const Character& psi);
Character char_inverse(const AbelianFiber& a, const Character& phi);
/// Restriction to a subgroup of the domain. Throws DomainMismatch otherwise.
Character char_restrict(const Character& phi, SubgroupPtr sub);
/// ^g phi on g K g^-1, x -> phi(g^-1 x g).
Character char_conjugate(const FiniteGroup& g, Element x, const Character& phi);

/// Hom(K, A) with a fixed enumeration.
///
/// K/[K,K] = C_{e_1} x ... x C_{e_r}; a character is fixed by the images
/// (a_1, ..., a_r) of the basis preimages, a_i ranging over A[e_i]. The
/// characters are listed lexicographically in that image tuple, so index 0
/// is the trivial character.
class HomSet {
 public:
  HomSet(const FiniteGroup& g, SubgroupPtr k, const AbelianFiber& a);

  std::size_t size() const noexcept { return count_; }
  const Subgroup& domain() const noexcept { return *domain_; }
  const SubgroupPtr& domain_ptr() const noexcept { return domain_; }
  const Abelianization& abelianization() const noexcept { return ab_; }

  /// Value vector of character `i`, aligned with domain().members().
  const std::vector<FiberElement>& values(std::size_t i) const { return values_[i]; }
  FiberElement value(std::size_t i, Element x) const {
    return values_[i][static_cast<std::size_t>(domain_->position(x))];
  }
  Character character(std::size_t i) const;

  /// Index of the character taking `images[t]` on basis preimage t.
  std::size_t index_of_images(const std::vector<FiberElement>& images) const;
  /// Index of a character given any way of evaluating it on domain members.
  template <class Eval>
  std::size_t index_by(Eval&& eval) const {
    std::size_t idx = 0;
    for (std::size_t t = 0; t < ab_.rank(); ++t) {
      const std::int64_t p = torsion_position_[t][eval(ab_.basis_preimages[t])];
      if (p < 0) throw DomainMismatch("value is not in the required torsion subgroup");
      idx = idx * torsion_[t].size() + static_cast<std::size_t>(p);
    }
    return idx;
  }
  std::size_t index_of(const Character& phi) const;

  /// Index of the pointwise product / inverse.
  std::size_t mul(std::size_t i, std::size_t j) const { return mul_[i * count_ + j]; }
  std::size_t inverse(std::size_t i) const { return inverse_[i]; }

  /// Index of ^x phi_i, for x normalizing the domain.
  std::size_t conjugate_index(const FiniteGroup& g, Element x, std::size_t i) const;

 private:
  SubgroupPtr domain_;
  Abelianization ab_;
  std::vector<std::vector<FiberElement>> torsion_;
  std::vector<std::vector<std::int64_t>> torsion_position_;
  std::size_t count_ = 1;
  std::vector<std::vector<FiberElement>> images_;
  std::vector<std::vector<FiberElement>> values_;
  std::vector<std::size_t> mul_;
  std::vector<std::size_t> inverse_;
};

/// hom_set(K, A): every homomorphism K -> A once, in HomSet order.
std::vector<Character> hom_set(const FiniteGroup& g, SubgroupPtr k, const AbelianFiber& a);

}  // namespace fb
