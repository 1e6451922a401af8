#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "fb/character.h"
#include "fb/fiber.h"
#include "fb/group.h"
#include "fb/lattice.h"
#include "fb/monomial.h"

namespace fb {

/// One G-orbit of monomial pairs, represented by (rep of class `cls`,
/// character `hom_index` of that rep).
struct BasisRep {
  std::size_t cls = 0;
  std::size_t hom_index = 0;
  /// N_G(K, phi).
  Subgroup stabilizer;
  /// Characters of Hom(K, A) in the N_G(K)-orbit of phi, ascending.
  std::vector<std::size_t> orbit;
};

/// The orbit basis G\M^A_G.
///
/// Representatives: the class representative K from SubgroupClassTable and
/// the character with the lexicographically least value vector in its
/// N_G(K)-orbit. Ordered by subgroup class, then by that value vector.
struct MonomialBasis {
  std::vector<BasisRep> reps;
  /// basis_of[c][i]: basis index of the orbit containing (rep c, character i).
  std::vector<std::vector<std::size_t>> basis_of;
  /// first basis index belonging to each subgroup class, plus a final sentinel.
  std::vector<std::size_t> class_begin;

  std::size_t size() const noexcept { return reps.size(); }
};

/// B^A(G) together with everything needed to compute in it: subgroup
/// classes, Hom(K, A) for each class representative, the orbit basis, and
/// the matrix of the mark morphism.
///
/// Immutable after construction and safe to share between threads.
class BurnsideRing {
 public:
  BurnsideRing(FiniteGroup g, AbelianFiber a, unsigned threads = 1);

  const FiniteGroup& group() const noexcept { return g_; }
  const AbelianFiber& fiber() const noexcept { return a_; }
  const SubgroupClassTable& classes() const noexcept { return classes_; }
  const HomSet& hom(std::size_t cls) const { return homs_[cls]; }
  const MonomialBasis& basis() const noexcept { return basis_; }
  std::size_t rank() const noexcept { return basis_.size(); }

  MonomialPair pair(std::size_t basis_index) const;
  /// Basis index of the orbit containing an arbitrary monomial pair of G.
  std::size_t basis_index(const MonomialPair& p) const;
  /// Basis index of (subgroup id, character given by its values on the
  /// subgroup's members).
  std::size_t basis_index(std::size_t subgroup_id, std::span<const FiberElement> values) const;

  /// gamma((rep cls, character i), (rep L, character j)) for class
  /// representatives and arbitrary characters.
  std::size_t gamma_reps(std::size_t cls_k, std::size_t phi, std::size_t cls_l, std::size_t psi) const;

  /// Row offsets of the mark matrix: row ghost_offset(c) + i belongs to
  /// (rep c, character i).
  std::size_t ghost_offset(std::size_t cls) const { return ghost_offset_[cls]; }
  std::size_t ghost_dimension() const noexcept { return ghost_offset_.back(); }
  /// mark_matrix()[row][j] = gamma((K_c, phi_i), basis rep j).
  const IntMatrix& mark_matrix() const noexcept { return mark_matrix_; }

  const std::vector<Element>& transversal(std::size_t cls) const { return transversals_[cls]; }

  /// The Dress product of two basis elements, as (basis index, multiplicity)
  /// terms in ascending index order.
  std::vector<std::pair<std::size_t, std::int64_t>> basis_product(std::size_t i, std::size_t j) const;

 private:
  FiniteGroup g_;
  AbelianFiber a_;
  SubgroupClassTable classes_;
  std::vector<HomSet> homs_;
  MonomialBasis basis_;
  std::vector<std::vector<Element>> transversals_;
  std::vector<std::size_t> ghost_offset_;
  IntMatrix mark_matrix_;
};

/// Integer combination of basis elements.
struct BurnsideElement {
  std::vector<std::int64_t> coeffs;

  bool operator==(const BurnsideElement&) const = default;
};

/// Element of the reduced ghost ring: for each subgroup class c a vector
/// indexed by Hom(K_c, A), fixed by N_G(K_c).
struct GhostElement {
  std::vector<std::vector<std::int64_t>> components;

  bool operator==(const GhostElement&) const = default;
};

/// Orbit basis of B^A(G).
inline const MonomialBasis& monomial_basis(const BurnsideRing& ring) { return ring.basis(); }

/// Square matrix gamma(rep i, rep j) over the basis.
IntMatrix gamma_table(const BurnsideRing& ring);

BurnsideElement basis_element(const BurnsideRing& ring, std::size_t i);
/// [G, 1].
BurnsideElement ring_identity(const BurnsideRing& ring);
BurnsideElement add(const BurnsideElement& x, const BurnsideElement& y);

/// Product in B^A(G), computed from the Dress formula on basis elements.
BurnsideElement multiply(const BurnsideRing& ring, const BurnsideElement& x, const BurnsideElement& y);

/// structure_constants(ring)[i][j][k] = coefficient of basis k in b_i * b_j.
using StructureConstants = std::vector<std::vector<std::vector<std::int64_t>>>;
StructureConstants structure_constants(const BurnsideRing& ring, unsigned threads = 1);

/// Mark morphism composed with the projection onto class representatives.
GhostElement mark_morphism(const BurnsideRing& ring, const BurnsideElement& x);

GhostElement ghost_identity(const BurnsideRing& ring);
GhostElement ghost_zero(const BurnsideRing& ring);
/// The projected orbit sum of (K_c, phi) for the basis rep with index i.
GhostElement ghost_basis_element(const BurnsideRing& ring, std::size_t i);
/// Componentwise group-ring product. Throws ComponentMismatch.
GhostElement ghost_multiply(const BurnsideRing& ring, const GhostElement& a, const GhostElement& b);
/// True when every component is constant on N_G(K)-orbits of characters.
bool is_ghost_fixed(const BurnsideRing& ring, const GhostElement& a);

/// Rank of an integer matrix over the rationals (fraction-free elimination).
std::size_t rational_rank(const IntMatrix& m);

}  // namespace fb
