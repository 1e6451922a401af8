#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fb/character.h"
#include "fb/fiber.h"
#include "fb/group.h"
#include "fb/subgroup.h"

namespace fb {

/// A monomial pair (K, phi) with phi: K -> A.
struct MonomialPair {
  SubgroupPtr subgroup;
  Character character;

  MonomialPair(SubgroupPtr k, Character phi);

  const Subgroup& k() const noexcept { return *subgroup; }
  const Character& phi() const noexcept { return character; }

  bool operator==(const MonomialPair& other) const noexcept { return character == other.character; }
};

/// ^g(K, phi) = (gKg^-1, ^g phi).
MonomialPair conjugate(const FiniteGroup& g, Element x, const MonomialPair& p);

/// (K, phi) <= (L, psi): K <= L and psi restricted to K equals phi.
bool is_subpair(const MonomialPair& lower, const MonomialPair& upper);

/// gamma^G_{(K,phi),(L,psi)} = |{ sL in G/L : (K,phi) <= ^s(L,psi) }|.
std::size_t gamma(const FiniteGroup& g, const MonomialPair& kphi, const MonomialPair& lpsi);

/// True if some g in G conjugates (L,psi) onto (K,phi); found by trying every g.
bool are_conjugate_pairs(const FiniteGroup& g, const MonomialPair& a, const MonomialPair& b);

using IntMatrix = std::vector<std::vector<std::int64_t>>;

}  // namespace fb
