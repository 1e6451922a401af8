#pragma once

#include <cstdint>
#include <vector>

#include "fb/group.h"

namespace fb {

/// C_n.
FiniteGroup cyclic_group(std::size_t n);

/// C_{d_1} x ... x C_{d_r}; elements indexed mixed-radix, first factor most significant.
FiniteGroup abelian_group(const std::vector<std::size_t>& factors);

/// Symmetries of the regular n-gon, order 2n. Element r^i s^j has index 2i + j.
FiniteGroup dihedral_group(std::size_t n);

/// Symmetric group on n points (n <= 5), elements in lexicographic
/// permutation order so the identity is 0.
FiniteGroup symmetric_group(std::size_t n);

/// G x H with (g, h) at index g * |H| + h.
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

/// An action of Q on N: `automorphisms[q][n]` is the image of n under q.
using Action = std::vector<std::vector<Element>>;

/// N x| Q with (n1,q1)(n2,q2) = (n1 * q1(n2), q1 q2). The pair (n, q) has
/// index n * |Q| + q. Throws NotAnAutomorphism or
/// NotAnAction when `action` is not a homomorphism Q -> Aut(N).
FiniteGroup semidirect_product(const FiniteGroup& n, const FiniteGroup& q, const Action& action);

}  // namespace fb
