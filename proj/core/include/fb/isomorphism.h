#pragma once

#include <optional>
#include <vector>

#include "fb/group.h"

namespace fb {

/// Image of each element of the domain, indexed by element.
using GroupIsomorphism = std::vector<Element>;

/// Decides whether g and h are isomorphic. Cheap invariants (element-order
/// multiset, conjugacy-class-size multiset, subgroup-order census) are
/// compared first; then images of a small generating set are found by
/// backtracking. A returned map has been checked on every pair.
std::optional<GroupIsomorphism> are_isomorphic(const FiniteGroup& g, const FiniteGroup& h);

/// True when `map` is a bijective homomorphism g -> h (checked on all pairs).
bool is_isomorphism(const FiniteGroup& g, const FiniteGroup& h, const GroupIsomorphism& map);

}  // namespace fb
