#pragma once

#include "fb/burnside_ring.h"
#include "fb/thevenaz.h"

namespace fb::testing {

/// G(a,b) at p = 11, q = 5, built once per test binary.
inline const ThevenazGroup& thevenaz_11_5(std::uint64_t a, std::uint64_t b) {
  static const ThevenazGroup g39 = build_thevenaz({11, 5, 3, 9});
  static const ThevenazGroup g34 = build_thevenaz({11, 5, 3, 4});
  if (a == 3 && b == 9) return g39;
  if (a == 3 && b == 4) return g34;
  throw std::invalid_argument("fixture only holds G(3,9) and G(3,4)");
}

inline const BurnsideRing& thevenaz_ring_c5(std::uint64_t a, std::uint64_t b) {
  static const BurnsideRing r39(thevenaz_11_5(3, 9).group, AbelianFiber({5}));
  static const BurnsideRing r34(thevenaz_11_5(3, 4).group, AbelianFiber({5}));
  return a == 3 && b == 9 ? r39 : (b == 4 ? r34 : throw std::invalid_argument("no such ring"));
}

}  // namespace fb::testing
