#include "fb/burnside_ring.h"
#include "fb/checked.h"
#include "fb/error.h"

namespace fb {

namespace {

void check_shape(const BurnsideRing& ring, const GhostElement& a) {
  const std::size_t m = ring.classes().class_count();
  if (a.components.size() != m) throw ComponentMismatch("ghost element has the wrong number of components");
  for (std::size_t c = 0; c < m; ++c)
    if (a.components[c].size() != ring.hom(c).size())
      throw ComponentMismatch("ghost component " + std::to_string(c) + " has the wrong length");
}

}  // namespace

GhostElement ghost_zero(const BurnsideRing& ring) {
  GhostElement z;
  for (std::size_t c = 0; c < ring.classes().class_count(); ++c)
    z.components.emplace_back(ring.hom(c).size(), 0);
  return z;
}

GhostElement ghost_identity(const BurnsideRing& ring) {
  GhostElement e = ghost_zero(ring);
  for (auto& comp : e.components) comp[0] = 1;
  return e;
}

GhostElement ghost_basis_element(const BurnsideRing& ring, std::size_t i) {
  GhostElement e = ghost_zero(ring);
  const BasisRep& r = ring.basis().reps.at(i);
  for (std::size_t phi : r.orbit) e.components[r.cls][phi] = 1;
  return e;
}

GhostElement mark_morphism(const BurnsideRing& ring, const BurnsideElement& x) {
  if (x.coeffs.size() != ring.rank()) throw ComponentMismatch("element has wrong rank");
  GhostElement out = ghost_zero(ring);
  const IntMatrix& mm = ring.mark_matrix();
  for (std::size_t c = 0; c < out.components.size(); ++c)
    for (std::size_t phi = 0; phi < out.components[c].size(); ++phi) {
      const auto& row = mm[ring.ghost_offset(c) + phi];
      std::int64_t acc = 0;
      for (std::size_t j = 0; j < x.coeffs.size(); ++j)
        if (x.coeffs[j] != 0) acc = checked_add(acc, checked_mul(row[j], x.coeffs[j]));
      out.components[c][phi] = acc;
    }
  return out;
}

GhostElement ghost_multiply(const BurnsideRing& ring, const GhostElement& a, const GhostElement& b) {
  check_shape(ring, a);
  check_shape(ring, b);
  GhostElement out = ghost_zero(ring);
  for (std::size_t c = 0; c < out.components.size(); ++c) {
    const HomSet& hs = ring.hom(c);
    const auto& ac = a.components[c];
    const auto& bc = b.components[c];
    auto& oc = out.components[c];
    for (std::size_t i = 0; i < ac.size(); ++i) {
      if (ac[i] == 0) continue;
      for (std::size_t j = 0; j < bc.size(); ++j) {
        if (bc[j] == 0) continue;
        auto& slot = oc[hs.mul(i, j)];
        slot = checked_add(slot, checked_mul(ac[i], bc[j]));
      }
    }
  }
  return out;
}

bool is_ghost_fixed(const BurnsideRing& ring, const GhostElement& a) {
  check_shape(ring, a);
  for (std::size_t c = 0; c < a.components.size(); ++c) {
    const Subgroup& n = ring.classes().normalizer_of_rep(c);
    for (Element x : n.generators())
      for (std::size_t i = 0; i < a.components[c].size(); ++i)
        if (a.components[c][ring.hom(c).conjugate_index(ring.group(), x, i)] != a.components[c][i]) return false;
  }
  return true;
}

}  // namespace fb
