#include "fb/monomial.h"

#include "fb/error.h"

namespace fb {

MonomialPair::MonomialPair(SubgroupPtr k, Character phi) : subgroup(std::move(k)), character(std::move(phi)) {
  if (subgroup->members() != character.domain().members())
    throw DomainMismatch("monomial pair: character domain differs from the subgroup");
}

MonomialPair conjugate(const FiniteGroup& g, Element x, const MonomialPair& p) {
  Character c = char_conjugate(g, x, p.phi());
  SubgroupPtr k = c.domain_ptr();
  return MonomialPair(std::move(k), std::move(c));
}

bool is_subpair(const MonomialPair& lower, const MonomialPair& upper) {
  if (!lower.k().is_subgroup_of(upper.k())) return false;
  for (Element x : lower.k().members())
    if (lower.phi()(x) != upper.phi()(x)) return false;
  return true;
}

std::size_t gamma(const FiniteGroup& g, const MonomialPair& kphi, const MonomialPair& lpsi) {
  const Subgroup& k = kphi.k();
  const Subgroup& l = lpsi.k();
  if (l.order() % k.order() != 0) return 0;
  std::size_t count = 0;
  for (Element s : left_transversal(g, l)) {
    // (K,phi) <= ^s(L,psi)  <=>  s^-1 K s <= L and psi(s^-1 x s) = phi(x) on K
    const Element s_inv = g.inv(s);
    bool below = true;
    for (Element x : k.members()) {
      const Element y = g.conj(s_inv, x);
      if (!l.contains(y) || lpsi.phi()(y) != kphi.phi()(x)) {
        below = false;
        break;
      }
    }
    if (below) ++count;
  }
  return count;
}

bool are_conjugate_pairs(const FiniteGroup& g, const MonomialPair& a, const MonomialPair& b) {
  if (a.k().order() != b.k().order()) return false;
  for (Element x = 0; x < g.order(); ++x) {
    if (b.k().conjugate_members(g, x) != a.k().members()) continue;
    if (conjugate(g, x, b) == a) return true;
  }
  return false;
}

}  // namespace fb
