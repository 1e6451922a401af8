#include "fb/burnside_ring.h"

#include <algorithm>
#include <map>
#include <memory>

#include "fb/checked.h"
#include "fb/error.h"
#include "fb/parallel.h"

namespace fb {

namespace {

MonomialBasis build_basis(const FiniteGroup& g, const SubgroupClassTable& classes,
                          const std::vector<HomSet>& homs) {
  MonomialBasis basis;
  basis.basis_of.resize(classes.class_count());
  for (std::size_t c = 0; c < classes.class_count(); ++c) {
    basis.class_begin.push_back(basis.reps.size());
    const HomSet& hs = homs[c];
    const Subgroup& n = classes.normalizer_of_rep(c);
    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> orbit_id(hs.size(), unset);
    std::vector<std::vector<std::size_t>> orbits;
    for (std::size_t i = 0; i < hs.size(); ++i) {
      if (orbit_id[i] != unset) continue;
      std::vector<std::size_t> orbit{i};
      orbit_id[i] = orbits.size();
      for (std::size_t t = 0; t < orbit.size(); ++t)
        for (Element x : n.generators()) {
          const std::size_t j = hs.conjugate_index(g, x, orbit[t]);
          if (orbit_id[j] == unset) {
            orbit_id[j] = orbits.size();
            orbit.push_back(j);
          }
        }
      std::sort(orbit.begin(), orbit.end());
      orbits.push_back(std::move(orbit));
    }

    struct Candidate {
      std::size_t rep;
      std::size_t orbit;
    };
    std::vector<Candidate> cands;
    for (std::size_t o = 0; o < orbits.size(); ++o) {
      std::size_t best = orbits[o].front();
      for (std::size_t i : orbits[o])
        if (hs.values(i) < hs.values(best)) best = i;
      cands.push_back({best, o});
    }
    std::sort(cands.begin(), cands.end(),
              [&](const Candidate& a, const Candidate& b) { return hs.values(a.rep) < hs.values(b.rep); });

    basis.basis_of[c].assign(hs.size(), 0);
    for (const auto& cand : cands) {
      const std::size_t index = basis.reps.size();
      for (std::size_t i : orbits[cand.orbit]) basis.basis_of[c][i] = index;
      std::vector<Element> stab;
      for (Element x : n.members())
        if (hs.conjugate_index(g, x, cand.rep) == cand.rep) stab.push_back(x);
      basis.reps.push_back(
          BasisRep{c, cand.rep, Subgroup::generated_by(g, stab), std::move(orbits[cand.orbit])});
    }
  }
  basis.class_begin.push_back(basis.reps.size());
  return basis;
}

}  // namespace

BurnsideRing::BurnsideRing(FiniteGroup g, AbelianFiber a, unsigned threads)
    : g_(std::move(g)), a_(std::move(a)), classes_(g_, threads) {
  const std::size_t m = classes_.class_count();
  homs_.reserve(m);
  for (std::size_t c = 0; c < m; ++c) homs_.emplace_back(g_, classes_.rep_ptr(c), a_);
  transversals_.reserve(m);
  for (std::size_t c = 0; c < m; ++c) transversals_.push_back(left_transversal(g_, classes_.rep(c)));
  basis_ = build_basis(g_, classes_, homs_);

  ghost_offset_.assign(m + 1, 0);
  for (std::size_t c = 0; c < m; ++c) ghost_offset_[c + 1] = ghost_offset_[c] + homs_[c].size();
  const std::size_t rows = ghost_offset_.back();
  mark_matrix_.assign(rows, std::vector<std::int64_t>(basis_.size(), 0));
  std::vector<std::pair<std::size_t, std::size_t>> row_keys;
  row_keys.reserve(rows);
  for (std::size_t c = 0; c < m; ++c)
    for (std::size_t i = 0; i < homs_[c].size(); ++i) row_keys.emplace_back(c, i);
  parallel_for(rows, threads, [&](std::size_t r) {
    const auto [c, i] = row_keys[r];
    for (std::size_t j = 0; j < basis_.size(); ++j) {
      const BasisRep& rep = basis_.reps[j];
      mark_matrix_[r][j] = static_cast<std::int64_t>(gamma_reps(c, i, rep.cls, rep.hom_index));
    }
  });
}

MonomialPair BurnsideRing::pair(std::size_t basis_index) const {
  const BasisRep& r = basis_.reps.at(basis_index);
  return MonomialPair(classes_.rep_ptr(r.cls), homs_[r.cls].character(r.hom_index));
}

std::size_t BurnsideRing::basis_index(std::size_t subgroup_id, std::span<const FiberElement> values) const {
  const Subgroup& sub = classes_.subgroup(subgroup_id);
  const std::size_t c = classes_.class_of_id(subgroup_id);
  // x conjugates sub onto the representative R; the transported character is r -> value(x^-1 r x)
  const Element x = classes_.conjugator_to_rep(subgroup_id);
  const Element x_inv = g_.inv(x);
  const std::size_t i = homs_[c].index_by([&](Element r) {
    return values[static_cast<std::size_t>(sub.position(g_.conj(x_inv, r)))];
  });
  return basis_.basis_of[c][i];
}

std::size_t BurnsideRing::basis_index(const MonomialPair& p) const {
  const auto id = classes_.find(p.k().members());
  if (!id) throw DomainMismatch("monomial pair is not over this group");
  for (auto v : p.phi().values())
    if (v >= a_.order()) throw DomainMismatch("character value outside the fiber");
  return basis_index(*id, p.phi().values());
}

std::size_t BurnsideRing::gamma_reps(std::size_t cls_k, std::size_t phi, std::size_t cls_l,
                                     std::size_t psi) const {
  const Subgroup& k = classes_.rep(cls_k);
  const Subgroup& l = classes_.rep(cls_l);
  if (l.order() % k.order() != 0) return 0;
  const HomSet& hk = homs_[cls_k];
  const HomSet& hl = homs_[cls_l];
  std::size_t count = 0;
  // both sides are homomorphisms on K once K <= ^sL, so generators suffice
  for (Element s : transversals_[cls_l]) {
    const Element s_inv = g_.inv(s);
    bool below = true;
    for (Element x : k.generators()) {
      const Element y = g_.conj(s_inv, x);
      if (!l.contains(y) || hl.value(psi, y) != hk.value(phi, x)) {
        below = false;
        break;
      }
    }
    if (below) ++count;
  }
  return count;
}

std::vector<std::pair<std::size_t, std::int64_t>> BurnsideRing::basis_product(std::size_t i,
                                                                             std::size_t j) const {
  const BasisRep& ri = basis_.reps.at(i);
  const BasisRep& rj = basis_.reps.at(j);
  const Subgroup& k = classes_.rep(ri.cls);
  const Subgroup& l = classes_.rep(rj.cls);
  const HomSet& hk = homs_[ri.cls];
  const HomSet& hl = homs_[rj.cls];

  std::map<std::size_t, std::int64_t> terms;
  std::vector<Element> meet;
  std::vector<FiberElement> values;
  for (Element s : double_coset_reps(g_, k, l)) {
    // K meet sLs^-1, with character phi * ^s psi
    const Element s_inv = g_.inv(s);
    meet.clear();
    values.clear();
    for (Element x : k.members()) {
      const Element y = g_.conj(s_inv, x);
      if (!l.contains(y)) continue;
      meet.push_back(x);
      values.push_back(a_.add(hk.value(ri.hom_index, x), hl.value(rj.hom_index, y)));
    }
    const auto id = classes_.find(meet);
    if (!id) throw std::logic_error("intersection is missing from the subgroup table");
    const std::size_t b = basis_index(*id, values);
    terms[b] = checked_add(terms[b], 1);
  }
  return {terms.begin(), terms.end()};
}

IntMatrix gamma_table(const BurnsideRing& ring) {
  const auto& basis = ring.basis();
  IntMatrix t(basis.size(), std::vector<std::int64_t>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const auto& r = basis.reps[i];
    t[i] = ring.mark_matrix()[ring.ghost_offset(r.cls) + r.hom_index];
  }
  return t;
}

BurnsideElement basis_element(const BurnsideRing& ring, std::size_t i) {
  BurnsideElement e{std::vector<std::int64_t>(ring.rank(), 0)};
  e.coeffs.at(i) = 1;
  return e;
}

BurnsideElement ring_identity(const BurnsideRing& ring) {
  // [G,1]: the whole group is the last class and the trivial character comes first
  return basis_element(ring, ring.basis().class_begin[ring.classes().class_count() - 1]);
}

BurnsideElement add(const BurnsideElement& x, const BurnsideElement& y) {
  if (x.coeffs.size() != y.coeffs.size()) throw ComponentMismatch("elements of different rings");
  BurnsideElement z{x.coeffs};
  for (std::size_t i = 0; i < z.coeffs.size(); ++i) z.coeffs[i] = checked_add(z.coeffs[i], y.coeffs[i]);
  return z;
}

BurnsideElement multiply(const BurnsideRing& ring, const BurnsideElement& x, const BurnsideElement& y) {
  const std::size_t n = ring.rank();
  if (x.coeffs.size() != n || y.coeffs.size() != n) throw ComponentMismatch("element has wrong rank");
  BurnsideElement z{std::vector<std::int64_t>(n, 0)};
  for (std::size_t i = 0; i < n; ++i) {
    if (x.coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y.coeffs[j] == 0) continue;
      const std::int64_t f = checked_mul(x.coeffs[i], y.coeffs[j]);
      for (auto [k, c] : ring.basis_product(i, j)) z.coeffs[k] = checked_add(z.coeffs[k], checked_mul(f, c));
    }
  }
  return z;
}

StructureConstants structure_constants(const BurnsideRing& ring, unsigned threads) {
  const std::size_t n = ring.rank();
  StructureConstants sc(n, std::vector<std::vector<std::int64_t>>(n, std::vector<std::int64_t>(n, 0)));
  parallel_for(n, threads, [&](std::size_t i) {
    for (std::size_t j = 0; j < n; ++j)
      for (auto [k, c] : ring.basis_product(i, j)) sc[i][j][k] = c;
  });
  return sc;
}

}  // namespace fb
