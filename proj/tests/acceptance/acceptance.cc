// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cli.h"
#include "fb/burnside_ring.h"
#include "fb/constructors.h"
#include "fb/isomorphism.h"
#include "fb/lattice.h"
#include "fb/monomial.h"
#include "fb/species.h"
#include "fb/thevenaz.h"
#include "oracles.h"

namespace {

using namespace fb;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

struct NamedFiber {
  std::string name;
  AbelianFiber fiber;
};

std::vector<oracle::NamedGroup> criterion1_groups() {
  return {{"C2", cyclic_group(2)},        {"C4", cyclic_group(4)},    {"C2xC2", abelian_group({2, 2})},
          {"C6", cyclic_group(6)},        {"S3", symmetric_group(3)}, {"D8", dihedral_group(4)}};
}

std::vector<NamedFiber> criterion1_fibers() {
  return {{"C1", AbelianFiber({1})}, {"C2", AbelianFiber({2})}, {"C3", AbelianFiber({3})}, {"C6", AbelianFiber({6})}};
}

void mark_morphism_homomorphism(Outcome& o) {
  std::size_t products = 0;
  for (const auto& [gname, g] : criterion1_groups())
    for (const auto& [aname, a] : criterion1_fibers()) {
      const BurnsideRing r(g, a);
      const std::string tag = gname + " over " + aname;
      std::vector<GhostElement> phi;
      for (std::size_t i = 0; i < r.rank(); ++i) phi.push_back(mark_morphism(r, basis_element(r, i)));
      for (std::size_t i = 0; i < r.rank(); ++i)
        for (std::size_t j = 0; j < r.rank(); ++j, ++products)
          o.require(ghost_multiply(r, phi[i], phi[j]) ==
                        mark_morphism(r, multiply(r, basis_element(r, i), basis_element(r, j))),
                    "Phi(b_i b_j) != Phi(b_i) Phi(b_j) for " + tag);
      o.require(rational_rank(gamma_table(r)) == r.rank(), "singular gamma table for " + tag);
    }
  o.detail << "24 rings, " << products << " basis products";
}

void conjugacy_detection(Outcome& o) {
  std::size_t checked = 0, groups = 0;
  for (const auto& [gname, g] : oracle::small_groups()) {
    ++groups;
    for (const auto& a : {AbelianFiber({2}), AbelianFiber({6})}) {
      std::vector<MonomialPair> pairs;
      std::vector<oracle::NaivePair> naive;
      for (const auto& k : enumerate_subgroups(g)) {
        const auto kp = std::make_shared<const Subgroup>(k);
        for (const auto& phi : hom_set(g, kp, a)) {
          pairs.emplace_back(kp, phi);
          oracle::CharMap m(g.order(), 0);
          for (Element x : k.members()) m[x] = phi(x);
          naive.push_back({k.members(), m});
        }
      }
      for (std::size_t i = 0; i < pairs.size(); ++i)
        for (std::size_t j = 0; j < pairs.size(); ++j, ++checked) {
          const bool both = gamma(g, pairs[i], pairs[j]) != 0 && gamma(g, pairs[j], pairs[i]) != 0;
          o.require(both == oracle::pairs_conjugate(g, naive[i], naive[j]),
                    "gamma conjugacy test disagrees with brute force in " + gname + " over " + a.to_string());
        }
    }
  }
  o.detail << groups << " groups, " << checked << " ordered pairs of monomial pairs";
}

void coprime_degeneration(Outcome& o) {
  std::size_t rings = 0;
  for (const auto& [gname, g] : oracle::small_groups())
    for (std::uint64_t d : {1u, 5u, 7u, 11u, 13u, 35u}) {
      std::uint64_t x = g.order(), y = d;
      while (y) std::tie(x, y) = std::pair{y, x % y};
      if (x != 1) continue;
      const BurnsideRing r(g, AbelianFiber({d}));
      ++rings;
      const std::string tag = gname + " over C" + std::to_string(d);
      o.require(r.rank() == r.classes().class_count(), "basis size != class count for " + tag);
      o.require(gamma_table(r) == to_int_matrix(r.classes().marks()), "gamma != marks for " + tag);
    }
  o.detail << rings << " coprime (G, A) combinations";
}

void headline(Outcome& o) {
  const cli::ReproduceOutcome out = cli::reproduce_counterexample(cli::ReproduceOptions{});
  o.require(out.exit_code == 0, "reproduce exit code " + std::to_string(out.exit_code));
  const json& rep = out.report;
  if (rep.contains("checks"))
    for (const auto& [name, ok] : rep["checks"].items()) o.require(ok.get<bool>(), "check " + name);
  o.require(rep.value("groups_isomorphic", true) == false, "G(3,9) and G(3,4) reported isomorphic");
  o.require(rep.contains("marks") && rep["marks"]["g"].size() == 10 && rep["marks"]["g"] == rep["marks"]["h"],
            "10x10 marks matrices differ");
  o.require(rep.contains("basis_size") && rep["basis_size"] == json::array({26, 26}), "basis sizes not 26");
  o.require(rep.contains("basis_bijection") && rep["basis_bijection"].size() == 26, "basis bijection incomplete");
  o.require(rep.contains("classification") && rep["classification"]["class_sizes"] == json::array({2, 4}) &&
                rep["classification"]["pairs"] == 6,
            "family partition is not 4 + 2 over 6 pairs");

  // Independent orbit enumeration of the basis for both groups.
  for (const auto& spec : {ThevenazSpec{11, 5, 3, 9}, ThevenazSpec{11, 5, 3, 4}}) {
    const ThevenazGroup tg = build_thevenaz(spec);
    o.require(oracle::orbit_count(tg.group, AbelianFiber({5})) == 26,
              "orbit enumeration does not give 26 for " + spec.to_string());
  }
  o.detail << "non-isomorphic, equal marks, 26 = 26 basis, witness valid with 26x26 structure constants, "
              "family classes 4 + 2";
}

void closed_form_cases(Outcome& o) {
  const ThevenazGroup tg = build_thevenaz({11, 5, 3, 9});
  const FiniteGroup& g = tg.group;
  const BurnsideRing r(g, AbelianFiber({5}));
  const ThevenazClasses named = canonical_class_reps(tg, r.classes());
  auto ptr = [&](std::size_t idx) { return r.classes().rep_ptr(named.class_index[idx]); };
  auto homs = [&](std::size_t idx) { return hom_set(g, ptr(idx), r.fiber()); };
  auto naive = [&](const MonomialPair& p, const MonomialPair& q) {
    oracle::CharMap a(g.order(), 0), b(g.order(), 0);
    for (Element x : p.k().members()) a[x] = p.phi()(x);
    for (Element x : q.k().members()) b[x] = q.phi()(x);
    return oracle::naive_gamma(g, p.k().members(), a, q.k().members(), b);
  };
  std::size_t checked = 0;

  // (i) normal p-subgroups with the trivial character
  for (std::size_t ki : {0u, 1u, 2u, 5u}) {
    const MonomialPair k(ptr(ki), Character::trivial(ptr(ki)));
    for (std::size_t li = 0; li < named.reps.size(); ++li)
      for (const auto& psi : homs(li)) {
        const MonomialPair l(ptr(li), psi);
        const std::size_t expect = k.k().is_subgroup_of(l.k()) ? g.order() / l.k().order() : 0;
        const std::size_t got = gamma(g, k, l);
        o.require(got == expect && naive(k, l) == got, "case (i) at " + named.names[ki] + ", " + named.names[li]);
        ++checked;
      }
  }
  // (ii) P(j) under G
  for (std::size_t ki = 3; ki < 3 + named.p_labels.size(); ++ki) {
    const MonomialPair k(ptr(ki), Character::trivial(ptr(ki)));
    for (const auto& psi : homs(9)) {
      const MonomialPair l(ptr(9), psi);
      o.require(gamma(g, k, l) == 1 && naive(k, l) == 1, "case (ii) at " + named.names[ki]);
      ++checked;
    }
  }
  // (iii) non-p-subgroups K <= L
  const std::vector<std::size_t> non_p = {6, 7, 8, 9};
  for (std::size_t ki : non_p)
    for (std::size_t li : non_p) {
      if (!ptr(ki)->is_subgroup_of(*ptr(li))) continue;
      for (const auto& phi : homs(ki))
        for (const auto& psi : homs(li)) {
          const MonomialPair k(ptr(ki), phi), l(ptr(li), psi);
          const std::size_t z_ok = phi(tg.z) == psi(tg.z) ? 1 : 0;
          o.require(ptr(ki)->contains(tg.z), "canonical " + named.names[ki] + " does not contain z");
          o.require(gamma(g, k, l) == z_ok && naive(k, l) == z_ok,
                    "case (iii) at " + named.names[ki] + ", " + named.names[li]);
          ++checked;
        }
    }
  o.detail << checked << " gamma values against the closed forms";
}

void ring_axioms(Outcome& o) {
  std::size_t triples = 0;
  for (const auto& [gname, g] : criterion1_groups())
    for (const auto& [aname, a] : criterion1_fibers()) {
      const BurnsideRing r(g, a);
      const std::string tag = gname + " over " + aname;
      const std::size_t n = r.rank();
      const StructureConstants sc = structure_constants(r);
      const BurnsideElement one = ring_identity(r);
      for (std::size_t i = 0; i < n; ++i) {
        const BurnsideElement bi = basis_element(r, i);
        o.require(multiply(r, one, bi) == bi && multiply(r, bi, one) == bi, "[G,1] not an identity in " + tag);
        for (std::size_t j = 0; j < n; ++j) {
          o.require(sc[i][j] == sc[j][i], "not commutative in " + tag);
          const BurnsideElement ij{sc[i][j]};
          for (std::size_t k = 0; k < n; ++k, ++triples) {
            const BurnsideElement jk{sc[j][k]};
            o.require(multiply(r, ij, basis_element(r, k)) == multiply(r, bi, jk), "not associative in " + tag);
          }
        }
      }
      const MonomialPair id_pair = r.pair(static_cast<std::size_t>(
          std::find(one.coeffs.begin(), one.coeffs.end(), 1) - one.coeffs.begin()));
      o.require(id_pair.k().order() == g.order() && id_pair.phi().is_trivial(), "identity is not [G,1] in " + tag);
    }
  o.detail << triples << " basis triples";
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string name;
    std::function<void(Outcome&)> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "mark morphism is a ring homomorphism, gamma nonsingular", mark_morphism_homomorphism},
      {2, "gamma detects conjugacy of monomial pairs", conjugacy_detection},
      {3, "coprime fiber degenerates to the table of marks", coprime_degeneration},
      {4, "G(3,9) and G(3,4) at p=11, q=5 have isomorphic B^A for A=C5", headline},
      {5, "closed forms for gamma in G(3,9)", closed_form_cases},
      {6, "ring axioms", ring_axioms},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %d %s: %s [%s] (%.2f s)\n", c.id, o.pass ? "PASS" : "FAIL", c.name.c_str(),
                o.detail.str().c_str(), secs);
    std::fflush(stdout);
    failures += !o.pass;
  }
  return failures == 0 ? 0 : 1;
}
