#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include <numeric>

#include "fb/constructors.h"
#include "fb/error.h"
#include "fb/io.h"
#include "fb/species.h"
#include "fixtures.h"

namespace fb {
namespace {

SpeciesWitness identity_witness(const BurnsideRing& r) {
  SpeciesWitness w;
  w.subgroup_map.resize(r.classes().class_count());
  std::iota(w.subgroup_map.begin(), w.subgroup_map.end(), std::size_t{0});
  for (std::size_t c = 0; c < w.subgroup_map.size(); ++c) {
    std::vector<std::size_t> m(r.hom(c).size());
    std::iota(m.begin(), m.end(), std::size_t{0});
    w.char_maps.push_back(m);
  }
  w.is_group_iso.assign(w.subgroup_map.size(), true);
  return w;
}

TEST(Verify, IdentityWitnessIsValid) {
  for (const auto& g : {symmetric_group(3), dihedral_group(4), abelian_group({2, 2})}) {
    const BurnsideRing r(g, AbelianFiber({2}));
    const SpeciesVerdict v = verify_species(r, r, identity_witness(r));
    EXPECT_TRUE(v.valid);
    std::vector<std::size_t> id(r.rank());
    std::iota(id.begin(), id.end(), std::size_t{0});
    EXPECT_EQ(v.basis_map, id);
  }
}

TEST(Verify, ShapeErrors) {
  const BurnsideRing c4(cyclic_group(4), AbelianFiber({2}));
  const BurnsideRing v4(abelian_group({2, 2}), AbelianFiber({2}));
  // C4 has 3 subgroup classes, C2 x C2 has 5.
  EXPECT_THROW((void)verify_species(c4, v4, identity_witness(c4)), NotABijection);

  const BurnsideRing s3(symmetric_group(3), AbelianFiber({2}));
  SpeciesWitness w = identity_witness(s3);
  w.subgroup_map[1] = 0;
  EXPECT_THROW((void)verify_species(s3, s3, w), NotABijection);

  w = identity_witness(s3);
  w.char_maps[1] = {0, 0};
  EXPECT_THROW((void)verify_species(s3, s3, w), NotABijection);

  w = identity_witness(s3);
  w.is_group_iso[3] = false;
  EXPECT_THROW((void)verify_species(s3, s3, w), NotAGroupIso);
}

TEST(Verify, NonHomomorphicCharacterMapIsRejected) {
  const BurnsideRing r(cyclic_group(3), AbelianFiber({3}));
  SpeciesWitness w = identity_witness(r);
  // a bijection that moves the trivial character
  w.char_maps[1] = {1, 0, 2};
  EXPECT_THROW((void)verify_species(r, r, w), NotAGroupIso);
}

TEST(Verify, MismatchedCharactersGiveCounterexample) {
  const BurnsideRing r(abelian_group({2, 2}), AbelianFiber({2}));
  const std::size_t last = r.classes().class_count() - 1;
  SpeciesWitness w = identity_witness(r);
  w.char_maps[last] = {1, 0, 2, 3};
  EXPECT_THROW((void)verify_species(r, r, w), NotAGroupIso);
  w = identity_witness(r);
  w.char_maps[1] = {1, 0};
  EXPECT_THROW((void)verify_species(r, r, w), NotAGroupIso);
  w = identity_witness(r);
  // the automorphism of Hom(C2xC2, C2) swapping two nontrivial characters
  w.char_maps[last] = {0, 2, 1, 3};
  const SpeciesVerdict v = verify_species(r, r, w);
  EXPECT_FALSE(v.valid);
  ASSERT_TRUE(v.gamma_mismatch.has_value());
  EXPECT_NE(v.gamma_mismatch->gamma_g, v.gamma_mismatch->gamma_h);
}

TEST(Verify, InverseWitnessValidatesBackwards) {
  const auto& g = testing::thevenaz_11_5(3, 9);
  const auto& h = testing::thevenaz_11_5(3, 4);
  const BurnsideRing& rg = testing::thevenaz_ring_c5(3, 9);
  const BurnsideRing& rh = testing::thevenaz_ring_c5(3, 4);
  const SpeciesWitness w = thevenaz_witness(g, rg, h, rh);
  EXPECT_EQ(w.subgroup_map.size(), 10u);
  std::size_t five = 0;
  for (const auto& m : w.char_maps) five += m.size() == 5;
  EXPECT_EQ(five, 4u);
  const SpeciesVerdict v = verify_species(rg, rh, w);
  EXPECT_TRUE(v.valid);
  EXPECT_EQ(v.basis_map.size(), 26u);
  EXPECT_TRUE(verify_species(rh, rg, w.inverse()).valid);
}

TEST(Verify, ValidWitnessMatchesMarks) {
  const BurnsideRing& rg = testing::thevenaz_ring_c5(3, 9);
  const BurnsideRing& rh = testing::thevenaz_ring_c5(3, 4);
  const SpeciesWitness w =
      thevenaz_witness(testing::thevenaz_11_5(3, 9), rg, testing::thevenaz_11_5(3, 4), rh);
  const auto& mg = rg.classes().marks();
  const auto& mh = rh.classes().marks();
  for (std::size_t i = 0; i < mg.size(); ++i)
    for (std::size_t j = 0; j < mg.size(); ++j) EXPECT_EQ(mg[i][j], mh[w.subgroup_map[i]][w.subgroup_map[j]]);
}

TEST(Search, SameGroupSucceeds) {
  for (const auto& g : {symmetric_group(3), dihedral_group(4), abelian_group({2, 6}), symmetric_group(4)}) {
    const BurnsideRing r(g, AbelianFiber({6}));
    const SearchResult s = search_species(r, r);
    ASSERT_TRUE(s.witness.has_value());
    EXPECT_TRUE(verify_species(r, r, *s.witness).valid);
  }
}

TEST(Search, ExhaustsOnDifferentCensus) {
  const BurnsideRing s3(symmetric_group(3), AbelianFiber({6}));
  const BurnsideRing c6(cyclic_group(6), AbelianFiber({6}));
  EXPECT_FALSE(search_species(s3, c6).witness.has_value());
  const BurnsideRing c4(cyclic_group(4), AbelianFiber({2}));
  const BurnsideRing v4(abelian_group({2, 2}), AbelianFiber({2}));
  EXPECT_FALSE(search_species(c4, v4).witness.has_value());
}

TEST(Search, BudgetIsEnforced) {
  const BurnsideRing r(symmetric_group(4), AbelianFiber({2}));
  EXPECT_THROW((void)search_species(r, r, SearchOptions{1}), SearchBudgetExceeded);
}

TEST(Search, FindsAValidThevenazWitness) {
  const BurnsideRing& rg = testing::thevenaz_ring_c5(3, 9);
  const BurnsideRing& rh = testing::thevenaz_ring_c5(3, 4);
  const SearchResult s = search_species(rg, rh);
  ASSERT_TRUE(s.witness.has_value());
  EXPECT_TRUE(verify_species(rg, rh, *s.witness).valid);
}

TEST(ThevenazWitness, IdentityForEqualParameters) {
  const auto& g = testing::thevenaz_11_5(3, 9);
  const BurnsideRing& rg = testing::thevenaz_ring_c5(3, 9);
  const SpeciesWitness w = thevenaz_witness(g, rg, g, rg);
  EXPECT_EQ(w, identity_witness(rg));
}

TEST(ThevenazWitness, RejectsPTorsion) {
  const auto& g = testing::thevenaz_11_5(3, 9);
  const auto& h = testing::thevenaz_11_5(3, 4);
  const BurnsideRing rg(g.group, AbelianFiber({11}));
  const BurnsideRing rh(h.group, AbelianFiber({11}));
  EXPECT_THROW((void)thevenaz_witness(g, rg, h, rh), FiberHasPTorsion);
}

TEST(HomIsomorphisms, CountsAutomorphisms) {
  const FiniteGroup g = abelian_group({2, 2});
  const auto k = std::make_shared<const Subgroup>(Subgroup::whole(g));
  const HomSet hs(g, k, AbelianFiber({2}));
  const auto isos = hom_group_isomorphisms(hs, hs);
  EXPECT_EQ(isos.size(), 6u);
  for (const auto& m : isos) EXPECT_TRUE(is_hom_group_isomorphism(hs, hs, m));
  EXPECT_FALSE(is_hom_group_isomorphism(hs, hs, {1, 0, 2, 3}));
}

TEST(WitnessJson, RoundTrip) {
  const BurnsideRing r(symmetric_group(3), AbelianFiber({2}));
  SpeciesWitness w = identity_witness(r);
  EXPECT_EQ(witness_from_json(witness_to_json(w)), w);
  w.is_group_iso[0] = false;
  const json j = witness_to_json(w);
  EXPECT_TRUE(j.contains("is_group_iso"));
  EXPECT_EQ(witness_from_json(j), w);
  EXPECT_THROW((void)witness_from_json(json{{"subgroup_map", "x"}}), InvalidSpec);
}

}  // namespace
}  // namespace fb
