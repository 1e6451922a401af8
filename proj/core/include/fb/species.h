#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fb/burnside_ring.h"

namespace fb {

/// Candidate data for a species isomorphism B^A(G) -> B^A(H): a bijection
/// of subgroup classes and, for each class K of G, a bijection
/// Hom(K, A) -> Hom(theta(K), A) given on HomSet indices.
struct SpeciesWitness {
  std::vector<std::size_t> subgroup_map;
  std::vector<std::vector<std::size_t>> char_maps;
  std::vector<bool> is_group_iso;

  /// theta^-1, valid for a witness with bijective maps.
  SpeciesWitness inverse() const;

  bool operator==(const SpeciesWitness&) const = default;
};

/// A quadruple (K, phi, L, psi) of G whose gamma differs after transport.
struct GammaMismatch {
  std::size_t class_k, phi, class_l, psi;
  std::int64_t gamma_g, gamma_h;
};

/// Basis elements i, j of G whose product is not transported onto the
/// product of their images.
struct StructureMismatch {
  std::size_t i, j;
};

struct SpeciesVerdict {
  bool valid = false;
  std::optional<GammaMismatch> gamma_mismatch;
  std::optional<StructureMismatch> structure_mismatch;
  /// On success: image in B^A(H) of each basis element of B^A(G).
  std::vector<std::size_t> basis_map;
};

/// Checks the gamma-matching criterion for a witness whose character maps
/// are group isomorphisms, then transports every structure constant
/// through the induced basis bijection as an independent check.
/// Throws NotABijection or NotAGroupIso for malformed witnesses.
SpeciesVerdict verify_species(const BurnsideRing& g, const BurnsideRing& h, const SpeciesWitness& w,
                              unsigned threads = 1);

/// Validates the shape of a witness (bijections, flagged group isomorphisms).
void validate_witness(const BurnsideRing& g, const BurnsideRing& h, const SpeciesWitness& w);

struct SearchOptions {
  std::uint64_t node_budget = 2'000'000;
};

struct SearchResult {
  std::optional<SpeciesWitness> witness;
  std::uint64_t nodes = 0;
};

/// Caveat attached to every exhausted search.
inline constexpr std::string_view kExhaustionCaveat =
    "search exhausted: no species isomorphism exists whose character maps are all group "
    "isomorphisms; species isomorphisms with non-homomorphic character bijections were not searched";

/// Backtracking search for a witness with every character map a group
/// isomorphism. Deterministic: classes of G are assigned in order, targets
/// and character isomorphisms tried in canonical order. Throws
/// SearchBudgetExceeded.
SearchResult search_species(const BurnsideRing& g, const BurnsideRing& h, const SearchOptions& options = {});

/// All group isomorphisms between two character groups, as index maps, in
/// lexicographic order of the generator images.
std::vector<std::vector<std::size_t>> hom_group_isomorphisms(const HomSet& from, const HomSet& to,
                                                             std::size_t limit = static_cast<std::size_t>(-1));

/// True if `map` is a bijective homomorphism between the character groups.
bool is_hom_group_isomorphism(const HomSet& from, const HomSet& to, const std::vector<std::size_t>& map);

}  // namespace fb
