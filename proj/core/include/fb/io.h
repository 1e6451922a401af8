#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "fb/burnside_ring.h"
#include "fb/group.h"
#include "fb/lattice.h"
#include "fb/species.h"

namespace fb {

using json = nlohmann::json;

/// {"order": n, "mul": [[...]]}
json group_to_json(const FiniteGroup& g);
/// Throws NotAGroup or InvalidSpec.
FiniteGroup group_from_json(const json& j, const GroupOptions& options = {});

/// {"reps": [[members]...], "orders": [...], "marks": [[...]]}
json class_table_to_json(const SubgroupClassTable& t);

/// [{"subgroup": [...], "subgroup_class": c, "character": [...], "stabilizer_order": s}, ...]
/// Character values are fiber elements written as residue tuples.
json basis_to_json(const BurnsideRing& ring);
json matrix_to_json(const IntMatrix& m);
json structure_constants_to_json(const StructureConstants& sc);

/// {"subgroup_map": [...], "char_maps": [[...]...]}, plus "is_group_iso" when
/// not all true.
json witness_to_json(const SpeciesWitness& w);
/// Reads a witness; "is_group_iso" defaults to all true.
SpeciesWitness witness_from_json(const json& j);

json verdict_to_json(const SpeciesVerdict& v);

std::string matrix_to_csv(const IntMatrix& m);

template <class T>
IntMatrix to_int_matrix(const std::vector<std::vector<T>>& m) {
  IntMatrix out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) out[i].assign(m[i].begin(), m[i].end());
  return out;
}

}  // namespace fb
