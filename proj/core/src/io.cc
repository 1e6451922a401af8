#include "fb/io.h"

#include <sstream>

#include "fb/error.h"

namespace fb {

json group_to_json(const FiniteGroup& g) {
  return json{{"order", g.order()}, {"mul", g.cayley_table()}};
}

FiniteGroup group_from_json(const json& j, const GroupOptions& options) {
  if (!j.is_object() || !j.contains("mul")) throw InvalidSpec("Cayley JSON needs a \"mul\" table");
  std::vector<std::vector<std::int64_t>> table;
  try {
    table = j.at("mul").get<std::vector<std::vector<std::int64_t>>>();
  } catch (const json::exception& e) {
    throw InvalidSpec(std::string("bad Cayley table: ") + e.what());
  }
  if (j.contains("order") && j.at("order").get<std::size_t>() != table.size())
    throw InvalidSpec("\"order\" does not match the table size");
  return FiniteGroup::from_cayley(table, options);
}

json class_table_to_json(const SubgroupClassTable& t) {
  json reps = json::array(), orders = json::array(), sizes = json::array(), norms = json::array();
  for (std::size_t c = 0; c < t.class_count(); ++c) {
    reps.push_back(t.rep(c).members());
    orders.push_back(t.rep(c).order());
    sizes.push_back(t.class_size(c));
    norms.push_back(t.normalizer_of_rep(c).order());
  }
  return json{{"reps", reps},
              {"orders", orders},
              {"class_sizes", sizes},
              {"normalizer_orders", norms},
              {"marks", t.marks()}};
}

json basis_to_json(const BurnsideRing& ring) {
  json out = json::array();
  for (std::size_t i = 0; i < ring.rank(); ++i) {
    const BasisRep& r = ring.basis().reps[i];
    json values = json::array();
    for (FiberElement v : ring.hom(r.cls).values(r.hom_index)) values.push_back(ring.fiber().decode(v));
    out.push_back(json{{"subgroup_class", r.cls},
                       {"subgroup", ring.classes().rep(r.cls).members()},
                       {"character_index", r.hom_index},
                       {"character", values},
                       {"stabilizer_order", r.stabilizer.order()}});
  }
  return out;
}

json matrix_to_json(const IntMatrix& m) { return json(m); }

json structure_constants_to_json(const StructureConstants& sc) {
  // sparse: one entry per nonzero constant
  json out = json::array();
  for (std::size_t i = 0; i < sc.size(); ++i)
    for (std::size_t j = 0; j < sc[i].size(); ++j)
      for (std::size_t k = 0; k < sc[i][j].size(); ++k)
        if (sc[i][j][k] != 0) out.push_back(json::array({i, j, k, sc[i][j][k]}));
  return out;
}

json witness_to_json(const SpeciesWitness& w) {
  json j{{"subgroup_map", w.subgroup_map}, {"char_maps", w.char_maps}};
  bool all = true;
  for (bool b : w.is_group_iso) all = all && b;
  if (!all) j["is_group_iso"] = std::vector<bool>(w.is_group_iso.begin(), w.is_group_iso.end());
  return j;
}

SpeciesWitness witness_from_json(const json& j) {
  SpeciesWitness w;
  try {
    w.subgroup_map = j.at("subgroup_map").get<std::vector<std::size_t>>();
    w.char_maps = j.at("char_maps").get<std::vector<std::vector<std::size_t>>>();
    if (j.contains("is_group_iso")) {
      auto flags = j.at("is_group_iso").get<std::vector<bool>>();
      w.is_group_iso.assign(flags.begin(), flags.end());
    } else {
      w.is_group_iso.assign(w.subgroup_map.size(), true);
    }
  } catch (const json::exception& e) {
    throw InvalidSpec(std::string("bad witness JSON: ") + e.what());
  }
  return w;
}

json verdict_to_json(const SpeciesVerdict& v) {
  json j{{"valid", v.valid}};
  if (v.gamma_mismatch) {
    const auto& m = *v.gamma_mismatch;
    j["counterexample"] = json{{"class_k", m.class_k}, {"phi", m.phi},         {"class_l", m.class_l},
                               {"psi", m.psi},         {"gamma_g", m.gamma_g}, {"gamma_h", m.gamma_h}};
  }
  if (v.structure_mismatch)
    j["structure_mismatch"] = json{{"i", v.structure_mismatch->i}, {"j", v.structure_mismatch->j}};
  if (v.valid) j["basis_map"] = v.basis_map;
  return j;
}

std::string matrix_to_csv(const IntMatrix& m) {
  std::ostringstream os;
  for (const auto& row : m) {
    for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << row[c];
    os << '\n';
  }
  return os.str();
}

}  // namespace fb
