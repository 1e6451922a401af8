#include "cli.h"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "fb/burnside_ring.h"
#include "fb/constructors.h"
#include "fb/error.h"
#include "fb/isomorphism.h"
#include "fb/parallel.h"
#include "fb/species.h"

namespace fb::cli {

namespace {

std::vector<std::size_t> parse_size_list(const std::string& text, const std::string& what) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string piece;
  while (std::getline(ss, piece, ',')) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(piece, &used);
    } catch (...) {
      used = 0;
    }
    if (used == 0 || used != piece.size()) throw InvalidSpec("bad number '" + piece + "' in " + what);
    out.push_back(v);
  }
  if (out.empty()) throw InvalidSpec("empty " + what);
  return out;
}

std::size_t single(const std::vector<std::size_t>& v, const std::string& what) {
  if (v.size() != 1) throw InvalidSpec(what + " takes exactly one number");
  return v[0];
}

}  // namespace

std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << "fnv1a64:" << std::hex;
  os.width(16);
  os.fill('0');
  os << h;
  return os.str();
}

GroupSource parse_group_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw InvalidSpec("group spec '" + spec + "' needs the form kind:arguments");
  const std::string kind = spec.substr(0, colon);
  const std::string arg = spec.substr(colon + 1);
  constexpr std::size_t max_order = 2000;
  auto bounded = [&](std::size_t order) {
    if (order == 0 || order > max_order)
      throw InvalidSpec("group order " + std::to_string(order) + " outside 1.." + std::to_string(max_order));
  };

  if (kind == "cyclic") {
    const std::size_t n = single(parse_size_list(arg, spec), spec);
    bounded(n);
    return {spec, cyclic_group(n), std::nullopt};
  }
  if (kind == "abelian") {
    const auto factors = parse_size_list(arg, spec);
    std::size_t order = 1;
    for (auto d : factors) {
      if (d == 0) throw InvalidSpec("factor 0 in " + spec);
      order *= d;
      bounded(order);
    }
    return {spec, abelian_group(factors), std::nullopt};
  }
  if (kind == "dihedral") {
    const std::size_t n = single(parse_size_list(arg, spec), spec);
    bounded(2 * n);
    return {spec, dihedral_group(n), std::nullopt};
  }
  if (kind == "symmetric") {
    const std::size_t n = single(parse_size_list(arg, spec), spec);
    if (n < 1 || n > 5) throw InvalidSpec("symmetric:n supports 1 <= n <= 5");
    return {spec, symmetric_group(n), std::nullopt};
  }
  if (kind == "thevenaz") {
    ThevenazGroup tg = build_thevenaz(ThevenazSpec::parse(arg));
    FiniteGroup g = tg.group;
    return {spec, std::move(g), std::move(tg)};
  }
  if (kind == "cayley") {
    std::ifstream in(arg);
    if (!in) throw InvalidSpec("cannot open Cayley file '" + arg + "'");
    json j;
    try {
      in >> j;
    } catch (const json::exception& e) {
      throw InvalidSpec("cannot parse '" + arg + "': " + e.what());
    }
    FiniteGroup g = group_from_json(j);
    bounded(g.order());
    return {spec, std::move(g), std::nullopt};
  }
  throw InvalidSpec("unknown group kind '" + kind + "'");
}

json describe_input(const GroupSource& g) {
  return json{{"spec", g.spec}, {"order", g.group.order()}, {"hash", fnv1a_hex(group_to_json(g.group).dump())}};
}

namespace {

json pair_json(const BurnsideRing& ring, std::size_t i) {
  const BasisRep& r = ring.basis().reps[i];
  json values = json::array();
  for (FiberElement v : ring.hom(r.cls).values(r.hom_index)) values.push_back(ring.fiber().decode(v));
  return json{{"subgroup", ring.classes().rep(r.cls).members()}, {"character", values}};
}

json names_json(const ThevenazClasses& c) { return json(c.names); }

}  // namespace

ReproduceOutcome reproduce_counterexample(const ReproduceOptions& options) {
  ReproduceOutcome outcome;
  json& rep = outcome.report;
  json checks = json::object();
  std::string stage;

  auto fail = [&](int code, const std::string& message) {
    rep["failed_stage"] = stage;
    rep["error"] = message;
    rep["checks"] = checks;
    outcome.exit_code = code;
    return outcome;
  };

  try {
    stage = "parameters";
    const ThevenazSpec s1 = options.first;
    s1.validate();
    const std::uint64_t p = s1.p, q = s1.q;
    rep["p"] = p;
    rep["q"] = q;
    rep["fiber"] = options.fiber.to_string();

    stage = "classification";
    const auto parts = family_partition(p, q);
    json sizes = json::array();
    for (const auto& part : parts) sizes.push_back(part.size());
    rep["classification"] = json{{"pairs", all_family_specs(p, q).size()},
                                 {"class_sizes", sizes},
                                 {"isomorphism_classes", parts.size()},
                                 {"expected_classes", class_count(p, q)}};
    checks["classification"] = parts.size() == class_count(p, q);

    ThevenazSpec s2 = s1;
    if (options.partner) {
      s2.a = options.partner->first;
      s2.b = options.partner->second;
      s2.validate();
    } else {
      bool found = false;
      for (const auto& part : parts)
        if (!family_isomorphic(part.front(), s1)) {
          s2 = part.front();
          found = true;
          break;
        }
      if (!found) {
        rep["counterexample_pair"] = nullptr;
        rep["message"] = "only one isomorphism class of G(a,b) exists for these p and q; no counterexample pair";
        rep["checks"] = checks;
        outcome.exit_code = 1;
        return outcome;
      }
    }
    rep["counterexample_pair"] = json{{"g", s1.to_string()}, {"h", s2.to_string()}};

    stage = "fiber";
    if (options.fiber.torsion(p).size() > 1)
      throw FiberHasPTorsion("fiber " + options.fiber.to_string() + " has nontrivial " + std::to_string(p) +
                             "-torsion");
    rep["fiber_has_q_torsion"] = options.fiber.torsion(q).size() > 1;

    stage = "build";
    const ThevenazGroup g = build_thevenaz(s1);
    const ThevenazGroup h = build_thevenaz(s2);
    rep["orders"] = {g.group.order(), h.group.order()};

    stage = "non_isomorphism";
    const bool iso = are_isomorphic(g.group, h.group).has_value();
    rep["family_isomorphic"] = family_isomorphic(s1, s2);
    rep["groups_isomorphic"] = iso;
    checks["non_isomorphic"] = !iso && !family_isomorphic(s1, s2);

    stage = "marks";
    const BurnsideRing rg(g.group, options.fiber, options.threads);
    const BurnsideRing rh(h.group, options.fiber, options.threads);
    const auto cg = canonical_class_reps(g, rg.classes());
    const auto ch = canonical_class_reps(h, rh.classes());
    const auto mg = marks_in_order(rg.classes(), cg.class_index);
    const auto mh = marks_in_order(rh.classes(), ch.class_index);
    rep["marks"] = json{{"class_names", names_json(cg)}, {"g", mg}, {"h", mh}};
    checks["marks_equal"] = mg == mh;

    stage = "basis";
    rep["basis_size"] = {rg.rank(), rh.rank()};
    checks["basis_sizes_equal"] = rg.rank() == rh.rank();

    stage = "witness";
    const SpeciesWitness w = thevenaz_witness(g, rg, h, rh);
    const SpeciesVerdict v = verify_species(rg, rh, w, options.threads);
    rep["witness"] = witness_to_json(w);
    rep["verdict"] = verdict_to_json(v);
    checks["witness_valid"] = v.valid;
    if (v.valid) {
      json bij = json::array();
      for (std::size_t i = 0; i < v.basis_map.size(); ++i)
        bij.push_back(json{{"g_index", i},
                           {"h_index", v.basis_map[i]},
                           {"g_pair", pair_json(rg, i)},
                           {"h_pair", pair_json(rh, v.basis_map[i])}});
      rep["basis_bijection"] = bij;
    }
  } catch (const Error& e) {
    const bool input_error = dynamic_cast<const InvalidSpec*>(&e) || dynamic_cast<const FiberHasPTorsion*>(&e);
    return fail(input_error ? 2 : 1, e.what());
  }

  rep["checks"] = checks;
  bool all = true;
  for (const auto& [name, ok] : checks.items()) all = all && ok.get<bool>();
  rep["all_checks_passed"] = all;
  outcome.exit_code = all ? 0 : 1;
  return outcome;
}

namespace {

struct Common {
  std::string out_path;
  std::string format = "json";
  unsigned threads = 0;
  bool no_timing = false;
};

void emit(const Common& common, const std::string& text, std::ostream& out) {
  if (common.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(common.out_path);
  if (!f) throw InvalidSpec("cannot write '" + common.out_path + "'");
  f << text;
}

std::string joined(const std::vector<std::string>& args) {
  std::string s;
  for (const auto& a : args) s += (s.empty() ? "" : " ") + a;
  return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fibered Burnside rings of finite groups: tables of marks, gamma coefficients, species isomorphisms", "fburn"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--threads", common.threads, "worker threads (default: FB_THREADS or 1)");
  app.add_flag("--no-timing", common.no_timing, "omit timing_ms from reports");

  auto add_output = [&](CLI::App* sub, bool csv) {
    sub->add_option("--out", common.out_path, "write the report to a file");
    if (csv) sub->add_option("--format", common.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  };

  std::string group_g, group_h, fiber_text = "1", witness_path, thevenaz_text, partner_text;
  bool structure = false, auto_search = false, thevenaz_witness_flag = false;
  std::uint64_t budget = SearchOptions{}.node_budget;

  auto* marks = app.add_subcommand("marks", "table of marks of a group");
  marks->add_option("group", group_g, "group spec")->required();
  add_output(marks, true);

  auto* gamma = app.add_subcommand("gamma", "orbit basis and gamma table of B^A(G)");
  gamma->add_option("group", group_g, "group spec")->required();
  gamma->add_option("--fiber", fiber_text, "fiber A as cyclic orders, e.g. 5 or 2,4");
  gamma->add_flag("--structure", structure, "include the structure constants of the basis");
  add_output(gamma, true);

  auto* verify = app.add_subcommand("verify", "verify or search a species isomorphism B^A(G) -> B^A(H)");
  verify->add_option("G", group_g, "group spec G")->required();
  verify->add_option("H", group_h, "group spec H")->required();
  verify->add_option("--fiber", fiber_text, "fiber A");
  auto* wopt = verify->add_option("--witness", witness_path, "witness JSON file");
  auto* aopt = verify->add_flag("--auto", auto_search, "search for a witness");
  auto* topt = verify->add_flag("--thevenaz-witness", thevenaz_witness_flag, "use the explicit witness for G(a,b), G(c,d)");
  wopt->excludes(aopt)->excludes(topt);
  aopt->excludes(topt);
  verify->add_option("--budget", budget, "node budget of the search");
  add_output(verify, false);

  auto* reproduce = app.add_subcommand("reproduce", "non-isomorphic G(a,b), G(c,d) with isomorphic B^A");
  reproduce->add_option("--thevenaz", thevenaz_text, "first group, e.g. p=11,q=5,a=3,b=9");
  reproduce->add_option("--against", partner_text, "partner c,d (default: 3,4 for the default group, else automatic)");
  reproduce->add_option("--fiber", fiber_text, "fiber A (default 5)");
  add_output(reproduce, false);

  auto* cayley = app.add_subcommand("cayley", "export the Cayley table of a group as JSON");
  cayley->add_option("group", group_g, "group spec")->required();
  add_output(cayley, false);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  if (common.threads == 0) common.threads = default_threads();

  const auto start = std::chrono::steady_clock::now();
  json report{{"command", joined(args)}};
  int code = 0;
  auto finish = [&](const json& r) {
    json final_report = r;
    if (!common.no_timing)
      final_report["timing_ms"] =
          std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    emit(common, final_report.dump(2) + "\n", out);
  };

  try {
    if (marks->parsed()) {
      const GroupSource g = parse_group_spec(group_g);
      const SubgroupClassTable table(g.group, common.threads);
      if (common.format == "csv") {
        emit(common, matrix_to_csv(to_int_matrix(table.marks())), out);
        return 0;
      }
      report["inputs"] = {{"group", describe_input(g)}};
      report["result"] = class_table_to_json(table);
      report["verdict"] = "ok";
    } else if (gamma->parsed()) {
      const GroupSource g = parse_group_spec(group_g);
      const BurnsideRing ring(g.group, AbelianFiber::parse(fiber_text), common.threads);
      const IntMatrix t = gamma_table(ring);
      if (common.format == "csv") {
        emit(common, matrix_to_csv(t), out);
        return 0;
      }
      report["inputs"] = {{"group", describe_input(g)}, {"fiber", ring.fiber().to_string()}};
      json result{{"basis", basis_to_json(ring)}, {"gamma", t}, {"rank", ring.rank()}};
      if (structure) result["structure_constants"] = structure_constants_to_json(structure_constants(ring, common.threads));
      report["result"] = result;
      report["verdict"] = "ok";
    } else if (verify->parsed()) {
      const GroupSource g = parse_group_spec(group_g);
      const GroupSource h = parse_group_spec(group_h);
      const AbelianFiber fiber = AbelianFiber::parse(fiber_text);
      report["inputs"] = {{"g", describe_input(g)}, {"h", describe_input(h)}, {"fiber", fiber.to_string()}};
      if (!auto_search && !thevenaz_witness_flag && witness_path.empty())
        throw InvalidSpec("verify needs one of --witness, --auto, --thevenaz-witness");
      std::optional<SpeciesWitness> witness;
      if (!witness_path.empty()) {
        std::ifstream in(witness_path);
        if (!in) throw InvalidSpec("cannot open witness file '" + witness_path + "'");
        json j;
        try {
          in >> j;
        } catch (const json::exception& e) {
          throw InvalidSpec(std::string("cannot parse witness: ") + e.what());
        }
        witness = witness_from_json(j);
      }
      const BurnsideRing rg(g.group, fiber, common.threads);
      const BurnsideRing rh(h.group, fiber, common.threads);
      json result;
      if (thevenaz_witness_flag) {
        if (!g.thevenaz || !h.thevenaz) throw InvalidSpec("--thevenaz-witness needs two thevenaz: groups");
        witness = thevenaz_witness(*g.thevenaz, rg, *h.thevenaz, rh);
      }
      if (auto_search) {
        try {
          SearchResult sr = search_species(rg, rh, SearchOptions{budget});
          result["search_nodes"] = sr.nodes;
          if (!sr.witness) {
            result["caveat"] = std::string(kExhaustionCaveat);
            report["result"] = result;
            report["verdict"] = "exhausted";
            finish(report);
            return 1;
          }
          witness = sr.witness;
        } catch (const SearchBudgetExceeded& e) {
          result["error"] = e.what();
          report["result"] = result;
          report["verdict"] = "budget_exceeded";
          finish(report);
          return 1;
        }
      }
      result["witness"] = witness_to_json(*witness);
      try {
        const SpeciesVerdict v = verify_species(rg, rh, *witness, common.threads);
        result["verdict"] = verdict_to_json(v);
        report["verdict"] = v.valid ? "valid" : "invalid";
        code = v.valid ? 0 : 1;
      } catch (const NotABijection& e) {
        result["error"] = e.what();
        report["verdict"] = "invalid";
        code = 1;
      } catch (const NotAGroupIso& e) {
        result["error"] = e.what();
        report["verdict"] = "invalid";
        code = 1;
      }
      report["result"] = result;
    } else if (reproduce->parsed()) {
      ReproduceOptions opts;
      opts.threads = common.threads;
      if (!thevenaz_text.empty()) {
        opts.first = ThevenazSpec::parse(thevenaz_text);
        if (partner_text.empty()) opts.partner.reset();
      }
      if (!partner_text.empty()) {
        const auto cd = parse_size_list(partner_text, "--against");
        if (cd.size() != 2) throw InvalidSpec("--against takes c,d");
        opts.partner = std::pair<std::uint64_t, std::uint64_t>{cd[0], cd[1]};
      }
      opts.fiber = AbelianFiber::parse(reproduce->count("--fiber") ? fiber_text : "5");
      ReproduceOutcome o = reproduce_counterexample(opts);
      report["result"] = o.report;
      report["verdict"] = o.exit_code == 0 ? "reproduced" : o.exit_code == 1 ? "not_reproduced" : "input_error";
      code = o.exit_code;
    } else if (cayley->parsed()) {
      const GroupSource g = parse_group_spec(group_g);
      emit(common, group_to_json(g.group).dump() + "\n", out);
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    report["error"] = e.what();
    report["verdict"] = "input_error";
    finish(report);
    return 2;
  }
  finish(report);
  return code;
}

}  // namespace fb::cli
