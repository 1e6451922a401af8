#include "fb/thevenaz.h"

#include <charconv>
#include <map>
#include <stdexcept>

#include "fb/constructors.h"
#include "fb/error.h"

namespace fb {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  if (m >= (1ULL << 32)) throw InvalidSpec("modulus too large");
  std::uint64_t r = 1 % m;
  base %= m;
  while (e) {
    if (e & 1) r = r * base % m;
    base = base * base % m;
    e >>= 1;
  }
  return r;
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t p) {
  if (p >= (1ULL << 32)) throw InvalidSpec("modulus too large");
  a %= p;
  if (a == 0) return 0;
  std::uint64_t k = 1;
  for (std::uint64_t x = a; x != 1; x = x * a % p) {
    ++k;
    if (k > p) return 0;
  }
  return k;
}

void ThevenazSpec::validate() const {
  if (p >= (1ULL << 32) || q >= (1ULL << 32)) throw InvalidSpec("p and q must be below 2^32");
  if (!is_prime(p)) throw InvalidSpec("p = " + std::to_string(p) + " is not prime");
  if (!is_prime(q)) throw InvalidSpec("q = " + std::to_string(q) + " is not prime");
  if (q < 3) throw InvalidSpec("q must be at least 3");
  if ((p - 1) % q != 0) throw InvalidSpec("q does not divide p - 1");
  if (a % p == 0 || b % p == 0) throw InvalidSpec("a and b must be units mod p");
  if (multiplicative_order(a, p) != q) throw InvalidSpec("a does not have multiplicative order q");
  if (multiplicative_order(b, p) != q) throw InvalidSpec("b does not have multiplicative order q");
  if (a % p == b % p) throw InvalidSpec("a and b must differ");
}

ThevenazSpec ThevenazSpec::parse(std::string_view text) {
  std::map<std::string, std::uint64_t> named;
  std::vector<std::uint64_t> positional;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view piece = text.substr(start, end - start);
    std::string key;
    if (auto eq = piece.find('='); eq != std::string_view::npos) {
      key = std::string(piece.substr(0, eq));
      piece = piece.substr(eq + 1);
    }
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), v);
    if (piece.empty() || ec != std::errc{} || ptr != piece.data() + piece.size())
      throw InvalidSpec("bad Thevenaz specification '" + std::string(text) + "'");
    if (key.empty())
      positional.push_back(v);
    else
      named[key] = v;
    start = end + 1;
  }
  ThevenazSpec s;
  if (!positional.empty()) {
    if (positional.size() != 4 || !named.empty()) throw InvalidSpec("expected p,q,a,b");
    s = {positional[0], positional[1], positional[2], positional[3]};
  } else {
    for (const char* k : {"p", "q", "a", "b"})
      if (!named.count(k)) throw InvalidSpec(std::string("missing ") + k + " in Thevenaz specification");
    if (named.size() != 4) throw InvalidSpec("unknown key in Thevenaz specification");
    s = {named["p"], named["q"], named["a"], named["b"]};
  }
  s.validate();
  return s;
}

std::string ThevenazSpec::to_string() const {
  return "p=" + std::to_string(p) + ",q=" + std::to_string(q) + ",a=" + std::to_string(a) +
         ",b=" + std::to_string(b);
}

Element ThevenazGroup::p_element(std::uint64_t i, std::uint64_t j) const {
  return static_cast<Element>(((i % spec.p) * spec.p + (j % spec.p)) * spec.q);
}

ThevenazGroup build_thevenaz(const ThevenazSpec& spec) {
  spec.validate();
  const std::uint64_t p = spec.p, q = spec.q;
  if (p * p * q > 2000) throw InvalidSpec("p^2 q = " + std::to_string(p * p * q) + " exceeds the supported group order 2000");
  FiniteGroup n = abelian_group({p, p});
  FiniteGroup cq = cyclic_group(q);
  // z^k : x^u y^v -> x^(a^k u) y^(b^k v)
  Action action(q, std::vector<Element>(p * p));
  for (std::uint64_t k = 0; k < q; ++k) {
    const std::uint64_t ak = pow_mod(spec.a, k, p), bk = pow_mod(spec.b, k, p);
    for (std::uint64_t u = 0; u < p; ++u)
      for (std::uint64_t v = 0; v < p; ++v)
        action[k][u * p + v] = static_cast<Element>((ak * u % p) * p + bk * v % p);
  }
  ThevenazGroup g{spec, semidirect_product(n, cq, action)};
  g.x = g.p_element(1, 0);
  g.y = g.p_element(0, 1);
  g.z = 1;
  return g;
}

ThevenazClasses canonical_class_reps(const ThevenazGroup& g, const SubgroupClassTable& classes) {
  const auto& G = g.group;
  const std::uint64_t p = g.spec.p;
  ThevenazClasses out;
  auto add = [&](std::string name, std::vector<Element> gens) {
    out.reps.push_back(Subgroup::generated_by(G, gens));
    out.names.push_back(std::move(name));
  };
  add("1", {});
  add("P_a", {g.x});
  add("P_b", {g.y});
  std::vector<char> covered(p, 0);
  for (std::uint64_t j = 1; j < p; ++j) {
    if (covered[j]) continue;
    for (std::uint64_t k = 0; k < g.spec.q; ++k) covered[j * pow_mod(g.spec.a, k, p) % p] = 1;
    out.p_labels.push_back(j);
    add("P(" + std::to_string(j) + ")", {g.p_element(1, j)});
  }
  add("P_a+P_b", {g.x, g.y});
  add("Q", {g.z});
  add("P_a:Q", {g.x, g.z});
  add("P_b:Q", {g.y, g.z});
  add("G", {g.x, g.y, g.z});

  std::vector<char> hit(classes.class_count(), 0);
  for (const auto& s : out.reps) {
    const std::size_t c = classes.class_of(s);
    if (hit[c]) throw std::logic_error("two named subgroups are conjugate");
    hit[c] = 1;
    out.class_index.push_back(c);
  }
  if (out.reps.size() != classes.class_count())
    throw std::logic_error("named subgroups do not cover every conjugacy class");
  return out;
}

std::vector<std::vector<std::size_t>> marks_in_order(const SubgroupClassTable& classes,
                                                     const std::vector<std::size_t>& order) {
  std::vector<std::vector<std::size_t>> m(order.size(), std::vector<std::size_t>(order.size()));
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = 0; j < order.size(); ++j) m[i][j] = classes.marks()[order[i]][order[j]];
  return m;
}

bool family_isomorphic(const ThevenazSpec& s1, const ThevenazSpec& s2) {
  if (s1.p != s2.p || s1.q != s2.q) return false;
  const std::uint64_t p = s1.p;
  const std::uint64_t c = s2.a % p, d = s2.b % p;
  for (std::uint64_t n = 1; n < s1.q; ++n) {
    const std::uint64_t an = pow_mod(s1.a, n, p), bn = pow_mod(s1.b, n, p);
    if ((an == c && bn == d) || (an == d && bn == c)) return true;
  }
  return false;
}

std::uint64_t class_count(std::uint64_t p, std::uint64_t q) {
  ThevenazSpec probe{p, q, 0, 0};
  if (!is_prime(p) || !is_prime(q) || q < 3 || (p - 1) % q != 0) {
    probe.validate();  // throws with the precise reason
  }
  return (q - 1) / 2;
}

std::vector<std::uint64_t> order_q_units(std::uint64_t p, std::uint64_t q) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t u = 1; u < p; ++u)
    if (multiplicative_order(u, p) == q) out.push_back(u);
  return out;
}

std::vector<ThevenazSpec> all_family_specs(std::uint64_t p, std::uint64_t q) {
  auto units = order_q_units(p, q);
  std::vector<ThevenazSpec> out;
  for (std::size_t i = 0; i < units.size(); ++i)
    for (std::size_t j = i + 1; j < units.size(); ++j) out.push_back({p, q, units[i], units[j]});
  return out;
}

std::vector<std::vector<ThevenazSpec>> family_partition(std::uint64_t p, std::uint64_t q) {
  std::vector<std::vector<ThevenazSpec>> parts;
  for (const auto& s : all_family_specs(p, q)) {
    bool placed = false;
    for (auto& part : parts)
      if (family_isomorphic(part.front(), s)) {
        part.push_back(s);
        placed = true;
        break;
      }
    if (!placed) parts.push_back({s});
  }
  return parts;
}

namespace {

bool is_p_power(std::size_t n, std::uint64_t p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

// image of z inside the class-table representative of the class of `named`
Element z_in_rep(const ThevenazGroup& tg, const SubgroupClassTable& classes, const Subgroup& named) {
  const std::size_t id = classes.id_of(named);
  return tg.group.conj(classes.conjugator_to_rep(id), tg.z);
}

}  // namespace

SpeciesWitness thevenaz_witness(const ThevenazGroup& g, const BurnsideRing& rg, const ThevenazGroup& h,
                                const BurnsideRing& rh) {
  if (g.spec.p != h.spec.p || g.spec.q != h.spec.q) throw InvalidSpec("groups have different p or q");
  if (!(rg.fiber() == rh.fiber())) throw InvalidSpec("rings use different fibers");
  if (rg.fiber().torsion(g.spec.p).size() > 1)
    throw FiberHasPTorsion("fiber " + rg.fiber().to_string() + " has nontrivial " + std::to_string(g.spec.p) +
                           "-torsion");
  if (!(rg.group() == g.group) || !(rh.group() == h.group)) throw InvalidSpec("ring was built over another group");

  const auto cg = canonical_class_reps(g, rg.classes());
  const auto ch = canonical_class_reps(h, rh.classes());
  const std::size_t m = cg.reps.size();

  SpeciesWitness w;
  w.subgroup_map.assign(m, 0);
  w.char_maps.assign(m, {});
  w.is_group_iso.assign(m, true);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t c = cg.class_index[i], d = ch.class_index[i];
    w.subgroup_map[c] = d;
    const HomSet& from = rg.hom(c);
    const HomSet& to = rh.hom(d);
    if (is_p_power(cg.reps[i].order(), g.spec.p)) {
      // no p-torsion in A: only the trivial character
      w.char_maps[c] = {0};
      continue;
    }
    const Element zg = z_in_rep(g, rg.classes(), cg.reps[i]);
    const Element zh = z_in_rep(h, rh.classes(), ch.reps[i]);
    w.char_maps[c].assign(from.size(), 0);
    for (std::size_t phi = 0; phi < from.size(); ++phi) {
      std::size_t match = to.size();
      for (std::size_t psi = 0; psi < to.size(); ++psi)
        if (to.value(psi, zh) == from.value(phi, zg)) {
          if (match != to.size()) throw std::logic_error("character not determined by its value on z");
          match = psi;
        }
      if (match == to.size()) throw std::logic_error("no character with the required value on z");
      w.char_maps[c][phi] = match;
    }
  }
  return w;
}

}  // namespace fb
