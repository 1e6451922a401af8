#include "fb/species.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <tuple>

#include "fb/error.h"
#include "fb/parallel.h"

namespace fb {

namespace {

bool is_permutation_of_range(const std::vector<std::size_t>& v, std::size_t n) {
  if (v.size() != n) return false;
  std::vector<char> hit(n, 0);
  for (auto x : v) {
    if (x >= n || hit[x]) return false;
    hit[x] = 1;
  }
  return true;
}

std::size_t hom_order(const HomSet& hs, std::size_t i) {
  std::size_t k = 1;
  for (std::size_t x = i; x != 0; x = hs.mul(x, i)) ++k;
  return i == 0 ? 1 : k;
}

std::int64_t gamma_of(const BurnsideRing& r, std::size_t ck, std::size_t phi, std::size_t cl, std::size_t psi) {
  return r.mark_matrix()[r.ghost_offset(ck) + phi][r.basis().basis_of[cl][psi]];
}

}  // namespace

SpeciesWitness SpeciesWitness::inverse() const {
  SpeciesWitness inv;
  const std::size_t m = subgroup_map.size();
  inv.subgroup_map.assign(m, 0);
  inv.char_maps.assign(m, {});
  inv.is_group_iso.assign(m, false);
  for (std::size_t c = 0; c < m; ++c) {
    const std::size_t d = subgroup_map[c];
    inv.subgroup_map[d] = c;
    inv.is_group_iso[d] = is_group_iso[c];
    inv.char_maps[d].assign(char_maps[c].size(), 0);
    for (std::size_t i = 0; i < char_maps[c].size(); ++i) inv.char_maps[d][char_maps[c][i]] = i;
  }
  return inv;
}

bool is_hom_group_isomorphism(const HomSet& from, const HomSet& to, const std::vector<std::size_t>& map) {
  if (from.size() != to.size() || !is_permutation_of_range(map, to.size())) return false;
  for (std::size_t i = 0; i < from.size(); ++i)
    for (std::size_t j = 0; j < from.size(); ++j)
      if (map[from.mul(i, j)] != to.mul(map[i], map[j])) return false;
  return true;
}

std::vector<std::vector<std::size_t>> hom_group_isomorphisms(const HomSet& from, const HomSet& to,
                                                             std::size_t limit) {
  std::vector<std::vector<std::size_t>> out;
  const std::size_t n = from.size();
  if (n != to.size()) return out;

  std::vector<std::size_t> ord_from(n), ord_to(n);
  for (std::size_t i = 0; i < n; ++i) {
    ord_from[i] = hom_order(from, i);
    ord_to[i] = hom_order(to, i);
  }

  // generators: repeatedly take an element of largest order outside the span
  std::vector<std::size_t> gens;
  std::vector<char> in(n, 0);
  in[0] = 1;
  std::vector<std::size_t> span{0};
  while (span.size() < n) {
    std::size_t best = n;
    for (std::size_t i = 0; i < n; ++i)
      if (!in[i] && (best == n || ord_from[i] > ord_from[best])) best = i;
    gens.push_back(best);
    for (std::size_t t = 0; t < span.size(); ++t)
      for (std::size_t g : gens) {
        const std::size_t y = from.mul(span[t], g);
        if (!in[y]) {
          in[y] = 1;
          span.push_back(y);
        }
      }
  }

  std::vector<std::size_t> images(gens.size());
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> map;
  auto extend = [&](std::size_t k, bool total) {
    map.assign(n, unset);
    std::vector<char> used(n, 0);
    map[0] = 0;
    used[0] = 1;
    std::vector<std::size_t> queue{0};
    for (std::size_t t = 0; t < queue.size(); ++t)
      for (std::size_t s = 0; s < k; ++s) {
        const std::size_t x = from.mul(queue[t], gens[s]);
        const std::size_t y = to.mul(map[queue[t]], images[s]);
        if (map[x] == unset) {
          if (used[y]) return false;
          used[y] = 1;
          map[x] = y;
          queue.push_back(x);
        } else if (map[x] != y) {
          return false;
        }
      }
    return !total || queue.size() == n;
  };

  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (out.size() >= limit) return;
    if (k == gens.size()) {
      if (extend(k, true) && is_hom_group_isomorphism(from, to, map)) out.push_back(map);
      return;
    }
    for (std::size_t y = 0; y < n; ++y) {
      if (ord_to[y] != ord_from[gens[k]]) continue;
      images[k] = y;
      if (extend(k + 1, false)) self(self, k + 1);
      if (out.size() >= limit) return;
    }
  };
  rec(rec, 0);
  return out;
}

void validate_witness(const BurnsideRing& g, const BurnsideRing& h, const SpeciesWitness& w) {
  const std::size_t m = g.classes().class_count();
  if (h.classes().class_count() != m)
    throw NotABijection("subgroup class counts differ: " + std::to_string(m) + " vs " +
                        std::to_string(h.classes().class_count()));
  if (!is_permutation_of_range(w.subgroup_map, m)) throw NotABijection("subgroup map is not a bijection");
  if (w.char_maps.size() != m) throw NotABijection("need one character map per subgroup class");
  if (w.is_group_iso.size() != m) throw NotAGroupIso("need one group-isomorphism flag per subgroup class");
  for (std::size_t c = 0; c < m; ++c) {
    const HomSet& from = g.hom(c);
    const HomSet& to = h.hom(w.subgroup_map[c]);
    if (from.size() != to.size() || !is_permutation_of_range(w.char_maps[c], to.size()))
      throw NotABijection("character map of class " + std::to_string(c) + " is not a bijection");
    if (!w.is_group_iso[c])
      throw NotAGroupIso("character map of class " + std::to_string(c) +
                         " is not flagged as a group isomorphism; only that case is decided");
    if (!is_hom_group_isomorphism(from, to, w.char_maps[c]))
      throw NotAGroupIso("character map of class " + std::to_string(c) + " is not a group isomorphism");
  }
}

SpeciesVerdict verify_species(const BurnsideRing& g, const BurnsideRing& h, const SpeciesWitness& w,
                              unsigned threads) {
  validate_witness(g, h, w);
  const std::size_t m = g.classes().class_count();

  // gamma matching on every quadruple (K, phi, L, psi) of class representatives
  std::vector<std::optional<GammaMismatch>> first(m);
  parallel_for(m, threads, [&](std::size_t ck) {
    for (std::size_t phi = 0; phi < g.hom(ck).size(); ++phi)
      for (std::size_t cl = 0; cl < m; ++cl)
        for (std::size_t psi = 0; psi < g.hom(cl).size(); ++psi) {
          const std::int64_t a = gamma_of(g, ck, phi, cl, psi);
          const std::int64_t b =
              gamma_of(h, w.subgroup_map[ck], w.char_maps[ck][phi], w.subgroup_map[cl], w.char_maps[cl][psi]);
          if (a != b) {
            first[ck] = GammaMismatch{ck, phi, cl, psi, a, b};
            return;
          }
        }
  });
  SpeciesVerdict verdict;
  for (auto& f : first)
    if (f) {
      verdict.gamma_mismatch = f;
      return verdict;
    }

  // induced bijection on orbit bases
  const std::size_t n = g.rank();
  if (h.rank() != n) throw NotABijection("basis sizes differ");
  std::vector<std::size_t> pi(n);
  for (std::size_t j = 0; j < n; ++j) {
    const BasisRep& r = g.basis().reps[j];
    pi[j] = h.basis().basis_of[w.subgroup_map[r.cls]][w.char_maps[r.cls][r.hom_index]];
  }
  if (!is_permutation_of_range(pi, n)) throw NotABijection("induced map on basis elements is not a bijection");

  // transport of the multiplication, computed independently on both sides
  const auto sg = structure_constants(g, threads);
  const auto sh = structure_constants(h, threads);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (sg[i][j][k] != sh[pi[i]][pi[j]][pi[k]]) {
          verdict.structure_mismatch = StructureMismatch{i, j};
          return verdict;
        }

  verdict.valid = true;
  verdict.basis_map = std::move(pi);
  return verdict;
}

namespace {

using ClassKey = std::tuple<std::size_t, std::vector<std::size_t>, std::vector<std::size_t>, std::size_t, std::size_t>;

ClassKey class_key(const BurnsideRing& r, std::size_t c) {
  const auto& marks = r.classes().marks();
  std::vector<std::size_t> row = marks[c];
  std::vector<std::size_t> col;
  for (const auto& mrow : marks) col.push_back(mrow[c]);
  std::sort(row.begin(), row.end());
  std::sort(col.begin(), col.end());
  return {r.classes().rep(c).order(), std::move(row), std::move(col), r.hom(c).size(),
          r.classes().normalizer_of_rep(c).order()};
}

class SpeciesSearch {
 public:
  SpeciesSearch(const BurnsideRing& g, const BurnsideRing& h, const SearchOptions& options)
      : g_(g), h_(h), options_(options), m_(g.classes().class_count()) {}

  SearchResult run() {
    SearchResult result;
    if (h_.classes().class_count() != m_ || h_.rank() != g_.rank() || g_.group().order() != h_.group().order())
      return result;
    std::vector<ClassKey> kh;
    for (std::size_t d = 0; d < m_; ++d) kh.push_back(class_key(h_, d));
    candidates_.resize(m_);
    for (std::size_t c = 0; c < m_; ++c) {
      const ClassKey k = class_key(g_, c);
      for (std::size_t d = 0; d < m_; ++d)
        if (kh[d] == k) candidates_[c].push_back(d);
      if (candidates_[c].empty()) return result;
    }
    w_.subgroup_map.assign(m_, 0);
    w_.char_maps.assign(m_, {});
    w_.is_group_iso.assign(m_, true);
    used_.assign(m_, 0);
    if (assign(0)) result.witness = w_;
    result.nodes = nodes_;
    return result;
  }

 private:
  void tick() {
    if (++nodes_ > options_.node_budget)
      throw SearchBudgetExceeded("species search exceeded " + std::to_string(options_.node_budget) + " nodes");
  }

  bool marks_consistent(std::size_t c, std::size_t d) const {
    const auto& mg = g_.classes().marks();
    const auto& mh = h_.classes().marks();
    if (mg[c][c] != mh[d][d]) return false;
    for (std::size_t e = 0; e < c; ++e) {
      const std::size_t t = w_.subgroup_map[e];
      if (mg[c][e] != mh[d][t] || mg[e][c] != mh[t][d]) return false;
    }
    return true;
  }

  bool gamma_consistent(std::size_t c) const {
    const std::size_t d = w_.subgroup_map[c];
    for (std::size_t e = 0; e <= c; ++e) {
      const std::size_t t = w_.subgroup_map[e];
      for (std::size_t phi = 0; phi < g_.hom(c).size(); ++phi)
        for (std::size_t psi = 0; psi < g_.hom(e).size(); ++psi) {
          const std::size_t phi2 = w_.char_maps[c][phi];
          const std::size_t psi2 = w_.char_maps[e][psi];
          if (gamma_of(g_, c, phi, e, psi) != gamma_of(h_, d, phi2, t, psi2)) return false;
          if (gamma_of(g_, e, psi, c, phi) != gamma_of(h_, t, psi2, d, phi2)) return false;
        }
    }
    return true;
  }

  const std::vector<std::vector<std::size_t>>& isomorphisms(std::size_t c, std::size_t d) {
    auto key = std::make_pair(c, d);
    auto it = iso_cache_.find(key);
    if (it == iso_cache_.end()) it = iso_cache_.emplace(key, hom_group_isomorphisms(g_.hom(c), h_.hom(d))).first;
    return it->second;
  }

  bool assign(std::size_t c) {
    if (c == m_) return true;
    for (std::size_t d : candidates_[c]) {
      if (used_[d]) continue;
      tick();
      if (!marks_consistent(c, d)) continue;
      used_[d] = 1;
      w_.subgroup_map[c] = d;
      for (const auto& iso : isomorphisms(c, d)) {
        tick();
        w_.char_maps[c] = iso;
        if (gamma_consistent(c) && assign(c + 1)) return true;
      }
      used_[d] = 0;
    }
    return false;
  }

  const BurnsideRing& g_;
  const BurnsideRing& h_;
  SearchOptions options_;
  std::size_t m_;
  std::vector<std::vector<std::size_t>> candidates_;
  std::vector<char> used_;
  SpeciesWitness w_;
  std::uint64_t nodes_ = 0;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::vector<std::size_t>>> iso_cache_;
};

}  // namespace

SearchResult search_species(const BurnsideRing& g, const BurnsideRing& h, const SearchOptions& options) {
  return SpeciesSearch(g, h, options).run();
}

}  // namespace fb
