#include "fb/isomorphism.h"

#include <algorithm>
#include <map>

#include "fb/lattice.h"
#include "fb/subgroup.h"

namespace fb {

namespace {

struct Profile {
  std::vector<std::size_t> order;
  std::vector<std::size_t> class_size;

  std::pair<std::size_t, std::size_t> key(Element x) const { return {order[x], class_size[x]}; }
};

template <class T>
std::vector<T> sorted(std::vector<T> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<std::size_t> subgroup_census(const FiniteGroup& g) {
  std::vector<std::size_t> census;
  for (const auto& s : enumerate_subgroups(g)) census.push_back(s.order());
  return census;  // already sorted by order
}

class Backtracker {
 public:
  Backtracker(const FiniteGroup& g, const FiniteGroup& h, const Profile& pg, const Profile& ph)
      : g_(g), h_(h) {
    // choose generators with the fewest candidate images first
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> bucket;
    for (Element y = 0; y < h.order(); ++y) ++bucket[ph.key(y)];
    std::vector<Element> order(g.order());
    for (Element x = 0; x < g.order(); ++x) order[x] = x;
    std::stable_sort(order.begin(), order.end(), [&](Element a, Element b) {
      return bucket[pg.key(a)] < bucket[pg.key(b)];
    });
    std::vector<Element> span{0};
    while (span.size() < g.order()) {
      // among uncovered elements, prefer the one whose span grows most, then fewest candidates
      Element best = 0;
      std::size_t best_span = 0;
      for (Element x : order) {
        if (std::binary_search(span.begin(), span.end(), x)) continue;
        auto trial = gens_;
        trial.push_back(x);
        const std::size_t s = closure(g, trial).size();
        if (s > best_span) {
          best_span = s;
          best = x;
        }
        if (s == g.order()) break;
      }
      gens_.push_back(best);
      span = closure(g, gens_);
    }
    // composing with an inner automorphism of H moves the first image anywhere
    // in its conjugacy class, so one image per class suffices there
    const auto class_id = h.conjugacy_class_ids();
    for (Element x : gens_) {
      std::vector<Element> c;
      std::vector<char> class_seen(h.order(), 0);
      const bool first = candidates_.empty();
      for (Element y = 0; y < h.order(); ++y) {
        if (ph.key(y) != pg.key(x)) continue;
        if (first && class_seen[class_id[y]]) continue;
        class_seen[class_id[y]] = 1;
        c.push_back(y);
      }
      candidates_.push_back(std::move(c));
    }
  }

  std::optional<GroupIsomorphism> run() {
    images_.assign(gens_.size(), 0);
    if (search(0)) return map_;
    return std::nullopt;
  }

 private:
  // Extends the partial assignment gens[0..k) -> images[0..k) along the
  // Cayley graph of the subgroup they generate; false on any conflict.
  bool consistent(std::size_t k, bool require_total) {
    constexpr Element unset = static_cast<Element>(-1);
    map_.assign(g_.order(), unset);
    std::vector<char> used(h_.order(), 0);
    map_[0] = 0;
    used[0] = 1;
    std::vector<Element> queue{0};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const Element x = queue[i];
      for (std::size_t s = 0; s < k; ++s) {
        const Element xs = g_.mul(x, gens_[s]);
        const Element ys = h_.mul(map_[x], images_[s]);
        if (map_[xs] == unset) {
          if (used[ys]) return false;
          used[ys] = 1;
          map_[xs] = ys;
          queue.push_back(xs);
        } else if (map_[xs] != ys) {
          return false;
        }
      }
    }
    return !require_total || queue.size() == g_.order();
  }

  bool search(std::size_t k) {
    if (k == gens_.size()) return consistent(k, true) && is_isomorphism(g_, h_, map_);
    for (Element y : candidates_[k]) {
      images_[k] = y;
      if (consistent(k + 1, false) && search(k + 1)) return true;
    }
    return false;
  }

  const FiniteGroup& g_;
  const FiniteGroup& h_;
  std::vector<Element> gens_;
  std::vector<std::vector<Element>> candidates_;
  std::vector<Element> images_;
  GroupIsomorphism map_;
};

}  // namespace

bool is_isomorphism(const FiniteGroup& g, const FiniteGroup& h, const GroupIsomorphism& map) {
  if (g.order() != h.order() || map.size() != g.order()) return false;
  std::vector<char> hit(h.order(), 0);
  for (Element y : map) {
    if (y >= h.order() || hit[y]) return false;
    hit[y] = 1;
  }
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = 0; b < g.order(); ++b)
      if (map[g.mul(a, b)] != h.mul(map[a], map[b])) return false;
  return true;
}

std::optional<GroupIsomorphism> are_isomorphic(const FiniteGroup& g, const FiniteGroup& h) {
  if (g.order() != h.order()) return std::nullopt;
  if (g == h) {
    GroupIsomorphism id(g.order());
    for (Element x = 0; x < g.order(); ++x) id[x] = x;
    return id;
  }
  Profile pg{{g.element_orders().begin(), g.element_orders().end()}, g.conjugacy_class_sizes()};
  Profile ph{{h.element_orders().begin(), h.element_orders().end()}, h.conjugacy_class_sizes()};
  if (sorted(pg.order) != sorted(ph.order)) return std::nullopt;
  if (sorted(pg.class_size) != sorted(ph.class_size)) return std::nullopt;
  std::vector<std::pair<std::size_t, std::size_t>> kg, kh;
  for (Element x = 0; x < g.order(); ++x) {
    kg.push_back(pg.key(x));
    kh.push_back(ph.key(x));
  }
  if (sorted(kg) != sorted(kh)) return std::nullopt;
  if (subgroup_census(g) != subgroup_census(h)) return std::nullopt;
  return Backtracker(g, h, pg, ph).run();
}

}  // namespace fb
