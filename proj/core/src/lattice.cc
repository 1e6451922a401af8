#include "fb/lattice.h"

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "fb/parallel.h"

namespace fb {

std::size_t MemberListHash::operator()(const std::vector<Element>& v) const noexcept {
  // FNV-1a over the member indices
  std::size_t h = 14695981039346656037ULL;
  for (Element x : v) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return h;
}

std::vector<Subgroup> enumerate_subgroups(const FiniteGroup& g, unsigned threads) {
  using Members = std::vector<Element>;
  struct Found {
    Members members;
    std::vector<Element> gens;
  };
  std::unordered_map<Members, std::size_t, MemberListHash> seen;
  std::vector<Found> all;

  // cyclic subgroups, each with one generator
  std::vector<Element> cyclic_gens;
  for (Element x = 0; x < g.order(); ++x) {
    Element gen[] = {x};
    Members m = closure(g, gen);
    if (seen.emplace(m, all.size()).second) {
      all.push_back({std::move(m), {x}});
      cyclic_gens.push_back(x);
    }
  }

  std::vector<std::size_t> layer(all.size());
  for (std::size_t i = 0; i < layer.size(); ++i) layer[i] = i;

  std::mutex merge;
  while (!layer.empty()) {
    std::vector<std::size_t> next;
    parallel_for(layer.size(), threads, [&](std::size_t li) {
      Found base;
      {
        std::lock_guard lock(merge);
        base = all[layer[li]];
      }
      std::vector<char> in(g.order(), 0);
      for (Element x : base.members) in[x] = 1;
      std::vector<Found> found;
      // <H, hc> = <H, c>, so one generator per right coset of H suffices
      std::vector<char> covered = in;
      for (Element c : cyclic_gens) {
        if (covered[c]) continue;
        for (Element h : base.members) covered[g.mul(h, c)] = 1;
        // the base is already closed, so continue its closure with one more generator
        std::vector<char> joined_in = in;
        Found j{base.members, base.gens};
        j.gens.push_back(c);
        for (std::size_t i = 0; i < j.members.size(); ++i) {
          for (Element s : j.gens) {
            Element y = g.mul(j.members[i], s);
            if (!joined_in[y]) {
              joined_in[y] = 1;
              j.members.push_back(y);
            }
          }
        }
        j.members.clear();
        for (Element x = 0; x < g.order(); ++x)
          if (joined_in[x]) j.members.push_back(x);
        found.push_back(std::move(j));
      }
      std::lock_guard lock(merge);
      for (auto& f : found) {
        if (seen.emplace(f.members, all.size()).second) {
          next.push_back(all.size());
          all.push_back(std::move(f));
        }
      }
    });
    // deterministic processing order regardless of thread interleaving
    std::sort(next.begin(), next.end(),
              [&](std::size_t a, std::size_t b) { return all[a].members < all[b].members; });
    layer = std::move(next);
  }

  std::sort(all.begin(), all.end(), [](const Found& a, const Found& b) {
    if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
    return a.members < b.members;
  });
  std::vector<Subgroup> out;
  out.reserve(all.size());
  for (auto& f : all) out.push_back(Subgroup::generated_by(g, f.gens));
  return out;
}

SubgroupClassTable::SubgroupClassTable(const FiniteGroup& g, unsigned threads) {
  auto subs = enumerate_subgroups(g, threads);
  subgroups_.reserve(subs.size());
  for (std::size_t i = 0; i < subs.size(); ++i) {
    index_.emplace(subs[i].members(), i);
    subgroups_.push_back(std::make_shared<const Subgroup>(std::move(subs[i])));
  }

  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  class_of_.assign(subgroups_.size(), unset);
  to_rep_.assign(subgroups_.size(), 0);
  // subgroups are sorted, so the first unassigned one is the least member set of its class
  for (std::size_t id = 0; id < subgroups_.size(); ++id) {
    if (class_of_[id] != unset) continue;
    const std::size_t cls = rep_ids_.size();
    rep_ids_.push_back(id);
    std::size_t size = 0;
    const Subgroup& r = *subgroups_[id];
    for (Element x = 0; x < g.order(); ++x) {
      std::size_t other = index_.at(r.conjugate_members(g, x));
      if (class_of_[other] == unset) {
        class_of_[other] = cls;
        to_rep_[other] = g.inv(x);
        ++size;
      }
    }
    class_sizes_.push_back(size);
  }

  const std::size_t m = rep_ids_.size();
  normalizers_.reserve(m);
  for (std::size_t c = 0; c < m; ++c) normalizers_.push_back(normalizer(g, rep(c)));

  marks_.assign(m, std::vector<std::size_t>(m, 0));
  parallel_for(m, threads, [&](std::size_t i) {
    for (std::size_t j = 0; j < m; ++j) marks_[i][j] = mark(g, rep(i), rep(j));
  });
}

std::optional<std::size_t> SubgroupClassTable::find(const std::vector<Element>& members) const {
  auto it = index_.find(members);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t SubgroupClassTable::id_of(const Subgroup& k) const {
  auto it = index_.find(k.members());
  if (it == index_.end()) throw std::out_of_range("subgroup is not in this table");
  return it->second;
}

}  // namespace fb
