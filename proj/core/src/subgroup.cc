#include "fb/subgroup.h"

#include <algorithm>
#include <string>

#include "fb/error.h"

namespace fb {

std::vector<Element> closure(const FiniteGroup& g, std::span<const Element> gens) {
  std::vector<char> in(g.order(), 0);
  std::vector<Element> members{0};
  in[0] = 1;
  // right-multiplying by generators from the identity reaches every word
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (Element s : gens) {
      Element y = g.mul(members[i], s);
      if (!in[y]) {
        in[y] = 1;
        members.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

Subgroup::Subgroup(const FiniteGroup& g, std::vector<Element> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (members_.empty() || members_.front() != 0) throw NotASubgroup("identity missing");
  if (members_.back() >= g.order()) throw NotASubgroup("member out of range");
  if (g.order() % members_.size() != 0) throw NotASubgroup("order does not divide the group order");
  position_.assign(g.order(), -1);
  for (std::size_t i = 0; i < members_.size(); ++i) position_[members_[i]] = static_cast<std::int32_t>(i);
  for (Element a : members_) {
    if (!contains(g.inv(a))) throw NotASubgroup("not closed under inverses at " + std::to_string(a));
    for (Element b : members_)
      if (!contains(g.mul(a, b)))
        throw NotASubgroup("not closed under multiplication at " + std::to_string(a) + "*" + std::to_string(b));
  }
  index_members(g);
}

Subgroup::Subgroup(Trusted, const FiniteGroup& g, std::vector<Element> members) : members_(std::move(members)) {
  position_.assign(g.order(), -1);
  for (std::size_t i = 0; i < members_.size(); ++i) position_[members_[i]] = static_cast<std::int32_t>(i);
  index_members(g);
}

void Subgroup::index_members(const FiniteGroup& g) {
  // greedy generating set: repeatedly add the member of largest order not yet covered
  generators_.clear();
  std::vector<Element> span{0};
  std::vector<Element> by_order(members_.begin(), members_.end());
  std::stable_sort(by_order.begin(), by_order.end(),
                   [&](Element a, Element b) { return g.element_order(a) > g.element_order(b); });
  while (span.size() < members_.size()) {
    for (Element x : by_order) {
      if (!std::binary_search(span.begin(), span.end(), x)) {
        generators_.push_back(x);
        break;
      }
    }
    span = closure(g, generators_);
  }
}

Subgroup Subgroup::generated_by(const FiniteGroup& g, std::span<const Element> gens) {
  return Subgroup(Trusted{}, g, closure(g, gens));
}

Subgroup Subgroup::trivial(const FiniteGroup& g) { return Subgroup(Trusted{}, g, {0}); }

Subgroup Subgroup::whole(const FiniteGroup& g) {
  std::vector<Element> all(g.order());
  for (Element x = 0; x < g.order(); ++x) all[x] = x;
  return Subgroup(Trusted{}, g, std::move(all));
}

bool Subgroup::is_subgroup_of(const Subgroup& other) const noexcept {
  if (other.order() % order() != 0) return false;
  return std::all_of(members_.begin(), members_.end(), [&](Element x) { return other.contains(x); });
}

bool Subgroup::is_normal_in(const FiniteGroup& g) const noexcept {
  for (Element x = 0; x < g.order(); ++x)
    for (Element k : generators_)
      if (!contains(g.conj(x, k))) return false;
  return true;
}

std::vector<Element> Subgroup::conjugate_members(const FiniteGroup& g, Element x) const {
  std::vector<Element> out;
  out.reserve(members_.size());
  for (Element k : members_) out.push_back(g.conj(x, k));
  std::sort(out.begin(), out.end());
  return out;
}

Subgroup Subgroup::conjugate(const FiniteGroup& g, Element x) const {
  return Subgroup(Trusted{}, g, conjugate_members(g, x));
}

std::strong_ordering Subgroup::operator<=>(const Subgroup& other) const noexcept {
  if (auto c = members_.size() <=> other.members_.size(); c != 0) return c;
  return members_ <=> other.members_;
}

Subgroup normalizer(const FiniteGroup& g, const Subgroup& k) {
  std::vector<Element> n;
  for (Element x = 0; x < g.order(); ++x) {
    bool fixes = true;
    for (Element s : k.generators())
      if (!k.contains(g.conj(x, s))) {
        fixes = false;
        break;
      }
    if (fixes) n.push_back(x);
  }
  return Subgroup::generated_by(g, n);
}

std::vector<Element> left_transversal(const FiniteGroup& g, const Subgroup& l) {
  std::vector<char> covered(g.order(), 0);
  std::vector<Element> reps;
  reps.reserve(g.order() / l.order());
  for (Element s = 0; s < g.order(); ++s) {
    if (covered[s]) continue;
    reps.push_back(s);
    for (Element y : l.members()) covered[g.mul(s, y)] = 1;
  }
  return reps;
}

std::vector<Element> double_coset_reps(const FiniteGroup& g, const Subgroup& k, const Subgroup& l) {
  std::vector<char> covered(g.order(), 0);
  std::vector<Element> reps;
  for (Element s = 0; s < g.order(); ++s) {
    if (covered[s]) continue;
    reps.push_back(s);
    for (Element a : k.members()) {
      Element as = g.mul(a, s);
      for (Element b : l.members()) covered[g.mul(as, b)] = 1;
    }
  }
  return reps;
}

std::size_t mark(const FiniteGroup& g, const Subgroup& k, const Subgroup& l) {
  if (l.order() % k.order() != 0) return 0;
  std::size_t count = 0;
  for (Element s : left_transversal(g, l)) {
    Element s_inv = g.inv(s);
    bool fixed = true;
    for (Element x : k.generators())
      if (!l.contains(g.conj(s_inv, x))) {
        fixed = false;
        break;
      }
    if (fixed) ++count;
  }
  return count;
}

Subgroup derived_subgroup(const FiniteGroup& g, const Subgroup& k) {
  std::vector<char> seen(g.order(), 0);
  std::vector<Element> commutators;
  for (Element x : k.members())
    for (Element y : k.members()) {
      Element c = g.commutator(x, y);
      if (!seen[c]) {
        seen[c] = 1;
        commutators.push_back(c);
      }
    }
  return Subgroup::generated_by(g, commutators);
}

}  // namespace fb
