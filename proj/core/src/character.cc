#include "fb/character.h"

#include <algorithm>
#include <string>

#include "fb/error.h"

namespace fb {

Character::Character(const FiniteGroup& g, const AbelianFiber& a, SubgroupPtr domain,
                     std::vector<FiberElement> values)
    : domain_(std::move(domain)), values_(std::move(values)) {
  const auto& m = domain_->members();
  if (values_.size() != m.size()) throw DomainMismatch("character value list does not match its domain");
  for (auto v : values_)
    if (v >= a.order()) throw DomainMismatch("character value outside the fiber");
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      if ((*this)(g.mul(m[i], m[j])) != a.add(values_[i], values_[j]))
        throw DomainMismatch("values are not a homomorphism at " + std::to_string(m[i]) + "*" +
                             std::to_string(m[j]));
}

Character Character::trivial(SubgroupPtr domain) {
  std::vector<FiberElement> zeros(domain->order(), 0);
  return Character(Trusted{}, std::move(domain), std::move(zeros));
}

bool Character::is_trivial() const noexcept {
  return std::all_of(values_.begin(), values_.end(), [](FiberElement v) { return v == 0; });
}

Character char_mul(const AbelianFiber& a, const Character& phi, const Character& psi) {
  if (phi.domain().members() != psi.domain().members())
    throw DomainMismatch("char_mul needs characters on the same subgroup");
  std::vector<FiberElement> v(phi.values().size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.add(phi.values()[i], psi.values()[i]);
  return Character(Character::Trusted{}, phi.domain_ptr(), std::move(v));
}

Character char_inverse(const AbelianFiber& a, const Character& phi) {
  std::vector<FiberElement> v(phi.values().size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.neg(phi.values()[i]);
  return Character(Character::Trusted{}, phi.domain_ptr(), std::move(v));
}

Character char_restrict(const Character& phi, SubgroupPtr sub) {
  if (!sub->is_subgroup_of(phi.domain())) throw DomainMismatch("restriction target is not a subgroup of the domain");
  std::vector<FiberElement> v;
  v.reserve(sub->order());
  for (Element x : sub->members()) v.push_back(phi(x));
  return Character(Character::Trusted{}, std::move(sub), std::move(v));
}

Character char_conjugate(const FiniteGroup& g, Element x, const Character& phi) {
  auto target = std::make_shared<const Subgroup>(phi.domain().conjugate(g, x));
  const Element x_inv = g.inv(x);
  std::vector<FiberElement> v;
  v.reserve(target->order());
  for (Element y : target->members()) v.push_back(phi(g.conj(x_inv, y)));
  return Character(Character::Trusted{}, std::move(target), std::move(v));
}

HomSet::HomSet(const FiniteGroup& g, SubgroupPtr k, const AbelianFiber& a)
    : domain_(std::move(k)), ab_(fb::abelianization(g, *domain_)) {
  const std::size_t r = ab_.rank();
  for (std::size_t t = 0; t < r; ++t) {
    torsion_.push_back(a.torsion(ab_.invariant_factors[t]));
    std::vector<std::int64_t> pos(a.order(), -1);
    for (std::size_t i = 0; i < torsion_[t].size(); ++i) pos[torsion_[t][i]] = static_cast<std::int64_t>(i);
    torsion_position_.push_back(std::move(pos));
    count_ *= torsion_[t].size();
  }

  const auto& members = domain_->members();
  images_.reserve(count_);
  values_.reserve(count_);
  for (std::size_t idx = 0; idx < count_; ++idx) {
    std::vector<FiberElement> img(r);
    std::size_t rest = idx;
    for (std::size_t t = r; t-- > 0;) {
      img[t] = torsion_[t][rest % torsion_[t].size()];
      rest /= torsion_[t].size();
    }
    std::vector<FiberElement> vals(members.size());
    for (std::size_t pos = 0; pos < members.size(); ++pos) {
      FiberElement v = 0;
      for (std::size_t t = 0; t < r; ++t) v = a.add(v, a.scale(img[t], ab_.coordinates[pos * r + t]));
      vals[pos] = v;
    }
    images_.push_back(std::move(img));
    values_.push_back(std::move(vals));
  }

  mul_.resize(count_ * count_);
  inverse_.resize(count_);
  for (std::size_t i = 0; i < count_; ++i) {
    for (std::size_t j = 0; j < count_; ++j) {
      std::vector<FiberElement> img(r);
      for (std::size_t t = 0; t < r; ++t) img[t] = a.add(images_[i][t], images_[j][t]);
      mul_[i * count_ + j] = index_of_images(img);
      if (mul_[i * count_ + j] == 0) inverse_[i] = j;
    }
  }
}

Character HomSet::character(std::size_t i) const {
  return Character(Character::Trusted{}, domain_, values_[i]);
}

std::size_t HomSet::index_of_images(const std::vector<FiberElement>& images) const {
  std::size_t idx = 0;
  for (std::size_t t = 0; t < ab_.rank(); ++t) {
    const auto p = torsion_position_[t][images[t]];
    if (p < 0) throw DomainMismatch("image is not in the required torsion subgroup");
    idx = idx * torsion_[t].size() + static_cast<std::size_t>(p);
  }
  return idx;
}

std::size_t HomSet::index_of(const Character& phi) const {
  if (phi.domain().members() != domain_->members()) throw DomainMismatch("character lives on another subgroup");
  const std::size_t i = index_by([&](Element x) { return phi(x); });
  if (values_[i] != phi.values()) throw DomainMismatch("character is not a homomorphism of this domain");
  return i;
}

std::size_t HomSet::conjugate_index(const FiniteGroup& g, Element x, std::size_t i) const {
  const Element x_inv = g.inv(x);
  return index_by([&](Element y) { return value(i, g.conj(x_inv, y)); });
}

std::vector<Character> hom_set(const FiniteGroup& g, SubgroupPtr k, const AbelianFiber& a) {
  HomSet hs(g, std::move(k), a);
  std::vector<Character> out;
  out.reserve(hs.size());
  for (std::size_t i = 0; i < hs.size(); ++i) out.push_back(hs.character(i));
  return out;
}

}  // namespace fb
