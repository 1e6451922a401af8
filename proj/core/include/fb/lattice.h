#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "fb/group.h"
#include "fb/subgroup.h"

namespace fb {

struct MemberListHash {
  std::size_t operator()(const std::vector<Element>& v) const noexcept;
};

/// All subgroups of g, each once, sorted by (order, member list). Built by
/// cyclic extension: start from the cyclic subgroups and repeatedly join
/// a new layer with every cyclic subgroup not already contained.
std::vector<Subgroup> enumerate_subgroups(const FiniteGroup& g, unsigned threads = 1);

/// Conjugacy classes of subgroups with their table of marks.
///
/// Every subgroup of G is stored once (sorted as in enumerate_subgroups)
/// together with its class and a conjugating element to the class
/// representative. The representative of each class is its
/// lexicographically least member set, and classes are ordered by their
/// representative's (order, member list).
class SubgroupClassTable {
 public:
  explicit SubgroupClassTable(const FiniteGroup& g, unsigned threads = 1);

  std::size_t class_count() const noexcept { return rep_ids_.size(); }
  std::size_t subgroup_count() const noexcept { return subgroups_.size(); }

  const Subgroup& subgroup(std::size_t id) const { return *subgroups_[id]; }
  const SubgroupPtr& subgroup_ptr(std::size_t id) const { return subgroups_[id]; }
  const Subgroup& rep(std::size_t cls) const { return *subgroups_[rep_ids_[cls]]; }
  const SubgroupPtr& rep_ptr(std::size_t cls) const { return subgroups_[rep_ids_[cls]]; }
  std::size_t rep_id(std::size_t cls) const { return rep_ids_[cls]; }
  const Subgroup& normalizer_of_rep(std::size_t cls) const { return normalizers_[cls]; }
  /// Number of subgroups in class `cls` (= [G : N_G(rep)]).
  std::size_t class_size(std::size_t cls) const { return class_sizes_[cls]; }

  /// Subgroup id for a sorted member list, if it is a subgroup.
  std::optional<std::size_t> find(const std::vector<Element>& members) const;
  std::size_t id_of(const Subgroup& k) const;
  std::size_t class_of_id(std::size_t id) const { return class_of_[id]; }
  std::size_t class_of(const Subgroup& k) const { return class_of_[id_of(k)]; }
  /// An element g with g K g^-1 = rep(class_of(K)) for subgroup id K.
  Element conjugator_to_rep(std::size_t id) const { return to_rep_[id]; }

  /// marks()[i][j] = |(G/rep j)^{rep i}|.
  const std::vector<std::vector<std::size_t>>& marks() const noexcept { return marks_; }

 private:
  std::vector<SubgroupPtr> subgroups_;
  std::unordered_map<std::vector<Element>, std::size_t, MemberListHash> index_;
  std::vector<std::size_t> class_of_;
  std::vector<Element> to_rep_;
  std::vector<std::size_t> rep_ids_;
  std::vector<std::size_t> class_sizes_;
  std::vector<Subgroup> normalizers_;
  std::vector<std::vector<std::size_t>> marks_;
};

}  // namespace fb
