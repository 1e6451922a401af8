#pragma once

#include <cstdint>
#include <vector>

#include "fb/group.h"
#include "fb/subgroup.h"

namespace fb {

/// K/[K,K] written as C_{d_1} x ... x C_{d_r} with d_1 | d_2 | ... and
/// every d_i > 1.
struct Abelianization {
  std::vector<std::uint64_t> invariant_factors;
  /// coordinates[pos * r + i] is the i-th coordinate (mod d_i) of the image
  /// of K.members()[pos].
  std::vector<std::uint64_t> coordinates;
  /// basis_preimages[i] is an element of K mapping to the i-th unit vector.
  std::vector<Element> basis_preimages;

  std::size_t rank() const noexcept { return invariant_factors.size(); }
  std::uint64_t coordinate(const Subgroup& k, Element x, std::size_t i) const {
    return coordinates[static_cast<std::size_t>(k.position(x)) * rank() + i];
  }
};

Abelianization abelianization(const FiniteGroup& g, const Subgroup& k);

/// Smith normal form of an integer matrix (rows x cols, row-major) with the
/// accumulated unimodular column transform: U * M * V = diag(d_1, ...).
struct SmithForm {
  std::vector<std::int64_t> diagonal;  // min(rows, cols) entries, d_i | d_{i+1}
  std::vector<std::int64_t> column_transform;  // cols x cols, row-major
};

SmithForm smith_normal_form(std::vector<std::int64_t> m, std::size_t rows, std::size_t cols);

}  // namespace fb
