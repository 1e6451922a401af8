#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace fb {

/// Encoded element of an AbelianFiber (mixed radix, first factor most
/// significant, so numeric order equals lexicographic tuple order).
using FiberElement = std::uint32_t;

/// A finite abelian group C_{d_1} x ... x C_{d_r}, written additively.
class AbelianFiber {
 public:
  AbelianFiber() : AbelianFiber(std::vector<std::uint64_t>{}) {}
  explicit AbelianFiber(std::vector<std::uint64_t> factors);

  /// Parses a comma list of cyclic orders such as "5" or "2,4".
  static AbelianFiber parse(std::string_view text);

  const std::vector<std::uint64_t>& factors() const noexcept { return factors_; }
  std::size_t order() const noexcept { return order_; }
  static constexpr FiberElement zero() noexcept { return 0; }

  FiberElement add(FiberElement a, FiberElement b) const noexcept { return add_[a * order_ + b]; }
  FiberElement neg(FiberElement a) const noexcept { return neg_[a]; }
  FiberElement scale(FiberElement a, std::uint64_t k) const noexcept;
  std::uint64_t element_order(FiberElement a) const noexcept { return element_order_[a]; }

  std::vector<std::uint64_t> decode(FiberElement a) const;
  FiberElement encode(const std::vector<std::uint64_t>& residues) const;

  /// {a : n a = 0}, ascending.
  std::vector<FiberElement> torsion(std::uint64_t n) const;

  std::string to_string() const;

  bool operator==(const AbelianFiber& other) const noexcept { return factors_ == other.factors_; }

 private:
  std::vector<std::uint64_t> factors_;
  std::size_t order_ = 1;
  std::vector<FiberElement> add_;
  std::vector<FiberElement> neg_;
  std::vector<std::uint64_t> element_order_;
};

/// torsion_elements(A, n): all a in A with n a = 0, sorted.
inline std::vector<FiberElement> torsion_elements(const AbelianFiber& a, std::uint64_t n) {
  return a.torsion(n);
}

}  // namespace fb
