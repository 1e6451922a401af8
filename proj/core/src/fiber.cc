#include "fb/fiber.h"

#include <charconv>
#include <numeric>

#include "fb/error.h"

namespace fb {

namespace {
constexpr std::size_t max_fiber_order = 1 << 12;
}

AbelianFiber::AbelianFiber(std::vector<std::uint64_t> factors) : factors_(std::move(factors)) {
  order_ = 1;
  for (auto d : factors_) {
    if (d == 0) throw InvalidSpec("fiber factor must be positive");
    order_ *= d;
    if (order_ > max_fiber_order) throw InvalidSpec("fiber order too large");
  }
  add_.resize(order_ * order_);
  neg_.resize(order_);
  element_order_.resize(order_);
  for (FiberElement a = 0; a < order_; ++a) {
    auto ra = decode(a);
    std::vector<std::uint64_t> rn(ra.size());
    std::uint64_t ord = 1;
    for (std::size_t i = 0; i < ra.size(); ++i) {
      rn[i] = (factors_[i] - ra[i]) % factors_[i];
      ord = std::lcm(ord, factors_[i] / std::gcd(factors_[i], ra[i]));
    }
    neg_[a] = encode(rn);
    element_order_[a] = ord;
    for (FiberElement b = 0; b < order_; ++b) {
      auto rb = decode(b);
      for (std::size_t i = 0; i < rb.size(); ++i) rb[i] = (ra[i] + rb[i]) % factors_[i];
      add_[a * order_ + b] = encode(rb);
    }
  }
}

AbelianFiber AbelianFiber::parse(std::string_view text) {
  std::vector<std::uint64_t> factors;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    auto piece = text.substr(start, end - start);
    while (!piece.empty() && piece.front() == ' ') piece.remove_prefix(1);
    while (!piece.empty() && piece.back() == ' ') piece.remove_suffix(1);
    std::uint64_t d = 0;
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), d);
    if (piece.empty() || ec != std::errc{} || ptr != piece.data() + piece.size() || d == 0)
      throw InvalidSpec("bad fiber specification '" + std::string(text) + "'");
    factors.push_back(d);
    start = end + 1;
  }
  return AbelianFiber(std::move(factors));
}

FiberElement AbelianFiber::scale(FiberElement a, std::uint64_t k) const noexcept {
  FiberElement r = 0;
  FiberElement base = a;
  while (k) {
    if (k & 1) r = add(r, base);
    base = add(base, base);
    k >>= 1;
  }
  return r;
}

std::vector<std::uint64_t> AbelianFiber::decode(FiberElement a) const {
  std::vector<std::uint64_t> r(factors_.size());
  for (std::size_t i = factors_.size(); i-- > 0;) {
    r[i] = a % factors_[i];
    a = static_cast<FiberElement>(a / factors_[i]);
  }
  return r;
}

FiberElement AbelianFiber::encode(const std::vector<std::uint64_t>& residues) const {
  if (residues.size() != factors_.size()) throw InvalidSpec("residue tuple has wrong length");
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) code = code * factors_[i] + residues[i] % factors_[i];
  return static_cast<FiberElement>(code);
}

std::vector<FiberElement> AbelianFiber::torsion(std::uint64_t n) const {
  std::vector<FiberElement> out;
  for (FiberElement a = 0; a < order_; ++a)
    if (n % element_order_[a] == 0) out.push_back(a);
  return out;
}

std::string AbelianFiber::to_string() const {
  if (factors_.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(factors_[i]);
  }
  return s;
}

}  // namespace fb
