#include "fb/group.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "fb/error.h"

namespace fb {

namespace {

std::string triple_text(Element a, Element b, Element c) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c) + ")";
}

void check_latin_square(std::size_t n, const std::vector<Element>& t) {
  std::vector<char> seen(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t b = 0; b < n; ++b) {
      Element v = t[a * n + b];
      if (seen[v]) throw NotAGroup("row " + std::to_string(a) + " repeats element " + std::to_string(v));
      seen[v] = 1;
    }
  }
  for (std::size_t b = 0; b < n; ++b) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t a = 0; a < n; ++a) {
      Element v = t[a * n + b];
      if (seen[v]) throw NotAGroup("column " + std::to_string(b) + " repeats element " + std::to_string(v));
      seen[v] = 1;
    }
  }
}

}  // namespace

FiniteGroup::FiniteGroup(std::size_t order, std::vector<Element> table, const GroupOptions& options)
    : order_(order), table_(std::move(table)) {
  const std::size_t n = order_;
  if (n == 0) throw NotAGroup("empty table");
  if (table_.size() != n * n) throw NotAGroup("table is not square");
  for (Element v : table_)
    if (v >= n) throw NotAGroup("entry " + std::to_string(v) + " out of range");
  check_latin_square(n, table_);
  for (Element g = 0; g < n; ++g)
    if (mul(0, g) != g || mul(g, 0) != g) throw NotAGroup("element 0 is not the identity");

  auto assoc = [&](Element a, Element b, Element c) {
    if (mul(mul(a, b), c) != mul(a, mul(b, c)))
      throw NotAGroup("associativity fails on " + triple_text(a, b, c),
                      std::array<std::uint32_t, 3>{a, b, c});
  };
  if (n <= options.full_associativity_bound) {
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        for (Element c = 0; c < n; ++c) assoc(a, b, c);
  } else {
    std::mt19937_64 rng(0x5eed5eedULL ^ n);
    std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
    for (std::size_t s = 0; s < options.associativity_samples; ++s) assoc(pick(rng), pick(rng), pick(rng));
  }

  inverse_.resize(n);
  for (Element g = 0; g < n; ++g) {
    auto r = row(g);
    inverse_[g] = static_cast<Element>(std::find(r.begin(), r.end(), Element{0}) - r.begin());
    if (mul(inverse_[g], g) != 0) throw NotAGroup("left and right inverse of " + std::to_string(g) + " differ");
  }

  element_orders_.assign(n, 0);
  for (Element g = 0; g < n; ++g) {
    std::size_t k = 1;
    for (Element x = g; x != 0; x = mul(x, g)) ++k;
    element_orders_[g] = g == 0 ? 1 : k;
  }
}

FiniteGroup FiniteGroup::from_cayley(const std::vector<std::vector<std::int64_t>>& table,
                                     const GroupOptions& options) {
  const std::size_t n = table.size();
  if (n == 0) throw NotAGroup("empty table");
  for (const auto& r : table)
    if (r.size() != n) throw NotAGroup("table is not square");
  for (const auto& r : table)
    for (auto v : r)
      if (v < 0 || static_cast<std::size_t>(v) >= n)
        throw NotAGroup("entry " + std::to_string(v) + " out of range");

  // locate a two-sided identity and relabel it to 0
  std::size_t e = n;
  for (std::size_t c = 0; c < n && e == n; ++c) {
    bool ok = true;
    for (std::size_t g = 0; g < n && ok; ++g)
      ok = table[c][g] == static_cast<std::int64_t>(g) && table[g][c] == static_cast<std::int64_t>(g);
    if (ok) e = c;
  }
  if (e == n) throw NotAGroup("no identity element");

  std::vector<Element> relabel(n);
  std::iota(relabel.begin(), relabel.end(), Element{0});
  std::swap(relabel[0], relabel[e]);
  std::vector<Element> flat(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      flat[relabel[a] * n + relabel[b]] = relabel[static_cast<std::size_t>(table[a][b])];
  return FiniteGroup(n, std::move(flat), options);
}

FiniteGroup FiniteGroup::from_flat_table(std::size_t order, std::vector<Element> flat,
                                         const GroupOptions& options) {
  return FiniteGroup(order, std::move(flat), options);
}

Element FiniteGroup::power(Element x, std::uint64_t k) const noexcept {
  Element result = 0;
  Element base = x;
  while (k) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

bool FiniteGroup::is_abelian() const noexcept {
  for (Element a = 0; a < order_; ++a)
    for (Element b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::vector<std::vector<std::int64_t>> FiniteGroup::cayley_table() const {
  std::vector<std::vector<std::int64_t>> out(order_, std::vector<std::int64_t>(order_));
  for (Element a = 0; a < order_; ++a)
    for (Element b = 0; b < order_; ++b) out[a][b] = mul(a, b);
  return out;
}

std::vector<Element> FiniteGroup::center() const {
  std::vector<Element> z;
  for (Element a = 0; a < order_; ++a) {
    bool central = true;
    for (Element b = 0; b < order_ && central; ++b) central = mul(a, b) == mul(b, a);
    if (central) z.push_back(a);
  }
  return z;
}

std::vector<std::size_t> FiniteGroup::conjugacy_class_ids() const {
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> ids(order_, unset);
  std::size_t next = 0;
  for (Element x = 0; x < order_; ++x) {
    if (ids[x] != unset) continue;
    for (Element g = 0; g < order_; ++g) ids[conj(g, x)] = next;
    ++next;
  }
  return ids;
}

std::vector<std::size_t> FiniteGroup::conjugacy_class_sizes() const {
  auto ids = conjugacy_class_ids();
  std::vector<std::size_t> count(order_, 0);
  for (auto id : ids) ++count[id];
  std::vector<std::size_t> sizes(order_);
  for (Element x = 0; x < order_; ++x) sizes[x] = count[ids[x]];
  return sizes;
}

}  // namespace fb
