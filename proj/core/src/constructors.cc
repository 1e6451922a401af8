#include "fb/constructors.h"

#include <algorithm>
#include <numeric>
#include <string>

#include "fb/error.h"

namespace fb {

FiniteGroup cyclic_group(std::size_t n) {
  if (n == 0) throw InvalidSpec("cyclic group of order 0");
  std::vector<Element> t(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a * n + b] = static_cast<Element>((a + b) % n);
  return FiniteGroup::from_flat_table(n, std::move(t));
}

FiniteGroup abelian_group(const std::vector<std::size_t>& factors) {
  FiniteGroup g = cyclic_group(1);
  for (std::size_t d : factors) g = direct_product(g, cyclic_group(d));
  return g;
}

FiniteGroup dihedral_group(std::size_t n) {
  if (n == 0) throw InvalidSpec("dihedral group of a 0-gon");
  const std::size_t order = 2 * n;
  // r^i s^j * r^k s^l = r^(i + (-1)^j k) s^(j+l)
  std::vector<Element> t(order * order);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < 2; ++l) {
          const std::size_t r = j == 0 ? (i + k) % n : (i + n - k) % n;
          t[(2 * i + j) * order + 2 * k + l] = static_cast<Element>(2 * r + ((j + l) % 2));
        }
  return FiniteGroup::from_flat_table(order, std::move(t));
}

FiniteGroup symmetric_group(std::size_t n) {
  if (n == 0 || n > 5) throw InvalidSpec("symmetric group supported for 1 <= n <= 5");
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const std::size_t order = perms.size();
  auto index_of = [&](const std::vector<std::size_t>& q) {
    return static_cast<Element>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  // (a*b)(x) = a(b(x))
  std::vector<Element> t(order * order);
  std::vector<std::size_t> c(n);
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b) {
      for (std::size_t x = 0; x < n; ++x) c[x] = perms[a][perms[b][x]];
      t[a * order + b] = index_of(c);
    }
  return FiniteGroup::from_flat_table(order, std::move(t));
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const std::size_t m = h.order();
  const std::size_t order = g.order() * m;
  std::vector<Element> t(order * order);
  for (Element a = 0; a < order; ++a)
    for (Element b = 0; b < order; ++b)
      t[a * order + b] = static_cast<Element>(g.mul(a / m, b / m) * m + h.mul(a % m, b % m));
  return FiniteGroup::from_flat_table(order, std::move(t));
}

FiniteGroup semidirect_product(const FiniteGroup& n, const FiniteGroup& q, const Action& action) {
  const std::size_t nn = n.order();
  const std::size_t nq = q.order();
  if (action.size() != nq) throw NotAnAction("action must give one automorphism per element of Q");
  for (std::size_t s = 0; s < nq; ++s) {
    const auto& f = action[s];
    if (f.size() != nn) throw NotAnAutomorphism("automorphism " + std::to_string(s) + " has wrong length");
    std::vector<char> hit(nn, 0);
    for (Element x : f) {
      if (x >= nn || hit[x]) throw NotAnAutomorphism("image of " + std::to_string(s) + " is not a bijection");
      hit[x] = 1;
    }
    for (Element a = 0; a < nn; ++a)
      for (Element b = 0; b < nn; ++b)
        if (f[n.mul(a, b)] != n.mul(f[a], f[b]))
          throw NotAnAutomorphism("image of " + std::to_string(s) + " is not a homomorphism");
  }
  for (Element s = 0; s < nq; ++s)
    for (Element t = 0; t < nq; ++t) {
      const auto& st = action[q.mul(s, t)];
      for (Element x = 0; x < nn; ++x)
        if (st[x] != action[s][action[t][x]])
          throw NotAnAction("action of " + std::to_string(s) + "*" + std::to_string(t) +
                            " differs from the composite");
    }

  const std::size_t order = nn * nq;
  std::vector<Element> t(order * order);
  for (Element a = 0; a < order; ++a)
    for (Element b = 0; b < order; ++b) {
      const Element n1 = a / nq, q1 = a % nq, n2 = b / nq, q2 = b % nq;
      t[a * order + b] = static_cast<Element>(n.mul(n1, action[q1][n2]) * nq + q.mul(q1, q2));
    }
  return FiniteGroup::from_flat_table(order, std::move(t));
}

}  // namespace fb
