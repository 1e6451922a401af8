#include "fb/abelianization.h"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "fb/checked.h"

namespace fb {

namespace {

struct Matrix {
  std::size_t rows, cols;
  std::vector<std::int64_t> a;
  std::int64_t& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
};

void swap_rows(Matrix& m, std::size_t r1, std::size_t r2) {
  if (r1 == r2) return;
  for (std::size_t c = 0; c < m.cols; ++c) std::swap(m.at(r1, c), m.at(r2, c));
}

void swap_cols(Matrix& m, std::size_t c1, std::size_t c2) {
  if (c1 == c2) return;
  for (std::size_t r = 0; r < m.rows; ++r) std::swap(m.at(r, c1), m.at(r, c2));
}

// row r1 -= f * row r2
void sub_row(Matrix& m, std::size_t r1, std::size_t r2, std::int64_t f) {
  for (std::size_t c = 0; c < m.cols; ++c) m.at(r1, c) = checked_sub(m.at(r1, c), checked_mul(f, m.at(r2, c)));
}

// col c1 -= f * col c2
void sub_col(Matrix& m, std::size_t c1, std::size_t c2, std::int64_t f) {
  for (std::size_t r = 0; r < m.rows; ++r) m.at(r, c1) = checked_sub(m.at(r, c1), checked_mul(f, m.at(r, c2)));
}

}  // namespace

SmithForm smith_normal_form(std::vector<std::int64_t> data, std::size_t rows, std::size_t cols) {
  Matrix m{rows, cols, std::move(data)};
  Matrix v{cols, cols, std::vector<std::int64_t>(cols * cols, 0)};
  for (std::size_t i = 0; i < cols; ++i) v.at(i, i) = 1;
  const std::size_t n = std::min(rows, cols);

  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      // pivot: smallest nonzero |entry| in the trailing block
      std::size_t pr = rows, pc = cols;
      for (std::size_t r = t; r < rows; ++r)
        for (std::size_t c = t; c < cols; ++c)
          if (m.at(r, c) != 0 && (pr == rows || std::llabs(m.at(r, c)) < std::llabs(m.at(pr, pc)))) {
            pr = r;
            pc = c;
          }
      if (pr == rows) break;
      swap_rows(m, t, pr);
      swap_cols(m, t, pc);
      swap_cols(v, t, pc);

      bool clean = true;
      const std::int64_t p = m.at(t, t);
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (m.at(r, t) == 0) continue;
        sub_row(m, r, t, m.at(r, t) / p);
        if (m.at(r, t) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (m.at(t, c) == 0) continue;
        const std::int64_t f = m.at(t, c) / p;
        sub_col(m, c, t, f);
        sub_col(v, c, t, f);
        if (m.at(t, c) != 0) clean = false;
      }
      if (!clean) continue;

      // the pivot must divide the whole trailing block
      bool divides = true;
      for (std::size_t r = t + 1; r < rows && divides; ++r)
        for (std::size_t c = t + 1; c < cols; ++c)
          if (m.at(r, c) % p != 0) {
            for (std::size_t k = 0; k < cols; ++k) m.at(t, k) = checked_add(m.at(t, k), m.at(r, k));
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (m.at(t, t) < 0) {
      for (std::size_t r = 0; r < rows; ++r) m.at(r, t) = -m.at(r, t);
      for (std::size_t r = 0; r < cols; ++r) v.at(r, t) = -v.at(r, t);
    }
  }

  SmithForm out;
  out.diagonal.resize(n);
  for (std::size_t t = 0; t < n; ++t) out.diagonal[t] = m.at(t, t);
  out.column_transform = std::move(v.a);
  return out;
}

Abelianization abelianization(const FiniteGroup& g, const Subgroup& k) {
  const Subgroup derived = derived_subgroup(g, k);

  // label cosets of [K,K] in K
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> coset(k.order(), unset);
  std::vector<Element> coset_rep;
  for (std::size_t pos = 0; pos < k.order(); ++pos) {
    if (coset[pos] != unset) continue;
    const Element x = k.members()[pos];
    for (Element d : derived.members()) coset[static_cast<std::size_t>(k.position(g.mul(x, d)))] = coset_rep.size();
    coset_rep.push_back(x);
  }
  const std::size_t q = coset_rep.size();
  auto coset_of = [&](Element x) { return coset[static_cast<std::size_t>(k.position(x))]; };

  // generators of the quotient: greedily extend until the span is everything
  std::vector<Element> gens;
  {
    std::vector<char> in(q, 0);
    std::vector<std::size_t> span{coset_of(0)};
    in[span[0]] = 1;
    while (span.size() < q) {
      Element pick = 0;
      for (std::size_t c = 0; c < q; ++c)
        if (!in[c]) {
          pick = coset_rep[c];
          break;
        }
      gens.push_back(pick);
      for (std::size_t i = 0; i < span.size(); ++i)
        for (Element s : gens) {
          std::size_t c = coset_of(g.mul(coset_rep[span[i]], s));
          if (!in[c]) {
            in[c] = 1;
            span.push_back(c);
          }
        }
    }
  }
  const std::size_t ng = gens.size();

  // exponent vectors by breadth-first search; revisits give relations
  std::vector<std::vector<std::int64_t>> vec(q);
  std::vector<std::int64_t> relations;
  std::size_t relation_rows = 0;
  std::vector<std::size_t> queue{coset_of(0)};
  vec[queue[0]] = std::vector<std::int64_t>(ng, 0);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const std::size_t c = queue[i];
    for (std::size_t s = 0; s < ng; ++s) {
      const std::size_t d = coset_of(g.mul(coset_rep[c], gens[s]));
      auto step = vec[c];
      step[s] += 1;
      if (vec[d].empty()) {
        vec[d] = std::move(step);
        queue.push_back(d);
      } else if (step != vec[d]) {
        for (std::size_t t = 0; t < ng; ++t) relations.push_back(step[t] - vec[d][t]);
        ++relation_rows;
      }
    }
  }

  Abelianization out;
  if (ng == 0) return out;
  if (relation_rows < ng) throw std::logic_error("abelianization: relation lattice has deficient rank");
  SmithForm snf = smith_normal_form(std::move(relations), relation_rows, ng);

  std::vector<std::size_t> kept;
  for (std::size_t t = 0; t < ng; ++t) {
    if (snf.diagonal[t] == 0) throw std::logic_error("abelianization: infinite quotient");
    if (snf.diagonal[t] > 1) {
      kept.push_back(t);
      out.invariant_factors.push_back(static_cast<std::uint64_t>(snf.diagonal[t]));
    }
  }
  const std::size_t r = kept.size();
  out.coordinates.resize(k.order() * r);
  // new coordinates of exponent vector v are (v * V) mod d
  for (std::size_t pos = 0; pos < k.order(); ++pos) {
    const auto& v = vec[coset[pos]];
    for (std::size_t i = 0; i < r; ++i) {
      const std::size_t col = kept[i];
      std::int64_t acc = 0;
      for (std::size_t t = 0; t < ng; ++t)
        acc = checked_add(acc, checked_mul(v[t], snf.column_transform[t * ng + col]));
      const auto d = static_cast<std::int64_t>(out.invariant_factors[i]);
      out.coordinates[pos * r + i] = static_cast<std::uint64_t>(((acc % d) + d) % d);
    }
  }
  out.basis_preimages.assign(r, 0);
  for (std::size_t i = 0; i < r; ++i) {
    bool found = false;
    for (std::size_t pos = 0; pos < k.order() && !found; ++pos) {
      bool unit = true;
      for (std::size_t j = 0; j < r && unit; ++j) unit = out.coordinates[pos * r + j] == (i == j ? 1u : 0u);
      if (unit) {
        out.basis_preimages[i] = k.members()[pos];
        found = true;
      }
    }
    if (!found) throw std::logic_error("abelianization: projection is not surjective");
  }
  return out;
}

}  // namespace fb
