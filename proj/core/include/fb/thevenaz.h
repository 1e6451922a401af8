#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fb/burnside_ring.h"
#include "fb/group.h"
#include "fb/lattice.h"
#include "fb/species.h"
#include "fb/subgroup.h"

namespace fb {

/// Parameters of G(a,b) = (C_p x C_p) x| C_q where the generator z of C_q
/// acts by x -> ax and y -> by.
struct ThevenazSpec {
  std::uint64_t p = 0, q = 0, a = 0, b = 0;

  /// Throws InvalidSpec naming the violated condition.
  void validate() const;
  /// Parses "p=11,q=5,a=3,b=9" or "11,5,3,9".
  static ThevenazSpec parse(std::string_view text);
  std::string to_string() const;

  bool operator==(const ThevenazSpec&) const = default;
};

/// A built G(a,b) with its distinguished generators.
struct ThevenazGroup {
  ThevenazSpec spec;
  FiniteGroup group;
  Element x = 0, y = 0, z = 0;

  /// x^i y^j as an element of the group.
  Element p_element(std::uint64_t i, std::uint64_t j) const;
};

bool is_prime(std::uint64_t n);
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t p);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m);

ThevenazGroup build_thevenaz(const ThevenazSpec& spec);

/// The named subgroups in the order 1, P_a, P_b, P(j)..., P_a+P_b, Q,
/// P_a x| Q, P_b x| Q, G, with P(j) = <x y^j> for j the least
/// representatives of (Z/p)^x / <a> in increasing order.
struct ThevenazClasses {
  std::vector<Subgroup> reps;
  std::vector<std::string> names;
  /// Index of each rep in the independently computed SubgroupClassTable.
  std::vector<std::size_t> class_index;
  std::vector<std::uint64_t> p_labels;  // the j values, in order
};

/// Throws std::logic_error if the named list is not a transversal of the
/// subgroup classes of `classes`.
ThevenazClasses canonical_class_reps(const ThevenazGroup& g, const SubgroupClassTable& classes);

/// Marks matrix with rows/columns in the given class order.
std::vector<std::vector<std::size_t>> marks_in_order(const SubgroupClassTable& classes,
                                                     const std::vector<std::size_t>& order);

/// {c,d} = {a^n, b^n} for some 1 <= n <= q-1.
bool family_isomorphic(const ThevenazSpec& s1, const ThevenazSpec& s2);

/// (q-1)/2.
std::uint64_t class_count(std::uint64_t p, std::uint64_t q);

/// Elements of exact order q in (Z/p)^x, ascending.
std::vector<std::uint64_t> order_q_units(std::uint64_t p, std::uint64_t q);

/// Unordered pairs {a,b}, a < b, of distinct order-q units.
std::vector<ThevenazSpec> all_family_specs(std::uint64_t p, std::uint64_t q);

/// Partition of all_family_specs(p, q) by family_isomorphic, in order of first member.
std::vector<std::vector<ThevenazSpec>> family_partition(std::uint64_t p, std::uint64_t q);

/// The witness of the isomorphism B^A(G(a,b)) = B^A(G(c,d)): subgroup
/// classes matched in the named order; characters of a class containing a
/// conjugate of z matched by their value there. Throws FiberHasPTorsion.
SpeciesWitness thevenaz_witness(const ThevenazGroup& g, const BurnsideRing& rg, const ThevenazGroup& h,
                                const BurnsideRing& rh);

}  // namespace fb
