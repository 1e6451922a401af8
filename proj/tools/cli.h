#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fb/fiber.h"
#include "fb/group.h"
#include "fb/io.h"
#include "fb/thevenaz.h"

namespace fb::cli {

/// A group named on the command line.
struct GroupSource {
  std::string spec;
  FiniteGroup group;
  std::optional<ThevenazGroup> thevenaz;
};

/// Parses cyclic:n, abelian:d1,d2,..., dihedral:n, symmetric:n,
/// thevenaz:p,q,a,b (or thevenaz:p=..,q=..,a=..,b=..), cayley:file.json.
/// Throws fb::InvalidSpec or fb::NotAGroup.
GroupSource parse_group_spec(const std::string& spec);

/// 64-bit FNV-1a, hex encoded with an "fnv1a64:" prefix.
std::string fnv1a_hex(const std::string& data);

/// {"spec", "order", "hash"} for a group input.
json describe_input(const GroupSource& g);

struct ReproduceOptions {
  ThevenazSpec first{11, 5, 3, 9};
  /// Partner (c, d); when absent the first pair outside the isomorphism
  /// class of `first` is used.
  std::optional<std::pair<std::uint64_t, std::uint64_t>> partner = std::pair<std::uint64_t, std::uint64_t>{3, 4};
  AbelianFiber fiber{std::vector<std::uint64_t>{5}};
  unsigned threads = 1;
};

struct ReproduceOutcome {
  /// 0 all checks passed, 1 a check failed or no counterexample pair exists,
  /// 2 invalid input (including a fiber with p-torsion).
  int exit_code = 0;
  json report;
};

/// Builds G(a,b) and G(c,d), certifies they are not isomorphic, compares
/// their tables of marks, builds B^A of both, verifies the explicit
/// species witness, and partitions the family into isomorphism classes.
ReproduceOutcome reproduce_counterexample(const ReproduceOptions& options);

/// Entry point of the fburn tool. Writes the report to `out` (or to
/// --out) and diagnostics to `err`; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fb::cli
