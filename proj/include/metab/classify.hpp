#pragma once

#include "metab/presentation.hpp"
#include "metab/tietze.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace metab {

enum class DiophantineVerdict {
  undecidable_z_einterpretable,  // full rank, m <= n - 2
  decidable_virtually_abelian,   // full rank, m >= n
  open_deficiency_one,           // full rank, m == n - 1
  not_applicable_not_full_rank,
};

/// Upper-case wire name, e.g. "OPEN_DEFICIENCY_ONE".
const char* to_string(DiophantineVerdict v);

/// Verdict for a full-rank presentation with n generators and m relators.
DiophantineVerdict diophantine_verdict(std::size_t n, std::size_t m);

struct Abelianization {
  std::size_t free_rank = 0;
  std::vector<BigInt> torsion;  // invariant factors > 1, in divisibility order
  friend bool operator==(const Abelianization&, const Abelianization&) = default;
};

struct StructureReport {
  std::size_t generators = 0;
  std::size_t relators = 0;
  bool full_rank = false;
  std::size_t matrix_rank = 0;
  std::int64_t deficiency = 0;
  bool deficiency_defined = true;
  std::size_t h_rank = 0;
  // Present only for full-rank presentations with m <= n. Words are in the
  // original generators, Nielsen-shortened within each block.
  std::optional<std::vector<GroupWord>> h_basis;
  std::optional<std::vector<GroupWord>> k_generators;
  std::optional<bool> h_basis_independent_mod_relations;
  bool virtually_abelian = false;
  DiophantineVerdict diophantine = DiophantineVerdict::not_applicable_not_full_rank;
  std::optional<std::string> direct_decomposition;
  Abelianization abelianization;
  std::vector<BigInt> invariant_factors;
  std::optional<std::size_t> op_count;
  std::optional<LengthStats> normalized_lengths;
  LengthStats input_lengths;
  std::vector<std::string> notes;
};

Abelianization abelianization_invariants(const Presentation& p);

/// Structure of the metabelian group presented by p: for full-rank input, the
/// free metabelian subgroup H and the generators of the virtually abelian K
/// (found through the SNF normalization and mapped back to the original
/// generators), plus the Diophantine and direct-decomposition verdicts.
/// Propagates LimitError from the normalization.
StructureReport classify(const Presentation& p, const TietzeLimits& limits = {});

/// Abelianized sanity check for H: the exponent vectors of `h_basis` stay
/// independent modulo the row space of M(A,R).
bool h_basis_independent_mod_relations(const Presentation& p,
                                       const std::vector<GroupWord>& h_basis);

}  // namespace metab
