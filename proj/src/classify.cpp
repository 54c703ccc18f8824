#include "metab/classify.hpp"

namespace metab {

namespace {

constexpr const char* kDirectDecomposition =
    "in any direct decomposition of G all but one direct factor are virtually abelian";

}  // namespace

const char* to_string(DiophantineVerdict v) {
  switch (v) {
    case DiophantineVerdict::undecidable_z_einterpretable: return "UNDECIDABLE_Z_EINTERPRETABLE";
    case DiophantineVerdict::decidable_virtually_abelian: return "DECIDABLE_VIRTUALLY_ABELIAN";
    case DiophantineVerdict::open_deficiency_one: return "OPEN_DEFICIENCY_ONE";
    case DiophantineVerdict::not_applicable_not_full_rank: return "NOT_APPLICABLE_NOT_FULL_RANK";
  }
  return "?";
}

DiophantineVerdict diophantine_verdict(std::size_t n, std::size_t m) {
  if (m + 2 <= n) return DiophantineVerdict::undecidable_z_einterpretable;
  if (m + 1 == n) return DiophantineVerdict::open_deficiency_one;
  return DiophantineVerdict::decidable_virtually_abelian;
}

Abelianization abelianization_invariants(const Presentation& p) {
  const auto snf = smith_normal_form(relation_matrix(p));
  Abelianization ab;
  ab.free_rank = p.generator_count() - snf.invariant_factors.size();
  for (const auto& d : snf.invariant_factors) {
    if (d > 1) ab.torsion.push_back(d);
  }
  return ab;
}

bool h_basis_independent_mod_relations(const Presentation& p,
                                       const std::vector<GroupWord>& h_basis) {
  const IntMatrix rel = relation_matrix(p);
  const auto n = static_cast<Index>(p.generator_count());
  IntMatrix h(static_cast<Index>(h_basis.size()), n);
  for (Index i = 0; i < h.rows(); ++i) {
    const auto e = exponent_vector(h_basis[static_cast<std::size_t>(i)], p.generator_count());
    for (Index j = 0; j < n; ++j) h(i, j) = e(j);
  }
  IntMatrix stacked(rel.rows() + h.rows(), n);
  stacked << rel, h;
  return rank(stacked) == rank(rel) + h.rows();
}

StructureReport classify(const Presentation& p, const TietzeLimits& limits) {
  StructureReport r;
  const std::size_t n = p.generator_count();
  const std::size_t m = p.relator_count();
  r.generators = n;
  r.relators = m;
  r.deficiency = deficiency(p);
  r.deficiency_defined = deficiency_defined(p);
  r.h_rank = m <= n ? n - m : 0;
  r.input_lengths = relator_lengths(p);
  r.notes = p.warnings();
  if (!r.deficiency_defined) r.notes.push_back("deficiency undefined (|R| > |A|)");

  const auto snf = smith_normal_form(relation_matrix(p));
  r.invariant_factors = snf.invariant_factors;
  r.matrix_rank = snf.invariant_factors.size();
  r.full_rank = r.matrix_rank == std::min(n, m);
  r.abelianization.free_rank = n - r.matrix_rank;
  for (const auto& d : snf.invariant_factors) {
    if (d > 1) r.abelianization.torsion.push_back(d);
  }

  if (!r.full_rank) {
    r.diophantine = DiophantineVerdict::not_applicable_not_full_rank;
    r.notes.push_back("relation matrix has rank " + std::to_string(r.matrix_rank) + " < min(n, m) = " +
                      std::to_string(std::min(n, m)) + "; structure theorems do not apply");
    return r;
  }

  const NormalizedPresentation norm = normalize_to_snf(p, limits);
  r.op_count = norm.snf.op_log.size();
  r.normalized_lengths = norm.lengths_after;
  r.diophantine = diophantine_verdict(n, m);
  if (m + 1 <= n) r.direct_decomposition = kDirectDecomposition;

  if (m <= n) {
    const auto& back = norm.iso.backward;
    // Shortening within each block keeps the subgroups H and K themselves.
    r.k_generators = nielsen_shorten(
        std::vector<GroupWord>(back.begin(), back.begin() + static_cast<std::ptrdiff_t>(m)));
    r.h_basis = nielsen_shorten(
        std::vector<GroupWord>(back.begin() + static_cast<std::ptrdiff_t>(m), back.end()));
    r.h_basis_independent_mod_relations = h_basis_independent_mod_relations(p, *r.h_basis);
    r.virtually_abelian = m == n;
    if (m > 0) {
      r.notes.push_back(
          "the normal closure L of K is virtually abelian and G = HL; L need not be finitely "
          "generated");
    }
  } else {
    r.virtually_abelian = true;
    r.notes.push_back(
        "|R| > |A|: G is a quotient of the zero-deficiency full-rank group on the first n "
        "normalized relators, hence virtually abelian");
  }

  if (m == 0) {
    r.notes.push_back("no relators: G is the free metabelian group of rank " + std::to_string(n));
    if (n == 1) {
      r.notes.push_back(
          "G is infinite cyclic; its Diophantine problem is classically decidable");
    }
  } else if (n == 1) {
    r.notes.push_back("one-generator group: G is cyclic");
  }
  return r;
}

}  // namespace metab
