#pragma once

// Presentation-level mirror of an SNF computation.
//
// Row operations act on relators (they are Tietze moves that keep the normal
// closure), column operations act on generators through elementary Nielsen
// automorphisms of the free group:
//
//   swap_cols(j, k)               a_j <-> a_k
//   negate_col(j)                 a_j -> a_j^-1
//   add_col_multiple(k, j, t)     a_j -> a_j a_k^t    (col_k += t * col_j)
//
// Each of these changes the exponent vector of every relator by exactly the
// matching column operation, which is what keeps the relation matrix of the
// rewritten presentation equal to the matrix-side replay at every step.

#include "metab/intlinalg.hpp"
#include "metab/presentation.hpp"

#include <utility>
#include <vector>

namespace metab {

/// An elementary free-group automorphism: `images[i]` is the image of old
/// generator i as a word in the new generators, `inverse_images[i]` is new
/// generator i as a word in the old ones.
struct Substitution {
  std::vector<GroupWord> images;
  std::vector<GroupWord> inverse_images;
};

/// forward[i]:  old generator i written in the new generators.
/// backward[i]: new generator i written in the old generators.
struct IsomorphismRecord {
  std::vector<GroupWord> forward;
  std::vector<GroupWord> backward;

  static IsomorphismRecord identity(std::size_t n);
};

struct LengthStats {
  std::size_t total = 0;
  std::size_t max = 0;
};

LengthStats relator_lengths(const Presentation& p);

struct NormalizedPresentation {
  Presentation presentation;
  IsomorphismRecord iso;
  SmithDecomposition<BigInt> snf;
  LengthStats lengths_before;
  LengthStats lengths_after;
  std::size_t peak_relator_length = 0;  // longest relator seen during replay
};

struct TietzeLimits {
  std::size_t max_word_length = kDefaultMaxWordLength;
};

/// Applies a row operation to the relators: swap, r_i -> r_i^-1, or
/// r_i -> r_i r_j^t. Throws std::invalid_argument for a column op and
/// std::out_of_range for a bad index.
Presentation apply_row_op(const Presentation& p, const ElementaryOp<BigInt>& op,
                          const TietzeLimits& limits = {});

/// Rewrites every relator under the Nielsen automorphism matching a column
/// operation. Returns the new presentation and the substitution used.
std::pair<Presentation, Substitution> apply_col_op(const Presentation& p,
                                                   const ElementaryOp<BigInt>& op,
                                                   const TietzeLimits& limits = {});

/// Smith normal form of M(A,R), replayed on the presentation. The result has
/// relation matrix snf.D and the same n, m and rank. Throws LimitError if a
/// relator or substitution image outgrows the configured length.
NormalizedPresentation normalize_to_snf(const Presentation& p, const TietzeLimits& limits = {});

/// True iff substituting forward into backward (and vice versa) gives back
/// every generator after free reduction.
bool check_isomorphism_record(const IsomorphismRecord& iso);

/// For relator r with exponent vector d * e_i, returns c = a_i^-d r; c is a
/// commutator word, so r = a_i^d c.
GroupWord commutator_part(const GroupWord& r, std::size_t i, std::int64_t d);

}  // namespace metab
