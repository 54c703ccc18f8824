#pragma once

#include "metab/intlinalg.hpp"
#include "metab/words.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace metab {

/// A finite presentation <a_1, ..., a_n | r_1, ..., r_m>.
///
/// Relators form an ordered list: row order of the relation matrix follows it
/// and duplicates are kept. Empty relators are kept too, with a warning.
class Presentation {
 public:
  /// Throws std::invalid_argument if there are no generators, a name is
  /// repeated or malformed, or a relator is over a different alphabet.
  Presentation(std::vector<std::string> generator_names, std::vector<GroupWord> relators);

  const std::vector<std::string>& generator_names() const noexcept { return names_; }
  const std::vector<GroupWord>& relators() const noexcept { return relators_; }
  std::size_t generator_count() const noexcept { return names_.size(); }
  std::size_t relator_count() const noexcept { return relators_.size(); }

  std::vector<std::string> warnings() const;

  friend bool operator==(const Presentation&, const Presentation&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<GroupWord> relators_;
};

/// Generator names a1, ..., an.
std::vector<std::string> default_generator_names(std::size_t n);

/// The m x n matrix whose row i is the exponent vector of relator i.
template <typename Scalar = BigInt>
Matrix<Scalar> relation_matrix(const Presentation& p) {
  const auto n = static_cast<Index>(p.generator_count());
  const auto m = static_cast<Index>(p.relator_count());
  Matrix<Scalar> out(m, n);
  for (Index i = 0; i < m; ++i) {
    const ExponentVector e = exponent_vector(p.relators()[static_cast<std::size_t>(i)],
                                             p.generator_count());
    for (Index j = 0; j < n; ++j) out(i, j) = Scalar(e(j));
  }
  return out;
}

/// |A| - |R|. Negative values are returned as-is; the term "deficiency" only
/// applies when the result is non-negative (see deficiency_defined).
std::int64_t deficiency(const Presentation& p);
bool deficiency_defined(const Presentation& p);

/// rank M(A,R) == min(n, m). A presentation without relators is full rank.
bool is_full_rank(const Presentation& p);

/// Parses either the multi-line file format
///
///   gens: a, b
///   a^2 [a,b]^-1     # comment
///   a b = b a
///
/// or the one-line form "< a, b | a^2 [a,b]^-1, a b = b a >". A relation
/// u = v is stored as the relator u v^-1.
Presentation parse_presentation(std::string_view text,
                                std::size_t max_length = kDefaultMaxWordLength);

/// File-format rendering (round-trips through parse_presentation).
std::string to_text(const Presentation& p);
/// One-line "< gens | relators >" rendering.
std::string to_angle_form(const Presentation& p);

}  // namespace metab
