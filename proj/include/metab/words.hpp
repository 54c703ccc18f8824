#pragma once

#include "metab/integer.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace metab {

/// Default ceiling on the number of letters any single word may reach while
/// being built by powers or substitutions.
inline constexpr std::size_t kDefaultMaxWordLength = 1'000'000;

struct Generator {
  std::size_t index = 0;
  friend bool operator==(Generator, Generator) = default;
  friend auto operator<=>(Generator, Generator) = default;
};

struct Letter {
  Generator generator;
  int sign = 1;  // +1 or -1

  Letter inverse() const { return {generator, -sign}; }
  friend bool operator==(const Letter&, const Letter&) = default;
};

using ExponentVector = Vector<std::int64_t>;

/// A freely reduced word over an alphabet of `alphabet_size()` generators.
///
/// Every constructor reduces, so two words denote the same free-group element
/// iff they compare equal. The empty word is the identity.
class GroupWord {
 public:
  GroupWord() = default;
  explicit GroupWord(std::size_t alphabet_size) : alphabet_size_(alphabet_size) {}

  /// Reduces `letters`; throws std::out_of_range if a generator index is
  /// outside the alphabet or std::invalid_argument on a sign other than ±1.
  GroupWord(std::size_t alphabet_size, std::span<const Letter> letters);

  std::size_t alphabet_size() const noexcept { return alphabet_size_; }
  std::span<const Letter> letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }

  friend bool operator==(const GroupWord&, const GroupWord&) = default;

 private:
  std::size_t alphabet_size_ = 0;
  std::vector<Letter> letters_;
};

GroupWord free_reduce(std::size_t alphabet_size, std::span<const Letter> letters);

/// The single-letter word a_index^sign.
GroupWord letter_word(std::size_t alphabet_size, std::size_t index, int sign = 1);

GroupWord concat(const GroupWord& u, const GroupWord& v);
GroupWord invert(const GroupWord& u);

/// u^k for any integer k; throws LimitError past `max_length` letters.
GroupWord power(const GroupWord& u, std::int64_t k,
                std::size_t max_length = kDefaultMaxWordLength);

/// [x,y] = x^-1 y^-1 x y.
GroupWord commutator(const GroupWord& x, const GroupWord& y);

/// Replaces each letter a_i^e of `w` by images[i]^e. All images must share one
/// alphabet, which becomes the alphabet of the result.
GroupWord substitute(const GroupWord& w, std::span<const GroupWord> images,
                     std::size_t max_length = kDefaultMaxWordLength);

ExponentVector exponent_vector(const GroupWord& w, std::size_t n);
ExponentVector exponent_vector(const GroupWord& w);

/// True iff w lies in the derived subgroup of the free group, i.e. every
/// exponent sum vanishes.
bool is_commutator_word(const GroupWord& w);

/// Shortens a tuple of words by Nielsen moves u_i -> u_i u_j^{+-1} or
/// u_j^{+-1} u_i, taken only when they strictly shorten u_i, then inverts
/// single negative letters and sorts shortlex. The generated subgroup is
/// unchanged. Greedy, so not a full Nielsen reduction in general.
std::vector<GroupWord> nielsen_shorten(std::vector<GroupWord> words);

/// Parses a word. Grammar:
///
///   word    := term*
///   term    := atom ("^" integer)?
///   atom    := name | "1" | "(" word ")" | "[" word "," word "]"
///   integer := "-"? digit+
///
/// Names match [A-Za-z_][A-Za-z0-9_]* and must appear in `alphabet`; "1" is
/// the identity. Errors are ParseError with a 1-based column; LimitError if a
/// power expands past `max_length`.
GroupWord parse_word(std::string_view text, std::span<const std::string> alphabet,
                     std::size_t max_length = kDefaultMaxWordLength);

/// Canonical rendering, e.g. "a^2 b^-1 a". Runs of one letter collapse to a
/// power; the empty word renders as "1". parse_word(render(w)) == w.
std::string render(const GroupWord& w, std::span<const std::string> names);

bool is_valid_generator_name(std::string_view name);

}  // namespace metab
