#include "metab/words.hpp"

#include "metab/errors.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <stdexcept>

namespace metab {

namespace {

// Appends `l` to an already reduced sequence, cancelling if possible.
void push_reduced(std::vector<Letter>& out, const Letter& l) {
  if (!out.empty() && out.back().generator == l.generator && out.back().sign == -l.sign) {
    out.pop_back();
  } else {
    out.push_back(l);
  }
}

void check_alphabet(const GroupWord& u, const GroupWord& v) {
  if (u.alphabet_size() != v.alphabet_size()) {
    throw std::invalid_argument("alphabet mismatch: " + std::to_string(u.alphabet_size()) +
                                " vs " + std::to_string(v.alphabet_size()) + " generators");
  }
}

class WordParser {
 public:
  WordParser(std::string_view text, std::span<const std::string> alphabet,
             std::size_t max_length)
      : text_(text), alphabet_(alphabet), max_length_(max_length) {}

  GroupWord parse() {
    GroupWord w = word();
    skip_space();
    if (pos_ < text_.size()) {
      fail(std::string("unexpected '") + text_[pos_] + "'");
    }
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { fail_at(message, pos_); }
  [[noreturn]] void fail_at(const std::string& message, std::size_t at) const {
    throw ParseError(message, 1, at + 1);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool at_term_start() {
    skip_space();
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return c == '(' || c == '[' || c == '1' || c == '_' ||
           std::isalpha(static_cast<unsigned char>(c));
  }

  GroupWord word() {
    GroupWord acc(alphabet_.size());
    while (at_term_start()) {
      acc = concat(acc, term());
      if (acc.length() > max_length_) {
        throw LimitError("word exceeds " + std::to_string(max_length_) + " letters");
      }
    }
    return acc;
  }

  GroupWord term() {
    GroupWord base = atom();
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      skip_space();
      std::int64_t k = integer();
      return power(base, k, max_length_);
    }
    return base;
  }

  std::int64_t integer() {
    std::size_t start = pos_;
    if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
    std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (digits == pos_) fail_at("malformed exponent", start);
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (ec != std::errc()) fail_at("exponent out of range", start);
    return value;
  }

  GroupWord atom() {
    skip_space();
    std::size_t start = pos_;
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      GroupWord inner = word();
      expect(')', start);
      return inner;
    }
    if (c == '[') {
      ++pos_;
      GroupWord x = word();
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] != ',') {
        if (pos_ >= text_.size()) fail_at("unbalanced '['", start);
        fail("expected ',' in commutator");
      }
      ++pos_;
      GroupWord y = word();
      expect(']', start);
      return commutator(x, y);
    }
    if (c == '1') {
      ++pos_;
      return GroupWord(alphabet_.size());
    }
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    std::string_view name = text_.substr(start, pos_ - start);
    auto it = std::find(alphabet_.begin(), alphabet_.end(), name);
    if (it == alphabet_.end()) {
      fail_at("unknown generator '" + std::string(name) + "'", start);
    }
    return letter_word(alphabet_.size(), static_cast<std::size_t>(it - alphabet_.begin()));
  }

  void expect(char close, std::size_t open_pos) {
    skip_space();
    if (pos_ >= text_.size()) {
      fail_at(std::string("unbalanced '") + text_[open_pos] + "'", open_pos);
    }
    if (text_[pos_] != close) {
      fail(std::string("expected '") + close + "'");
    }
    ++pos_;
  }

  std::string_view text_;
  std::span<const std::string> alphabet_;
  std::size_t max_length_;
  std::size_t pos_ = 0;
};

}  // namespace

GroupWord::GroupWord(std::size_t alphabet_size, std::span<const Letter> letters)
    : alphabet_size_(alphabet_size) {
  letters_.reserve(letters.size());
  for (const Letter& l : letters) {
    if (l.generator.index >= alphabet_size) {
      throw std::out_of_range("generator index " + std::to_string(l.generator.index) +
                              " outside alphabet of size " + std::to_string(alphabet_size));
    }
    if (l.sign != 1 && l.sign != -1) {
      throw std::invalid_argument("letter sign must be +1 or -1");
    }
    push_reduced(letters_, l);
  }
}

GroupWord free_reduce(std::size_t alphabet_size, std::span<const Letter> letters) {
  return GroupWord(alphabet_size, letters);
}

GroupWord letter_word(std::size_t alphabet_size, std::size_t index, int sign) {
  const Letter l{Generator{index}, sign};
  return GroupWord(alphabet_size, std::span<const Letter>(&l, 1));
}

GroupWord concat(const GroupWord& u, const GroupWord& v) {
  check_alphabet(u, v);
  std::vector<Letter> out(u.letters().begin(), u.letters().end());
  for (const Letter& l : v.letters()) push_reduced(out, l);
  return GroupWord(u.alphabet_size(), out);
}

GroupWord invert(const GroupWord& u) {
  std::vector<Letter> out;
  out.reserve(u.length());
  for (auto it = u.letters().rbegin(); it != u.letters().rend(); ++it) {
    out.push_back(it->inverse());
  }
  return GroupWord(u.alphabet_size(), out);
}

GroupWord power(const GroupWord& u, std::int64_t k, std::size_t max_length) {
  if (k == 0 || u.empty()) return GroupWord(u.alphabet_size());
  const GroupWord base = k < 0 ? invert(u) : u;
  const std::uint64_t times = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1
                                    : static_cast<std::uint64_t>(k);

  // Conjugate-cancelling prefix/suffix: base = p c p^-1 with c cyclically
  // reduced, so base^k = p c^k p^-1 has length 2|p| + k|c|.
  const auto letters = base.letters();
  std::size_t lo = 0;
  std::size_t hi = letters.size();
  while (hi - lo >= 2 && letters[lo] == letters[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  const std::size_t core = hi - lo;
  if (2 * lo > max_length || times > (max_length - 2 * lo) / core) {
    throw LimitError("power exceeds " + std::to_string(max_length) + " letters");
  }
  std::vector<Letter> out(letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(lo));
  out.reserve(2 * lo + core * times);
  for (std::uint64_t t = 0; t < times; ++t) {
    out.insert(out.end(), letters.begin() + static_cast<std::ptrdiff_t>(lo),
               letters.begin() + static_cast<std::ptrdiff_t>(hi));
  }
  out.insert(out.end(), letters.begin() + static_cast<std::ptrdiff_t>(hi), letters.end());
  return GroupWord(u.alphabet_size(), out);
}

GroupWord commutator(const GroupWord& x, const GroupWord& y) {
  return concat(concat(invert(x), invert(y)), concat(x, y));
}

GroupWord substitute(const GroupWord& w, std::span<const GroupWord> images,
                     std::size_t max_length) {
  if (images.size() < w.alphabet_size()) {
    throw std::invalid_argument("substitution needs one image per generator");
  }
  const std::size_t target = images.empty() ? 0 : images.front().alphabet_size();
  std::vector<GroupWord> inverses;
  inverses.reserve(images.size());
  for (const GroupWord& img : images) {
    if (img.alphabet_size() != target) {
      throw std::invalid_argument("substitution images over different alphabets");
    }
    inverses.push_back(invert(img));
  }
  std::vector<Letter> out;
  for (const Letter& l : w.letters()) {
    const GroupWord& img = l.sign > 0 ? images[l.generator.index] : inverses[l.generator.index];
    for (const Letter& x : img.letters()) push_reduced(out, x);
    if (out.size() > max_length) {
      throw LimitError("substituted word exceeds " + std::to_string(max_length) + " letters");
    }
  }
  return GroupWord(target, out);
}

ExponentVector exponent_vector(const GroupWord& w, std::size_t n) {
  ExponentVector v = ExponentVector::Zero(static_cast<Index>(n));
  for (const Letter& l : w.letters()) {
    if (l.generator.index >= n) {
      throw std::out_of_range("letter outside alphabet of size " + std::to_string(n));
    }
    v(static_cast<Index>(l.generator.index)) += l.sign;
  }
  return v;
}

ExponentVector exponent_vector(const GroupWord& w) {
  return exponent_vector(w, w.alphabet_size());
}

bool is_commutator_word(const GroupWord& w) {
  std::size_t n = w.alphabet_size();
  for (const Letter& l : w.letters()) n = std::max(n, l.generator.index + 1);
  return exponent_vector(w, n).isZero();
}

std::vector<GroupWord> nielsen_shorten(std::vector<GroupWord> words) {
  // Total length strictly decreases on every accepted move.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < words.size(); ++i) {
      for (std::size_t j = 0; j < words.size(); ++j) {
        if (i == j || words[j].empty()) continue;
        const GroupWord inv = invert(words[j]);
        for (const GroupWord* v : std::array<const GroupWord*, 2>{&words[j], &inv}) {
          for (GroupWord c : std::array{concat(words[i], *v), concat(*v, words[i])}) {
            if (c.length() < words[i].length()) {
              words[i] = std::move(c);
              changed = true;
              break;
            }
          }
          if (changed) break;
        }
        if (changed) break;
      }
      if (changed) break;
    }
  }
  for (auto& w : words) {
    if (w.length() == 1 && w[0].sign < 0) w = invert(w);
  }
  std::stable_sort(words.begin(), words.end(), [](const GroupWord& a, const GroupWord& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return std::lexicographical_compare(
        a.letters().begin(), a.letters().end(), b.letters().begin(), b.letters().end(),
        [](const Letter& x, const Letter& y) {
          return std::pair(x.generator.index, -x.sign) < std::pair(y.generator.index, -y.sign);
        });
  });
  return words;
}

GroupWord parse_word(std::string_view text, std::span<const std::string> alphabet,
                     std::size_t max_length) {
  return WordParser(text, alphabet, max_length).parse();
}

std::string render(const GroupWord& w, std::span<const std::string> names) {
  if (w.empty()) return "1";
  if (names.size() < w.alphabet_size()) {
    throw std::invalid_argument("not enough generator names to render word");
  }
  std::string out;
  const auto letters = w.letters();
  for (std::size_t i = 0; i < letters.size();) {
    std::size_t j = i;
    while (j < letters.size() && letters[j] == letters[i]) ++j;
    const std::int64_t exp = static_cast<std::int64_t>(j - i) * letters[i].sign;
    if (!out.empty()) out += ' ';
    out += names[letters[i].generator.index];
    if (exp != 1) out += "^" + std::to_string(exp);
    i = j;
  }
  return out;
}

bool is_valid_generator_name(std::string_view name) {
  if (name.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) return false;
  return std::all_of(name.begin() + 1, name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

}  // namespace metab
