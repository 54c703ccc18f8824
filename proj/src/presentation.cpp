#include "metab/presentation.hpp"

#include "metab/errors.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace metab {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Offset of `part` within `whole`; both views must alias the same buffer.
std::size_t offset_in(std::string_view whole, std::string_view part) {
  return static_cast<std::size_t>(part.data() - whole.data());
}

// Splits on `sep` outside of () and [] nesting.
std::vector<std::string_view> split_top_level(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == sep && depth == 0) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  out.push_back(s.substr(start));
  return out;
}

struct SourceLine {
  std::string_view text;  // view into the full input
  std::size_t line;
  std::size_t line_start;  // offset of the line in the full input
};

class PresentationParser {
 public:
  PresentationParser(std::string_view text, std::size_t max_length)
      : text_(text), max_length_(max_length) {}

  Presentation parse() {
    std::string_view body = trim(text_);
    if (!body.empty() && body.front() == '<') return parse_angle();
    return parse_file();
  }

 private:
  [[noreturn]] void fail(const std::string& msg, std::size_t offset) const {
    auto [line, col] = line_col(offset);
    throw ParseError(msg, line, col);
  }

  std::pair<std::size_t, std::size_t> line_col(std::size_t offset) const {
    std::size_t line = 1;
    std::size_t start = 0;
    for (std::size_t i = 0; i < offset && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        start = i + 1;
      }
    }
    return {line, offset - start + 1};
  }

  std::vector<std::string> parse_generators(std::string_view list) {
    std::vector<std::string> names;
    std::set<std::string> seen;
    if (trim(list).empty()) fail("no generators", offset_in(text_, list));
    for (std::string_view raw : split_top_level(list, ',')) {
      std::string_view name = trim(raw);
      const std::size_t at = offset_in(text_, name.empty() ? raw : name);
      if (!is_valid_generator_name(name)) fail("invalid generator name '" + std::string(name) + "'", at);
      if (!seen.insert(std::string(name)).second) {
        fail("duplicate generator '" + std::string(name) + "'", at);
      }
      names.emplace_back(name);
    }
    return names;
  }

  GroupWord parse_relation(std::string_view rel, const std::vector<std::string>& names) {
    auto sides = split_top_level(rel, '=');
    if (sides.size() > 2) fail("more than one '=' in relation", offset_in(text_, sides[2]) - 1);
    GroupWord lhs = word_at(sides[0], names);
    if (sides.size() == 1) return lhs;
    if (trim(sides[0]).empty()) fail("empty left-hand side", offset_in(text_, sides[0]));
    if (trim(sides[1]).empty()) fail("empty right-hand side", offset_in(text_, sides[1]));
    GroupWord rhs = word_at(sides[1], names);
    return concat(lhs, invert(rhs));
  }

  GroupWord word_at(std::string_view part, const std::vector<std::string>& names) {
    try {
      return parse_word(part, names, max_length_);
    } catch (const ParseError& e) {
      fail(e.message(), offset_in(text_, part) + e.column() - 1);
    }
  }

  Presentation parse_angle() {
    const std::size_t open = text_.find('<');
    const std::size_t close = text_.rfind('>');
    if (close == std::string_view::npos || close < open) fail("missing '>'", text_.size());
    if (!trim(text_.substr(close + 1)).empty()) fail("trailing input after '>'", close + 1);
    std::string_view inside = text_.substr(open + 1, close - open - 1);
    const std::size_t bar = inside.find('|');
    if (bar == std::string_view::npos) fail("missing '|'", close);
    auto names = parse_generators(inside.substr(0, bar));
    std::vector<GroupWord> relators;
    std::string_view rels = inside.substr(bar + 1);
    if (!trim(rels).empty()) {
      for (std::string_view r : split_top_level(rels, ',')) {
        if (trim(r).empty()) fail("empty relation", offset_in(text_, r));
        relators.push_back(parse_relation(r, names));
      }
    }
    return build(std::move(names), std::move(relators), open);
  }

  Presentation parse_file() {
    std::vector<SourceLine> lines;
    std::size_t start = 0;
    std::size_t number = 1;
    while (start <= text_.size()) {
      std::size_t end = text_.find('\n', start);
      if (end == std::string_view::npos) end = text_.size();
      std::string_view line = text_.substr(start, end - start);
      if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
      if (!trim(line).empty()) lines.push_back({line, number, start});
      start = end + 1;
      ++number;
    }
    if (lines.empty()) fail("empty presentation", 0);
    std::string_view head = trim(lines.front().text);
    if (head.substr(0, 5) != "gens:") fail("expected 'gens:' line", offset_in(text_, head));
    auto names = parse_generators(head.substr(5));
    std::vector<GroupWord> relators;
    for (std::size_t i = 1; i < lines.size(); ++i) {
      relators.push_back(parse_relation(lines[i].text, names));
    }
    return build(std::move(names), std::move(relators), 0);
  }

  Presentation build(std::vector<std::string> names, std::vector<GroupWord> relators,
                     std::size_t at) {
    try {
      return Presentation(std::move(names), std::move(relators));
    } catch (const std::invalid_argument& e) {
      fail(e.what(), at);
    }
  }

  std::string_view text_;
  std::size_t max_length_;
};

}  // namespace

Presentation::Presentation(std::vector<std::string> generator_names,
                           std::vector<GroupWord> relators)
    : names_(std::move(generator_names)), relators_(std::move(relators)) {
  if (names_.empty()) throw std::invalid_argument("a presentation needs at least one generator");
  std::set<std::string> seen;
  for (const auto& name : names_) {
    if (!is_valid_generator_name(name)) {
      throw std::invalid_argument("invalid generator name '" + name + "'");
    }
    if (!seen.insert(name).second) throw std::invalid_argument("duplicate generator '" + name + "'");
  }
  for (const auto& r : relators_) {
    if (r.alphabet_size() != names_.size()) {
      throw std::invalid_argument("relator over " + std::to_string(r.alphabet_size()) +
                                  " generators in a presentation with " +
                                  std::to_string(names_.size()));
    }
  }
}

std::vector<std::string> Presentation::warnings() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < relators_.size(); ++i) {
    if (relators_[i].empty()) {
      out.push_back("relator " + std::to_string(i + 1) + " is the empty word");
    }
  }
  return out;
}

std::vector<std::string> default_generator_names(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) names.push_back("a" + std::to_string(i));
  return names;
}

std::int64_t deficiency(const Presentation& p) {
  return static_cast<std::int64_t>(p.generator_count()) -
         static_cast<std::int64_t>(p.relator_count());
}

bool deficiency_defined(const Presentation& p) { return deficiency(p) >= 0; }

bool is_full_rank(const Presentation& p) {
  const auto target =
      static_cast<Index>(std::min(p.generator_count(), p.relator_count()));
  return rank(relation_matrix(p)) == target;
}

Presentation parse_presentation(std::string_view text, std::size_t max_length) {
  return PresentationParser(text, max_length).parse();
}

std::string to_text(const Presentation& p) {
  std::string out = "gens: ";
  for (std::size_t i = 0; i < p.generator_count(); ++i) {
    if (i) out += ", ";
    out += p.generator_names()[i];
  }
  out += '\n';
  for (const auto& r : p.relators()) out += render(r, p.generator_names()) + '\n';
  return out;
}

std::string to_angle_form(const Presentation& p) {
  std::string out = "< ";
  for (std::size_t i = 0; i < p.generator_count(); ++i) {
    if (i) out += ", ";
    out += p.generator_names()[i];
  }
  out += " |";
  for (std::size_t i = 0; i < p.relator_count(); ++i) {
    out += i ? ", " : " ";
    out += render(p.relators()[i], p.generator_names());
  }
  out += " >";
  return out;
}

}  // namespace metab
