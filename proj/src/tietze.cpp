#include "metab/tietze.hpp"

#include "metab/errors.hpp"

#include <stdexcept>

namespace metab {

namespace {

std::int64_t small_multiplier(const BigInt& t, std::size_t max_length) {
  auto v = to_int64(t);
  if (!v || static_cast<std::uint64_t>(*v < 0 ? -*v : *v) > max_length) {
    throw LimitError("multiplier " + t.str() + " exceeds the word length limit");
  }
  return *v;
}

void check_index(Index i, std::size_t bound, const char* what) {
  if (i < 0 || static_cast<std::size_t>(i) >= bound) {
    throw std::out_of_range(std::string(what) + " index " + std::to_string(i) +
                            " out of range (" + std::to_string(bound) + ")");
  }
}

Substitution column_substitution(std::size_t n, const ElementaryOp<BigInt>& op,
                                 std::size_t max_length) {
  Substitution s;
  for (std::size_t i = 0; i < n; ++i) s.images.push_back(letter_word(n, i));
  s.inverse_images = s.images;
  const auto tgt = static_cast<std::size_t>(op.target);
  const auto src = static_cast<std::size_t>(op.source);
  switch (op.kind) {
    case OpKind::swap_cols:
      std::swap(s.images[tgt], s.images[src]);
      std::swap(s.inverse_images[tgt], s.inverse_images[src]);
      break;
    case OpKind::negate_col:
      s.images[tgt] = letter_word(n, tgt, -1);
      s.inverse_images[tgt] = s.images[tgt];
      break;
    case OpKind::add_col_multiple: {
      // col_target += t * col_source  <->  a_source -> a_source a_target^t
      const std::int64_t t = small_multiplier(op.multiplier, max_length);
      const GroupWord g = letter_word(n, tgt);
      s.images[src] = concat(letter_word(n, src), power(g, t, max_length));
      s.inverse_images[src] = concat(letter_word(n, src), power(g, -t, max_length));
      break;
    }
    default:
      throw std::invalid_argument(std::string("not a column operation: ") + to_string(op.kind));
  }
  return s;
}

}  // namespace

IsomorphismRecord IsomorphismRecord::identity(std::size_t n) {
  IsomorphismRecord iso;
  for (std::size_t i = 0; i < n; ++i) iso.forward.push_back(letter_word(n, i));
  iso.backward = iso.forward;
  return iso;
}

LengthStats relator_lengths(const Presentation& p) {
  LengthStats s;
  for (const auto& r : p.relators()) {
    s.total += r.length();
    s.max = std::max(s.max, r.length());
  }
  return s;
}

Presentation apply_row_op(const Presentation& p, const ElementaryOp<BigInt>& op,
                          const TietzeLimits& limits) {
  if (!op.is_row()) {
    throw std::invalid_argument(std::string("not a row operation: ") + to_string(op.kind));
  }
  const std::size_t m = p.relator_count();
  check_index(op.target, m, "relator");
  if (op.kind != OpKind::negate_row) check_index(op.source, m, "relator");

  std::vector<GroupWord> rel = p.relators();
  const auto tgt = static_cast<std::size_t>(op.target);
  const auto src = static_cast<std::size_t>(op.source);
  switch (op.kind) {
    case OpKind::swap_rows: std::swap(rel[tgt], rel[src]); break;
    case OpKind::negate_row: rel[tgt] = invert(rel[tgt]); break;
    case OpKind::add_row_multiple: {
      if (!rel[src].empty()) {
        const std::int64_t t = small_multiplier(op.multiplier, limits.max_word_length);
        rel[tgt] = concat(rel[tgt], power(rel[src], t, limits.max_word_length));
        if (rel[tgt].length() > limits.max_word_length) {
          throw LimitError("relator exceeds " + std::to_string(limits.max_word_length) +
                           " letters");
        }
      }
      break;
    }
    default: break;
  }
  return Presentation(p.generator_names(), std::move(rel));
}

std::pair<Presentation, Substitution> apply_col_op(const Presentation& p,
                                                   const ElementaryOp<BigInt>& op,
                                                   const TietzeLimits& limits) {
  if (op.is_row()) {
    throw std::invalid_argument(std::string("not a column operation: ") + to_string(op.kind));
  }
  const std::size_t n = p.generator_count();
  check_index(op.target, n, "generator");
  if (op.kind != OpKind::negate_col) check_index(op.source, n, "generator");

  Substitution s = column_substitution(n, op, limits.max_word_length);
  std::vector<GroupWord> rel;
  rel.reserve(p.relator_count());
  for (const auto& r : p.relators()) {
    rel.push_back(substitute(r, s.images, limits.max_word_length));
  }
  return {Presentation(p.generator_names(), std::move(rel)), std::move(s)};
}

NormalizedPresentation normalize_to_snf(const Presentation& p, const TietzeLimits& limits) {
  const std::size_t n = p.generator_count();
  auto snf = smith_normal_form(relation_matrix(p));

  Presentation current = p;
  IsomorphismRecord iso = IsomorphismRecord::identity(n);
  std::size_t peak = relator_lengths(p).max;

  for (const auto& op : snf.op_log) {
    if (op.is_row()) {
      current = apply_row_op(current, op, limits);
    } else {
      auto [next, sub] = apply_col_op(current, op, limits);
      current = std::move(next);
      // forward' = sub o forward, backward' = backward o sub^-1
      for (auto& w : iso.forward) w = substitute(w, sub.images, limits.max_word_length);
      std::vector<GroupWord> backward;
      backward.reserve(n);
      for (const auto& w : sub.inverse_images) {
        backward.push_back(substitute(w, iso.backward, limits.max_word_length));
      }
      iso.backward = std::move(backward);
    }
    peak = std::max(peak, relator_lengths(current).max);
  }

  NormalizedPresentation out{std::move(current), std::move(iso), std::move(snf),
                             relator_lengths(p), {}, peak};
  out.lengths_after = relator_lengths(out.presentation);
  return out;
}

bool check_isomorphism_record(const IsomorphismRecord& iso) {
  const std::size_t n = iso.forward.size();
  if (iso.backward.size() != n) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (iso.forward[i].alphabet_size() != n || iso.backward[i].alphabet_size() != n) return false;
  }
  for (std::size_t i = 0; i < n; ++i) {
    const GroupWord g = letter_word(n, i);
    if (substitute(iso.backward[i], iso.forward) != g) return false;
    if (substitute(iso.forward[i], iso.backward) != g) return false;
  }
  return true;
}

GroupWord commutator_part(const GroupWord& r, std::size_t i, std::int64_t d) {
  return concat(power(letter_word(r.alphabet_size(), i), -d), r);
}

}  // namespace metab
