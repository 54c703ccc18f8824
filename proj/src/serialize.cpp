#include "metab/serialize.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace metab {

namespace {

Json words_to_json(const std::vector<GroupWord>& words, const std::vector<std::string>& names) {
  Json out = Json::array();
  for (const auto& w : words) out.push_back(render(w, names));
  return out;
}

Json integers_to_json(const std::vector<BigInt>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(integer_to_json(x));
  return out;
}

Json lengths_to_json(const LengthStats& s) { return Json{{"total", s.total}, {"max", s.max}}; }

Json substitution_table(const std::vector<GroupWord>& words, const std::vector<std::string>& from,
                        const std::vector<std::string>& to) {
  Json out = Json::array();
  for (std::size_t i = 0; i < words.size(); ++i) {
    out.push_back(Json{{"generator", from[i]}, {"image", render(words[i], to)}});
  }
  return out;
}

std::string join_integers(const std::vector<BigInt>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += xs[i].str();
  }
  return out;
}

std::string join_words(const std::vector<GroupWord>& ws, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < ws.size(); ++i) {
    if (i) out += ", ";
    out += render(ws[i], names);
  }
  return out;
}

// New generators are written with a trailing prime.
std::vector<std::string> primed(const std::vector<std::string>& names) {
  std::vector<std::string> out;
  for (const auto& n : names) out.push_back(n + "'");
  return out;
}

}  // namespace

Json integer_to_json(const BigInt& x) {
  if (auto v = to_int64(x)) return *v;
  return x.str();
}

BigInt integer_from_json(const Json& j) {
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? BigInt(j.get<std::uint64_t>()) : BigInt(j.get<std::int64_t>());
  }
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    std::size_t i = s.size() > 0 && (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw std::invalid_argument("not an integer: \"" + s + "\"");
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("not an integer: \"" + s + "\"");
    }
    return BigInt(s[0] == '+' ? s.substr(1) : s);
  }
  throw std::invalid_argument("expected an integer, got " + j.dump());
}

Json matrix_to_json(const IntMatrix& m) {
  Json entries = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(integer_to_json(m(i, j)));
    entries.push_back(std::move(row));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

IntMatrix matrix_from_json(const Json& j) {
  const Json* entries = &j;
  std::optional<Index> rows;
  std::optional<Index> cols;
  if (j.is_object()) {
    if (!j.contains("entries")) throw std::invalid_argument("matrix object lacks \"entries\"");
    entries = &j.at("entries");
    if (j.contains("rows")) rows = j.at("rows").get<Index>();
    if (j.contains("cols")) cols = j.at("cols").get<Index>();
  }
  if (!entries->is_array()) throw std::invalid_argument("matrix entries must be an array of rows");
  const auto r = static_cast<Index>(entries->size());
  Index c = cols.value_or(r > 0 && (*entries)[0].is_array() ? static_cast<Index>((*entries)[0].size()) : 0);
  if (rows && *rows != r) throw std::invalid_argument("\"rows\" does not match entries");
  IntMatrix m(r, c);
  for (Index i = 0; i < r; ++i) {
    const Json& row = (*entries)[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Index>(row.size()) != c) {
      throw std::invalid_argument("matrix row " + std::to_string(i) + " has the wrong length");
    }
    for (Index k = 0; k < c; ++k) m(i, k) = integer_from_json(row[static_cast<std::size_t>(k)]);
  }
  return m;
}

Json op_to_json(const ElementaryOp<BigInt>& op) {
  Json j{{"kind", to_string(op.kind)}, {"target", op.target}};
  if (op.kind != OpKind::negate_row && op.kind != OpKind::negate_col) j["source"] = op.source;
  if (op.kind == OpKind::add_row_multiple || op.kind == OpKind::add_col_multiple) {
    j["multiplier"] = integer_to_json(op.multiplier);
  }
  return j;
}

ElementaryOp<BigInt> op_from_json(const Json& j) {
  auto kind = op_kind_from_string(j.at("kind").get<std::string>());
  if (!kind) throw std::invalid_argument("unknown op kind " + j.at("kind").dump());
  ElementaryOp<BigInt> op;
  op.kind = *kind;
  op.target = j.at("target").get<Index>();
  op.source = j.contains("source") ? j.at("source").get<Index>() : op.target;
  if (j.contains("multiplier")) op.multiplier = integer_from_json(j.at("multiplier"));
  return op;
}

Json smith_to_json(const SmithDecomposition<BigInt>& s) {
  Json ops = Json::array();
  for (const auto& op : s.op_log) ops.push_back(op_to_json(op));
  return Json{{"rank", s.rank()},
              {"invariant_factors", integers_to_json(s.invariant_factors)},
              {"U", matrix_to_json(s.U)},
              {"D", matrix_to_json(s.D)},
              {"V", matrix_to_json(s.V)},
              {"op_log", std::move(ops)}};
}

Json normalized_to_json(const NormalizedPresentation& np) {
  const auto& names = np.presentation.generator_names();
  Json ops = Json::array();
  for (const auto& op : np.snf.op_log) ops.push_back(op_to_json(op));
  return Json{{"presentation", to_text(np.presentation)},
              {"generators", names},
              {"relators", words_to_json(np.presentation.relators(), names)},
              {"relation_matrix", matrix_to_json(relation_matrix(np.presentation))},
              {"invariant_factors", integers_to_json(np.snf.invariant_factors)},
              {"forward", substitution_table(np.iso.forward, names, primed(names))},
              {"backward", substitution_table(np.iso.backward, primed(names), names)},
              {"op_log", std::move(ops)},
              {"relator_lengths",
               Json{{"before", lengths_to_json(np.lengths_before)},
                    {"after", lengths_to_json(np.lengths_after)},
                    {"peak", np.peak_relator_length}}}};
}

Json report_to_json(const StructureReport& r, const Presentation& p) {
  const auto& names = p.generator_names();
  Json j;
  j["generators"] = names;
  j["relators"] = words_to_json(p.relators(), names);
  j["n"] = r.generators;
  j["m"] = r.relators;
  j["full_rank"] = r.full_rank;
  j["matrix_rank"] = r.matrix_rank;
  j["deficiency"] = r.deficiency;
  j["deficiency_defined"] = r.deficiency_defined;
  j["h_rank"] = r.h_rank;
  if (r.h_basis) j["h_basis"] = words_to_json(*r.h_basis, names);
  if (r.k_generators) j["k_generators"] = words_to_json(*r.k_generators, names);
  if (r.h_basis_independent_mod_relations) {
    j["h_basis_independent_mod_relations"] = *r.h_basis_independent_mod_relations;
  }
  j["virtually_abelian"] = r.virtually_abelian;
  j["diophantine"] = to_string(r.diophantine);
  if (r.direct_decomposition) j["direct_decomposition"] = *r.direct_decomposition;
  j["abelianization"] = Json{{"free_rank", r.abelianization.free_rank},
                             {"torsion", integers_to_json(r.abelianization.torsion)}};
  Json prov;
  prov["relation_matrix"] = matrix_to_json(relation_matrix(p));
  prov["invariant_factors"] = integers_to_json(r.invariant_factors);
  if (r.op_count) prov["op_count"] = *r.op_count;
  Json lengths{{"input", lengths_to_json(r.input_lengths)}};
  if (r.normalized_lengths) lengths["normalized"] = lengths_to_json(*r.normalized_lengths);
  prov["relator_lengths"] = std::move(lengths);
  j["provenance"] = std::move(prov);
  j["notes"] = r.notes;
  return j;
}

Json experiment_to_json(const ExperimentResult& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    rows.push_back(Json{{"n", r.config.n},
                        {"m", r.config.m},
                        {"ell", row.ell},
                        {"trials", row.trials},
                        {"successes", row.successes},
                        {"p_hat", row.p_hat},
                        {"ci_low", row.ci_low},
                        {"ci_high", row.ci_high},
                        {"seed", r.config.master_seed}});
  }
  return Json{{"config",
               Json{{"n", r.config.n},
                    {"m", r.config.m},
                    {"lengths", r.config.lengths},
                    {"trials", r.config.trials},
                    {"seed", r.config.master_seed},
                    {"confidence", r.config.confidence}}},
              {"rows", std::move(rows)}};
}

Json exact_probability_to_json(std::size_t n, std::size_t m, std::size_t ell,
                               const BigRational& p) {
  return Json{{"n", n},
              {"m", m},
              {"ell", ell},
              {"probability", to_string(p)},
              {"numerator", boost::multiprecision::numerator(p).str()},
              {"denominator", boost::multiprecision::denominator(p).str()},
              {"value", p.convert_to<double>()}};
}

std::string matrix_to_text(const IntMatrix& m) {
  if (m.size() == 0) return "(" + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " empty)\n";
  std::ostringstream os;
  os << m << '\n';
  return os.str();
}

std::string smith_to_text(const SmithDecomposition<BigInt>& s) {
  std::ostringstream os;
  os << "rank: " << s.rank() << '\n'
     << "invariant factors: " << join_integers(s.invariant_factors) << '\n'
     << "elementary operations: " << s.op_log.size() << '\n'
     << "U =\n" << matrix_to_text(s.U)
     << "D =\n" << matrix_to_text(s.D)
     << "V =\n" << matrix_to_text(s.V);
  return os.str();
}

std::string normalized_to_text(const NormalizedPresentation& np) {
  const auto& names = np.presentation.generator_names();
  const auto new_names = primed(names);
  std::ostringstream os;
  os << "normalized presentation: " << to_angle_form(np.presentation) << '\n'
     << "invariant factors: " << join_integers(np.snf.invariant_factors) << '\n'
     << "elementary operations: " << np.snf.op_log.size() << '\n'
     << "old generators in new:\n";
  for (std::size_t i = 0; i < names.size(); ++i) {
    os << "  " << names[i] << " = " << render(np.iso.forward[i], new_names) << '\n';
  }
  os << "new generators in old:\n";
  for (std::size_t i = 0; i < names.size(); ++i) {
    os << "  " << new_names[i] << " = " << render(np.iso.backward[i], names) << '\n';
  }
  os << "relator length (total/max): " << np.lengths_before.total << "/" << np.lengths_before.max
     << " -> " << np.lengths_after.total << "/" << np.lengths_after.max << " (peak "
     << np.peak_relator_length << ")\n";
  return os.str();
}

std::string report_to_text(const StructureReport& r, const Presentation& p) {
  const auto& names = p.generator_names();
  std::ostringstream os;
  os << "presentation: " << to_angle_form(p) << '\n'
     << "generators n = " << r.generators << ", relators m = " << r.relators << '\n'
     << "relation matrix rank: " << r.matrix_rank << (r.full_rank ? " (full rank)" : " (not full rank)")
     << '\n';
  if (r.deficiency_defined) {
    os << "deficiency: " << r.deficiency << '\n';
  } else {
    os << "deficiency: undefined (|A| - |R| = " << r.deficiency << ")\n";
  }
  os << "invariant factors: " << join_integers(r.invariant_factors) << '\n'
     << "abelianization: Z^" << r.abelianization.free_rank;
  for (const auto& t : r.abelianization.torsion) os << " x Z/" << t;
  os << '\n';
  if (r.full_rank) {
    os << "free metabelian subgroup H: rank " << r.h_rank;
    if (r.h_basis) os << ", basis {" << join_words(*r.h_basis, names) << "}";
    os << '\n';
    if (r.k_generators) {
      os << "virtually abelian subgroup K: generated by {" << join_words(*r.k_generators, names)
         << "}\n";
    }
    if (r.virtually_abelian) os << "G is virtually abelian\n";
  }
  os << "Diophantine problem: " << to_string(r.diophantine) << '\n';
  if (r.direct_decomposition) os << "direct decompositions: " << *r.direct_decomposition << '\n';
  for (const auto& note : r.notes) os << "note: " << note << '\n';
  return os.str();
}

std::string experiment_to_text(const ExperimentResult& r) {
  std::ostringstream os;
  os << "full-rank probability, n = " << r.config.n << ", m = " << r.config.m << ", "
     << r.config.trials << " trials per length, seed " << r.config.master_seed << ", "
     << format_double(r.config.confidence * 100) << "% Wilson intervals\n";
  for (const auto& row : r.rows) {
    os << "  ell = " << row.ell << ": " << row.successes << "/" << row.trials
       << "  p_hat = " << format_double(row.p_hat) << "  [" << format_double(row.ci_low) << ", "
       << format_double(row.ci_high) << "]\n";
  }
  return os.str();
}

std::string experiment_to_csv(const ExperimentResult& r) {
  std::string out = "n,m,ell,trials,successes,p_hat,ci_low,ci_high,seed\n";
  for (const auto& row : r.rows) {
    out += std::to_string(r.config.n) + ',' + std::to_string(r.config.m) + ',' +
           std::to_string(row.ell) + ',' + std::to_string(row.trials) + ',' +
           std::to_string(row.successes) + ',' + format_double(row.p_hat) + ',' +
           format_double(row.ci_low) + ',' + format_double(row.ci_high) + ',' +
           std::to_string(r.config.master_seed) + '\n';
  }
  return out;
}

std::string format_double(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

}  // namespace metab
