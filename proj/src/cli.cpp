#include "metab/cli.hpp"

#include "metab/errors.hpp"
#include "metab/serialize.hpp"

#include "CLI11.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace metab {

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string trimmed(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r\n") - b + 1);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Inline text is recognized by its first character; anything else is a path.
std::string load(const std::string& arg, const std::string& inline_openers) {
  const std::string t = trimmed(arg);
  if (!t.empty() && inline_openers.find(t.front()) != std::string::npos) return t;
  if (!std::filesystem::exists(arg)) throw InputError("no such file '" + arg + "'");
  return read_file(arg);
}

std::vector<std::size_t> parse_lengths(const std::string& s) {
  std::vector<std::size_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trimmed(item);
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
      throw CLI::ValidationError("--lengths", "expected a comma-separated list of positive integers");
    }
    out.push_back(std::stoul(item));
  }
  if (out.empty()) throw CLI::ValidationError("--lengths", "empty list");
  return out;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finitely presented metabelian groups: relation matrices, Smith normal form, "
               "structure reports and full-rank genericity experiments",
               "metab"};
  app.require_subcommand(1);

  std::string input;
  std::string format = "text";
  std::size_t max_word_length = kDefaultMaxWordLength;

  auto* analyze = app.add_subcommand("analyze", "Structure report for a presentation");
  auto* normalize = app.add_subcommand("normalize", "Smith-normal-form presentation with isomorphism");
  for (auto* sub : {analyze, normalize}) {
    sub->add_option("input", input, "Presentation file, or inline \"< gens | relators >\"")->required();
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--limit-word-length", max_word_length, "Ceiling on relator and image length");
  }

  auto* snf = app.add_subcommand("snf", "Smith normal form of an integer matrix");
  bool with_minors = false;
  Index max_minor_dim = 6;
  snf->add_option("input", input, "Matrix JSON file, or inline JSON")->required();
  snf->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  snf->add_flag("--minors", with_minors, "Also report determinantal divisors (minor-gcd oracle)");
  snf->add_option("--limit-minor-dim", max_minor_dim, "Largest min(rows, cols) for --minors");

  auto* experiment = app.add_subcommand("experiment", "Monte Carlo full-rank probability");
  ExperimentConfig cfg;
  std::string lengths = "4,16,64,256";
  unsigned threads = 1;
  experiment->add_option("--n", cfg.n, "Number of generators")->check(CLI::PositiveNumber);
  experiment->add_option("--m", cfg.m, "Number of relators")->check(CLI::PositiveNumber);
  experiment->add_option("--lengths", lengths, "Comma-separated relator lengths");
  experiment->add_option("--trials", cfg.trials, "Trials per length")->check(CLI::PositiveNumber);
  experiment->add_option("--seed", cfg.master_seed, "Master seed");
  experiment->add_option("--confidence", cfg.confidence, "Wilson interval confidence")
      ->check(CLI::Range(0.0, 1.0));
  experiment->add_option("--threads", threads, "Worker threads (0 = all cores)");
  experiment->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  auto* exact = app.add_subcommand("exact-prob", "Exact full-rank probability for small n, m, ell");
  std::size_t en = 0;
  std::size_t em = 0;
  std::size_t eell = 0;
  ExactGuards guards;
  exact->add_option("n", en, "Generators")->required();
  exact->add_option("m", em, "Relators")->required();
  exact->add_option("ell", eell, "Relator length")->required();
  exact->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  exact->add_option("--max-n", guards.max_n, "Guard on n");
  exact->add_option("--max-m", guards.max_m, "Guard on m");
  exact->add_option("--max-ell", guards.max_ell, "Guard on ell");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  if (!argv.empty()) argv.pop_back();  // program name
  try {
    app.parse(argv);
    if (experiment->parsed()) cfg.lengths = parse_lengths(lengths);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "metab: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (analyze->parsed() || normalize->parsed()) {
      const Presentation p = parse_presentation(load(input, "<"), max_word_length);
      const TietzeLimits limits{max_word_length};
      if (analyze->parsed()) {
        const StructureReport r = classify(p, limits);
        if (format == "json") emit(out, report_to_json(r, p));
        else out << report_to_text(r, p);
      } else {
        const NormalizedPresentation np = normalize_to_snf(p, limits);
        if (format == "json") emit(out, normalized_to_json(np));
        else out << normalized_to_text(np);
      }
    } else if (snf->parsed()) {
      Json j;
      try {
        j = Json::parse(load(input, "{["));
      } catch (const Json::parse_error& e) {
        throw InputError(std::string("invalid matrix JSON: ") + e.what());
      }
      IntMatrix m;
      try {
        m = matrix_from_json(j);
      } catch (const std::exception& e) {
        throw InputError(std::string("invalid matrix: ") + e.what());
      }
      const auto s = smith_normal_form(m);
      std::optional<std::vector<BigInt>> minors;
      if (with_minors) minors = determinantal_divisors(m, max_minor_dim);
      if (format == "json") {
        Json js = smith_to_json(s);
        if (minors) {
          Json arr = Json::array();
          for (const auto& d : *minors) arr.push_back(integer_to_json(d));
          js["determinantal_divisors"] = std::move(arr);
        }
        emit(out, js);
      } else {
        out << smith_to_text(s);
        if (minors) {
          out << "determinantal divisors:";
          for (const auto& d : *minors) out << ' ' << d;
          out << '\n';
        }
      }
    } else if (experiment->parsed()) {
      const auto r = estimate_full_rank_probability(cfg, threads);
      if (format == "json") emit(out, experiment_to_json(r));
      else if (format == "csv") out << experiment_to_csv(r);
      else out << experiment_to_text(r);
    } else if (exact->parsed()) {
      const BigRational p = exact_full_rank_probability(en, em, eell, guards);
      if (format == "json") {
        emit(out, exact_probability_to_json(en, em, eell, p));
      } else if (format == "csv") {
        out << "n,m,ell,probability,value\n"
            << en << ',' << em << ',' << eell << ',' << to_string(p) << ','
            << format_double(p.convert_to<double>()) << '\n';
      } else {
        out << to_string(p) << '\n';
      }
    }
  } catch (const ParseError& e) {
    err << "metab: parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const InputError& e) {
    err << "metab: " << e.what() << '\n';
    return kExitParse;
  } catch (const LimitError& e) {
    err << "metab: limit exceeded: " << e.what() << '\n';
    return kExitLimit;
  } catch (const std::invalid_argument& e) {
    err << "metab: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace metab
