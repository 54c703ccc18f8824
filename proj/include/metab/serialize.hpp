#pragma once

#include "metab/classify.hpp"
#include "metab/randgen.hpp"
#include "metab/tietze.hpp"

#include "json.hpp"

#include <string>

namespace metab {

using Json = nlohmann::ordered_json;

/// Integers inside the int64 range become JSON numbers, others decimal strings.
Json integer_to_json(const BigInt& x);
/// Accepts a JSON integer or a decimal string.
BigInt integer_from_json(const Json& j);

/// {"rows": r, "cols": c, "entries": [[...], ...]}
Json matrix_to_json(const IntMatrix& m);
/// Also accepts a bare array of rows. Throws std::invalid_argument.
IntMatrix matrix_from_json(const Json& j);

Json op_to_json(const ElementaryOp<BigInt>& op);
ElementaryOp<BigInt> op_from_json(const Json& j);

Json smith_to_json(const SmithDecomposition<BigInt>& s);
Json normalized_to_json(const NormalizedPresentation& np);
Json report_to_json(const StructureReport& r, const Presentation& p);
Json experiment_to_json(const ExperimentResult& r);
Json exact_probability_to_json(std::size_t n, std::size_t m, std::size_t ell,
                               const BigRational& p);

std::string matrix_to_text(const IntMatrix& m);
std::string smith_to_text(const SmithDecomposition<BigInt>& s);
std::string normalized_to_text(const NormalizedPresentation& np);
std::string report_to_text(const StructureReport& r, const Presentation& p);
std::string experiment_to_text(const ExperimentResult& r);

/// Header n,m,ell,trials,successes,p_hat,ci_low,ci_high,seed; one row per
/// length.
std::string experiment_to_csv(const ExperimentResult& r);

/// Shortest decimal form that reads back to the same double.
std::string format_double(double x);

}  // namespace metab
