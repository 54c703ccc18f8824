#pragma once

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <Eigen/Core>

#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <type_traits>

namespace metab {

// Expression templates are disabled so that BigInt composes with Eigen's own
// expression machinery without surprises.
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;
using BigRational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                  boost::multiprecision::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<BigInt>;
using Index = Eigen::Index;

// Integer helpers that dispatch between builtin integers and BigInt.

template <typename Scalar>
Scalar abs_value(const Scalar& x) {
  if constexpr (std::is_integral_v<Scalar>) {
    return x < 0 ? -x : x;
  } else {
    return boost::multiprecision::abs(x);
  }
}

template <typename Scalar>
Scalar gcd_value(const Scalar& a, const Scalar& b) {
  if constexpr (std::is_integral_v<Scalar>) {
    return std::gcd(a, b);
  } else {
    return boost::multiprecision::gcd(a, b);
  }
}

inline std::optional<std::int64_t> to_int64(const BigInt& x) {
  if (x < std::numeric_limits<std::int64_t>::min() ||
      x > std::numeric_limits<std::int64_t>::max()) {
    return std::nullopt;
  }
  return x.convert_to<std::int64_t>();
}

inline std::string to_string(const BigInt& x) { return x.str(); }

inline std::string to_string(const BigRational& q) {
  if (boost::multiprecision::denominator(q) == 1) {
    return boost::multiprecision::numerator(q).str();
  }
  return boost::multiprecision::numerator(q).str() + "/" +
         boost::multiprecision::denominator(q).str();
}

}  // namespace metab
