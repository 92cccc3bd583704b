#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace bdlword {

// Exact arithmetic everywhere the combinatorics demands it: incidence-matrix
// powers outgrow 64-bit machine words after a handful of iterations.
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline double to_double(const BigInt& v) { return v.convert_to<double>(); }
inline double to_double(const BigRational& v) { return v.convert_to<double>(); }

template <typename Scalar>
Scalar scalar_from_bigint(const BigInt& v);

template <>
inline double scalar_from_bigint<double>(const BigInt& v) {
  return to_double(v);
}

template <>
inline BigRational scalar_from_bigint<BigRational>(const BigInt& v) {
  return BigRational(v);
}

template <>
inline BigInt scalar_from_bigint<BigInt>(const BigInt& v) {
  return v;
}

}  // namespace bdlword
