#pragma once

#include <charconv>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bdlword/bdl.hpp"
#include "bdlword/fixed_point.hpp"

namespace bdlword {

/// Scan CSV: one "n,value" row per position, n ascending over [-left, right].
/// Integer functionals are written as exact decimal integers.
inline void write_scan_csv(std::ostream& os, const Window& window,
                           const std::vector<BigInt>& f) {
  if (static_cast<int>(f.size()) != window.alphabet().size())
    throw std::invalid_argument("functional dimension does not match the alphabet");
  os << "n,f_dot_psi\n";
  std::vector<BigInt> left_vals(static_cast<std::size_t>(window.left_size()));
  BigInt s = 0;
  const auto& left = window.left_letters_reversed();
  for (std::int64_t i = 0; i < window.left_size(); ++i) {
    s -= f[left[static_cast<std::size_t>(i)]];
    left_vals[static_cast<std::size_t>(i)] = s;  // value at n = -(i+1)
  }
  for (std::int64_t i = window.left_size(); i >= 1; --i)
    os << -i << "," << left_vals[static_cast<std::size_t>(i - 1)].str() << "\n";
  s = 0;
  os << 0 << "," << 0 << "\n";
  const auto& right = window.right_letters();
  for (std::int64_t n = 0; n < window.right_size(); ++n) {
    s += f[right[static_cast<std::size_t>(n)]];
    os << (n + 1) << "," << s.str() << "\n";
  }
}

/// Reads a scan CSV back as (n, value) pairs, exact.
inline std::vector<std::pair<std::int64_t, BigInt>> read_scan_csv(std::istream& is) {
  std::vector<std::pair<std::int64_t, BigInt>> out;
  std::string line;
  if (!std::getline(is, line)) throw std::runtime_error("empty scan CSV");
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    auto comma = line.find(',');
    if (comma == std::string::npos) throw std::runtime_error("malformed scan CSV row: " + line);
    std::int64_t n = 0;
    auto [p, ec] = std::from_chars(line.data(), line.data() + comma, n);
    if (ec != std::errc() || p != line.data() + comma)
      throw std::runtime_error("malformed position in scan CSV row: " + line);
    out.emplace_back(n, BigInt(line.substr(comma + 1)));
  }
  return out;
}

/// Dyadic block maxima of |value| over a (n, value) series; block j covers
/// |n| in [2^j, 2^(j+1)).
inline std::vector<BigInt> block_maxima_of_series(
    const std::vector<std::pair<std::int64_t, BigInt>>& series) {
  std::int64_t n_abs_max = 0;
  for (const auto& [n, v] : series) n_abs_max = std::max(n_abs_max, n < 0 ? -n : n);
  detail::ScanAccumulator<BigInt> acc(n_abs_max);
  for (const auto& [n, v] : series) acc.feed(n, v);
  return acc.block_max;
}

/// Representation CSV: "n,x_n,deviation" rows with full double precision.
inline void write_representation_csv(std::ostream& os,
                                     const GeometricRepresentation<double>& rep) {
  auto devs = deviation_series(rep);
  os << "n,x_n,deviation\n";
  std::ostringstream fmt;
  fmt.precision(17);
  for (std::int64_t n = rep.n_min; n <= rep.n_max; ++n) {
    fmt.str("");
    fmt << n << "," << rep.x(n) << "," << devs[static_cast<std::size_t>(n - rep.n_min)];
    os << fmt.str() << "\n";
  }
}

}  // namespace bdlword
