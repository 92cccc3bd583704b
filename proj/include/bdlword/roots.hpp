#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <vector>

namespace bdlword {

struct LocatedRoot {
  std::complex<double> value;
  double radius = 0.0;  // a posteriori inclusion radius
  bool converged = true;
};

namespace detail {

inline std::complex<double> horner(const std::vector<double>& coeffs,
                                   std::complex<double> z) {
  std::complex<double> acc(0.0, 0.0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
  return acc;
}

// Running bound on the evaluation roundoff of Horner's scheme.
inline double horner_error_bound(const std::vector<double>& coeffs, double az) {
  double acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
    acc = acc * az + std::abs(*it);
  return acc * static_cast<double>(2 * coeffs.size()) *
         std::numeric_limits<double>::epsilon();
}

}  // namespace detail

/// Locate all complex roots of a monic polynomial (ascending coefficients)
/// by Durand-Kerner simultaneous iteration. Each returned disk
/// |z - value| <= radius is a Weierstrass inclusion disk: for simple,
/// well-separated roots every disk contains exactly one root.
inline std::vector<LocatedRoot> find_roots_monic(const std::vector<double>& coeffs) {
  const int n = static_cast<int>(coeffs.size()) - 1;
  if (n < 1 || coeffs.back() != 1.0)
    throw std::invalid_argument("root finder expects a monic polynomial of degree >= 1");
  if (n == 1) return {{std::complex<double>(-coeffs[0], 0.0), 0.0, true}};

  // Cauchy bound on root moduli.
  double bound = 0.0;
  for (int i = 0; i < n; ++i) bound = std::max(bound, std::abs(coeffs[i]));
  bound += 1.0;

  // Deterministic non-symmetric start: powers of a fixed complex seed.
  std::vector<std::complex<double>> z(static_cast<std::size_t>(n));
  const std::complex<double> seed(0.4, 0.9);
  std::complex<double> acc(1.0, 0.0);
  for (int i = 0; i < n; ++i) {
    acc *= seed;
    z[static_cast<std::size_t>(i)] = acc * bound;
  }

  bool converged = false;
  for (int iter = 0; iter < 500 && !converged; ++iter) {
    double max_step = 0.0;
    for (int i = 0; i < n; ++i) {
      std::complex<double> denom(1.0, 0.0);
      for (int j = 0; j < n; ++j)
        if (j != i) denom *= z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)];
      if (denom == std::complex<double>(0.0, 0.0)) {
        z[static_cast<std::size_t>(i)] += std::complex<double>(1e-8, 1e-8);
        max_step = 1.0;
        continue;
      }
      std::complex<double> w =
          detail::horner(coeffs, z[static_cast<std::size_t>(i)]) / denom;
      z[static_cast<std::size_t>(i)] -= w;
      max_step = std::max(max_step,
                          std::abs(w) / (1.0 + std::abs(z[static_cast<std::size_t>(i)])));
    }
    if (max_step < 8 * std::numeric_limits<double>::epsilon()) converged = true;
  }

  // Real coefficients: snap conjugate drift so real roots come out real.
  for (auto& zi : z)
    if (std::abs(zi.imag()) < 1e-12 * (1.0 + std::abs(zi.real())))
      zi = std::complex<double>(zi.real(), 0.0);

  std::vector<LocatedRoot> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    std::complex<double> zi = z[static_cast<std::size_t>(i)];
    if (!std::isfinite(zi.real()) || !std::isfinite(zi.imag())) {
      out[static_cast<std::size_t>(i)] = {std::complex<double>(0.0, 0.0),
                                          std::numeric_limits<double>::infinity(), false};
      continue;
    }
    double denom_abs = 1.0;
    for (int j = 0; j < n; ++j)
      if (j != i) denom_abs *= std::abs(zi - z[static_cast<std::size_t>(j)]);
    double pz = std::abs(detail::horner(coeffs, zi));
    double err = detail::horner_error_bound(coeffs, std::abs(zi));
    double radius = denom_abs > 0.0 && std::isfinite(denom_abs)
                        ? static_cast<double>(n) * (pz + err) / denom_abs
                        : std::numeric_limits<double>::infinity();
    out[static_cast<std::size_t>(i)] = {zi, radius, converged && std::isfinite(radius)};
  }
  std::sort(out.begin(), out.end(), [](const LocatedRoot& a, const LocatedRoot& b) {
    double ma = std::abs(a.value), mb = std::abs(b.value);
    if (ma != mb) return ma > mb;
    if (a.value.real() != b.value.real()) return a.value.real() > b.value.real();
    return a.value.imag() > b.value.imag();
  });
  return out;
}

}  // namespace bdlword
