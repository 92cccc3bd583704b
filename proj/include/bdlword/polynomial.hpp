#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bdlword/matrix.hpp"
#include "bdlword/numeric.hpp"

namespace bdlword {

/// Integer polynomial, coefficients in ascending degree order.
using IntPoly = std::vector<BigInt>;

inline void poly_trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int poly_degree(const IntPoly& p) {
  return static_cast<int>(p.size()) - 1;  // -1 for the zero polynomial
}

inline bool poly_is_monic(const IntPoly& p) {
  return !p.empty() && p.back() == 1;
}

inline IntPoly poly_add(const IntPoly& a, const IntPoly& b) {
  IntPoly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  poly_trim(out);
  return out;
}

inline IntPoly poly_sub(const IntPoly& a, const IntPoly& b) {
  IntPoly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  poly_trim(out);
  return out;
}

inline IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  poly_trim(out);
  return out;
}

inline IntPoly poly_scale(const IntPoly& a, const BigInt& c) {
  if (c == 0) return {};
  IntPoly out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * c;
  return out;
}

inline IntPoly poly_derivative(const IntPoly& p) {
  if (p.size() <= 1) return {};
  IntPoly out(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) out[i - 1] = p[i] * BigInt(i);
  return out;
}

template <typename T>
inline T poly_eval(const IntPoly& p, const T& x) {
  T acc{};
  for (auto it = p.rbegin(); it != p.rend(); ++it)
    acc = acc * x + scalar_from_bigint<T>(*it);
  return acc;
}

/// Horner evaluation at a square matrix (exact).
inline IntMatrix poly_eval_matrix(const IntPoly& p, const IntMatrix& m) {
  const int d = m.rows();
  IntMatrix acc(d, d);
  for (auto it = p.rbegin(); it != p.rend(); ++it)
    acc = acc * m + IntMatrix::identity(d).scaled(*it);
  return acc;
}

/// Division by a monic divisor; returns nothing if the remainder is nonzero.
inline std::optional<IntPoly> poly_try_divide_monic(const IntPoly& num,
                                                    const IntPoly& den) {
  if (!poly_is_monic(den)) throw std::invalid_argument("divisor must be monic");
  IntPoly rem = num;
  poly_trim(rem);
  const int dd = poly_degree(den);
  if (poly_degree(rem) < dd) return rem.empty() ? std::optional<IntPoly>(IntPoly{}) : std::nullopt;
  IntPoly quot(static_cast<std::size_t>(poly_degree(rem) - dd + 1));
  for (int k = poly_degree(rem) - dd; k >= 0; --k) {
    BigInt c = rem[static_cast<std::size_t>(k + dd)];
    if (c == 0) continue;
    quot[static_cast<std::size_t>(k)] = c;
    for (int i = 0; i <= dd; ++i)
      rem[static_cast<std::size_t>(k + i)] -= c * den[static_cast<std::size_t>(i)];
  }
  poly_trim(rem);
  if (!rem.empty()) return std::nullopt;
  poly_trim(quot);
  return quot;
}

inline IntPoly poly_divide_exact_monic(const IntPoly& num, const IntPoly& den) {
  auto q = poly_try_divide_monic(num, den);
  if (!q) throw std::logic_error("polynomial division expected to be exact");
  return *q;
}

inline BigInt poly_content(const IntPoly& p) {
  BigInt g = 0;
  for (const auto& c : p) g = boost::multiprecision::gcd(g, c);
  return g;
}

inline IntPoly poly_primitive_part(IntPoly p) {
  poly_trim(p);
  if (p.empty()) return p;
  BigInt g = poly_content(p);
  if (p.back() < 0) g = -g;
  for (auto& c : p) c /= g;
  return p;
}

namespace detail {

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, computed in Z[x].
inline IntPoly poly_pseudo_rem(IntPoly a, const IntPoly& b) {
  poly_trim(a);
  const int db = poly_degree(b);
  if (db < 0) throw std::invalid_argument("pseudo-remainder by zero");
  const BigInt& lb = b.back();
  while (poly_degree(a) >= db) {
    const int k = poly_degree(a) - db;
    BigInt la = a.back();
    for (auto& c : a) c *= lb;
    for (int i = 0; i <= db; ++i)
      a[static_cast<std::size_t>(k + i)] -= la * b[static_cast<std::size_t>(i)];
    poly_trim(a);
  }
  return a;
}

}  // namespace detail

/// Gcd in Z[x] via a primitive pseudo-remainder sequence. When either input
/// is monic the result is monic (it divides a monic polynomial).
inline IntPoly poly_gcd(IntPoly a, IntPoly b) {
  a = poly_primitive_part(std::move(a));
  b = poly_primitive_part(std::move(b));
  if (a.empty()) return b;
  if (b.empty()) return a;
  if (poly_degree(a) < poly_degree(b)) std::swap(a, b);
  while (!b.empty()) {
    IntPoly r = poly_primitive_part(detail::poly_pseudo_rem(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  return poly_primitive_part(std::move(a));
}

/// Yun's squarefree decomposition of a monic polynomial:
/// p = prod factor^multiplicity with pairwise-coprime squarefree factors.
inline std::vector<std::pair<IntPoly, int>> poly_squarefree_decomposition(
    const IntPoly& p) {
  if (!poly_is_monic(p)) throw std::invalid_argument("squarefree decomposition needs a monic input");
  std::vector<std::pair<IntPoly, int>> out;
  if (poly_degree(p) < 1) return out;
  IntPoly dp = poly_derivative(p);
  IntPoly g = poly_gcd(p, dp);
  if (poly_degree(g) == 0) {
    out.emplace_back(p, 1);
    return out;
  }
  IntPoly b = poly_divide_exact_monic(p, g);
  IntPoly c = poly_divide_exact_monic(dp, g);
  IntPoly d = poly_sub(c, poly_derivative(b));
  for (int i = 1; poly_degree(b) > 0; ++i) {
    IntPoly a = poly_gcd(b, d);
    if (poly_degree(a) > 0) out.emplace_back(a, i);
    b = poly_divide_exact_monic(b, a);
    c = poly_divide_exact_monic(d, a);
    d = poly_sub(c, poly_derivative(b));
  }
  return out;
}

/// x^deg(p) * p(1/x): the polynomial whose roots are the reciprocals.
inline IntPoly poly_reciprocal(const IntPoly& p) {
  IntPoly out(p.rbegin(), p.rend());
  poly_trim(out);
  return out;
}

/// n-th cyclotomic polynomial, via Phi_n = (x^n - 1) / prod_{d|n, d<n} Phi_d.
inline const IntPoly& cyclotomic_polynomial(int n) {
  static std::map<int, IntPoly> cache;
  if (n < 1) throw std::invalid_argument("cyclotomic index must be >= 1");
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  IntPoly xn_minus_1(static_cast<std::size_t>(n + 1));
  xn_minus_1[0] = -1;
  xn_minus_1[static_cast<std::size_t>(n)] = 1;
  IntPoly acc = xn_minus_1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) acc = poly_divide_exact_monic(acc, cyclotomic_polynomial(d));
  return cache.emplace(n, std::move(acc)).first->second;
}

inline std::string poly_to_string(const IntPoly& p, const std::string& var = "x") {
  if (p.empty()) return "0";
  std::string out;
  for (int k = poly_degree(p); k >= 0; --k) {
    const BigInt& c = p[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    BigInt a = boost::multiprecision::abs(c);
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    if (a != 1 || k == 0) out += a.str();
    if (k > 0) {
      if (a != 1) out += "*";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace bdlword
