#pragma once

// Shared fixtures and independent oracles for the test suites. The oracles
// deliberately recompute expected values through different algorithms than
// the library (letter counting, Bareiss determinants, direct image
// iteration) so the tests do not certify an implementation against itself.

#include <map>
#include <random>
#include <string>
#include <vector>

#include "bdlword/bdlword.hpp"

namespace testsupport {

using namespace bdlword;

inline std::mt19937_64 seeded_rng(std::uint64_t seed = 0) { return std::mt19937_64(seed); }

inline FiniteWord random_word(const Alphabet& alphabet, std::size_t max_len,
                              std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> len_dist(0, max_len);
  std::uniform_int_distribution<int> letter_dist(0, alphabet.size() - 1);
  std::vector<std::uint8_t> symbols(len_dist(rng));
  for (auto& s : symbols) s = static_cast<std::uint8_t>(letter_dist(rng));
  return FiniteWord(alphabet, std::move(symbols));
}

// Oracle: Parikh vector by counting characters in the rendered string.
inline ParikhVector counted_parikh(const FiniteWord& w) {
  std::string text = w.str();
  ParikhVector counts(static_cast<std::size_t>(w.alphabet().size()));
  for (int a = 0; a < w.alphabet().size(); ++a) {
    long long c = 0;
    for (char ch : text)
      if (ch == w.alphabet().letter(a)) ++c;
    counts[static_cast<std::size_t>(a)] = c;
  }
  return counts;
}

// Oracle: determinant by fraction-free Bareiss elimination.
inline BigInt bareiss_det(IntMatrix m) {
  if (!m.square()) throw std::invalid_argument("determinant of non-square matrix");
  const int d = m.rows();
  if (d == 0) return 1;
  BigInt sign = 1, prev = 1;
  for (int k = 0; k < d - 1; ++k) {
    if (m.at(k, k) == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < d; ++i)
        if (m.at(i, k) != 0) { swap_row = i; break; }
      if (swap_row < 0) return 0;
      for (int j = 0; j < d; ++j) std::swap(m.at(k, j), m.at(swap_row, j));
      sign = -sign;
    }
    for (int i = k + 1; i < d; ++i)
      for (int j = k + 1; j < d; ++j) {
        BigInt num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        m.at(i, j) = num / prev;  // division exact by Bareiss
      }
    prev = m.at(k, k);
  }
  return sign * m.at(d - 1, d - 1);
}

// Oracle: characteristic polynomial via det(xI - M) evaluated at d+1 integer
// points and Lagrange-interpolated over the rationals.
inline IntPoly interpolated_char_poly(const IntMatrix& m) {
  const int d = m.rows();
  std::vector<BigRational> xs, ys;
  for (int t = 0; t <= d; ++t) {
    IntMatrix shifted(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        shifted.at(i, j) = (i == j ? BigInt(t) : BigInt(0)) - m.at(i, j);
    xs.emplace_back(t);
    ys.emplace_back(bareiss_det(shifted));
  }
  // Lagrange interpolation, coefficients collected exactly.
  std::vector<BigRational> coeffs(static_cast<std::size_t>(d + 1));
  for (int i = 0; i <= d; ++i) {
    std::vector<BigRational> basis{1};  // polynomial prod_{j != i} (x - x_j)
    BigRational denom = 1;
    for (int j = 0; j <= d; ++j) {
      if (j == i) continue;
      denom *= xs[static_cast<std::size_t>(i)] - xs[static_cast<std::size_t>(j)];
      std::vector<BigRational> next(basis.size() + 1);
      for (std::size_t k = 0; k < basis.size(); ++k) {
        next[k + 1] += basis[k];
        next[k] -= basis[k] * xs[static_cast<std::size_t>(j)];
      }
      basis = std::move(next);
    }
    for (std::size_t k = 0; k < basis.size(); ++k)
      coeffs[k] += ys[static_cast<std::size_t>(i)] * basis[k] / denom;
  }
  IntPoly out(static_cast<std::size_t>(d + 1));
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (boost::multiprecision::denominator(coeffs[k]) != 1)
      throw std::logic_error("interpolated characteristic polynomial not integral");
    out[k] = boost::multiprecision::numerator(coeffs[k]);
  }
  return out;
}

// Oracle: prefix of the one-sided fixed point by naive repeated application
// of psi^power to the starting letter.
inline std::string naive_fixed_point_prefix(const Substitution& s, const SeedPair& seed,
                                            std::size_t len) {
  FiniteWord w(s.alphabet(), {seed.a});
  while (w.size() < len) {
    FiniteWord next = w;
    for (int i = 0; i < seed.power; ++i) next = s.apply(next);
    if (next.size() <= w.size())
      throw std::logic_error("fixed point prefix does not grow");
    w = next;
  }
  return w.str().substr(0, len);
}

// The hand-made bi-infinite word ...CBCBCB|CBACC... used in the geometric
// examples (alphabet ABC, lengths indexed A, B, C).
inline Window example_word_window() {
  return Window::from_strings(Alphabet("ABC"), "CBCBCB", "CBACC");
}

// Substitution whose eigenvalues all exceed 1 in modulus: a -> aaab, b -> bab
// has incidence [[3,1],[1,2]] with spectrum (5 +- sqrt(5))/2.
inline const Substitution& expansive_example() {
  static const Substitution s = Substitution::from_rules(Alphabet("ab"), {"aaab", "bab"});
  return s;
}

// Non-primitive substitution with both eigenvalues above 1: a -> aa, b -> bb.
inline const Substitution& decoupled_example() {
  static const Substitution s = Substitution::from_rules(Alphabet("ab"), {"aa", "bb"});
  return s;
}

// Tribonacci: a -> ab, b -> ac, c -> a; one expanding eigenvalue and a
// complex contracting pair, so the candidate normal space is 2-dimensional.
inline const Substitution& tribonacci_example() {
  static const Substitution s =
      Substitution::from_rules(Alphabet("abc"), {"ab", "ac", "a"});
  return s;
}

}  // namespace testsupport
