#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "bdlword/fixed_point.hpp"
#include "bdlword/morphism.hpp"
#include "bdlword/word.hpp"

namespace bdlword {

// Built-in example substitutions used across the library, the CLI and the
// test suites.

/// A -> BBBCCC, B -> BACCB, C -> ABBBC. Primitive; spectrum
/// {2+sqrt(10), 2-sqrt(10), -1}, so exactly one eigenvalue has modulus 1.
/// Its fixed point admits no non-trivial lattice-like representation even
/// though the necessary spectral condition holds.
inline const Substitution& unit_eigenvalue_example() {
  static const Substitution s =
      Substitution::from_rules(Alphabet("ABC"), {"BBBCCC", "BACCB", "ABBBC"});
  return s;
}

/// A -> AABBBCCCC, B -> AAB, C -> AA. Primitive; one eigenvalue lies inside
/// the unit circle, so its fixed point has lattice-like representations.
inline const Substitution& contracting_eigenvalue_example() {
  static const Substitution s =
      Substitution::from_rules(Alphabet("ABC"), {"AABBBCCCC", "AAB", "AA"});
  return s;
}

/// The letter-erasing projection {A,B,C}* -> {A,B}* with C -> epsilon.
/// Composed with the contracting example it destroys every bounded direction.
inline const Morphism& letter_erasing_projection() {
  static const Morphism m =
      Morphism::from_rules(Alphabet("ABC"), Alphabet("AB"), {"A", "B", ""});
  return m;
}

/// Thue-Morse: a -> ab, b -> ba.
inline const Substitution& thue_morse() {
  static const Substitution s = Substitution::from_rules(Alphabet("ab"), {"ab", "ba"});
  return s;
}

/// Fibonacci: a -> ab, b -> a.
inline const Substitution& fibonacci() {
  static const Substitution s = Substitution::from_rules(Alphabet("ab"), {"ab", "a"});
  return s;
}

// ---------------------------------------------------------------------------
// Growth witnesses for the unit-eigenvalue example
// ---------------------------------------------------------------------------

/// The candidate normal of the unit-eigenvalue example in integer form:
/// the unique direction (up to scale) orthogonal to both expanding
/// eigenvectors.
inline std::vector<BigInt> witness_functional() { return {3, -1, 0}; }

/// Prefix of the unit-eigenvalue fixed point on which the candidate
/// functional provably reaches k + 2. The word itself is materialized only
/// on request (it grows like lambda_1^(2k)); the Parikh vector is always
/// computed exactly through incidence-matrix powers.
struct WitnessPrefix {
  int k = 0;
  std::optional<FiniteWord> word;
  ParikhVector parikh;

  BigInt length() const { return vec_sum(parikh); }
};

/// Builds the k-th witness prefix
///   psi^(2k)(BA) psi^(2k-1)(ABB) ... psi^2(BA) psi(ABB) BAC
/// of the unit-eigenvalue example. Expansion is feasible for k <= 4.
inline WitnessPrefix witness_prefix(int k, bool expand_word = false) {
  if (k < 0) throw std::invalid_argument("witness prefix index must be >= 0");
  const Substitution& s = unit_eigenvalue_example();
  const Alphabet& alphabet = s.alphabet();
  const int ia = alphabet.index_checked('A');
  const int ib = alphabet.index_checked('B');
  const int ic = alphabet.index_checked('C');

  WitnessPrefix out;
  out.k = k;

  // Psi(F_k) = sum_{i=0}^{2k} M^i (e_A + e_B) + sum_{i=1}^{k} M^(2i-1) e_B + e_C
  const IntMatrix& m = s.incidence();
  IntMatrix power = IntMatrix::identity(3);
  ParikhVector total(3);
  for (int i = 0; i <= 2 * k; ++i) {
    if (i > 0) power = power * m;
    ParikhVector col_a = power.column(ia);
    ParikhVector col_b = power.column(ib);
    total = vec_add(total, vec_add(col_a, col_b));
    if (i % 2 == 1 && i <= 2 * k - 1) total = vec_add(total, col_b);
  }
  ParikhVector e_c(3);
  e_c[static_cast<std::size_t>(ic)] = 1;
  out.parikh = vec_add(total, e_c);

  if (expand_word) {
    // psi^j images of all letters, memoized up to j = 2k
    std::vector<std::vector<FiniteWord>> images;
    images.push_back({FiniteWord::parse(alphabet, "A"), FiniteWord::parse(alphabet, "B"),
                      FiniteWord::parse(alphabet, "C")});
    for (int j = 1; j <= 2 * k; ++j) {
      std::vector<FiniteWord> next;
      for (const auto& w : images.back()) next.push_back(s.apply(w));
      images.push_back(std::move(next));
    }
    FiniteWord word(alphabet);
    for (int i = k; i >= 1; --i) {
      const auto& even = images[static_cast<std::size_t>(2 * i)];
      const auto& odd = images[static_cast<std::size_t>(2 * i - 1)];
      word = word + even[static_cast<std::size_t>(ib)] + even[static_cast<std::size_t>(ia)];
      word = word + odd[static_cast<std::size_t>(ia)] + odd[static_cast<std::size_t>(ib)] +
             odd[static_cast<std::size_t>(ib)];
    }
    word = word + FiniteWord::parse(alphabet, "BAC");
    out.word = std::move(word);
  }
  return out;
}

}  // namespace bdlword
