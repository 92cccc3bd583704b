#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bdlword/fixed_point.hpp"
#include "bdlword/morphism.hpp"
#include "bdlword/spectral.hpp"
#include "bdlword/word.hpp"

namespace bdlword {

// ---------------------------------------------------------------------------
// Classification
// ---------------------------------------------------------------------------

/// GUARANTEED: a non-trivial lattice-like representation exists (some
/// eigenvalue has modulus < 1). IMPOSSIBLE: none exists (all moduli > 1 and
/// the substitution is primitive). OPEN: neither criterion applies; this
/// includes the boundary case of an eigenvalue with modulus exactly 1.
enum class BdlClass { Guaranteed, Impossible, Open };

inline std::string to_string(BdlClass c) {
  switch (c) {
    case BdlClass::Guaranteed: return "GUARANTEED";
    case BdlClass::Impossible: return "IMPOSSIBLE";
    case BdlClass::Open: return "OPEN";
  }
  return "?";
}

struct BdlVerdict {
  BdlClass verdict = BdlClass::Open;
  SpectralReport spectrum;
  bool primitive = false;
  // The two spectral facts are reported separately and never merged:
  // modulus <= 1 somewhere (necessary condition), modulus < 1 somewhere
  // (sufficient condition).
  bool has_modulus_leq_1 = false;
  bool has_modulus_lt_1 = false;
  std::vector<std::string> notes;
};

inline BdlVerdict classify(const Substitution& s, double tol = 1e-9) {
  BdlVerdict out;
  out.spectrum = eigen_classify(s.incidence(), tol);
  out.primitive = is_primitive(s.incidence());
  out.has_modulus_lt_1 = out.spectrum.any_of(ModulusClass::LT1);
  out.has_modulus_leq_1 =
      out.has_modulus_lt_1 || out.spectrum.any_of(ModulusClass::EQ1_CERTIFIED);

  if (out.has_modulus_lt_1) {
    out.verdict = BdlClass::Guaranteed;
    return out;
  }
  if (out.spectrum.all_of(ModulusClass::GT1)) {
    if (out.primitive) {
      out.verdict = BdlClass::Impossible;
    } else {
      out.verdict = BdlClass::Open;
      out.notes.push_back(
          "all eigenvalue moduli exceed 1 but the substitution is not primitive; "
          "the impossibility argument needs primitivity");
    }
    return out;
  }
  out.verdict = BdlClass::Open;
  if (out.spectrum.any_of(ModulusClass::BOUNDARY_UNCERTAIN))
    out.notes.push_back("some eigenvalue moduli could not be certified against 1");
  if (out.spectrum.any_of(ModulusClass::EQ1_CERTIFIED))
    out.notes.push_back(
        "minimal modulus is exactly 1: the necessary condition holds, the "
        "sufficient one does not; boundedness is undecided at this boundary");
  return out;
}

// ---------------------------------------------------------------------------
// Geometric representations
// ---------------------------------------------------------------------------

/// Point set x_n = lengths . Psi_n over a window, together with the lattice
/// parameter eta it is compared against. Scalar is double for ordinary use
/// and an exact rational type in the exactness tests.
template <typename Scalar>
struct GeometricRepresentation {
  std::vector<Scalar> lengths;  // per-letter gap lengths, all positive
  Scalar eta{};
  std::int64_t n_min = 0, n_max = 0;
  std::vector<Scalar> points;  // x_n at index n - n_min

  const Scalar& x(std::int64_t n) const {
    if (n < n_min || n > n_max) throw std::out_of_range("representation point index");
    return points[static_cast<std::size_t>(n - n_min)];
  }
};

template <typename Scalar>
GeometricRepresentation<Scalar> representation_from_lengths(const ParikhPath& path,
                                                            std::vector<Scalar> lengths,
                                                            Scalar eta) {
  if (static_cast<int>(lengths.size()) != path.dim())
    throw std::invalid_argument("one length per letter required");
  for (const auto& l : lengths)
    if (!(l > Scalar(0))) throw std::invalid_argument("lengths must be positive");
  GeometricRepresentation<Scalar> rep;
  rep.lengths = std::move(lengths);
  rep.eta = std::move(eta);
  rep.n_min = path.n_min();
  rep.n_max = path.n_max();
  rep.points.reserve(static_cast<std::size_t>(rep.n_max - rep.n_min + 1));
  for (std::int64_t n = rep.n_min; n <= rep.n_max; ++n) {
    const ParikhVector& psi = path.psi(n);
    Scalar x{};
    for (std::size_t i = 0; i < psi.size(); ++i)
      x += rep.lengths[i] * scalar_from_bigint<Scalar>(psi[i]);
    rep.points.push_back(std::move(x));
  }
  return rep;
}

/// Representation built from a unit normal h: eta = 1 + max |h_a| and
/// ell_a = h_a + eta, so ell - eta * (1,...,1) = h and the deviation from the
/// lattice eta Z is exactly |h . Psi_n|. Rejects constant h (the resulting
/// representation would be the trivial lattice) and non-unit h.
template <typename Scalar>
GeometricRepresentation<Scalar> representation_from_normal(const ParikhPath& path,
                                                           const std::vector<Scalar>& h,
                                                           double tol = 1e-9) {
  if (static_cast<int>(h.size()) != path.dim())
    throw std::invalid_argument("normal dimension does not match the alphabet");
  bool nontrivial = false;
  for (std::size_t i = 1; i < h.size(); ++i)
    if (h[i] != h[0]) nontrivial = true;
  if (!nontrivial)
    throw std::invalid_argument("normal has all components equal: yields the trivial representation");
  Scalar norm2{};
  for (const auto& c : h) norm2 += c * c;
  Scalar dev = norm2 - Scalar(1);
  if (dev < Scalar(0)) dev = -dev;
  if (!(dev <= Scalar(3) * Scalar(tol)))
    throw std::invalid_argument("normal must have unit euclidean norm");

  Scalar max_abs{};
  for (const auto& c : h) {
    Scalar a = c < Scalar(0) ? -c : c;
    if (a > max_abs) max_abs = a;
  }
  Scalar eta = Scalar(1) + max_abs;
  std::vector<Scalar> lengths(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) lengths[i] = h[i] + eta;
  return representation_from_lengths<Scalar>(path, std::move(lengths), std::move(eta));
}

/// Per-position deviations |x_n - eta n| from the lattice eta Z; the bounded
/// distance bijection x_n -> eta n is implicit.
template <typename Scalar>
std::vector<Scalar> deviation_series(const GeometricRepresentation<Scalar>& rep) {
  std::vector<Scalar> out;
  out.reserve(rep.points.size());
  for (std::int64_t n = rep.n_min; n <= rep.n_max; ++n) {
    Scalar dev = rep.x(n) - rep.eta * scalar_from_bigint<Scalar>(BigInt(n));
    if (dev < Scalar(0)) dev = -dev;
    out.push_back(std::move(dev));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Boundedness scans
// ---------------------------------------------------------------------------

enum class ScanVerdict { BoundedSoFar, Growing };

inline std::string to_string(ScanVerdict v) {
  return v == ScanVerdict::Growing ? "GROWING" : "BOUNDED_SO_FAR";
}

/// Dyadic-block summary of |f . Psi_n| over a window. Block j holds the
/// maximum over positions with |n| in [2^j, 2^(j+1)), pooling both sides of
/// the delimiter. The growth verdict is a heuristic, hence "so far".
struct ScanReport {
  std::vector<double> normal;
  std::optional<std::vector<BigInt>> exact_normal;
  std::int64_t left = 0, right = 0;  // scanned range is n in [-left, right]
  double max_abs = 0.0;
  std::optional<BigInt> exact_max_abs;
  std::vector<double> block_max;
  std::optional<std::vector<BigInt>> exact_block_max;
  ScanVerdict verdict = ScanVerdict::BoundedSoFar;
  bool exact = false;
  double float_error_bound = 0.0;  // rounding bound when not exact
};

namespace detail {

inline int dyadic_block_count(std::int64_t n_abs_max) {
  int blocks = 0;
  while ((std::int64_t{1} << blocks) <= n_abs_max) ++blocks;
  return blocks;  // block j covers [2^j, 2^(j+1)), j = 0..blocks-1
}

// Growth heuristic over dyadic block maxima: strict growth across both of
// the last two 5-block spans plus a ratio of at least 4/3 over the combined
// span. Saturating tails (bounded functionals, including real-valued ones
// converging to their sup) fail at least one condition; the logarithmic
// growth of the unit-modulus counterexample passes both.
template <typename Num>
ScanVerdict growth_verdict(const std::vector<Num>& m) {
  const int j = static_cast<int>(m.size()) - 1;
  if (j < 10) return ScanVerdict::BoundedSoFar;
  const Num& last = m[static_cast<std::size_t>(j)];
  const Num& mid = m[static_cast<std::size_t>(j - 5)];
  const Num& base = m[static_cast<std::size_t>(j - 10)];
  if (last > mid && mid > base && Num(3) * last >= Num(4) * base)
    return ScanVerdict::Growing;
  return ScanVerdict::BoundedSoFar;
}

template <typename Num>
struct ScanAccumulator {
  std::vector<Num> block_max;
  Num max_abs{};

  explicit ScanAccumulator(std::int64_t n_abs_max)
      : block_max(static_cast<std::size_t>(dyadic_block_count(n_abs_max))) {}

  void feed(std::int64_t n, const Num& value) {
    Num a = value < Num(0) ? Num(-value) : value;
    if (a > max_abs) max_abs = a;
    std::int64_t n_abs = n < 0 ? -n : n;
    if (n_abs == 0) return;
    int j = 0;
    while ((std::int64_t{1} << (j + 1)) <= n_abs) ++j;
    if (a > block_max[static_cast<std::size_t>(j)])
      block_max[static_cast<std::size_t>(j)] = a;
  }
};

template <typename Num, typename FromLetter>
void scan_window(const Window& window, FromLetter&& weight_of,
                 ScanAccumulator<Num>& acc) {
  Num s{};
  acc.feed(0, s);
  const auto& right = window.right_letters();
  for (std::int64_t n = 0; n < window.right_size(); ++n) {
    s += weight_of(right[static_cast<std::size_t>(n)]);
    acc.feed(n + 1, s);
  }
  s = Num{};
  const auto& left = window.left_letters_reversed();
  for (std::int64_t i = 0; i < window.left_size(); ++i) {
    s -= weight_of(left[static_cast<std::size_t>(i)]);
    acc.feed(-(i + 1), s);
  }
}

}  // namespace detail

/// Exact integer scan of f . Psi_n over the whole window.
inline ScanReport scan_boundedness(const Window& window, const std::vector<BigInt>& f) {
  if (static_cast<int>(f.size()) != window.alphabet().size())
    throw std::invalid_argument("functional dimension does not match the alphabet");
  ScanReport report;
  report.exact = true;
  report.exact_normal = f;
  report.normal.reserve(f.size());
  for (const auto& c : f) report.normal.push_back(to_double(c));
  report.left = window.left_size();
  report.right = window.right_size();

  std::int64_t n_abs_max = std::max(report.left, report.right);
  detail::ScanAccumulator<BigInt> acc(n_abs_max);
  detail::scan_window(window, [&f](std::uint8_t a) -> const BigInt& { return f[a]; }, acc);

  report.exact_max_abs = acc.max_abs;
  report.max_abs = to_double(acc.max_abs);
  report.exact_block_max = acc.block_max;
  report.block_max.reserve(acc.block_max.size());
  for (const auto& b : acc.block_max) report.block_max.push_back(to_double(b));
  report.verdict = detail::growth_verdict(acc.block_max);
  return report;
}

/// Floating-point scan for non-integer functionals; the report carries an
/// a priori rounding bound N * d * max|f| * ulp.
inline ScanReport scan_boundedness(const Window& window, const std::vector<double>& f) {
  if (static_cast<int>(f.size()) != window.alphabet().size())
    throw std::invalid_argument("functional dimension does not match the alphabet");
  ScanReport report;
  report.exact = false;
  report.normal = f;
  report.left = window.left_size();
  report.right = window.right_size();

  std::int64_t n_abs_max = std::max(report.left, report.right);
  detail::ScanAccumulator<double> acc(n_abs_max);
  detail::scan_window(window, [&f](std::uint8_t a) { return f[a]; }, acc);

  report.max_abs = acc.max_abs;
  report.block_max = acc.block_max;
  report.verdict = detail::growth_verdict(acc.block_max);
  double max_f = 0.0;
  for (double c : f) max_f = std::max(max_f, std::abs(c));
  report.float_error_bound = static_cast<double>(n_abs_max) * f.size() * max_f *
                             std::numeric_limits<double>::epsilon();
  return report;
}

/// Convenience scan over the default-seed window u_{[-N, N)}.
inline ScanReport scan_boundedness(const Substitution& s, const std::vector<BigInt>& f,
                                   std::int64_t n) {
  if (n < 2) throw std::invalid_argument("scan window must satisfy N >= 2");
  return scan_boundedness(generate_window(s, default_seed(s), n, n).window(), f);
}

inline ScanReport scan_boundedness(const Substitution& s, const std::vector<double>& f,
                                   std::int64_t n) {
  if (n < 2) throw std::invalid_argument("scan window must satisfy N >= 2");
  return scan_boundedness(generate_window(s, default_seed(s), n, n).window(), f);
}

// ---------------------------------------------------------------------------
// Factor functionals
// ---------------------------------------------------------------------------

/// max |f . Psi(w)| over an explicit list of factors.
inline BigInt max_factor_functional(const std::vector<BigInt>& f,
                                    const std::vector<FiniteWord>& factors) {
  BigInt best = 0;
  for (const auto& w : factors) {
    BigInt v = dot(f, parikh(w));
    if (v < 0) v = -v;
    if (v > best) best = v;
  }
  return best;
}

/// max |f . Psi(w)| over `count` factors sampled uniformly as sub-windows
/// (random start, random length <= max_len). Deterministic under rng_seed.
inline BigInt sampled_factor_functional_max(const Window& window,
                                            const std::vector<BigInt>& f, int count,
                                            int max_len, std::uint64_t rng_seed) {
  if (static_cast<int>(f.size()) != window.alphabet().size())
    throw std::invalid_argument("functional dimension does not match the alphabet");
  if (max_len < 1 || count < 0) throw std::invalid_argument("bad sampling parameters");
  const std::int64_t lo = -window.left_size();
  const std::int64_t hi = window.right_size();
  if (hi - lo < 1) return 0;

  // prefix sums s[n] = f . Psi_n for n in [lo, hi]
  std::vector<BigInt> s(static_cast<std::size_t>(hi - lo + 1));
  auto at = [&s, lo](std::int64_t n) -> BigInt& {
    return s[static_cast<std::size_t>(n - lo)];
  };
  for (std::int64_t n = 0; n < hi; ++n) at(n + 1) = at(n) + f[window.letter(n)];
  for (std::int64_t n = 0; n > lo; --n) at(n - 1) = at(n) - f[window.letter(n - 1)];

  std::mt19937_64 rng(rng_seed);
  BigInt best = 0;
  for (int i = 0; i < count; ++i) {
    std::int64_t max_here = std::min<std::int64_t>(max_len, hi - lo);
    std::uniform_int_distribution<std::int64_t> len_dist(1, max_here);
    std::int64_t len = len_dist(rng);
    std::uniform_int_distribution<std::int64_t> start_dist(lo, hi - len);
    std::int64_t start = start_dist(rng);
    BigInt v = at(start + len) - at(start);
    if (v < 0) v = -v;
    if (v > best) best = v;
  }
  return best;
}

}  // namespace bdlword
