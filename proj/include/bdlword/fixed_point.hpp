#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bdlword/morphism.hpp"
#include "bdlword/word.hpp"

namespace bdlword {

/// A materialized slice u_{[-L, R)} of a bi-directional infinite word.
/// Positions follow the delimiter convention: u_0 is the first letter right
/// of the delimiter, u_{-1} the first letter left of it. The left side is
/// stored reversed so both sides grow by appending.
class Window {
 public:
  Window() = default;
  Window(Alphabet alphabet, std::vector<std::uint8_t> left_reversed,
         std::vector<std::uint8_t> right)
      : alphabet_(std::move(alphabet)), left_rev_(std::move(left_reversed)),
        right_(std::move(right)) {}

  /// Build from plain strings; `left` is given in natural reading order
  /// (its last character is u_{-1}).
  static Window from_strings(const Alphabet& alphabet, std::string_view left,
                             std::string_view right) {
    std::vector<std::uint8_t> lrev, r;
    lrev.reserve(left.size());
    for (auto it = left.rbegin(); it != left.rend(); ++it)
      lrev.push_back(static_cast<std::uint8_t>(alphabet.index_checked(*it)));
    r.reserve(right.size());
    for (char c : right)
      r.push_back(static_cast<std::uint8_t>(alphabet.index_checked(c)));
    return Window(alphabet, std::move(lrev), std::move(r));
  }

  const Alphabet& alphabet() const { return alphabet_; }
  std::int64_t left_size() const { return static_cast<std::int64_t>(left_rev_.size()); }
  std::int64_t right_size() const { return static_cast<std::int64_t>(right_.size()); }

  /// Letter at position n, valid for n in [-left_size, right_size).
  std::uint8_t letter(std::int64_t n) const {
    if (n >= 0) {
      if (n >= right_size()) throw std::out_of_range("window position");
      return right_[static_cast<std::size_t>(n)];
    }
    std::int64_t i = -1 - n;
    if (i >= left_size()) throw std::out_of_range("window position");
    return left_rev_[static_cast<std::size_t>(i)];
  }

  const std::vector<std::uint8_t>& right_letters() const { return right_; }
  const std::vector<std::uint8_t>& left_letters_reversed() const { return left_rev_; }

  Window truncated(std::int64_t n_left, std::int64_t n_right) const {
    n_left = std::min(n_left, left_size());
    n_right = std::min(n_right, right_size());
    std::vector<std::uint8_t> l(left_rev_.begin(), left_rev_.begin() + n_left);
    std::vector<std::uint8_t> r(right_.begin(), right_.begin() + n_right);
    return Window(alphabet_, std::move(l), std::move(r));
  }

  /// Plain-text dump with a literal '|' at the delimiter.
  std::string dump() const {
    std::string out;
    out.reserve(left_rev_.size() + right_.size() + 1);
    for (auto it = left_rev_.rbegin(); it != left_rev_.rend(); ++it)
      out.push_back(alphabet_.letter(*it));
    out.push_back('|');
    for (auto s : right_) out.push_back(alphabet_.letter(s));
    return out;
  }

 private:
  Alphabet alphabet_;
  std::vector<std::uint8_t> left_rev_;
  std::vector<std::uint8_t> right_;
};

namespace detail {

inline void check_seed(const Substitution& s, const SeedPair& seed) {
  const Alphabet& alphabet = s.alphabet();
  if (seed.power < 1) throw std::invalid_argument("seed power must be >= 1");
  if (seed.a >= alphabet.size() || seed.b >= alphabet.size())
    throw std::invalid_argument("seed letters outside the alphabet");
  FiniteWord ia(alphabet, {seed.a}), ib(alphabet, {seed.b});
  for (int i = 0; i < seed.power; ++i) {
    ia = s.apply(ia);
    ib = s.apply(ib);
  }
  if (ia.size() < 2 || ia[0] != seed.a)
    throw std::invalid_argument("invalid seed: psi^k(a) does not start with a (or is too short)");
  if (ib.size() < 2 || ib[ib.size() - 1] != seed.b)
    throw std::invalid_argument("invalid seed: psi^k(b) does not end with b (or is too short)");
  FiniteWord w(alphabet, {ia.symbols().begin() + 1, ia.symbols().end()});
  FiniteWord v(alphabet, {ib.symbols().begin(), ib.symbols().end() - 1});
  if (!(w == seed.w) || !(v == seed.v))
    throw std::invalid_argument("invalid seed: stored w/v do not match the substitution");
}

// Images of every letter under psi^power, as raw index vectors.
inline std::vector<std::vector<std::uint8_t>> power_images(const Substitution& s,
                                                           int power) {
  const int d = s.alphabet().size();
  std::vector<std::vector<std::uint8_t>> imgs(static_cast<std::size_t>(d));
  for (int a = 0; a < d; ++a) {
    FiniteWord img(s.alphabet(), {static_cast<std::uint8_t>(a)});
    for (int i = 0; i < power; ++i) img = s.apply(img);
    imgs[static_cast<std::size_t>(a)] = img.symbols();
  }
  return imgs;
}

inline std::vector<std::uint8_t> apply_images(
    const std::vector<std::vector<std::uint8_t>>& imgs,
    const std::vector<std::uint8_t>& block) {
  std::size_t total = 0;
  for (auto s : block) total += imgs[s].size();
  std::vector<std::uint8_t> out;
  out.reserve(total);
  for (auto s : block) {
    const auto& img = imgs[s];
    out.insert(out.end(), img.begin(), img.end());
  }
  return out;
}

}  // namespace detail

/// A window of the fixed point
///   ... sigma^2(v) sigma(v) v b | a w sigma(w) sigma^2(w) ...
/// of sigma = psi^k, generated block by block until both requested sides are
/// covered. Regeneration is deterministic, so a longer window always extends
/// a shorter one letter for letter.
class FixedPointWindow {
 public:
  FixedPointWindow(Substitution s, SeedPair seed, std::int64_t n_left,
                   std::int64_t n_right)
      : substitution_(std::move(s)), seed_(std::move(seed)) {
    if (n_left < 0 || n_right < 0)
      throw std::invalid_argument("window sizes must be >= 0");
    detail::check_seed(substitution_, seed_);
    auto imgs = detail::power_images(substitution_, seed_.power);

    std::vector<std::uint8_t> right;
    if (n_right > 0) {
      right.reserve(static_cast<std::size_t>(n_right));
      right.push_back(seed_.a);
      std::vector<std::uint8_t> block = seed_.w.symbols();
      while (static_cast<std::int64_t>(right.size()) < n_right) {
        right.insert(right.end(), block.begin(), block.end());
        if (static_cast<std::int64_t>(right.size()) >= n_right) break;
        block = detail::apply_images(imgs, block);
      }
      right.resize(static_cast<std::size_t>(n_right));
    }

    std::vector<std::uint8_t> left_rev;
    if (n_left > 0) {
      left_rev.reserve(static_cast<std::size_t>(n_left));
      left_rev.push_back(seed_.b);
      std::vector<std::uint8_t> block = seed_.v.symbols();
      while (static_cast<std::int64_t>(left_rev.size()) < n_left) {
        left_rev.insert(left_rev.end(), block.rbegin(), block.rend());
        if (static_cast<std::int64_t>(left_rev.size()) >= n_left) break;
        block = detail::apply_images(imgs, block);
      }
      left_rev.resize(static_cast<std::size_t>(n_left));
    }

    window_ = Window(substitution_.alphabet(), std::move(left_rev), std::move(right));
  }

  const Substitution& substitution() const { return substitution_; }
  const SeedPair& seed() const { return seed_; }
  const Window& window() const { return window_; }

 private:
  Substitution substitution_;
  SeedPair seed_;
  Window window_;
};

inline FixedPointWindow generate_window(const Substitution& s, const SeedPair& seed,
                                        std::int64_t n_left, std::int64_t n_right) {
  return FixedPointWindow(s, seed, n_left, n_right);
}

/// First seed pair found with powers up to 2d; deterministic default.
inline SeedPair default_seed(const Substitution& s) {
  auto pairs = find_seed_pairs(s, 2 * s.alphabet().size());
  if (pairs.empty())
    throw std::invalid_argument("substitution has no seed pair up to power 2d");
  return pairs.front();
}

inline bool is_prefix_of_fixed_point(const Substitution& s, const SeedPair& seed,
                                     const FiniteWord& p) {
  if (p.alphabet() != s.alphabet())
    throw std::invalid_argument("prefix check: word over a different alphabet");
  if (p.empty()) return true;
  auto fp = generate_window(s, seed, 0, static_cast<std::int64_t>(p.size()));
  return fp.window().right_letters() == p.symbols();
}

/// Signed prefix Parikh vectors Psi_n along a window, materialized for
/// n in [-left_size, right_size]. Built incrementally outward from Psi_0 = 0.
class ParikhPath {
 public:
  explicit ParikhPath(const Window& window)
      : n_min_(-window.left_size()), n_max_(window.right_size()),
        dim_(window.alphabet().size()) {
    vectors_.resize(static_cast<std::size_t>(n_max_ - n_min_ + 1));
    auto slot = [this](std::int64_t n) -> ParikhVector& {
      return vectors_[static_cast<std::size_t>(n - n_min_)];
    };
    slot(0) = ParikhVector(static_cast<std::size_t>(dim_));
    for (std::int64_t n = 0; n < n_max_; ++n) {
      ParikhVector next = slot(n);
      ++next[window.letter(n)];
      slot(n + 1) = std::move(next);
    }
    for (std::int64_t n = 0; n > n_min_; --n) {
      ParikhVector prev = slot(n);
      --prev[window.letter(n - 1)];
      slot(n - 1) = std::move(prev);
    }
  }

  std::int64_t n_min() const { return n_min_; }
  std::int64_t n_max() const { return n_max_; }
  int dim() const { return dim_; }

  const ParikhVector& psi(std::int64_t n) const {
    if (n < n_min_ || n > n_max_) throw std::out_of_range("Parikh path position");
    return vectors_[static_cast<std::size_t>(n - n_min_)];
  }

 private:
  std::int64_t n_min_, n_max_;
  int dim_;
  std::vector<ParikhVector> vectors_;
};

inline ParikhPath parikh_path(const Window& window) { return ParikhPath(window); }
inline ParikhPath parikh_path(const FixedPointWindow& fp) {
  return ParikhPath(fp.window());
}

}  // namespace bdlword
