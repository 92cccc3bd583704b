#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bdlword/matrix.hpp"
#include "bdlword/word.hpp"

namespace bdlword {

/// A monoid morphism between free monoids, given by one image word per source
/// letter. Images may be empty: erasing morphisms are legal here (they only
/// get rejected when promoting to a Substitution).
class Morphism {
 public:
  Morphism(Alphabet source, Alphabet target, std::vector<FiniteWord> images)
      : source_(std::move(source)), target_(std::move(target)),
        images_(std::move(images)) {
    if (static_cast<int>(images_.size()) != source_.size())
      throw std::invalid_argument("morphism needs exactly one image per source letter");
    for (const auto& img : images_)
      if (img.alphabet() != target_)
        throw std::invalid_argument("morphism image is not over the target alphabet");
  }

  static Morphism from_rules(const Alphabet& source, const Alphabet& target,
                             const std::vector<std::string>& rules) {
    if (static_cast<int>(rules.size()) != source.size())
      throw std::invalid_argument("one rule string per source letter required");
    std::vector<FiniteWord> images;
    images.reserve(rules.size());
    for (const auto& r : rules) images.push_back(FiniteWord::parse(target, r));
    return Morphism(source, target, std::move(images));
  }

  const Alphabet& source() const { return source_; }
  const Alphabet& target() const { return target_; }
  const FiniteWord& image(std::uint8_t letter) const { return images_.at(letter); }
  bool is_endomorphism() const { return source_ == target_; }

  bool erasing() const {
    for (const auto& img : images_)
      if (img.empty()) return true;
    return false;
  }

  FiniteWord apply(const FiniteWord& w) const {
    if (w.alphabet() != source_)
      throw std::invalid_argument("morphism applied to word over a different alphabet");
    std::size_t total = 0;
    for (std::size_t i = 0; i < w.size(); ++i) total += images_[w[i]].size();
    std::vector<std::uint8_t> symbols;
    symbols.reserve(total);
    for (std::size_t i = 0; i < w.size(); ++i) {
      const auto& img = images_[w[i]].symbols();
      symbols.insert(symbols.end(), img.begin(), img.end());
    }
    return FiniteWord(target_, std::move(symbols));
  }

  /// Incidence matrix M: entry (b, a) counts letter b in the image of a, so
  /// that parikh(apply(w)) = M * parikh(w).
  IntMatrix incidence_matrix() const {
    IntMatrix m(target_.size(), source_.size());
    for (int a = 0; a < source_.size(); ++a) {
      const auto& img = images_[static_cast<std::size_t>(a)];
      for (std::size_t i = 0; i < img.size(); ++i) ++m.at(img[i], a);
    }
    return m;
  }

 private:
  Alphabet source_, target_;
  std::vector<FiniteWord> images_;
};

inline Morphism identity_morphism(const Alphabet& alphabet) {
  std::vector<FiniteWord> images;
  for (int i = 0; i < alphabet.size(); ++i)
    images.push_back(FiniteWord(alphabet, {static_cast<std::uint8_t>(i)}));
  return Morphism(alphabet, alphabet, std::move(images));
}

inline Morphism compose(const Morphism& outer, const Morphism& inner) {
  if (inner.target() != outer.source())
    throw std::invalid_argument("compose: inner target differs from outer source");
  std::vector<FiniteWord> images;
  images.reserve(static_cast<std::size_t>(inner.source().size()));
  for (int a = 0; a < inner.source().size(); ++a)
    images.push_back(outer.apply(inner.image(static_cast<std::uint8_t>(a))));
  return Morphism(inner.source(), outer.target(), std::move(images));
}

/// An endomorphism with non-empty images, with its incidence matrix cached.
/// The fixed-point machinery assumes every letter expands to something.
class Substitution {
 public:
  explicit Substitution(Morphism m)
      : morphism_(std::move(m)), incidence_(0, 0) {
    if (!morphism_.is_endomorphism())
      throw std::invalid_argument("substitution must map an alphabet to itself");
    if (morphism_.erasing())
      throw std::invalid_argument("substitution must not erase letters (no empty rule images)");
    incidence_ = morphism_.incidence_matrix();
  }

  static Substitution from_rules(const Alphabet& alphabet,
                                 const std::vector<std::string>& rules) {
    return Substitution(Morphism::from_rules(alphabet, alphabet, rules));
  }

  const Alphabet& alphabet() const { return morphism_.source(); }
  const Morphism& morphism() const { return morphism_; }
  const IntMatrix& incidence() const { return incidence_; }
  const FiniteWord& image(std::uint8_t letter) const { return morphism_.image(letter); }
  FiniteWord apply(const FiniteWord& w) const { return morphism_.apply(w); }

  Substitution power(int k) const {
    if (k < 1) throw std::invalid_argument("substitution power must be >= 1");
    Morphism acc = morphism_;
    for (int i = 1; i < k; ++i) acc = compose(morphism_, acc);
    return Substitution(std::move(acc));
  }

 private:
  Morphism morphism_;
  IntMatrix incidence_;
};

/// Letters a, b with psi^k(a) = a w and psi^k(b) = v b (w, v non-empty);
/// the pair pins down a bi-directional fixed point of psi^k.
struct SeedPair {
  int power = 1;
  std::uint8_t a = 0;
  std::uint8_t b = 0;
  FiniteWord w;  // psi^power(a) with the leading a removed
  FiniteWord v;  // psi^power(b) with the trailing b removed

  std::string describe(const Alphabet& alphabet) const {
    std::string out = "(" + std::to_string(power) + ",";
    out += alphabet.letter(a);
    out += ",";
    out += alphabet.letter(b);
    out += ")";
    return out;
  }
};

/// All seed pairs (k, a, b) with k <= max_power, ordered by (k, a, b).
/// May be empty; callers decide whether that is an error.
inline std::vector<SeedPair> find_seed_pairs(const Substitution& s, int max_power) {
  if (max_power < 1) throw std::invalid_argument("max_power must be >= 1");
  const Alphabet& alphabet = s.alphabet();
  const int d = alphabet.size();
  std::vector<SeedPair> out;
  std::vector<FiniteWord> images;  // psi^k(letter), updated per k
  for (int a = 0; a < d; ++a)
    images.push_back(FiniteWord(alphabet, {static_cast<std::uint8_t>(a)}));
  for (int k = 1; k <= max_power; ++k) {
    for (auto& img : images) img = s.apply(img);
    std::vector<int> starts, ends;
    for (int a = 0; a < d; ++a) {
      const auto& img = images[static_cast<std::size_t>(a)];
      if (img.size() >= 2 && img[0] == a) starts.push_back(a);
      if (img.size() >= 2 && img[img.size() - 1] == a) ends.push_back(a);
    }
    for (int a : starts)
      for (int b : ends) {
        const auto& ia = images[static_cast<std::size_t>(a)].symbols();
        const auto& ib = images[static_cast<std::size_t>(b)].symbols();
        SeedPair p;
        p.power = k;
        p.a = static_cast<std::uint8_t>(a);
        p.b = static_cast<std::uint8_t>(b);
        p.w = FiniteWord(alphabet, {ia.begin() + 1, ia.end()});
        p.v = FiniteWord(alphabet, {ib.begin(), ib.end() - 1});
        out.push_back(std::move(p));
      }
  }
  return out;
}

/// Primitivity via the Wielandt bound: M is primitive iff some power
/// k <= (d-1)^2 + 1 is entrywise positive. Only the zero pattern matters,
/// so powers are taken over booleans.
inline bool is_primitive(const IntMatrix& m) {
  if (!m.square()) throw std::invalid_argument("primitivity: matrix not square");
  const int d = m.rows();
  if (d == 0) return false;
  std::vector<std::vector<bool>> base(static_cast<std::size_t>(d),
                                      std::vector<bool>(static_cast<std::size_t>(d)));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      if (m.at(i, j) < 0)
        throw std::invalid_argument("primitivity: matrix has negative entries");
      base[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m.at(i, j) > 0;
    }
  auto all_positive = [d](const std::vector<std::vector<bool>>& p) {
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        if (!p[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) return false;
    return true;
  };
  const int bound = (d - 1) * (d - 1) + 1;
  auto power = base;
  for (int k = 1; k <= bound; ++k) {
    if (all_positive(power)) return true;
    if (k == bound) break;
    std::vector<std::vector<bool>> next(static_cast<std::size_t>(d),
                                        std::vector<bool>(static_cast<std::size_t>(d)));
    for (int i = 0; i < d; ++i)
      for (int l = 0; l < d; ++l)
        if (power[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)])
          for (int j = 0; j < d; ++j)
            if (base[static_cast<std::size_t>(l)][static_cast<std::size_t>(j)])
              next[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
    power = std::move(next);
  }
  return false;
}

}  // namespace bdlword
