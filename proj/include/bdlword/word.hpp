#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bdlword/numeric.hpp"

namespace bdlword {

/// An ordered finite alphabet of single-character symbols.
class Alphabet {
 public:
  Alphabet() = default;

  explicit Alphabet(std::string letters) : letters_(std::move(letters)) {
    if (letters_.empty())
      throw std::invalid_argument("alphabet must contain at least one letter");
    for (std::size_t i = 0; i < letters_.size(); ++i)
      for (std::size_t j = i + 1; j < letters_.size(); ++j)
        if (letters_[i] == letters_[j])
          throw std::invalid_argument(std::string("duplicate letter '") +
                                      letters_[i] + "' in alphabet");
  }

  int size() const { return static_cast<int>(letters_.size()); }
  char letter(int i) const { return letters_.at(static_cast<std::size_t>(i)); }
  const std::string& letters() const { return letters_; }

  /// Position of a symbol, or -1 if it is not part of the alphabet.
  int index(char c) const {
    auto pos = letters_.find(c);
    return pos == std::string::npos ? -1 : static_cast<int>(pos);
  }

  int index_checked(char c) const {
    int i = index(c);
    if (i < 0)
      throw std::invalid_argument(std::string("symbol '") + c +
                                  "' is not in alphabet \"" + letters_ + "\"");
    return i;
  }

  bool operator==(const Alphabet&) const = default;

 private:
  std::string letters_;
};

/// A finite word stored as letter indices over its alphabet.
class FiniteWord {
 public:
  FiniteWord() = default;
  explicit FiniteWord(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}
  FiniteWord(Alphabet alphabet, std::vector<std::uint8_t> symbols)
      : alphabet_(std::move(alphabet)), symbols_(std::move(symbols)) {
    for (auto s : symbols_)
      if (s >= alphabet_.size())
        throw std::invalid_argument("letter index out of range for alphabet");
  }

  static FiniteWord parse(const Alphabet& alphabet, std::string_view text) {
    std::vector<std::uint8_t> symbols;
    symbols.reserve(text.size());
    for (char c : text)
      symbols.push_back(static_cast<std::uint8_t>(alphabet.index_checked(c)));
    return FiniteWord(alphabet, std::move(symbols));
  }

  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }
  std::uint8_t operator[](std::size_t i) const { return symbols_[i]; }
  const std::vector<std::uint8_t>& symbols() const { return symbols_; }

  std::string str() const {
    std::string out;
    out.reserve(symbols_.size());
    for (auto s : symbols_) out.push_back(alphabet_.letter(s));
    return out;
  }

  bool operator==(const FiniteWord& other) const {
    return alphabet_ == other.alphabet_ && symbols_ == other.symbols_;
  }

 private:
  Alphabet alphabet_;
  std::vector<std::uint8_t> symbols_;
};

/// Letter-count vector; entries are exact integers. Signed prefix vectors of
/// bi-infinite words reuse the same representation, so entries may be negative.
using ParikhVector = std::vector<BigInt>;

inline ParikhVector parikh(const FiniteWord& w) {
  ParikhVector counts(static_cast<std::size_t>(w.alphabet().size()));
  for (std::size_t i = 0; i < w.size(); ++i) ++counts[w[i]];
  return counts;
}

inline FiniteWord concat(const FiniteWord& u, const FiniteWord& v) {
  if (u.alphabet() != v.alphabet())
    throw std::invalid_argument("concat: words are over different alphabets");
  std::vector<std::uint8_t> symbols;
  symbols.reserve(u.size() + v.size());
  symbols.insert(symbols.end(), u.symbols().begin(), u.symbols().end());
  symbols.insert(symbols.end(), v.symbols().begin(), v.symbols().end());
  return FiniteWord(u.alphabet(), std::move(symbols));
}

inline FiniteWord operator+(const FiniteWord& u, const FiniteWord& v) {
  return concat(u, v);
}

inline ParikhVector vec_add(const ParikhVector& a, const ParikhVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  ParikhVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

inline ParikhVector vec_sub(const ParikhVector& a, const ParikhVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  ParikhVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

inline BigInt dot(const std::vector<BigInt>& f, const ParikhVector& v) {
  if (f.size() != v.size()) throw std::invalid_argument("vector size mismatch");
  BigInt s = 0;
  for (std::size_t i = 0; i < f.size(); ++i) s += f[i] * v[i];
  return s;
}

inline BigInt vec_sum(const ParikhVector& v) {
  BigInt s = 0;
  for (const auto& x : v) s += x;
  return s;
}

}  // namespace bdlword
