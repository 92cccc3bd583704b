#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "bdlword/numeric.hpp"
#include "bdlword/word.hpp"

namespace bdlword {

/// Dense matrix with exact integer entries. Incidence matrices are the square
/// non-negative case; general morphisms between different alphabets give
/// rectangular (and rank-deficient) instances.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(int rows, int cols)
      : rows_(rows), cols_(cols),
        entries_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative dimension");
  }

  static IntMatrix identity(int d) {
    IntMatrix m(d, d);
    for (int i = 0; i < d; ++i) m.at(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  BigInt& at(int r, int c) { return entries_[idx(r, c)]; }
  const BigInt& at(int r, int c) const { return entries_[idx(r, c)]; }
  const BigInt& operator()(int r, int c) const { return at(r, c); }

  IntMatrix operator*(const IntMatrix& other) const {
    if (cols_ != other.rows_)
      throw std::invalid_argument("matrix product: dimension mismatch");
    IntMatrix out(rows_, other.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const BigInt& v = at(i, k);
        if (v == 0) continue;
        for (int j = 0; j < other.cols_; ++j)
          out.at(i, j) += v * other.at(k, j);
      }
    return out;
  }

  ParikhVector operator*(const ParikhVector& v) const {
    if (static_cast<int>(v.size()) != cols_)
      throw std::invalid_argument("matrix-vector product: dimension mismatch");
    ParikhVector out(static_cast<std::size_t>(rows_));
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) out[i] += at(i, j) * v[j];
    return out;
  }

  IntMatrix operator+(const IntMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
      throw std::invalid_argument("matrix sum: dimension mismatch");
    IntMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i)
      out.entries_[i] = entries_[i] + other.entries_[i];
    return out;
  }

  IntMatrix scaled(const BigInt& factor) const {
    IntMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i)
      out.entries_[i] = entries_[i] * factor;
    return out;
  }

  IntMatrix pow(unsigned k) const {
    if (!square()) throw std::invalid_argument("matrix power: not square");
    IntMatrix result = identity(rows_);
    IntMatrix base = *this;
    while (k > 0) {
      if (k & 1u) result = result * base;
      base = base * base;
      k >>= 1u;
    }
    return result;
  }

  IntMatrix transposed() const {
    IntMatrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
  }

  ParikhVector column(int j) const {
    ParikhVector out(static_cast<std::size_t>(rows_));
    for (int i = 0; i < rows_; ++i) out[i] = at(i, j);
    return out;
  }

  BigInt trace() const {
    if (!square()) throw std::invalid_argument("trace: not square");
    BigInt t = 0;
    for (int i = 0; i < rows_; ++i) t += at(i, i);
    return t;
  }

  bool entrywise_positive() const {
    for (const auto& e : entries_)
      if (e <= 0) return false;
    return true;
  }

  bool is_zero() const {
    for (const auto& e : entries_)
      if (e != 0) return false;
    return true;
  }

  bool operator==(const IntMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ &&
           entries_ == other.entries_;
  }

  std::string str() const {
    std::string out;
    for (int i = 0; i < rows_; ++i) {
      out += i == 0 ? "[" : " ";
      for (int j = 0; j < cols_; ++j) {
        out += at(i, j).str();
        if (j + 1 < cols_) out += " ";
      }
      out += i + 1 < rows_ ? "\n" : "]";
    }
    return out;
  }

 private:
  std::size_t idx(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
      throw std::out_of_range("matrix index");
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(c);
  }

  int rows_, cols_;
  std::vector<BigInt> entries_;
};

}  // namespace bdlword
