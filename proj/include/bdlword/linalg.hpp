#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "bdlword/matrix.hpp"
#include "bdlword/numeric.hpp"

namespace bdlword {

inline Eigen::MatrixXd to_eigen(const IntMatrix& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = to_double(m.at(i, j));
  return out;
}

inline Eigen::VectorXd to_eigen(const std::vector<double>& v) {
  Eigen::VectorXd out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out(static_cast<Eigen::Index>(i)) = v[i];
  return out;
}

inline std::vector<double> from_eigen(const Eigen::VectorXd& v) {
  return std::vector<double>(v.data(), v.data() + v.size());
}

/// Modified Gram-Schmidt; vectors whose residual falls below tol are dropped.
inline std::vector<Eigen::VectorXd> gram_schmidt(
    const std::vector<Eigen::VectorXd>& vectors, double tol) {
  std::vector<Eigen::VectorXd> basis;
  for (const auto& v : vectors) {
    Eigen::VectorXd r = v;
    for (const auto& b : basis) r -= b.dot(r) * b;
    // second pass for numerical hygiene
    for (const auto& b : basis) r -= b.dot(r) * b;
    double norm = r.norm();
    if (norm > tol * (1.0 + v.norm())) basis.push_back(r / norm);
  }
  return basis;
}

/// Extend an orthonormal set to `target_count` vectors using standard basis
/// vectors in index order; deterministic completion.
inline std::vector<Eigen::VectorXd> complete_with_standard_basis(
    std::vector<Eigen::VectorXd> basis, int dim, int target_count, double tol) {
  for (int i = 0; i < dim && static_cast<int>(basis.size()) < target_count; ++i) {
    Eigen::VectorXd e = Eigen::VectorXd::Zero(dim);
    e(i) = 1.0;
    for (const auto& b : basis) e -= b.dot(e) * b;
    for (const auto& b : basis) e -= b.dot(e) * b;
    double norm = e.norm();
    if (norm > tol) basis.push_back(e / norm);
  }
  if (static_cast<int>(basis.size()) != target_count)
    throw std::logic_error("basis completion failed to reach the requested dimension");
  return basis;
}

/// Unit normal of the orthogonal complement of a (dim-1)-dimensional span,
/// with deterministic sign (first component above tol is positive).
inline Eigen::VectorXd hyperplane_normal(const std::vector<Eigen::VectorXd>& basis,
                                         int dim, double tol) {
  auto onb = gram_schmidt(basis, tol);
  if (static_cast<int>(onb.size()) != dim - 1)
    throw std::invalid_argument("hyperplane normal: span does not have dimension dim-1");
  auto full = complete_with_standard_basis(onb, dim, dim, tol);
  Eigen::VectorXd n = full.back();
  for (int i = 0; i < dim; ++i) {
    if (std::abs(n(i)) > tol) {
      if (n(i) < 0) n = -n;
      break;
    }
  }
  return n;
}

/// Kernel basis of a real matrix with an explicit singularity threshold.
inline std::vector<Eigen::VectorXd> kernel_basis(const Eigen::MatrixXd& a, double tol) {
  Eigen::FullPivLU<Eigen::MatrixXd> lu(a);
  lu.setThreshold(tol);
  Eigen::MatrixXd k = lu.kernel();
  std::vector<Eigen::VectorXd> out;
  if (lu.dimensionOfKernel() == 0) return out;
  for (Eigen::Index c = 0; c < k.cols(); ++c) out.push_back(k.col(c));
  return gram_schmidt(out, 1e-12);
}

/// Exact kernel over the rationals of an integer matrix, returned as
/// primitive integer vectors (gcd 1, first nonzero entry positive).
inline std::vector<std::vector<BigInt>> integer_kernel(const IntMatrix& m) {
  const int rows = m.rows(), cols = m.cols();
  std::vector<std::vector<BigRational>> a(static_cast<std::size_t>(rows),
                                          std::vector<BigRational>(static_cast<std::size_t>(cols)));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m.at(i, j);

  // reduced row echelon form
  std::vector<int> pivot_col_of_row;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] != 0) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(a[static_cast<std::size_t>(r)], a[static_cast<std::size_t>(piv)]);
    BigRational p = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    for (int j = c; j < cols; ++j) a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] /= p;
    for (int i = 0; i < rows; ++i) {
      if (i == r) continue;
      BigRational f = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
      if (f == 0) continue;
      for (int j = c; j < cols; ++j)
        a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -= f * a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
    }
    pivot_col_of_row.push_back(c);
    ++r;
  }

  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (int c : pivot_col_of_row) is_pivot[static_cast<std::size_t>(c)] = true;

  std::vector<std::vector<BigInt>> basis;
  for (int free_c = 0; free_c < cols; ++free_c) {
    if (is_pivot[static_cast<std::size_t>(free_c)]) continue;
    std::vector<BigRational> v(static_cast<std::size_t>(cols));
    v[static_cast<std::size_t>(free_c)] = 1;
    for (std::size_t i = 0; i < pivot_col_of_row.size(); ++i)
      v[static_cast<std::size_t>(pivot_col_of_row[i])] = -a[i][static_cast<std::size_t>(free_c)];
    // clear denominators, divide by gcd, normalize sign
    BigInt lcm = 1;
    for (const auto& x : v)
      lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(x));
    std::vector<BigInt> w(static_cast<std::size_t>(cols));
    for (std::size_t i = 0; i < v.size(); ++i)
      w[i] = boost::multiprecision::numerator(v[i]) *
             (lcm / boost::multiprecision::denominator(v[i]));
    BigInt g = 0;
    for (const auto& x : w) g = boost::multiprecision::gcd(g, x);
    if (g != 0)
      for (auto& x : w) x /= g;
    for (const auto& x : w) {
      if (x == 0) continue;
      if (x < 0)
        for (auto& y : w) y = -y;
      break;
    }
    basis.push_back(std::move(w));
  }
  return basis;
}

}  // namespace bdlword
