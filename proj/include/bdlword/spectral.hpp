#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bdlword/linalg.hpp"
#include "bdlword/matrix.hpp"
#include "bdlword/polynomial.hpp"
#include "bdlword/roots.hpp"

namespace bdlword {

/// How an eigenvalue's modulus compares with 1. EQ1_CERTIFIED is only issued
/// on exact grounds (a rational root +-1 or a certified cyclotomic factor),
/// never from floating point alone.
enum class ModulusClass { LT1, EQ1_CERTIFIED, GT1, BOUNDARY_UNCERTAIN };

enum class Trivalent { Yes, No, Unknown };

inline std::string to_string(ModulusClass c) {
  switch (c) {
    case ModulusClass::LT1: return "LT1";
    case ModulusClass::EQ1_CERTIFIED: return "EQ1_CERTIFIED";
    case ModulusClass::GT1: return "GT1";
    case ModulusClass::BOUNDARY_UNCERTAIN: return "BOUNDARY_UNCERTAIN";
  }
  return "?";
}

inline std::string to_string(Trivalent t) {
  switch (t) {
    case Trivalent::Yes: return "yes";
    case Trivalent::No: return "no";
    case Trivalent::Unknown: return "unknown";
  }
  return "?";
}

struct EigenClass {
  std::complex<double> value;
  double error_radius = 0.0;
  ModulusClass modulus_class = ModulusClass::BOUNDARY_UNCERTAIN;
  int multiplicity = 1;
  // Exact provenance, present when the root was isolated algebraically.
  std::optional<BigInt> exact_integer_root;
  std::optional<int> cyclotomic_index;

  double modulus() const { return std::abs(value); }
  bool exact() const { return exact_integer_root.has_value() || cyclotomic_index.has_value(); }
};

/// Monic characteristic polynomial with exact integer coefficients.
struct CharPoly {
  IntPoly coeffs;  // ascending, leading coefficient 1
  int degree() const { return poly_degree(coeffs); }
};

struct SpectralReport {
  CharPoly char_poly;
  std::vector<EigenClass> eigenvalues;  // modulus-descending; multiplicities sum to d
  ModulusClass min_modulus_class = ModulusClass::BOUNDARY_UNCERTAIN;
  Trivalent diagonalizable = Trivalent::Unknown;

  bool any_of(ModulusClass c) const {
    for (const auto& e : eigenvalues)
      if (e.modulus_class == c) return true;
    return false;
  }
  bool all_of(ModulusClass c) const {
    for (const auto& e : eigenvalues)
      if (e.modulus_class != c) return false;
    return !eigenvalues.empty();
  }
};

/// Characteristic polynomial by the Faddeev-LeVerrier recurrence; all
/// divisions are exact over the integers. The Cayley-Hamilton identity is
/// checked before returning.
inline CharPoly char_poly(const IntMatrix& m) {
  if (!m.square()) throw std::invalid_argument("characteristic polynomial: matrix not square");
  const int d = m.rows();
  IntPoly coeffs(static_cast<std::size_t>(d + 1));
  coeffs[static_cast<std::size_t>(d)] = 1;
  IntMatrix n = IntMatrix::identity(d);
  for (int k = 1; k <= d; ++k) {
    IntMatrix mn = m * n;
    BigInt t = mn.trace();
    if (t % k != 0) throw std::logic_error("Faddeev-LeVerrier division not exact");
    BigInt c = -t / k;
    coeffs[static_cast<std::size_t>(d - k)] = c;
    if (k < d) n = mn + IntMatrix::identity(d).scaled(c);
  }
  CharPoly cp{std::move(coeffs)};
  if (!poly_eval_matrix(cp.coeffs, m).is_zero())
    throw std::logic_error("Cayley-Hamilton check failed");
  return cp;
}

namespace detail {

inline std::vector<double> poly_to_double(const IntPoly& p) {
  std::vector<double> out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = to_double(p[i]);
  return out;
}

inline bool all_finite(const std::vector<double>& coeffs) {
  for (double c : coeffs)
    if (!std::isfinite(c)) return false;
  return true;
}

// Try to peel the exact integer root r off q; returns true on success.
inline bool extract_integer_root(IntPoly& q, const BigInt& r) {
  if (poly_degree(q) < 1) return false;
  if (poly_eval<BigInt>(q, r) != 0) return false;
  IntPoly lin{-r, 1};
  q = poly_divide_exact_monic(q, lin);
  return true;
}

inline ModulusClass integer_root_class(const BigInt& r) {
  if (r == 0) return ModulusClass::LT1;
  if (r == 1 || r == -1) return ModulusClass::EQ1_CERTIFIED;
  return ModulusClass::GT1;
}

}  // namespace detail

/// Locate and classify all eigenvalues of an integer matrix.
///
/// Rational roots are extracted exactly (monic polynomial, so they are
/// integers). Unit-modulus certification uses the necessary condition that
/// such roots divide gcd(p, reciprocal(p)), followed by trial division with
/// cyclotomic polynomials of index <= 2 d^2. Everything else is located by
/// simultaneous iteration with a posteriori inclusion radii.
inline SpectralReport eigen_classify(const IntMatrix& m, double tol = 1e-9) {
  if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
  SpectralReport report;
  report.char_poly = char_poly(m);
  const int d = report.char_poly.degree();

  struct RepeatedFactor {
    IntPoly poly;
    int multiplicity;
    bool exact;
  };
  std::vector<RepeatedFactor> repeated;

  auto squarefree = poly_squarefree_decomposition(report.char_poly.coeffs);
  for (auto& [factor, mult] : squarefree) {
    IntPoly q = factor;

    // Exact integer roots. 0 and +-1 are tried unconditionally (they are the
    // classification boundary); other integer roots are found by testing the
    // nearest integer to each numerically located root.
    std::vector<BigInt> int_roots;
    for (const BigInt& r : {BigInt(0), BigInt(1), BigInt(-1)})
      if (detail::extract_integer_root(q, r)) int_roots.push_back(r);
    if (poly_degree(q) >= 1) {
      auto dbl = detail::poly_to_double(q);
      if (detail::all_finite(dbl)) {
        auto probe = find_roots_monic(dbl);
        for (const auto& root : probe) {
          if (!std::isfinite(root.value.real()) || std::abs(root.value.imag()) > 0.5)
            continue;
          BigInt r(static_cast<long long>(std::llround(root.value.real())));
          if (detail::extract_integer_root(q, r)) int_roots.push_back(r);
        }
      }
    }
    for (const auto& r : int_roots) {
      EigenClass e;
      e.value = std::complex<double>(to_double(r), 0.0);
      e.error_radius = 0.0;
      e.modulus_class = detail::integer_root_class(r);
      e.multiplicity = mult;
      e.exact_integer_root = r;
      report.eigenvalues.push_back(std::move(e));
      if (mult > 1) repeated.push_back({IntPoly{-r, 1}, mult, true});
    }

    // Unit-modulus candidates: roots of modulus exactly 1 must also be roots
    // of the reciprocal polynomial, hence of this gcd.
    if (poly_degree(q) >= 1) {
      IntPoly g = poly_gcd(q, poly_reciprocal(q));
      if (poly_degree(g) >= 1) {
        for (int n = 1; n <= 2 * d * d; ++n) {
          const IntPoly& phi = cyclotomic_polynomial(n);
          if (poly_degree(phi) > poly_degree(g)) continue;
          while (true) {
            auto qq = poly_try_divide_monic(q, phi);
            if (!qq) break;
            q = *qq;
            auto gg = poly_try_divide_monic(g, phi);
            if (gg) g = *gg;
            for (int k = 1; k <= n; ++k) {
              if (std::gcd(k, n) != 1) continue;
              double angle = 2.0 * std::numbers::pi * k / n;
              EigenClass e;
              e.value = std::complex<double>(std::cos(angle), std::sin(angle));
              e.error_radius = 4.0 * std::numeric_limits<double>::epsilon();
              e.modulus_class = ModulusClass::EQ1_CERTIFIED;
              e.multiplicity = mult;
              e.cyclotomic_index = n;
              report.eigenvalues.push_back(std::move(e));
            }
            if (mult > 1) repeated.push_back({phi, mult, true});
            if (poly_degree(g) < poly_degree(phi)) break;
          }
          if (poly_degree(g) < 1) break;
        }
      }
    }

    // Remaining roots are irrational; locate numerically and classify
    // against the unit circle using the inclusion disks.
    if (poly_degree(q) >= 1) {
      auto dbl = detail::poly_to_double(q);
      if (!detail::all_finite(dbl)) {
        // coefficients overflow double: report the roots as unresolved
        for (int i = 0; i < poly_degree(q); ++i) {
          EigenClass e;
          e.value = std::complex<double>(0.0, 0.0);
          e.error_radius = std::numeric_limits<double>::infinity();
          e.modulus_class = ModulusClass::BOUNDARY_UNCERTAIN;
          e.multiplicity = mult;
          report.eigenvalues.push_back(std::move(e));
        }
        if (mult > 1) repeated.push_back({q, mult, false});
        continue;
      }
      auto located = find_roots_monic(dbl);
      for (const auto& root : located) {
        EigenClass e;
        e.value = root.value;
        e.error_radius = root.radius;
        double mod = std::abs(root.value);
        if (!root.converged || root.radius > tol)
          e.modulus_class = ModulusClass::BOUNDARY_UNCERTAIN;
        else if (mod + root.radius < 1.0)
          e.modulus_class = ModulusClass::LT1;
        else if (mod - root.radius > 1.0)
          e.modulus_class = ModulusClass::GT1;
        else
          e.modulus_class = ModulusClass::BOUNDARY_UNCERTAIN;
        e.multiplicity = mult;
        report.eigenvalues.push_back(std::move(e));
      }
      if (mult > 1) repeated.push_back({q, mult, false});
    }
  }

  std::sort(report.eigenvalues.begin(), report.eigenvalues.end(),
            [](const EigenClass& a, const EigenClass& b) {
              if (a.modulus() != b.modulus()) return a.modulus() > b.modulus();
              if (a.value.real() != b.value.real()) return a.value.real() > b.value.real();
              return a.value.imag() > b.value.imag();
            });

  int total = 0;
  for (const auto& e : report.eigenvalues) total += e.multiplicity;
  if (total != d) throw std::logic_error("eigenvalue multiplicities do not sum to the degree");
  report.min_modulus_class = report.eigenvalues.back().modulus_class;

  // Diagonalizability: simple spectrum is immediate; repeated exact factors
  // are settled by exact kernel dimensions; repeated irrational factors stay
  // undecided.
  report.diagonalizable = Trivalent::Yes;
  for (const auto& rf : repeated) {
    if (!rf.exact) {
      if (report.diagonalizable == Trivalent::Yes)
        report.diagonalizable = Trivalent::Unknown;
      continue;
    }
    auto kernel = integer_kernel(poly_eval_matrix(rf.poly, m));
    if (static_cast<int>(kernel.size()) != poly_degree(rf.poly) * rf.multiplicity) {
      report.diagonalizable = Trivalent::No;
    }
  }
  return report;
}

/// Eigenvector for a simple eigenvalue, normalized so its first nonzero
/// component is 1. Exact kernel computation for integer roots, inverse
/// iteration otherwise. Guarantees ||M x - lambda x|| <= 10 tol ||x||.
inline std::vector<std::complex<double>> eigenvector(const IntMatrix& m,
                                                     const EigenClass& eig,
                                                     double tol = 1e-9) {
  if (!m.square()) throw std::invalid_argument("eigenvector: matrix not square");
  if (eig.multiplicity != 1)
    throw std::invalid_argument("eigenvector: eigenvalue is not simple; use an invariant-subspace computation");
  const int d = m.rows();
  std::vector<std::complex<double>> x(static_cast<std::size_t>(d));

  if (eig.exact_integer_root) {
    IntMatrix shifted = m;
    for (int i = 0; i < d; ++i) shifted.at(i, i) -= *eig.exact_integer_root;
    auto kernel = integer_kernel(shifted);
    if (kernel.size() != 1)
      throw std::logic_error("simple integer eigenvalue with kernel dimension != 1");
    BigRational first = 0;
    for (const auto& c : kernel[0])
      if (c != 0) { first = BigRational(c); break; }
    for (int i = 0; i < d; ++i)
      x[static_cast<std::size_t>(i)] =
          to_double(BigRational(kernel[0][static_cast<std::size_t>(i)]) / first);
    return x;
  }

  // Inverse iteration with a slightly offset shift: the exact shift can make
  // the LU pivot vanish and poison the solve with NaNs.
  std::complex<double> shift =
      eig.value + std::complex<double>(1e-8 * (1.0 + std::abs(eig.value)), 0.0);
  Eigen::MatrixXcd a = to_eigen(m).cast<std::complex<double>>();
  for (int i = 0; i < d; ++i) a(i, i) -= shift;
  Eigen::VectorXcd v(d);
  for (int i = 0; i < d; ++i) v(i) = std::complex<double>(1.0 + 0.001 * i, 0.0);
  v.normalize();
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(a);
  for (int it = 0; it < 6; ++it) {
    Eigen::VectorXcd y = lu.solve(v);
    double norm = y.norm();
    if (!std::isfinite(norm) || norm == 0.0) break;
    v = y / norm;
  }

  double maxabs = 0.0;
  for (int i = 0; i < d; ++i) maxabs = std::max(maxabs, std::abs(v(i)));
  Eigen::Index pivot = 0;
  for (Eigen::Index i = 0; i < d; ++i)
    if (std::abs(v(i)) > 0.1 * maxabs) { pivot = i; break; }
  v /= v(pivot);

  Eigen::MatrixXcd mc = to_eigen(m).cast<std::complex<double>>();
  double residual = (mc * v - eig.value * v).norm();
  if (residual > 10.0 * tol * v.norm())
    throw std::runtime_error("eigenvector residual exceeds contract tolerance");
  for (int i = 0; i < d; ++i) x[static_cast<std::size_t>(i)] = v(i);
  return x;
}

/// Basis of the invariant subspace of M^T for eigenvalues of modulus <= 1:
/// the space of candidate normals f with f . Psi_n bounded. Orthonormal
/// double vectors always; an exact primitive-integer basis additionally when
/// every contributing eigenvalue was isolated algebraically.
struct CandidateNormalSpace {
  std::vector<Eigen::VectorXd> basis;
  std::optional<std::vector<std::vector<BigInt>>> exact_integer_basis;
  bool uncertain = false;
};

inline CandidateNormalSpace candidate_normal_space(const IntMatrix& m, double tol = 1e-9) {
  if (!m.square()) throw std::invalid_argument("candidate normal space: matrix not square");
  const int d = m.rows();
  SpectralReport report = eigen_classify(m, tol);
  IntMatrix mt = m.transposed();

  CandidateNormalSpace out;
  IntPoly annihilator{1};
  std::set<int> seen_cyclotomic;
  std::vector<Eigen::VectorXd> numeric_vectors;
  int expected_dim = 0;

  for (const auto& e : report.eigenvalues) {
    bool low = e.modulus_class == ModulusClass::LT1 ||
               e.modulus_class == ModulusClass::EQ1_CERTIFIED;
    if (e.modulus_class == ModulusClass::BOUNDARY_UNCERTAIN) {
      low = true;
      out.uncertain = true;
    }
    if (!low) continue;
    expected_dim += e.multiplicity;

    if (e.exact_integer_root) {
      IntPoly lin{-*e.exact_integer_root, 1};
      for (int i = 0; i < e.multiplicity; ++i) annihilator = poly_mul(annihilator, lin);
      continue;
    }
    if (e.cyclotomic_index) {
      if (seen_cyclotomic.insert(*e.cyclotomic_index).second) {
        const IntPoly& phi = cyclotomic_polynomial(*e.cyclotomic_index);
        for (int i = 0; i < e.multiplicity; ++i) annihilator = poly_mul(annihilator, phi);
      }
      continue;
    }

    // numerically located root
    if (e.value.imag() < 0.0) continue;  // conjugate handled with its partner
    if (std::abs(e.value.imag()) <= e.error_radius || e.value.imag() == 0.0) {
      if (e.multiplicity == 1) {
        // inverse iteration; the shift is offset so the LU stays finite
        double shift = e.value.real() + 1e-8 * (1.0 + std::abs(e.value.real()));
        Eigen::MatrixXd a = to_eigen(mt);
        for (int i = 0; i < d; ++i) a(i, i) -= shift;
        Eigen::VectorXd v(d);
        for (int i = 0; i < d; ++i) v(i) = 1.0 + 0.001 * i;
        v.normalize();
        Eigen::PartialPivLU<Eigen::MatrixXd> lu(a);
        for (int it = 0; it < 6; ++it) {
          Eigen::VectorXd y = lu.solve(v);
          double norm = y.norm();
          if (!std::isfinite(norm) || norm == 0.0) break;
          v = y / norm;
        }
        numeric_vectors.push_back(v);
      } else {
        Eigen::MatrixXd a = to_eigen(mt);
        for (int i = 0; i < d; ++i) a(i, i) -= e.value.real();
        Eigen::MatrixXd p = Eigen::MatrixXd::Identity(d, d);
        for (int i = 0; i < e.multiplicity; ++i) p = p * a;
        for (auto& v : kernel_basis(p, tol)) numeric_vectors.push_back(v);
      }
    } else {
      // conjugate pair: kernel of the real quadratic factor
      Eigen::MatrixXd mtd = to_eigen(mt);
      Eigen::MatrixXd quad = mtd * mtd - 2.0 * e.value.real() * mtd +
                             std::norm(e.value) * Eigen::MatrixXd::Identity(d, d);
      Eigen::MatrixXd p = Eigen::MatrixXd::Identity(d, d);
      for (int i = 0; i < e.multiplicity; ++i) p = p * quad;
      for (auto& v : kernel_basis(p, tol)) numeric_vectors.push_back(v);
    }
  }

  std::vector<Eigen::VectorXd> combined;
  if (poly_degree(annihilator) >= 1) {
    auto exact = integer_kernel(poly_eval_matrix(annihilator, mt));
    for (const auto& vec : exact) {
      Eigen::VectorXd v(d);
      for (int i = 0; i < d; ++i) v(i) = to_double(vec[static_cast<std::size_t>(i)]);
      combined.push_back(v);
    }
    if (numeric_vectors.empty() && !out.uncertain) {
      if (static_cast<int>(exact.size()) != expected_dim)
        throw std::logic_error("exact invariant subspace has unexpected dimension");
      out.exact_integer_basis = std::move(exact);
    }
  } else if (numeric_vectors.empty() && !out.uncertain) {
    out.exact_integer_basis = std::vector<std::vector<BigInt>>{};  // all eigenvalues expanding
  }
  for (auto& v : numeric_vectors) combined.push_back(std::move(v));
  out.basis = gram_schmidt(combined, tol);
  return out;
}

}  // namespace bdlword
