#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bdlword/fixed_point.hpp"
#include "bdlword/linalg.hpp"
#include "bdlword/morphism.hpp"
#include "bdlword/spectral.hpp"

namespace bdlword {

/// The image phi(u) of a windowed bi-infinite word, with the delimiter placed
/// before the image of position 0 (before the next non-erased image when
/// phi(u_0) is empty). Block boundaries are kept so positions of the source
/// can be mapped into the image.
class ImageWindow {
 public:
  ImageWindow(Morphism phi, const Window& source) : phi_(std::move(phi)) {
    if (source.alphabet() != phi_.source())
      throw std::invalid_argument("image window: source window over a different alphabet");

    std::vector<std::uint8_t> right;
    right_starts_.reserve(static_cast<std::size_t>(source.right_size()) + 1);
    right_starts_.push_back(0);
    for (std::int64_t n = 0; n < source.right_size(); ++n) {
      const auto& img = phi_.image(source.letter(n)).symbols();
      right.insert(right.end(), img.begin(), img.end());
      right_starts_.push_back(static_cast<std::int64_t>(right.size()));
    }

    std::vector<std::uint8_t> left_rev;
    left_starts_.reserve(static_cast<std::size_t>(source.left_size()) + 1);
    left_starts_.push_back(0);
    for (std::int64_t i = 0; i < source.left_size(); ++i) {
      const auto& img = phi_.image(source.letter(-1 - i)).symbols();
      left_rev.insert(left_rev.end(), img.rbegin(), img.rend());
      left_starts_.push_back(static_cast<std::int64_t>(left_rev.size()));
    }

    window_ = Window(phi_.target(), std::move(left_rev), std::move(right));
  }

  const Morphism& morphism() const { return phi_; }
  const Window& window() const { return window_; }

  /// Image position of the block boundary before phi(u_n); valid for source
  /// positions n in [-left, right].
  std::int64_t image_start(std::int64_t n) const {
    if (n >= 0) {
      if (n >= static_cast<std::int64_t>(right_starts_.size()))
        throw std::out_of_range("image block boundary");
      return right_starts_[static_cast<std::size_t>(n)];
    }
    std::int64_t i = -n;
    if (i >= static_cast<std::int64_t>(left_starts_.size()))
      throw std::out_of_range("image block boundary");
    return -left_starts_[static_cast<std::size_t>(i)];
  }

 private:
  Morphism phi_;
  Window window_;
  std::vector<std::int64_t> right_starts_;  // right_starts_[n] = start of phi(u_n)
  std::vector<std::int64_t> left_starts_;   // left_starts_[i] = -start of phi(u_{-i})
};

inline ImageWindow image_window(const Morphism& phi, const Window& source) {
  return ImageWindow(phi, source);
}

/// Image window with at least `min_left`/`min_right` letters on each side,
/// grown by enlarging the source window (erasing morphisms shrink it).
inline ImageWindow image_window_with_min_sides(const Morphism& phi, const Substitution& s,
                                               const SeedPair& seed, std::int64_t min_left,
                                               std::int64_t min_right) {
  bool expands = false;
  for (int a = 0; a < phi.source().size(); ++a)
    if (!phi.image(static_cast<std::uint8_t>(a)).empty()) expands = true;
  if (!expands)
    throw std::invalid_argument("morphism erases every letter; the image is empty");
  std::int64_t source_left = std::max<std::int64_t>(min_left, 16);
  std::int64_t source_right = std::max<std::int64_t>(min_right, 16);
  for (;;) {
    auto fp = generate_window(s, seed, source_left, source_right);
    ImageWindow img(phi, fp.window());
    if (img.window().left_size() >= min_left && img.window().right_size() >= min_right)
      return img;
    if (img.window().left_size() < min_left) source_left *= 2;
    if (img.window().right_size() < min_right) source_right *= 2;
  }
}

/// A hyperplane of the target space containing M_phi H, where H is spanned by
/// `h_basis`. The image span is completed to dimension target_dim - 1 with
/// standard basis vectors in index order. Fails when M_phi H already fills
/// the target space (possible only when the target alphabet is smaller).
inline std::vector<Eigen::VectorXd> transported_hyperplane(
    const IntMatrix& m_phi, const std::vector<Eigen::VectorXd>& h_basis,
    int target_dim, double tol = 1e-9) {
  if (m_phi.rows() != target_dim)
    throw std::invalid_argument("transported hyperplane: target dimension mismatch");
  Eigen::MatrixXd phi_d = to_eigen(m_phi);
  std::vector<Eigen::VectorXd> images;
  images.reserve(h_basis.size());
  for (const auto& h : h_basis) {
    if (h.size() != m_phi.cols())
      throw std::invalid_argument("transported hyperplane: basis vector dimension mismatch");
    images.push_back(phi_d * h);
  }
  auto span = gram_schmidt(images, tol);
  if (static_cast<int>(span.size()) > target_dim - 1)
    throw std::invalid_argument(
        "image of the hyperplane spans the whole target space; no containing "
        "hyperplane exists (target alphabet too small)");
  return complete_with_standard_basis(std::move(span), target_dim, target_dim - 1, tol);
}

/// Linear conditions a normal f of the image word must satisfy: one row
/// f . (M_phi x) = 0 per expanding eigenvalue of M_psi with eigenvector x.
/// The null space of the stacked rows is the space of admissible normals.
struct NormalConstraintSystem {
  Eigen::MatrixXd constraints;  // may have zero rows
  std::vector<Eigen::VectorXd> null_basis;
  int rank = 0;
  std::vector<std::string> notes;
};

inline NormalConstraintSystem image_normal_constraints(const IntMatrix& m_phi,
                                                       const IntMatrix& m_psi,
                                                       double tol = 1e-9) {
  if (!m_psi.square())
    throw std::invalid_argument("image normal constraints: substitution matrix not square");
  if (m_phi.cols() != m_psi.rows())
    throw std::invalid_argument("image normal constraints: morphism/substitution dimension mismatch");
  SpectralReport spec = eigen_classify(m_psi, tol);
  const int db = m_phi.rows();
  const int da = m_psi.rows();

  NormalConstraintSystem out;
  if (!spec.any_of(ModulusClass::GT1)) {
    // no expanding eigenvalue forces anything: every normal is admissible
    out.constraints = Eigen::MatrixXd(0, db);
    for (int j = 0; j < db; ++j) {
      Eigen::VectorXd e = Eigen::VectorXd::Zero(db);
      e(j) = 1.0;
      out.null_basis.push_back(e);
    }
    return out;
  }
  for (const auto& e : spec.eigenvalues)
    if (e.multiplicity != 1)
      throw std::invalid_argument(
          "image normal constraints: repeated eigenvalues are not supported here");

  Eigen::MatrixXd phi_d = to_eigen(m_phi);

  // Eigenvector matrix R (columns ordered as in the report) and its inverse;
  // the coefficient of lambda_i^n in f . Psi(phi(psi^n(a_0))) is
  // (f . M_phi x_i) * [R^-1]_{i,0}, so the constraint is forced only when
  // that first-column entry is nonzero.
  Eigen::MatrixXcd r(da, da);
  for (int i = 0; i < da; ++i) {
    auto x = eigenvector(m_psi, spec.eigenvalues[static_cast<std::size_t>(i)], tol);
    for (int j = 0; j < da; ++j) r(j, i) = x[static_cast<std::size_t>(j)];
  }
  Eigen::MatrixXcd r_inv = r.inverse();

  std::vector<Eigen::RowVectorXd> rows;
  for (int i = 0; i < da; ++i) {
    const EigenClass& e = spec.eigenvalues[static_cast<std::size_t>(i)];
    if (e.modulus_class != ModulusClass::GT1) continue;
    double s_i0 = std::abs(r_inv(i, 0));
    if (s_i0 <= tol) {
      out.notes.push_back("expanding eigenvalue with vanishing expansion coefficient "
                          "skipped; its constraint is not forced");
      continue;
    }
    Eigen::VectorXcd col = r.col(i);
    Eigen::VectorXcd img = phi_d.cast<std::complex<double>>() * col;
    Eigen::RowVectorXd re(db), im(db);
    for (int j = 0; j < db; ++j) {
      re(j) = img(j).real();
      im(j) = img(j).imag();
    }
    rows.push_back(re);
    if (im.norm() > tol * (1.0 + re.norm())) rows.push_back(im);
  }

  out.constraints = Eigen::MatrixXd(static_cast<Eigen::Index>(rows.size()), db);
  for (std::size_t i = 0; i < rows.size(); ++i)
    out.constraints.row(static_cast<Eigen::Index>(i)) = rows[i];

  if (rows.empty()) {
    for (int j = 0; j < db; ++j) {
      Eigen::VectorXd e = Eigen::VectorXd::Zero(db);
      e(j) = 1.0;
      out.null_basis.push_back(e);
    }
    out.rank = 0;
    return out;
  }
  Eigen::FullPivLU<Eigen::MatrixXd> lu(out.constraints);
  lu.setThreshold(tol);
  out.rank = static_cast<int>(lu.rank());
  out.null_basis = kernel_basis(out.constraints, tol);
  return out;
}

}  // namespace bdlword
