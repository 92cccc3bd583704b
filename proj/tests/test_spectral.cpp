#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>

#include "support.hpp"

using namespace bdlword;

namespace {

const double kSqrt10 = std::sqrt(10.0);

const EigenClass& entry_with_class(const SpectralReport& report, ModulusClass c) {
  for (const auto& e : report.eigenvalues)
    if (e.modulus_class == c) return e;
  throw std::runtime_error("no eigenvalue with the requested class");
}

}  // namespace

TEST_CASE("characteristic polynomials are exact") {
  auto cp = char_poly(unit_eigenvalue_example().incidence());
  CHECK(cp.coeffs == IntPoly{-6, -10, -3, 1});  // (x+1)(x^2-4x-6)
  CHECK(char_poly(IntMatrix::identity(2)).coeffs == IntPoly{1, -2, 1});
  CHECK(char_poly(contracting_eigenvalue_example().incidence()).coeffs ==
        IntPoly{8, -12, -3, 1});
  CHECK(char_poly(thue_morse().incidence()).coeffs == IntPoly{0, -2, 1});
  CHECK(char_poly(fibonacci().incidence()).coeffs == IntPoly{-1, -1, 1});
}

TEST_CASE("characteristic polynomial agrees with determinant interpolation") {
  auto rng = testsupport::seeded_rng(5);
  std::uniform_int_distribution<int> dim(1, 4);
  std::uniform_int_distribution<int> entry(0, 5);
  for (int trial = 0; trial < 100; ++trial) {
    int d = dim(rng);
    IntMatrix m(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) m.at(i, j) = entry(rng);
    auto cp = char_poly(m);
    REQUIRE(cp.coeffs == testsupport::interpolated_char_poly(m));
    // Cayley-Hamilton, evaluated independently by Horner on matrices
    const int dd = m.rows();
    IntMatrix acc(dd, dd);
    for (auto it = cp.coeffs.rbegin(); it != cp.coeffs.rend(); ++it)
      acc = acc * m + IntMatrix::identity(dd).scaled(*it);
    REQUIRE(acc.is_zero());
  }
}

TEST_CASE("eigenvalue classification of the unit-eigenvalue example") {
  auto report = eigen_classify(unit_eigenvalue_example().incidence());
  REQUIRE(report.eigenvalues.size() == 3);
  CHECK(report.eigenvalues[0].modulus() == Catch::Approx(2 + kSqrt10).epsilon(1e-12));
  CHECK(report.eigenvalues[0].modulus_class == ModulusClass::GT1);
  CHECK(report.eigenvalues[1].modulus() == Catch::Approx(kSqrt10 - 2).epsilon(1e-12));
  CHECK(report.eigenvalues[1].modulus_class == ModulusClass::GT1);
  const auto& unit = report.eigenvalues[2];
  CHECK(unit.modulus_class == ModulusClass::EQ1_CERTIFIED);
  REQUIRE(unit.exact_integer_root.has_value());
  CHECK(*unit.exact_integer_root == -1);
  CHECK(unit.error_radius == 0.0);
  CHECK(report.min_modulus_class == ModulusClass::EQ1_CERTIFIED);
  CHECK(report.diagonalizable == Trivalent::Yes);
  for (const auto& e : report.eigenvalues) CHECK(e.error_radius <= 1e-9);
}

TEST_CASE("eigenvalue classification of further fixtures") {
  auto id = eigen_classify(IntMatrix::identity(3));
  CHECK(id.all_of(ModulusClass::EQ1_CERTIFIED));
  CHECK(id.eigenvalues.size() == 1);
  CHECK(id.eigenvalues[0].multiplicity == 3);
  CHECK(id.diagonalizable == Trivalent::Yes);

  auto tm = eigen_classify(thue_morse().incidence());
  REQUIRE(tm.eigenvalues.size() == 2);
  CHECK(tm.eigenvalues[0].value.real() == Catch::Approx(2.0));
  CHECK(tm.eigenvalues[0].modulus_class == ModulusClass::GT1);
  CHECK(tm.eigenvalues[1].value.real() == 0.0);
  CHECK(tm.eigenvalues[1].modulus_class == ModulusClass::LT1);
  CHECK(*tm.eigenvalues[1].exact_integer_root == 0);

  auto c = eigen_classify(contracting_eigenvalue_example().incidence());
  REQUIRE(c.eigenvalues.size() == 3);
  CHECK(c.eigenvalues[0].modulus() == Catch::Approx(5.0593).margin(1e-3));
  CHECK(c.eigenvalues[1].modulus() == Catch::Approx(2.6549).margin(1e-3));
  CHECK(c.eigenvalues[2].modulus() == Catch::Approx(0.5956).margin(1e-3));
  CHECK(c.eigenvalues[2].modulus_class == ModulusClass::LT1);

  // nilpotent: repeated rational root with too small a kernel
  IntMatrix nil(2, 2);
  nil.at(0, 1) = 1;
  auto n = eigen_classify(nil);
  CHECK(n.eigenvalues.size() == 1);
  CHECK(n.eigenvalues[0].multiplicity == 2);
  CHECK(n.diagonalizable == Trivalent::No);
}

TEST_CASE("one-letter substitution has a single expanding eigenvalue") {
  auto s = Substitution::from_rules(Alphabet("a"), {"aa"});
  auto report = eigen_classify(s.incidence());
  REQUIRE(report.eigenvalues.size() == 1);
  CHECK(report.eigenvalues[0].value.real() == 2.0);
  CHECK(report.eigenvalues[0].modulus_class == ModulusClass::GT1);
  CHECK(*report.eigenvalues[0].exact_integer_root == 2);
}

TEST_CASE("repeated irrational roots leave diagonalizability undecided") {
  // companion matrix of (x^2 - 2)^2 = x^4 - 4x^2 + 4
  IntMatrix companion(4, 4);
  companion.at(0, 3) = -4;
  companion.at(1, 0) = 1;
  companion.at(2, 1) = 1;
  companion.at(2, 3) = 4;
  companion.at(3, 2) = 1;
  auto report = eigen_classify(companion);
  CHECK(report.char_poly.coeffs == IntPoly{4, 0, -4, 0, 1});
  CHECK(report.diagonalizable == Trivalent::Unknown);
  int total = 0;
  for (const auto& e : report.eigenvalues) {
    total += e.multiplicity;
    CHECK(e.multiplicity == 2);
  }
  CHECK(total == 4);
}

TEST_CASE("salem-type reciprocal factor stays uncertain rather than certified") {
  // companion matrix of x^4 - 3x^3 + 3x^2 - 3x + 1: a reciprocal polynomial
  // with two real roots tau, 1/tau and a non-cyclotomic unit-modulus pair
  IntMatrix companion(4, 4);
  companion.at(0, 3) = -1;
  companion.at(1, 0) = 1;
  companion.at(1, 3) = 3;
  companion.at(2, 1) = 1;
  companion.at(2, 3) = -3;
  companion.at(3, 2) = 1;
  companion.at(3, 3) = 3;
  auto cp = char_poly(companion);
  REQUIRE(cp.coeffs == IntPoly{1, -3, 3, -3, 1});
  auto report = eigen_classify(companion);
  int uncertain = 0;
  for (const auto& e : report.eigenvalues) {
    CHECK(e.modulus_class != ModulusClass::EQ1_CERTIFIED);
    if (e.modulus_class == ModulusClass::BOUNDARY_UNCERTAIN) ++uncertain;
  }
  CHECK(uncertain == 2);
  CHECK(candidate_normal_space(companion).uncertain);
}

TEST_CASE("roots match trace and determinant on fixtures") {
  std::vector<IntMatrix> fixtures = {
      unit_eigenvalue_example().incidence(), contracting_eigenvalue_example().incidence(),
      thue_morse().incidence(), fibonacci().incidence(),
      testsupport::expansive_example().incidence()};
  for (const auto& m : fixtures) {
    auto report = eigen_classify(m);
    const int d = m.rows();
    std::complex<double> sum(0, 0), prod(1, 0);
    for (const auto& e : report.eigenvalues) {
      for (int i = 0; i < e.multiplicity; ++i) {
        sum += e.value;
        prod *= e.value;
      }
    }
    double tol = 1e-9;
    CHECK(std::abs(sum - std::complex<double>(to_double(m.trace()), 0)) <= d * tol);
    BigInt det = testsupport::bareiss_det(m);
    CHECK(std::abs(prod - std::complex<double>(to_double(det), 0)) <= d * tol);
  }
}

TEST_CASE("eigenvectors of the unit-eigenvalue example") {
  const auto& m = unit_eigenvalue_example().incidence();
  auto report = eigen_classify(m);
  auto x1 = eigenvector(m, report.eigenvalues[0]);
  CHECK(x1[0].real() == Catch::Approx(1.0));
  CHECK(x1[1].real() == Catch::Approx(3.0).epsilon(1e-9));
  CHECK(x1[2].real() == Catch::Approx(kSqrt10 - 1).epsilon(1e-9));
  auto x2 = eigenvector(m, report.eigenvalues[1]);
  CHECK(x2[1].real() == Catch::Approx(3.0).epsilon(1e-9));
  CHECK(x2[2].real() == Catch::Approx(-kSqrt10 - 1).epsilon(1e-9));

  // residual contract
  for (int i = 0; i < 3; ++i) {
    auto x = eigenvector(m, report.eigenvalues[static_cast<std::size_t>(i)]);
    Eigen::VectorXcd v(3);
    for (int j = 0; j < 3; ++j) v(j) = x[static_cast<std::size_t>(j)];
    Eigen::MatrixXcd mc = to_eigen(m).cast<std::complex<double>>();
    double residual =
        (mc * v - report.eigenvalues[static_cast<std::size_t>(i)].value * v).norm();
    CHECK(residual <= 10 * 1e-9 * v.norm());
  }
}

TEST_CASE("eigenvector edge cases") {
  auto one = eigen_classify(IntMatrix::identity(1));
  auto v = eigenvector(IntMatrix::identity(1), one.eigenvalues[0]);
  CHECK(v[0].real() == 1.0);
  auto id = eigen_classify(IntMatrix::identity(2));
  CHECK_THROWS_AS(eigenvector(IntMatrix::identity(2), id.eigenvalues[0]),
                  std::invalid_argument);
}

TEST_CASE("candidate normal space of the unit-eigenvalue example is exact") {
  auto space = candidate_normal_space(unit_eigenvalue_example().incidence());
  REQUIRE(space.basis.size() == 1);
  CHECK_FALSE(space.uncertain);
  REQUIRE(space.exact_integer_basis.has_value());
  REQUIRE(space.exact_integer_basis->size() == 1);
  CHECK((*space.exact_integer_basis)[0] == std::vector<BigInt>{3, -1, 0});
  // double basis is the unit vector in the same direction
  Eigen::VectorXd expected(3);
  expected << 3, -1, 0;
  expected.normalize();
  CHECK((space.basis[0] - expected).norm() <= 1e-12);
}

TEST_CASE("candidate normal space of further fixtures") {
  auto id = candidate_normal_space(IntMatrix::identity(3));
  CHECK(id.basis.size() == 3);
  REQUIRE(id.exact_integer_basis.has_value());
  CHECK(id.exact_integer_basis->size() == 3);

  auto c = candidate_normal_space(contracting_eigenvalue_example().incidence());
  REQUIRE(c.basis.size() == 1);
  CHECK_FALSE(c.exact_integer_basis.has_value());  // irrational contracting root
  // residual: basis vector is an eigenvector of M^T for the small eigenvalue
  auto report = eigen_classify(contracting_eigenvalue_example().incidence());
  double lambda3 = report.eigenvalues[2].value.real();
  Eigen::MatrixXd mt = to_eigen(contracting_eigenvalue_example().incidence()).transpose();
  CHECK((mt * c.basis[0] - lambda3 * c.basis[0]).norm() <= 10 * 1e-9);

  auto exp = candidate_normal_space(testsupport::expansive_example().incidence());
  CHECK(exp.basis.empty());
  REQUIRE(exp.exact_integer_basis.has_value());
  CHECK(exp.exact_integer_basis->empty());

  auto tm = candidate_normal_space(thue_morse().incidence());
  REQUIRE(tm.exact_integer_basis.has_value());
  REQUIRE(tm.exact_integer_basis->size() == 1);
  CHECK((*tm.exact_integer_basis)[0] == std::vector<BigInt>{1, -1});

  auto trib = candidate_normal_space(testsupport::tribonacci_example().incidence());
  CHECK(trib.basis.size() == 2);  // complex contracting pair
  CHECK_FALSE(trib.uncertain);
}

TEST_CASE("candidate normals are orthogonal to expanding eigenvectors") {
  std::vector<IntMatrix> fixtures = {unit_eigenvalue_example().incidence(),
                                     contracting_eigenvalue_example().incidence(),
                                     thue_morse().incidence(), fibonacci().incidence(),
                                     testsupport::tribonacci_example().incidence()};
  for (const auto& m : fixtures) {
    auto report = eigen_classify(m);
    auto space = candidate_normal_space(m);
    for (const auto& e : report.eigenvalues) {
      if (e.modulus_class != ModulusClass::GT1 || e.multiplicity != 1) continue;
      auto x = eigenvector(m, e);
      for (const auto& b : space.basis) {
        std::complex<double> dot_val(0, 0);
        for (int i = 0; i < m.rows(); ++i)
          dot_val += b(i) * x[static_cast<std::size_t>(i)];
        REQUIRE(std::abs(dot_val) <= 10 * 1e-9);
      }
    }
  }
}

TEST_CASE("powers of the transpose fix the candidate functional exactly") {
  const auto& m = unit_eigenvalue_example().incidence();
  IntMatrix mt = m.transposed();
  std::vector<BigInt> f{3, -1, 0};
  for (int n = 0; n <= 8; ++n) {
    ParikhVector v = mt.pow(static_cast<unsigned>(n)) * f;
    BigInt sign = n % 2 == 0 ? 1 : -1;
    REQUIRE(v == (ParikhVector{3 * sign, -sign, 0}));
  }
}
