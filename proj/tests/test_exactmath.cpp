#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>

#include "support.hpp"

using namespace bdlword;

namespace {

IntPoly poly(std::initializer_list<long long> coeffs) {
  IntPoly p;
  for (auto c : coeffs) p.emplace_back(c);
  poly_trim(p);
  return p;
}

}  // namespace

TEST_CASE("polynomial arithmetic basics") {
  auto p = poly({-1, 0, 1});            // x^2 - 1
  auto q = poly({1, 1});                // x + 1
  CHECK(poly_mul(q, poly({-1, 1})) == p);
  CHECK(poly_degree(p) == 2);
  CHECK(poly_add(p, poly({1})) == poly({0, 0, 1}));
  CHECK(poly_sub(p, p).empty());
  CHECK(poly_derivative(p) == poly({0, 2}));
  CHECK(poly_eval<BigInt>(p, BigInt(3)) == 8);
  CHECK(poly_to_string(poly({-6, -10, -3, 1})) == "x^3 - 3*x^2 - 10*x - 6");
  CHECK(poly_to_string(IntPoly{}) == "0");
}

TEST_CASE("monic division") {
  auto p = poly({-6, -10, -3, 1});
  auto lin = poly({1, 1});  // x + 1
  auto q = poly_try_divide_monic(p, lin);
  REQUIRE(q.has_value());
  CHECK(*q == poly({-6, -4, 1}));
  CHECK_FALSE(poly_try_divide_monic(p, poly({-1, 1})).has_value());
  CHECK_THROWS_AS(poly_try_divide_monic(p, poly({1, 2})), std::invalid_argument);
  CHECK_THROWS_AS(poly_divide_exact_monic(p, poly({-1, 1})), std::logic_error);
}

TEST_CASE("gcd in Z[x]") {
  auto a = poly_mul(poly({1, 1}), poly({-2, 1}));   // (x+1)(x-2)
  auto b = poly_mul(poly({1, 1}), poly({5, 1}));    // (x+1)(x+5)
  CHECK(poly_gcd(a, b) == poly({1, 1}));
  CHECK(poly_gcd(a, IntPoly{}) == a);
  // content is stripped: gcd(2x+2, 4x+4) = x+1
  CHECK(poly_gcd(poly({2, 2}), poly({4, 4})) == poly({1, 1}));
  // coprime inputs give a constant
  CHECK(poly_degree(poly_gcd(poly({1, 1}), poly({-1, 1}))) == 0);
}

TEST_CASE("squarefree decomposition") {
  // (x-1)^2 (x+2)^3
  auto p = poly_mul(poly_mul(poly({-1, 1}), poly({-1, 1})),
                    poly_mul(poly_mul(poly({2, 1}), poly({2, 1})), poly({2, 1})));
  auto factors = poly_squarefree_decomposition(p);
  REQUIRE(factors.size() == 2);
  CHECK(factors[0].first == poly({-1, 1}));
  CHECK(factors[0].second == 2);
  CHECK(factors[1].first == poly({2, 1}));
  CHECK(factors[1].second == 3);

  auto squarefree = poly_squarefree_decomposition(poly({-6, -10, -3, 1}));
  REQUIRE(squarefree.size() == 1);
  CHECK(squarefree[0].second == 1);

  // multiplicities reassemble the input
  auto rng = testsupport::seeded_rng(8);
  std::uniform_int_distribution<int> root(-3, 3), mult(1, 3);
  for (int trial = 0; trial < 30; ++trial) {
    IntPoly prod{1};
    for (int i = 0; i < 3; ++i) {
      int r = root(rng), m = mult(rng);
      for (int j = 0; j < m; ++j) prod = poly_mul(prod, poly({-r, 1}));
    }
    IntPoly reassembled{1};
    for (const auto& [f, m] : poly_squarefree_decomposition(prod))
      for (int j = 0; j < m; ++j) reassembled = poly_mul(reassembled, f);
    REQUIRE(reassembled == prod);
  }
}

TEST_CASE("reciprocal and cyclotomic polynomials") {
  CHECK(poly_reciprocal(poly({-6, -10, -3, 1})) == poly({1, -3, -10, -6}));
  CHECK(cyclotomic_polynomial(1) == poly({-1, 1}));
  CHECK(cyclotomic_polynomial(2) == poly({1, 1}));
  CHECK(cyclotomic_polynomial(4) == poly({1, 0, 1}));
  CHECK(cyclotomic_polynomial(6) == poly({1, -1, 1}));
  CHECK(cyclotomic_polynomial(12) == poly({1, 0, -1, 0, 1}));
  // prod over d | n of Phi_d = x^n - 1
  for (int n : {6, 10, 12}) {
    IntPoly prod{1};
    for (int d = 1; d <= n; ++d)
      if (n % d == 0) prod = poly_mul(prod, cyclotomic_polynomial(d));
    IntPoly expected(static_cast<std::size_t>(n + 1));
    expected[0] = -1;
    expected[static_cast<std::size_t>(n)] = 1;
    REQUIRE(prod == expected);
  }
}

TEST_CASE("root finder locates planted roots within its radii") {
  auto rng = testsupport::seeded_rng(9);
  std::uniform_int_distribution<int> root(-4, 4);
  for (int trial = 0; trial < 50; ++trial) {
    // plant 3 distinct integer roots
    std::vector<int> planted;
    while (planted.size() < 3) {
      int r = root(rng);
      bool fresh = true;
      for (int p : planted)
        if (p == r) fresh = false;
      if (fresh) planted.push_back(r);
    }
    std::vector<double> coeffs{1.0};
    for (int r : planted) {
      std::vector<double> next(coeffs.size() + 1, 0.0);
      for (std::size_t i = 0; i < coeffs.size(); ++i) {
        next[i + 1] += coeffs[i];
        next[i] -= coeffs[i] * r;
      }
      coeffs = std::move(next);
    }
    auto located = find_roots_monic(coeffs);
    REQUIRE(located.size() == 3);
    std::sort(planted.begin(), planted.end(), std::greater<>());
    std::sort(located.begin(), located.end(), [](const auto& a, const auto& b) {
      return a.value.real() > b.value.real();
    });
    for (std::size_t i = 0; i < 3; ++i) {
      REQUIRE(located[i].converged);
      REQUIRE(std::abs(located[i].value - std::complex<double>(planted[i], 0)) <=
              std::max(located[i].radius, 1e-10));
    }
  }
  // complex pair
  auto pair = find_roots_monic({2.0, -2.0, 1.0});  // roots 1 +- i
  REQUIRE(pair.size() == 2);
  CHECK(std::abs(pair[0].value - std::complex<double>(1, 1)) <= 1e-9);
  CHECK(std::abs(pair[1].value - std::complex<double>(1, -1)) <= 1e-9);
}

TEST_CASE("exact integer kernels") {
  // kernel of [[1,2,3],[2,4,6]] is 2-dimensional
  IntMatrix m(2, 3);
  m.at(0, 0) = 1; m.at(0, 1) = 2; m.at(0, 2) = 3;
  m.at(1, 0) = 2; m.at(1, 1) = 4; m.at(1, 2) = 6;
  auto kernel = integer_kernel(m);
  REQUIRE(kernel.size() == 2);
  for (const auto& v : kernel) {
    // primitive, sign-normalized, and annihilated exactly
    BigInt g = 0;
    for (const auto& c : v) g = boost::multiprecision::gcd(g, c);
    CHECK(g == 1);
    ParikhVector pv(v.begin(), v.end());
    ParikhVector image = m * pv;
    for (const auto& c : image) REQUIRE(c == 0);
  }

  CHECK(integer_kernel(IntMatrix::identity(3)).empty());
  CHECK(integer_kernel(IntMatrix(2, 2)).size() == 2);  // zero matrix

  // random matrices: rank-nullity and exact annihilation
  auto rng = testsupport::seeded_rng(10);
  std::uniform_int_distribution<int> entry(-3, 3), dims(1, 4);
  for (int trial = 0; trial < 50; ++trial) {
    int rows = dims(rng), cols = dims(rng);
    IntMatrix a(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) a.at(i, j) = entry(rng);
    auto basis = integer_kernel(a);
    for (const auto& v : basis) {
      ParikhVector pv(v.begin(), v.end());
      ParikhVector image = a * pv;
      for (const auto& c : image) REQUIRE(c == 0);
    }
  }
}

TEST_CASE("cyclotomic unit roots are certified through the reciprocal gcd") {
  // companion of (x^2 + 1)(x - 2) = x^3 - 2x^2 + x - 2: eigenvalues +-i and 2
  IntMatrix companion(3, 3);
  companion.at(0, 2) = 2;
  companion.at(1, 0) = 1;
  companion.at(1, 2) = -1;
  companion.at(2, 1) = 1;
  companion.at(2, 2) = 2;
  auto report = eigen_classify(companion);
  REQUIRE(report.char_poly.coeffs == poly({-2, 1, -2, 1}));
  int certified = 0;
  for (const auto& e : report.eigenvalues) {
    if (e.modulus_class == ModulusClass::EQ1_CERTIFIED) {
      ++certified;
      REQUIRE(e.cyclotomic_index.has_value());
      CHECK(*e.cyclotomic_index == 4);
      CHECK(std::abs(e.value.real()) <= 1e-12);
      CHECK(std::abs(std::abs(e.value.imag()) - 1.0) <= 1e-12);
    }
  }
  CHECK(certified == 2);

  // the contracted invariant subspace is computed exactly from Phi_4
  auto space = candidate_normal_space(companion);
  REQUIRE(space.exact_integer_basis.has_value());
  CHECK(space.exact_integer_basis->size() == 2);
  CHECK(space.basis.size() == 2);
}

TEST_CASE("spectral consistency on random signed matrices") {
  auto rng = testsupport::seeded_rng(11);
  std::uniform_int_distribution<int> entry(-3, 5), dims(1, 5);
  for (int trial = 0; trial < 60; ++trial) {
    int d = dims(rng);
    IntMatrix m(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) m.at(i, j) = entry(rng);
    auto report = eigen_classify(m);
    int total = 0;
    bool all_tight = true;
    std::complex<double> sum(0, 0);
    for (const auto& e : report.eigenvalues) {
      total += e.multiplicity;
      if (e.modulus_class == ModulusClass::BOUNDARY_UNCERTAIN && e.error_radius > 1e-9)
        all_tight = false;
      for (int i = 0; i < e.multiplicity; ++i) sum += e.value;
    }
    REQUIRE(total == d);
    if (all_tight)
      REQUIRE(std::abs(sum - std::complex<double>(to_double(m.trace()), 0)) <=
              d * 1e-8);
  }
}
