#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace bdlword;

TEST_CASE("generated windows match the construction") {
  const auto& c = contracting_eigenvalue_example();
  auto fp = generate_window(c, default_seed(c), 0, 10);
  std::string right;
  for (auto s : fp.window().right_letters()) right += c.alphabet().letter(s);
  CHECK(right == "AABBBCCCCA");

  const auto& psi = unit_eigenvalue_example();
  auto fp15 = generate_window(psi, default_seed(psi), 0, 15);
  std::string r15;
  for (auto s : fp15.window().right_letters()) r15 += psi.alphabet().letter(s);
  CHECK(r15 == "BACCBBBBCCCABBB");

  auto empty = generate_window(psi, default_seed(psi), 0, 0);
  CHECK(empty.window().left_size() == 0);
  CHECK(empty.window().right_size() == 0);

  // left side ends with v b = BACC B
  auto fp_left = generate_window(psi, default_seed(psi), 5, 0);
  CHECK(fp_left.window().dump() == "BACCB|");
}

TEST_CASE("window positions and dump") {
  auto w = testsupport::example_word_window();
  CHECK(w.dump() == "CBCBCB|CBACC");
  CHECK(w.alphabet().letter(w.letter(0)) == 'C');
  CHECK(w.alphabet().letter(w.letter(-1)) == 'B');
  CHECK(w.alphabet().letter(w.letter(-3)) == 'B');
  CHECK(w.alphabet().letter(w.letter(4)) == 'C');
  CHECK_THROWS_AS(w.letter(5), std::out_of_range);
  CHECK_THROWS_AS(w.letter(-7), std::out_of_range);
  CHECK(w.truncated(2, 3).dump() == "CB|CBA");
}

TEST_CASE("invalid seeds are rejected") {
  const auto& psi = unit_eigenvalue_example();
  SeedPair bad;
  bad.power = 1;
  bad.a = 0;  // psi(A) = BBBCCC does not start with A
  bad.b = 1;
  bad.w = FiniteWord::parse(psi.alphabet(), "BBCCC");
  bad.v = FiniteWord::parse(psi.alphabet(), "BACC");
  CHECK_THROWS_AS(generate_window(psi, bad, 4, 4), std::invalid_argument);

  auto seed = default_seed(psi);
  seed.w = FiniteWord::parse(psi.alphabet(), "ACCA");  // stored w inconsistent
  CHECK_THROWS_AS(generate_window(psi, seed, 4, 4), std::invalid_argument);
}

TEST_CASE("window stability under enlargement") {
  std::vector<const Substitution*> fixtures = {
      &unit_eigenvalue_example(), &contracting_eigenvalue_example(), &thue_morse(),
      &fibonacci()};
  for (const auto* s : fixtures) {
    auto seed = default_seed(*s);
    auto small = generate_window(*s, seed, 200, 200);
    auto large = generate_window(*s, seed, 3000, 3000);
    for (std::int64_t n = -200; n < 200; ++n)
      REQUIRE(small.window().letter(n) == large.window().letter(n));
    // cross-check the right side against naive repeated application
    std::string naive = testsupport::naive_fixed_point_prefix(*s, seed, 200);
    std::string right;
    for (std::int64_t n = 0; n < 200; ++n)
      right += s->alphabet().letter(small.window().letter(n));
    REQUIRE(right == naive);
  }
}

TEST_CASE("applying the substitution maps the window into itself") {
  std::vector<const Substitution*> fixtures = {&unit_eigenvalue_example(),
                                               &thue_morse()};
  for (const auto* s : fixtures) {
    auto seed = default_seed(*s);
    auto fp = generate_window(*s, seed, 4000, 4000);
    auto sigma = seed.power == 1 ? *s : s->power(seed.power);

    std::vector<std::uint8_t> right_part(
        fp.window().right_letters().begin(),
        fp.window().right_letters().begin() + 50);
    auto image = sigma.apply(FiniteWord(s->alphabet(), right_part));
    for (std::size_t i = 0; i < image.size(); ++i)
      REQUIRE(image[i] == fp.window().letter(static_cast<std::int64_t>(i)));

    std::vector<std::uint8_t> left_part;
    for (std::int64_t n = -50; n < 0; ++n) left_part.push_back(fp.window().letter(n));
    auto left_image = sigma.apply(FiniteWord(s->alphabet(), left_part));
    auto len = static_cast<std::int64_t>(left_image.size());
    for (std::int64_t i = 0; i < len; ++i)
      REQUIRE(left_image[static_cast<std::size_t>(i)] == fp.window().letter(i - len));
  }
}

TEST_CASE("parikh path values on the example word") {
  auto path = parikh_path(testsupport::example_word_window());
  CHECK(path.psi(0) == ParikhVector{0, 0, 0});
  CHECK(path.psi(1) == ParikhVector{0, 0, 1});
  CHECK(path.psi(2) == ParikhVector{0, 1, 1});
  CHECK(path.psi(-3) == ParikhVector{0, -2, -1});
  CHECK(path.n_min() == -6);
  CHECK(path.n_max() == 5);
  CHECK_THROWS_AS(path.psi(6), std::out_of_range);
}

TEST_CASE("parikh path telescoping and entry sums") {
  const auto& psi = unit_eigenvalue_example();
  auto fp = generate_window(psi, default_seed(psi), 300, 300);
  auto path = parikh_path(fp);
  for (std::int64_t n = path.n_min(); n < path.n_max(); ++n) {
    ParikhVector delta = vec_sub(path.psi(n + 1), path.psi(n));
    ParikhVector unit(3);
    unit[fp.window().letter(n)] = 1;
    REQUIRE(delta == unit);
  }
  for (std::int64_t n = path.n_min(); n <= path.n_max(); ++n)
    REQUIRE(vec_sum(path.psi(n)) == BigInt(n));
}

TEST_CASE("prefix-of-fixed-point checks") {
  const auto& psi = unit_eigenvalue_example();
  auto seed = default_seed(psi);
  CHECK(is_prefix_of_fixed_point(psi, seed, FiniteWord::parse(psi.alphabet(), "BAC")));
  CHECK(is_prefix_of_fixed_point(psi, seed, FiniteWord(psi.alphabet())));
  CHECK_FALSE(is_prefix_of_fixed_point(psi, seed,
                                       FiniteWord::parse(psi.alphabet(), "BACA")));
  auto f1 = witness_prefix(1, true);
  REQUIRE(f1.word.has_value());
  CHECK(f1.word->size() == 75);
  CHECK(is_prefix_of_fixed_point(psi, seed, *f1.word));
}
