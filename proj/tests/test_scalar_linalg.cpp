#include "a2twist/linalg.hpp"

#include <doctest.h>

#include <random>

using namespace a2twist;
using G = GaussianRational;

namespace {

G random_gaussian(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 7);
  return G(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
}

ExactMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, double density) {
  std::bernoulli_distribution keep(density);
  ExactMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (keep(rng)) m.set(i, j, random_gaussian(rng));
  return m;
}

}  // namespace

TEST_CASE("gaussian rational examples") {
  const G one_plus_i(1, 1);
  CHECK(one_plus_i * G(1, -1) == G(2));
  CHECK(one_plus_i.inverse() == G(Rational(1, 2), Rational(-1, 2)));
  CHECK(G::i().pow(4) == G(1));
  CHECK(G::i_pow(-1) == G(0, -1));
  CHECK(G::i_pow(6) == G(-1));
  CHECK(G(Rational(2, 4), Rational(0)).to_string() == "1/2");
  CHECK_THROWS_AS(G(0).inverse(), std::domain_error);
}

TEST_CASE("gaussian rationals form a field") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const G a = random_gaussian(rng), b = random_gaussian(rng), c = random_gaussian(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == G(0));
    if (!a.is_zero()) CHECK(a * a.inverse() == G(1));
    CHECK((a * b).norm() == a.norm() * b.norm());
    G acc = c;
    acc.add_mul(a, b);
    CHECK(acc == c + a * b);
  }
}

TEST_CASE("quarter integers") {
  CHECK(QuarterInt::frac(-3, 4).q == -3);
  CHECK(QuarterInt(-3).is_one_quarter());
  CHECK(QuarterInt(-1).is_three_quarter());
  CHECK(QuarterInt(6).is_half_odd());
  CHECK(QuarterInt(-5).value() == Rational(-5, 4));
}

TEST_CASE("rank examples") {
  ExactMatrix id(3, 3);
  for (std::size_t k = 0; k < 3; ++k) id.set(k, k, 1);
  CHECK(matrix_rank(id) == 3);
  CHECK(matrix_rank(ExactMatrix(4, 5)) == 0);
  ExactMatrix m(2, 2);
  m.set(0, 0, 1);
  m.set(0, 1, G::i());
  m.set(1, 0, G::i());
  m.set(1, 1, -1);
  CHECK(matrix_rank(m) == 1);
}

TEST_CASE("rank is transpose invariant and satisfies rank plus nullity") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
    ExactMatrix a = random_matrix(rng, r, c, 0.5);
    if (trial % 3 == 0) {
      // force a dependent row
      ExactMatrix b = random_matrix(rng, 1, r, 1.0);
      ExactMatrix extra = b * a;
      ExactMatrix grown(r + 1, c);
      for (const auto& [rc, v] : a.entries()) grown.set(rc.first, rc.second, v);
      for (const auto& [rc, v] : extra.entries()) grown.set(r, rc.second, v);
      CHECK(matrix_rank(grown) == matrix_rank(a));
      a = grown;
    }
    const std::size_t rank = matrix_rank(a);
    CHECK(rank == matrix_rank(a.transpose()));
    const auto ker = kernel_basis(a);
    CHECK(rank + ker.size() == a.cols());
    for (const auto& x : ker)
      for (const auto& y : a.apply(x)) CHECK(y.is_zero());
  }
}

TEST_CASE("span membership") {
  const std::vector<G> b1{1, 0, 2}, b2{0, 1, -1};
  auto sum = span_membership({1, 1, 1}, {b1, b2});
  REQUIRE(sum);
  CHECK((*sum)[0] == G(1));
  CHECK((*sum)[1] == G(1));
  CHECK_FALSE(span_membership({0, 0, 1}, {b1, b2}));
  auto scaled = span_membership({G::i(), 0, 2 * G::i()}, {b1});
  REQUIRE(scaled);
  CHECK((*scaled)[0] == G::i());
}

TEST_CASE("echelon decomposition reproduces inserted combinations") {
  std::mt19937 rng(11);
  Echelon<G> e(5, true);
  std::vector<std::vector<G>> rows;
  for (int k = 0; k < 4; ++k) {
    std::vector<G> v(5);
    for (auto& x : v) x = random_gaussian(rng);
    rows.push_back(v);
    e.insert(v);
  }
  std::vector<G> target(5);
  const std::vector<G> w{2, G::i(), 0, G(Rational(1, 3))};
  for (std::size_t k = 0; k < 4; ++k)
    for (std::size_t j = 0; j < 5; ++j) target[j] += w[k] * rows[k][j];
  auto d = e.decompose(target);
  REQUIRE(d);
  std::vector<G> back(5);
  for (std::size_t k = 0; k < 4; ++k)
    for (std::size_t j = 0; j < 5; ++j) back[j] += (*d)[k] * rows[k][j];
  CHECK(back == target);
}
