#include <random>

#include "doctest.h"
#include "hopfpartial/scalar.hpp"

using hp::Rational;
using hp::Scalar;

namespace {

// Dense polynomial product reduced modulo x^2 + x + 1.
std::vector<Rational> mul_mod_phi3(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::vector<Rational> p(a.size() + b.size(), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) p[i + j] += a[i] * b[j];
  }
  for (std::size_t d = p.size(); d-- > 2;) {
    p[d - 1] -= p[d];
    p[d - 2] -= p[d];
    p[d] = 0;
  }
  p.resize(2);
  return p;
}

Scalar random_scalar(std::mt19937& rng, int order) {
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  std::vector<Rational> c(order);
  for (auto& x : c) {
    x = Rational(num(rng), den(rng));
    x.canonicalize();
  }
  return Scalar::from_coeffs(order, c);
}

}  // namespace

TEST_CASE("roots of unity") {
  Scalar z2 = Scalar::root_of_unity(2, 1);
  CHECK(z2 * z2 == Scalar(1));
  CHECK(z2 == Scalar(-1));
  Scalar z4 = Scalar::root_of_unity(4, 1);
  CHECK((z4 + Scalar::root_of_unity(4, 3)).is_zero());
  CHECK(z4 * z4 == Scalar(-1));
  CHECK(Scalar::root_of_unity(6, 2) == Scalar::root_of_unity(3, 1));
  CHECK(Scalar::root_of_unity(5, 5).is_one());
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(hp::cyclotomic_polynomial(1) == std::vector<std::int64_t>{-1, 1});
  CHECK(hp::cyclotomic_polynomial(4) == std::vector<std::int64_t>{1, 0, 1});
  CHECK(hp::cyclotomic_polynomial(6) == std::vector<std::int64_t>{1, -1, 1});
  CHECK(hp::euler_phi(12) == 4);
}

TEST_CASE("product in Q(zeta_3) against dense polynomial arithmetic") {
  Rational half(1, 2);
  Scalar a = Scalar(half) + Scalar::root_of_unity(3, 1);
  Scalar conj = Scalar(half) + Scalar::root_of_unity(3, 2);
  std::vector<Rational> expect = mul_mod_phi3({half, 1}, {half - 1, -1});
  CHECK((a * conj).coefficients_at(3) == expect);

  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    Scalar x = random_scalar(rng, 3);
    Scalar y = random_scalar(rng, 3);
    CHECK((x * y).coefficients_at(3) == mul_mod_phi3(x.coefficients_at(3), y.coefficients_at(3)));
  }
}

TEST_CASE("field axioms on sampled scalars") {
  std::mt19937 rng(11);
  for (int order : {1, 4, 5, 8, 12}) {
    for (int trial = 0; trial < 20; ++trial) {
      Scalar x = random_scalar(rng, order);
      Scalar y = random_scalar(rng, order);
      Scalar z = random_scalar(rng, order);
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * (y + z) == x * y + x * z);
      if (!x.is_zero()) CHECK(x * x.inverse() == Scalar(1));
    }
  }
}

TEST_CASE("mixed orders promote to the lcm") {
  Scalar i = Scalar::root_of_unity(4, 1);
  Scalar w = Scalar::root_of_unity(3, 1);
  Scalar p = i * w;
  CHECK(p == Scalar::root_of_unity(12, 7));
  CHECK(p / w == i);
}

TEST_CASE("division by zero") {
  CHECK_THROWS_AS(Scalar(3) / Scalar(0), hp::Error);
  try {
    (void)Scalar(0).inverse();
  } catch (const hp::Error& e) {
    CHECK(e.kind() == hp::ErrorKind::DivisionByZero);
  }
}

TEST_CASE("rational strings") {
  CHECK(hp::rational_to_string(Rational(3)) == "3/1");
  CHECK(hp::parse_rational("-6/4") == Rational(-3, 2));
  CHECK_THROWS_AS(hp::parse_rational("1/0"), hp::Error);
}
