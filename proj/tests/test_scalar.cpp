#include "doctest.h"
#include "nabla/scalar.hpp"

#include <random>

using namespace nabla;

namespace {

const BPoly Q = BPoly::q();
const BPoly T = BPoly::t();

QtScalar random_scalar(std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-3, 3), deg(0, 2);
  auto poly = [&]() {
    BPoly p;
    for (int i = 0; i < 3; ++i) p += BPoly::monomial(coef(rng), deg(rng), deg(rng));
    return p;
  };
  BPoly d = poly();
  while (d.is_zero()) d = poly();
  return QtScalar(poly(), d);
}

}  // namespace

TEST_SUITE("scalar") {

TEST_CASE("normalize cancels common factors") {
  CHECK(QtScalar(Q * Q - BPoly(1), Q - BPoly(1)) == QtScalar(Q + BPoly(1)));
  QtScalar z(BPoly(), BPoly(1) - T);
  CHECK(z.is_zero());
  CHECK(z.den() == BPoly(1));
  CHECK(QtScalar(BPoly(1) - Q, (BPoly(1) - Q) * (BPoly(1) - T)) == QtScalar(BPoly(1), BPoly(1) - T));
  CHECK_THROWS_AS(QtScalar(BPoly(1), BPoly()), std::domain_error);
}

TEST_CASE("denominator sign is fixed under lex order q > t") {
  QtScalar a(BPoly(1), T - Q);
  CHECK(a.den() == Q - T);
  CHECK(a.num() == BPoly(-1));
}

TEST_CASE("bivariate gcd") {
  BPoly f = (Q + T) * (Q * T - BPoly(2)) * (BPoly(1) - Q * Q * T);
  BPoly g = (Q + T) * (BPoly(1) - Q * Q * T) * (T + BPoly(3));
  CHECK(gcd(f, g) == (Q + T) * (Q * Q * T - BPoly(1)));
  CHECK(gcd(Q * T, Q * Q) == Q);
  CHECK(gcd(BPoly(6) * Q, BPoly(4) * T) == BPoly(2));
}

TEST_CASE("bivariate gcd against known factorizations") {
  // pairwise non-associate irreducibles
  const std::vector<BPoly> irr = {
      Q, T, Q + T, Q + BPoly(1), T + BPoly(1), BPoly(1) - Q * T, Q - T, Q * T + BPoly(2),
      Q * Q + T, BPoly(1) + Q + T, Q * Q * T - BPoly(3), Q + BPoly(mpz_class("123456789012345678901")) * T,
      BPoly(1) - Q * Q * T * T * T};
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> mult(0, 2), which(0, static_cast<int>(irr.size()) - 1);
  for (int it = 0; it < 60; ++it) {
    std::vector<int> ma(irr.size(), 0), mb(irr.size(), 0);
    for (int r = 0; r < 4; ++r) {
      ma[which(rng)] += mult(rng);
      mb[which(rng)] += mult(rng);
    }
    BPoly a(6), b(10), want(2);
    for (std::size_t i = 0; i < irr.size(); ++i) {
      for (int e = 0; e < ma[i]; ++e) a = a * irr[i];
      for (int e = 0; e < mb[i]; ++e) b = b * irr[i];
      for (int e = 0; e < std::min(ma[i], mb[i]); ++e) want = want * irr[i];
    }
    BPoly g = gcd(a, b);
    CHECK((g == want || g == -want));
    CHECK(sgn(g.lex_lead()) > 0);
  }
}

TEST_CASE("field axioms on random values") {
  std::mt19937 rng(7);
  for (int it = 0; it < 40; ++it) {
    QtScalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == QtScalar());
    if (!a.is_zero()) CHECK(a * a.inverse() == QtScalar(1));
  }
}

TEST_CASE("t_expand examples") {
  TSeries s = t_expand(QtScalar(BPoly(1), BPoly(1) - T), 3);
  for (int j = 0; j <= 3; ++j) CHECK(s[j] == QRat(1));

  TSeries s2 = t_expand(QtScalar(BPoly(1), (BPoly(1) - Q) * (BPoly(1) - T * T)), 3);
  QRat inv(UPoly(1), UPoly(1) - UPoly::q());
  CHECK(s2[0] == inv);
  CHECK(s2[1].is_zero());
  CHECK(s2[2] == inv);
  CHECK(s2[3].is_zero());

  TSeries s3 = t_expand(QtScalar(Q, Q - T), 2);
  CHECK(s3[0] == QRat(1));
  CHECK(s3[1] == QRat(UPoly(1), UPoly::q()));
  CHECK(s3[2] == QRat(UPoly(1), UPoly::monomial(1, 2)));

  CHECK_THROWS_AS(t_expand(QtScalar(BPoly(1), T), 2), std::domain_error);
}

TEST_CASE("t_expand is multiplicative") {
  std::mt19937 rng(11);
  int tested = 0;
  while (tested < 20) {
    QtScalar a = random_scalar(rng), b = random_scalar(rng);
    if (a.den().t_coeff(0).is_zero() || b.den().t_coeff(0).is_zero()) continue;
    CHECK(t_expand(a * b, 4) == t_expand(a, 4) * t_expand(b, 4));
    ++tested;
  }
  QtScalar x = QtScalar(BPoly(1), BPoly(1) - Q).pow(3) * QtScalar(BPoly(1) - Q).pow(3);
  TSeries one = t_expand(x, 3);
  CHECK(one[0] == QRat(1));
  CHECK(one[1].is_zero());
}

TEST_CASE("q-numbers and aut_q") {
  CHECK(q_number(3) == UPoly(std::vector<mpz_class>{1, 1, 1}));
  CHECK(q_factorial(0) == UPoly(1));
  CHECK(aut_q({4, 3, 1}) == q_factorial(4) * q_factorial(3));
}

TEST_CASE("substitutions") {
  QtScalar f(Q + T, BPoly(1) - Q * T);
  CHECK(substitute_power(f, 2) == QtScalar(Q * Q + T * T, BPoly(1) - Q * Q * T * T));
  CHECK(invert_t(invert_t(f)) == f);
  CHECK(invert_t(QtScalar(T)) == QtScalar(BPoly(1), T));
  CHECK(swap_qt(QtScalar(Q, BPoly(1) - T)) == QtScalar(T, BPoly(1) - Q));
}

TEST_CASE("rendering") {
  CHECK((BPoly(1) - Q + BPoly::monomial(2, 1, 1)).to_string() == "1 - q + 2*q*t");
  CHECK(QtScalar(BPoly(1), BPoly(1) - Q).to_string() == "-1/(-1 + q)");
}

}
