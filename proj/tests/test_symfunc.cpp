#include "doctest.h"
#include "nabla/symfunc.hpp"

#include <map>

using namespace nabla;

namespace {

const BPoly Q = BPoly::q();
const BPoly T = BPoly::t();
QtScalar qs(const BPoly& p) { return QtScalar(p); }

// Labels a in [1..N]^n, each sorted representative once.
void sorted_labels(int n, int N, int lo, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == n) {
    out.push_back(cur);
    return;
  }
  for (int v = lo; v <= N; ++v) {
    cur.push_back(v);
    sorted_labels(n, N, v, cur, out);
    cur.pop_back();
  }
}

}  // namespace

TEST_SUITE("symfunc") {

TEST_CASE("partition basics") {
  CHECK(partitions_of(4).size() == 5);
  CHECK(partitions_of(0).size() == 1);
  CHECK(partitions_of(4).front() == Partition{4});
  CHECK(conjugate({4, 3, 1}) == Partition{3, 2, 2, 1});
  CHECK(conjugate(conjugate({5, 2, 2, 1})) == Partition{5, 2, 2, 1});
  CHECK(n_stat({4, 3, 1}) == 5);
  CHECK(n_stat({1, 1, 1, 1}) == 6);
  CHECK(dominated_by({2, 2}, {3, 1}));
  CHECK_FALSE(dominated_by({3, 1}, {2, 2}));
  CHECK(z_lambda({2}) == 2);
  CHECK(z_lambda({1, 1}) == 2);
  for (int n = 1; n <= 7; ++n) {
    const auto& ps = partitions_of(n);
    for (std::size_t i = 0; i < ps.size(); ++i)
      for (std::size_t j = i + 1; j < ps.size(); ++j) CHECK_FALSE(dominated_by(ps[i], ps[j]));
  }
}

TEST_CASE("basis conversions") {
  CHECK(convert(elementary(1), Basis::m) == SymFunc(Basis::m, {1}));
  SymFunc h2 = convert(complete(2), Basis::m);
  CHECK(h2.coeff({2}) == QtScalar(1));
  CHECK(h2.coeff({1, 1}) == QtScalar(1));
  SymFunc e2 = convert(elementary(2), Basis::s);
  CHECK(e2.terms().size() == 1);
  CHECK(e2.coeff({1, 1}) == QtScalar(1));
  // Kostka K_{(2,1),(1,1,1)} = 2
  CHECK(convert(SymFunc(Basis::s, {2, 1}), Basis::m).coeff({1, 1, 1}) == QtScalar(2));
}

TEST_CASE("round trips and h/m duality up to degree 6") {
  const Basis bases[] = {Basis::m, Basis::e, Basis::h, Basis::p, Basis::s};
  for (int n = 1; n <= 6; ++n) {
    for (const auto& lam : partitions_of(n)) {
      for (Basis b : bases) {
        SymFunc f(b, lam);
        for (Basis c : bases) CHECK(convert(convert(f, c), b) == f);
      }
      for (const auto& mu : partitions_of(n)) {
        QtScalar v = hall_inner(SymFunc(Basis::h, lam), SymFunc(Basis::m, mu));
        CHECK(v == QtScalar(lam == mu ? 1 : 0));
      }
    }
  }
}

TEST_CASE("Hall inner product") {
  for (const auto& lam : partitions_of(4))
    for (const auto& mu : partitions_of(4))
      CHECK(hall_inner(SymFunc(Basis::s, lam), SymFunc(Basis::s, mu)) == QtScalar(lam == mu ? 1 : 0));
  CHECK(hall_inner(power_sum(2), power_sum(2)) == QtScalar(2));
  // e_1^2 = e_2 + (e_1^2 - e_2); only e_2's pairing with itself survives
  SymFunc e11 = multiply(elementary(1), elementary(1));
  CHECK(hall_inner(e11, elementary(2)) == QtScalar(1));
}

TEST_CASE("q,t inner product") {
  CHECK(qt_inner(power_sum(1), power_sum(1)) == QtScalar(BPoly(1) - Q, BPoly(1) - T));
  CHECK(qt_inner(power_sum(2), SymFunc(Basis::p, {1, 1})).is_zero());
  QtScalar x(BPoly(1) - Q, BPoly(1) - T);
  CHECK(qt_inner(SymFunc(Basis::p, {1, 1}), SymFunc(Basis::p, {1, 1})) == x * x * QtScalar(2));
}

TEST_CASE("plethysm by the power-sum rule") {
  SymFunc r = plethysm(power_sum(2), qs(BPoly(1) - Q));
  CHECK(r.coeff({2}) == qs(BPoly(1) - Q * Q));
  for (const auto& lam : partitions_of(3)) {
    SymFunc f(Basis::s, lam);
    CHECK(plethysm(f, QtScalar(1)) == f);
  }
  SymFunc f = SymFunc(Basis::s, {2, 1}), g = SymFunc(Basis::e, {1, 1});
  QtScalar a(BPoly(1), BPoly(1) - Q);
  CHECK(plethysm(f + g, a) == plethysm(f, a) + plethysm(g, a));
  CHECK(plethysm(multiply(f, g), a) == multiply(plethysm(f, a), plethysm(g, a)));
}

TEST_CASE("e_2[X/(1-q)] matches the coset sum in two variables") {
  const int n = 2, N = 2;
  Poly lhs = expand(plethysm(elementary(n), QtScalar(BPoly(1), BPoly(1) - Q)), N);
  Poly rhs;
  std::vector<std::vector<int>> labels;
  std::vector<int> cur;
  sorted_labels(n, N, 1, cur, labels);
  QtScalar base = QtScalar(BPoly(1), BPoly(1) - Q).pow(n);
  for (const auto& a : labels) {
    Partition mu = multiplicities(a);
    std::vector<int> ex(N, 0);
    for (int v : a) ex[v - 1]++;
    QtScalar c = base * qt_monomial(n_stat(conjugate(mu)), 0) *
                 QtScalar(BPoly(1), BPoly(aut_q(mu)));
    rhs.add(Monomial{ex, std::vector<int>(N, 0)}, c);
  }
  CHECK(lhs == rhs);
}

TEST_CASE("XY plethysm in one variable each") {
  Poly p = expand_xy(complete(1), QtScalar(BPoly(1), (BPoly(1) - Q) * (BPoly(1) - T)), 1);
  CHECK(p.terms().size() == 1);
  CHECK(p.coeff(Monomial{{1}, {1}}) == QtScalar(BPoly(1), (BPoly(1) - Q) * (BPoly(1) - T)));
}

TEST_CASE("omega involution") {
  for (int n = 1; n <= 5; ++n) {
    CHECK(omega_involution(elementary(n)) == complete(n));
    for (const auto& lam : partitions_of(n)) {
      SymFunc s(Basis::s, lam);
      CHECK(omega_involution(s) == SymFunc(Basis::s, conjugate(lam)));
      CHECK(omega_involution(omega_involution(s)) == s);
    }
  }
  CHECK(omega_involution(SymFunc(Basis::s, {2, 1})) == SymFunc(Basis::s, {2, 1}));
}

TEST_CASE("quasi-symmetric monomials") {
  Poly m1 = quasisym_M({1}, 2);
  CHECK(m1.terms().size() == 2);
  CHECK(quasisym_M({2}, 1).coeff(Monomial{{2}, {0}}) == QtScalar(1));
  Poly sum = quasisym_M({2, 1}, 3);
  sum += quasisym_M({1, 2}, 3);
  CHECK(sum == expand(SymFunc(Basis::m, {2, 1}), 3));
}

TEST_CASE("h_n over N variables is the sum over sorted labels") {
  for (int n = 1; n <= 4; ++n) {
    for (int N = 1; N <= 3; ++N) {
      Poly rhs;
      std::vector<std::vector<int>> labels;
      std::vector<int> cur;
      sorted_labels(n, N, 1, cur, labels);
      for (const auto& a : labels) {
        std::vector<int> ex(N, 0);
        for (int v : a) ex[v - 1]++;
        rhs.add(Monomial{ex, std::vector<int>(N, 0)}, QtScalar(1));
      }
      CHECK(expand(complete(n), N) == rhs);
    }
  }
}

TEST_CASE("rendering") {
  SymFunc f(Basis::s, {2});
  f.add({1, 1}, qt_q());
  CHECK(f.to_string() == "s[2] + q*s[1,1]");
  SymFunc g(Basis::s, {1, 1}, QtScalar(Q + T));
  CHECK(g.to_string() == "(q + t)*s[1,1]");
}

}
