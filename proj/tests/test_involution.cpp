#include "doctest.h"
#include "nabla/involution.hpp"
#include "nabla/omega.hpp"

#include <set>
#include <tuple>

using namespace nabla;

namespace {

const VanQuadruple ank{2, {3, 2, 1, 1, 2, 4}, {3, 1, 0, 0, 0, 0}, {1, 3, 2, 4, 1, 5}};

// membership written out directly from the three conditions
bool member(const VanQuadruple& A, int k) {
  const int n = A.size();
  auto key = [&](int i) { return std::make_tuple(A.a[i], -A.m[i], A.b[i]); };
  for (int i = 0; i < A.l; ++i)
    if (A.m[i] == 0) return false;
  for (int i = A.l; i + 1 < n; ++i)
    if (key(i) > key(i + 1)) return false;
  for (int i = 0; i + 1 < A.l; ++i)
    if (key(i) < key(i + 1)) return false;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (A.m[j] - k + 1 <= A.m[i] && A.m[i] <= A.m[j] + k && A.b[i] == A.b[j]) return false;
  return true;
}

std::vector<std::vector<int>> as_rows(const VanQuadruple& A) { return {{A.l}, A.a, A.m, A.b}; }

}  // namespace

TEST_SUITE("involution") {

TEST_CASE("d_k in the reverse frame") {
  CHECK(d_k_rev(ank.m, ank.b, 2) == 16);
  const std::vector<std::vector<int>> want{{1, 0, -1, -1, -1, -1}, {-1, 1, 2, 1, 2, 1}, {-2, 1, 1, 2, 1, 2},
                                           {-2, 0, 1, 1, 1, 2},    {-2, 1, 2, 2, 1, 2}, {-2, 0, 1, 1, 1, 1}};
  CHECK(d_table(ank.m, ank.b, 2) == want);
  CHECK(d_table(ank.m, ank.b, 2)[0][1] == 0);
  CHECK(d_k_rev({5}, {2}, 3) == 0);
}

TEST_CASE("membership") {
  CHECK(is_van(ank, 2));
  CHECK(member(ank, 2));
  VanQuadruple bad = ank;
  bad.m[1] = 0;  // left of the line needs m > 0
  CHECK_FALSE(is_van(bad, 2));
  bad = ank;
  bad.b[3] = 2;  // positions 3 and 4 attack and would share b
  CHECK_FALSE(is_van(bad, 2));
}

TEST_CASE("enumeration against a brute-force filter") {
  for (int k = 1; k <= 2; ++k) {
    const int n = 2, N = 2, D = 2;
    std::set<std::vector<std::vector<int>>> brute;
    for (int l = 0; l <= n; ++l)
      for (const auto& a : all_labels(n, N))
        for (const auto& b : all_labels(n, N))
          for (int d = 0; d <= D; ++d)
            for (const auto& m : exponent_vectors(d, n)) {
              VanQuadruple A{l, a, m, b};
              if (member(A, k)) brute.insert(as_rows(A));
            }
    std::set<std::vector<std::vector<int>>> fast;
    for (const auto& A : enumerate_van(n, k, D, N)) {
      CHECK(is_van(A, k));
      fast.insert(as_rows(A));
    }
    CHECK(fast == brute);
  }
  // n = 1, D = 0: only l = 0 with every (a, b)
  auto one = enumerate_van(1, 1, 0, 3);
  CHECK(one.size() == 9);
  for (const auto& A : one) CHECK(A.l == 0);
  // N = 1 forces every pair of entries to be non-attacking
  for (const auto& A : enumerate_van(2, 1, 3, 1)) CHECK_FALSE(attacks_rev(A.m[0], A.m[1], 1));
}

TEST_CASE("sigma, movability and iota on the worked example") {
  CHECK(sigma(ank) == std::vector<int>{5, 3, 1, 2, 4, 6});
  CHECK_FALSE(move(ank, 3, 2).has_value());
  CHECK_FALSE(movable(ank, 3, 2));
  CHECK_FALSE(movable(ank, 4, 2));
  CHECK_FALSE(movable(ank, 2, 2));
  CHECK_FALSE(movable(ank, 5, 2));
  CHECK(movable(ank, 1, 2));
  const VanQuadruple want{1, {2, 1, 1, 2, 3, 4}, {1, 0, 0, 0, 3, 0}, {3, 2, 4, 1, 1, 5}};
  CHECK(iota(ank, 2) == want);
  CHECK(iota(want, 2) == ank);
  CHECK_THROWS_AS(move(ank, 7, 2), std::out_of_range);
  // nothing moves left when every m is zero
  VanQuadruple flat{0, {1, 2}, {0, 0}, {1, 1}};
  for (int i = 1; i <= 2; ++i) CHECK_FALSE(move(flat, i, 1).has_value());
}

TEST_CASE("iota is a sign-reversing involution") {
  for (int n = 1; n <= 4; ++n)
    for (int k = 1; k <= 2; ++k)
      for (const auto& A : enumerate_van(n, k, n <= 3 ? 4 : 3, n <= 3 ? 4 : 3)) {
        const VanQuadruple B = iota(A, k);
        CHECK(iota(B, k) == A);
        if (B == A) continue;
        CHECK(d_k_rev(B.m, B.b, k) == d_k_rev(A.m, A.b, k));
        CHECK(B.weight() == A.weight());
        CHECK((A.l + B.l) % 2 == 1);
      }
}

TEST_CASE("T diagram") {
  VanQuadruple P{0, {2, 2, 1, 2, 1, 3, 1}, {1, 0, 0, 1, 2, 1, 0}, {1, 1, 3, 2, 3, 1, 1}};
  const TDiagram T = t_diagram(P);
  CHECK(T.to_string() == "23 01 03\n11 12 01\n11");
  CHECK(T.shape() == Composition{3, 3, 1});
  VanQuadruple moved = P;
  moved.l = 2;
  CHECK(t_diagram(moved).to_string() == T.to_string());
  CHECK(t_diagram(VanQuadruple{0, {4, 4}, {0, 2}, {3, 1}}).to_string() == "21 03");
}

TEST_CASE("canonical fixed points") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& lam : partitions_of(n))
      for (int k = 1; k <= 2; ++k) {
        const VanQuadruple A = canonical_fixed_point(lam, k);
        CHECK(is_van(A, k));
        CHECK(iota(A, k) == A);
        CHECK(A.weight() == k * n_stat(lam));
        CHECK(d_k_rev(A.m, A.b, k) == k * n_stat(conjugate(lam)));
      }
  const VanQuadruple c = canonical_fixed_point({2, 1}, 2);
  CHECK(c.a == Label{1, 1, 2});
  CHECK(c.m == std::vector<int>{0, 0, 2});
  CHECK(c.b == Label{1, 2, 1});
}

TEST_CASE("vanishing against the Macdonald side") {
  for (int n = 1; n <= 3; ++n)
    for (int k = 1; k <= 2; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      VanishingReport r = verify_vanishing(n, k, 4, 3);
      CHECK(r.involution);
      CHECK(r.bookkeeping);
      CHECK(r.dominance);
      CHECK(r.leading);
      CHECK(r.series);
      CHECK(r.first_failure.empty());
      for (const auto& c : r.census) CHECK(dominated_by(c.lambda, conjugate(c.mu)));
    }
  CHECK_THROWS_AS(verify_vanishing(2, 0, 2, 2), std::invalid_argument);
}

TEST_CASE("signed sum equals the doubly substituted combinatorial side") {
  const QtScalar g = qt_t() - QtScalar(1);
  for (int n = 1; n <= 3; ++n)
    for (int k = 1; k <= 2; ++k) {
      OmegaQuery q;
      q.n = n;
      q.k = k;
      q.N = 3;
      q.D = 3;
      CHECK(equal_tables(van_series(n, k, 3, 3), substitute_x(omega_sub_y(q), g, n)));
    }
}

}  // TEST_SUITE
