#include "doctest.h"
#include "nabla/affine.hpp"
#include "nabla/omega.hpp"

#include <random>

using namespace nabla;

namespace {

// Inversions counted over an explicit window of j, wide enough for small entries.
long brute_length(const AffinePermutation& w) {
  const int n = w.size();
  long len = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= i + 60 * n; ++j)
      if (w(i) > w(j)) ++len;
  return len;
}

AffinePermutation random_positive(std::mt19937& gen, int n, int dmax) {
  std::uniform_int_distribution<int> dd(0, dmax);
  const auto pool = positive_permutations(n, dd(gen));
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  return pool[pick(gen)];
}

}  // namespace

TEST_SUITE("affine") {

TEST_CASE("windows, composition and length") {
  CHECK(length(AffinePermutation::identity(4)) == 0);
  CHECK(length(AffinePermutation({2, 1})) == 1);
  CHECK_THROWS_AS(AffinePermutation({1, 3}), std::invalid_argument);
  const AffinePermutation w({3, 2, 12, 5});
  CHECK(w(7) == 16);
  CHECK(w(-1) == 8);
  CHECK(w.d_grade() == 3);
  CHECK(inverse(w).window() == std::vector<int>{0, 2, 1, -5});

  std::mt19937 gen(11);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + trial % 4;
    const AffinePermutation u = random_positive(gen, n, 3), v = random_positive(gen, n, 3);
    CHECK(length(u) == brute_length(u));
    CHECK(length(inverse(u)) == length(u));
    CHECK(compose(u, inverse(u)) == AffinePermutation::identity(n));
    CHECK(compose(u, v).d_grade() == u.d_grade() + v.d_grade());
  }
}

TEST_CASE("every reflection changes the length") {
  std::mt19937 gen(3);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 3;
    const AffinePermutation w = random_positive(gen, n, 3);
    for (int a = 1; a <= n; ++a)
      for (int b = a + 1; b <= a + 3 * n; ++b) {
        if ((b - a) % n == 0) continue;
        CHECK(length(compose(as_permutation({a, b}, n), w)) != length(w));
      }
  }
}

TEST_CASE("stability") {
  for (int m = 1; m <= 6; ++m) CHECK(is_m_stable(AffinePermutation::identity(3), m));
  CHECK_FALSE(is_m_stable(AffinePermutation({4, 2, 3}), 1));
  const AffinePermutation w({3, 2, 12, 5});
  CHECK(is_m_restricted(w, 4));
  CHECK(is_m_stable(w, 4 * 9));
  CHECK_THROWS_AS(is_m_stable(w, 0), std::invalid_argument);
}

TEST_CASE("edges and dimv on the worked example") {
  const AffinePermutation w({3, 2, 12, 5});
  const auto e = edges(w, 4);
  CHECK(e.size() == 4);
  std::set<AffinePermutation> targets;
  for (const auto& t : e) targets.insert(compose(as_permutation(t, 4), w));
  const std::set<AffinePermutation> want{AffinePermutation({2, 3, 12, 5}), AffinePermutation({3, 2, 9, 8}),
                                         AffinePermutation({4, 2, 11, 5}), AffinePermutation({3, 4, 10, 5})};
  CHECK(targets == want);
  CHECK(max_area(4, 4) == 6);
  CHECK(dimv(w, 4) == 2);
  CHECK(edges(AffinePermutation::identity(3), 9).empty());
  for (int m = 1; m <= 8; ++m) CHECK(dimv(AffinePermutation::identity(1), m) == 0);
  CHECK(to_string(AffineTransposition{1, 4}) == "t(1,4)");
}

TEST_CASE("maximal area closed form against a cell count") {
  CHECK(max_area_formula_holds(8));
  for (int n = 1; n <= 8; ++n) CHECK(max_area_by_cells(n, n) == n * (n - 1) / 2);
  CHECK(max_area(6, 12) == 30);
}

TEST_CASE("edge refinement and monotonicity in m") {
  std::mt19937 gen(5);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 3;
    const AffinePermutation w = random_positive(gen, n, 3);
    for (int m = 1; m <= 3 * n; ++m) {
      const auto e = edges(w, m);
      int total = 0;
      for (const auto& row : edge_counts(w, m))
        for (int c : row) total += c;
      CHECK(total == static_cast<int>(e.size()));
      const auto wv = wvec(w, m);
      CHECK(std::accumulate(wv.begin(), wv.end(), 0) == total);
      const auto bigger = edges(w, m + 1);
      for (const auto& t : e) CHECK(std::find(bigger.begin(), bigger.end(), t) != bigger.end());
    }
  }
}

TEST_CASE("coarea sequences") {
  const AffinePermutation lo({19, 20, 5, 16, 21, 6}), hi({24, 23, 2, 15, 22, 1});
  const RationalDyckPath p = coarea_path(lo, 12), q = coarea_path(hi, 12);
  CHECK(p.is_valid());
  CHECK(q.is_valid());
  CHECK(p.area_sequence() == std::vector<int>{0, 2, 4, 4, 1, 2});
  CHECK(q.area_sequence() == std::vector<int>{0, 1, 2, 1, 0, 1});
  CHECK(p.area() == dimv(lo, 12));
  CHECK(q.area() == dimv(hi, 12));
  CHECK(wvec(AffinePermutation::identity(4), 1) == std::vector<int>(4, 0));
}

TEST_CASE("standardization") {
  const Label a{3, 3, 3, 1, 2, 3, 1};
  CHECK(standardize(a, Order::ascending) == std::vector<int>{4, 5, 6, 1, 3, 7, 2});
  CHECK(standardize(a, Order::descending) == std::vector<int>{1, 2, 3, 6, 5, 4, 7});
  CHECK(standardize({1, 2, 5}, Order::ascending) == std::vector<int>{1, 2, 3});
}

TEST_CASE("paff on the worked example") {
  const SortedTriple s{{2, 1, 0, 0}, {2, 3, 1, 1}, {1, 2, 1, 1}};
  CHECK(tau(s.m).window() == std::vector<int>{12, 7, 2, 1});
  CHECK(standardize(s.a, Order::ascending) == std::vector<int>{3, 4, 1, 2});
  CHECK(standardize({1, 1, 2, 1}, Order::descending) == std::vector<int>{2, 3, 1, 4});
  const AffinePermutation w = paff(s);
  CHECK(w == AffinePermutation({3, 2, 12, 5}));
  CHECK(w.d_grade() == s.weight());
  CHECK(dinv_k(s, 1) == 2);
  CHECK(dimv(w, 4) == dinv_k(s, 1));
  CHECK(paff(SortedTriple{{4}, {1}, {1}}).window() == std::vector<int>{5});

  // m = 0 and constant labels give the longest element of S_n
  for (int n = 1; n <= 4; ++n) {
    const AffinePermutation w0 = paff(SortedTriple{std::vector<int>(n, 0), Label(n, 1), Label(n, 1)});
    long best = -1;
    for (const auto& p : young_subgroup({n})) best = std::max(best, length(AffinePermutation::finite(p)));
    CHECK(w0.window().front() == n);
    CHECK(length(w0) == best);
  }
}

TEST_CASE("coset extremes") {
  const AffinePermutation w({3, 2, 12, 5});
  const auto e = coset_min_max(w, {1, 3}, {2, 1, 1});
  REQUIRE(e.has_value());
  CHECK(e->second == w);
  CHECK(young_subgroup({1, 3}).size() == 6);
  CHECK(young_subgroup({2, 1, 1}).size() == 2);

  const SortedTriple f{{3, 3, 3, 2, 0, 0}, {1, 1, 5, 4, 2, 5}, {1, 1, 1, 1, 1, 1}};
  const auto lr = coset_min_max(paff(f));
  REQUIRE(lr.has_value());
  CHECK(lr->first == AffinePermutation({19, 20, 5, 16, 21, 6}));
  CHECK(lr->second == AffinePermutation({24, 23, 2, 15, 22, 1}));
  const auto dl = coarea_path(lr->first, 12).area_sequence(), dh = coarea_path(lr->second, 12).area_sequence();
  std::vector<int> diff(6);
  for (int j = 0; j < 6; ++j) diff[j] = dl[j] - dh[j];
  CHECK(diff == std::vector<int>{0, 1, 2, 3, 1, 1});
  CHECK(diff == attack_path(f.m, f.a, 2).area_sequence());

  const auto trivial = coset_min_max(w, {1, 1, 1, 1}, {1, 1, 1, 1});
  REQUIRE(trivial.has_value());
  CHECK(trivial->first == w);
  CHECK(trivial->second == w);
}

TEST_CASE("paff proposition on a full sweep") {
  for (int n = 1; n <= 3; ++n)
    for (int k = 1; k <= 2; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      const PaffReport r = verify_paff(n, k, 3, 3);
      CHECK(r.bijection);
      CHECK(r.dinv);
      CHECK(r.area);
      CHECK(r.degree);
      CHECK(r.grade);
      CHECK(r.first_failure.empty());
    }
  CHECK(verify_paff(4, 1, 2, 2).ok());
  CHECK_THROWS_AS(verify_paff(2, 0, 1, 1), std::invalid_argument);
}

TEST_CASE("raths series") {
  const TSeries one = raths_series(1, 3, 4);
  for (int d = 0; d <= 4; ++d) CHECK(one[d] == QRat(1) / QRat(UPoly(1) - UPoly::q()));
  for (int n = 1; n <= 3; ++n)
    for (int k = 1; k <= 2; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      CHECK(raths_series(n, k * n, 3) == hilbert_coefficient(n, k, 3));
    }
  CHECK_THROWS_AS(raths_series(2, 0, 1), std::invalid_argument);
}

}  // TEST_SUITE
