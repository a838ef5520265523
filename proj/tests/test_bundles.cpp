#include "doctest.h"
#include "nabla/bundles.hpp"
#include "nabla/omega.hpp"

using namespace nabla;

TEST_SUITE("bundles") {

TEST_CASE("Hom and Ext between line bundles") {
  const LineBundle o{0, 1, 1};
  CHECK(hom_dim(o, o) == 1);
  CHECK(hom_dim(o, LineBundle{1, 1, 1}) == 2);
  CHECK(hom_dim(LineBundle{1, 1, 1}, o) == 0);
  CHECK(ext_dim(LineBundle{2, 1, 1}, o) == 1);
  CHECK(hom_window(o, LineBundle{2, 2, 2}).lo == 1);
  CHECK(hom_window(o, LineBundle{2, 2, 2}).hi == 1);
  for (int m = -3; m <= 3; ++m)
    for (int a = 1; a <= 3; ++a)
      for (int b = 1; b <= 3; ++b)
        for (int m2 = -3; m2 <= 3; ++m2)
          for (int a2 = 1; a2 <= 3; ++a2)
            for (int b2 = 1; b2 <= 3; ++b2) {
              const LineBundle x{m, a, b}, y{m2, a2, b2};
              CHECK(hom_dim(x, y) - ext_dim(x, y) == euler_form(x, y, 3));
              CHECK(hom_window(x, y).dim() == hom_dim(x, y));
              if (hom_dim(x, y) != 0) CHECK(bundle_le(x, y));
            }
}

TEST_CASE("total order") {
  CHECK(bundle_less(LineBundle{0, 2, 1}, LineBundle{0, 1, 1}));
  CHECK(bundle_less(LineBundle{0, 1, 1}, LineBundle{1, 3, 3}));
  CHECK(bundle_le(LineBundle{0, 1, 1}, LineBundle{0, 1, 1}));
  CHECK_FALSE(bundle_less(LineBundle{0, 1, 1}, LineBundle{0, 1, 1}));
  CHECK(to_string(LineBundle{2, 1, 3}) == "O(2;1,3)");
}

TEST_CASE("automorphism counts") {
  const SortedTriple one{{3}, {2}, {1}};
  CHECK(aut_count(one) == UPoly::q() - UPoly(1));
  for (int r = 1; r <= 4; ++r) {
    const SortedTriple s{std::vector<int>(r, 0), Label(r, 1), Label(r, 1)};
    // |GL_r(F_q)| at q = 2, 3 directly
    for (int p : {2, 3}) {
      mpz_class gl = 1, pr;
      mpz_ui_pow_ui(pr.get_mpz_t(), p, r);
      for (int i = 0; i < r; ++i) {
        mpz_class pi;
        mpz_ui_pow_ui(pi.get_mpz_t(), p, i);
        gl *= pr - pi;
      }
      CHECK(aut_count(s, p) == gl);
    }
  }
  const SortedTriple two{{1, 0}, {1, 1}, {1, 1}};
  CHECK(brute_force_counts(two, 2, {}).aut == aut_count(two, 2));
}

TEST_CASE("nilpotent counts") {
  CHECK(nilp_count(SortedTriple{{2}, {1}, {1}}, 1) == UPoly(1));
  const SortedTriple pair{{0, 0}, {1, 1}, {1, 1}};
  CHECK(nilp_count(pair, 0, 2) == 4);
  const BruteCounts gl2 = brute_force_counts(pair, 2, {});
  CHECK(gl2.endomorphisms == 16);
  CHECK(gl2.aut == 6);
  CHECK(gl2.nilp == 4);
  const SortedTriple s{{1, 0}, {1, 1}, {1, 1}};
  CHECK(brute_force_counts(s, 3, {1}).nilp == nilp_count(s, 1, 3));
  CHECK_THROWS_AS(nilp_count(s, -1), std::invalid_argument);
}

TEST_CASE("brute force oracle guards") {
  const SortedTriple s{{1, 0}, {1, 1}, {1, 1}};
  CHECK_THROWS_AS(brute_force_counts(s, 7, {}), std::invalid_argument);
  CHECK_THROWS_AS(brute_force_counts(s, 3, {0}), std::invalid_argument);
  CHECK_THROWS_AS(brute_force_counts(s, 3, {1, 1}), std::invalid_argument);
  const SortedTriple big{{6, 0}, {1, 1}, {1, 1}};
  CHECK(endomorphism_dim(big) == 9);
  CHECK_THROWS_AS(brute_force_counts(big, 5, {}), std::invalid_argument);
  const BruteCounts single = brute_force_counts(SortedTriple{{4}, {2}, {1}}, 5, {1, 2});
  CHECK(single.aut == 4);
  CHECK(single.nilp == 1);
}

TEST_CASE("formulas against the oracle") {
  for (int n = 1; n <= 2; ++n)
    for (int d = 0; d <= 2 * n; ++d)
      for_each_sorted_triple(n, d, 2, [&](const SortedTriple& s) {
        if (*std::max_element(s.m.begin(), s.m.end()) > 2) return;
        for (int p : {2, 3})
          for (int k = 0; k <= 1; ++k) {
            std::vector<int> pts(k, 1);
            const BruteCounts bc = brute_force_counts(s, p, pts);
            CAPTURE(to_string(s));
            CAPTURE(p);
            CAPTURE(k);
            CHECK(aut_count(s, p) == bc.aut);
            CHECK(nilp_count(s, k, p) == bc.nilp);
          }
      });
}

TEST_CASE("q-degree bookkeeping") {
  CHECK(q_degree_identity_holds(4, 20));
  for (int n = 1; n <= 3; ++n)
    for (int k = 1; k <= 3; ++k)
      for (int d = 0; d <= 3; ++d)
        for_each_sorted_triple(n, d, 2, [&](const SortedTriple& s) { CHECK(bundle_q_degree(s, k) == dinv_k(s, k)); });
  // at k = 0 the diagonal blocks add sum binom(mu_i, 2)
  CHECK(bundle_q_degree(SortedTriple{{0, 0}, {1, 1}, {1, 1}}, 0) == 1);
}

TEST_CASE("bundle side equals the combinatorial side") {
  for (int n = 1; n <= 3; ++n)
    for (int k = 1; k <= 2; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      OmegaQuery q;
      q.n = n;
      q.k = k;
      q.N = 3;
      q.D = 3;
      const SeriesTable omega = omega_series(q);
      const SeriesTable side = bundle_side_series(n, k, 3, 3);
      CHECK(equal_tables(side, scaled(omega, QRat(n % 2 ? -1 : 1))));
      if (n % 2) CHECK_FALSE(equal_tables(side, omega));
    }
  // n = 1: t^m x_a y_b / (q - 1)
  const SeriesTable one = bundle_side_series(1, 2, 1, 2);
  REQUIRE(one.size() == 1);
  for (int d = 0; d <= 2; ++d) CHECK(one.begin()->second[d] == QRat(1) / QRat(UPoly::q() - UPoly(1)));
}

TEST_CASE("k = 0 infinite product") {
  for (int n = 1; n <= 3; ++n) {
    CAPTURE(n);
    const SeriesTable side = bundle_side_series(n, 0, 2, 3);
    CHECK(equal_tables(side, k0_product_series(n, 2, 3)));
    CHECK(equal_tables(side, k0_pexp_series(n, 2, 3)));
  }
}

TEST_CASE("full verification") {
  BundleConfig c;
  c.D = 3;
  const BundleReport r = verify_bundles(c);
  CHECK(r.ok());
  CHECK(r.first_failure.empty());
  CHECK(r.sums_checked > 0);
}

}  // TEST_SUITE
