#pragma once

// Parabolic line bundles O(m; a, b) on P^1 with flags at 0 and infinity,
// Hom/Ext dimensions, the automorphism and nilpotent-endomorphism counts of
// a direct sum O(m; a, b), a finite-field brute-force oracle for those
// counts, and the generating function they assemble into.

#include <string>
#include <vector>

#include <gmpxx.h>

#include "nabla/labels.hpp"

namespace nabla {

struct LineBundle {
  int m = 0;
  int a = 1;  // flag jump at 0
  int b = 1;  // flag jump at infinity
  friend bool operator==(const LineBundle&, const LineBundle&) = default;
};

// dim Hom(from, to) = max(1 + to.m - from.m - [from.a < to.a] - [from.b < to.b], 0)
int hom_dim(const LineBundle& from, const LineBundle& to);
// dim Ext(from, to) = max(from.m - to.m - 1 + [from.a < to.a] + [from.b < to.b], 0)
int ext_dim(const LineBundle& from, const LineBundle& to);
// Euler form of two rank-one parabolic bundles, from degrees and flag ranks.
int euler_form(const LineBundle& from, const LineBundle& to, int N);
// (m, -a, -b) lexicographically
bool bundle_less(const LineBundle& x, const LineBundle& y);
bool bundle_le(const LineBundle& x, const LineBundle& y);

std::vector<LineBundle> summands(const SortedTriple& s);

// |Aut O(m; a, b)| as a polynomial in q, and its value at q = p.
UPoly aut_count(const SortedTriple& s);
mpz_class aut_count(const SortedTriple& s, int p);
// |Nilp_k O(m; a, b)|: endomorphisms vanishing at k points away from 0 and
// infinity (nilpotent ones when k = 0).
UPoly nilp_count(const SortedTriple& s, int k);
mpz_class nilp_count(const SortedTriple& s, int k, int p);

// Exponent window [lo, hi] of z in Hom(from, to): the constant term is lost
// when from.a < to.a, the top term when from.b < to.b. Empty when lo > hi.
struct HomWindow {
  int lo = 0, hi = -1;
  int dim() const { return hi >= lo ? hi - lo + 1 : 0; }
};
HomWindow hom_window(const LineBundle& from, const LineBundle& to);

struct BruteCounts {
  long endomorphisms = 0;
  long aut = 0;
  long nilp = 0;
};
// Enumerates every endomorphism over F_p, p in {2, 3, 5}. Points must be
// distinct nonzero elements of F_p, one per vanishing condition. Throws
// std::invalid_argument when the endomorphism space is larger than the cap
// (14 for p = 2, 9 for p = 3, 6 for p = 5) or the input is malformed.
BruteCounts brute_force_counts(const SortedTriple& s, int p, const std::vector<int>& points);
int endomorphism_dim(const SortedTriple& s);

// q^{k binom(n,2)} sum over [m,a,b], |m| <= D, labels <= N of
// t^|m| X_a Y_b |Nilp_k| / |Aut|.
SeriesTable bundle_side_series(int n, int k, int N, int D);
// q-degree of q^{k binom(n,2)} |Nilp_k| / |Aut| after removing (q-1)^n aut_q.
int bundle_q_degree(const SortedTriple& s, int k);
// Degree-n part (in X) of prod_{m <= D} prod_{a,b <= N} sum_mu
// (t^m x_a y_b)^mu q^binom(mu,2) / ((q-1)^mu [mu]_q!).
SeriesTable k0_product_series(int n, int N, int D);
// h_n[-XY/((1-q)(1-t))] through t^D.
SeriesTable k0_pexp_series(int n, int N, int D);

struct BundleConfig {
  int n_max = 2;  // brute-force sweep
  int m_max = 2;
  int label_max = 2;
  std::vector<int> primes{2, 3};
  std::vector<int> ks{0, 1};
  int series_n = 3;  // series comparison
  int series_k = 2;
  int N = 3;
  int D = 4;
  int product_n = 3;  // k = 0 product
  int product_D = 3;
  int workers = 1;
};

struct BundleReport {
  long sums_checked = 0;
  long brute_cases = 0;
  bool counts = true;     // formulas = brute force
  bool hom_order = true;  // Hom(L, L') != 0 implies L <= L'
  bool euler = true;      // hom - ext = Euler form
  bool q_degree = true;   // bookkeeping identity and q-degree = dinv_k
  bool series = true;     // bundle side = (-1)^n omega_series
  bool product = true;    // k = 0 sum = product = pExp
  std::string first_failure;
  bool ok() const { return counts && hom_order && euler && q_degree && series && product; }
};

BundleReport verify_bundles(const BundleConfig& c);

// k + max(1 - k + c, 0) - (1 + c) == max(k - 1 - c, 0) for c >= -1.
bool q_degree_identity_holds(int k_max, int c_max);

std::string to_string(const LineBundle& L);

}  // namespace nabla
