#pragma once

// Extended affine permutations of Z in window notation, lengths, edges_m,
// dimv_m, standardization, the map paff and the raths series.
//
// Products are composition of maps: (u v)(i) = u(v(i)). Left factors act on
// values, right factors on positions.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nabla/labels.hpp"

namespace nabla {

class AffinePermutation {
 public:
  AffinePermutation() = default;
  // Throws std::invalid_argument unless the residues mod n are distinct.
  explicit AffinePermutation(std::vector<int> window);
  static AffinePermutation identity(int n);
  // Finite permutation of 1..n, one-line notation.
  static AffinePermutation finite(const std::vector<int>& perm);

  int size() const { return static_cast<int>(w_.size()); }
  const std::vector<int>& window() const { return w_; }
  // w(i) for any integer i
  int operator()(int i) const;
  // (sum w_i - n(n+1)/2) / n
  int d_grade() const;
  // every window entry >= 1
  bool is_positive() const;
  std::string to_string() const;

  friend bool operator==(const AffinePermutation&, const AffinePermutation&) = default;
  friend auto operator<=>(const AffinePermutation&, const AffinePermutation&) = default;

 private:
  std::vector<int> w_;
};

AffinePermutation compose(const AffinePermutation& u, const AffinePermutation& v);
AffinePermutation inverse(const AffinePermutation& w);
// #{(i, j) : 1 <= i <= n, i < j, w(i) > w(j)}
long length(const AffinePermutation& w);

struct AffineTransposition {
  int a = 0, b = 0;  // a in 1..n, a < b, b - a not divisible by n
  int height() const { return b - a; }
  friend bool operator==(const AffineTransposition&, const AffineTransposition&) = default;
  friend auto operator<=>(const AffineTransposition&, const AffineTransposition&) = default;
};

AffinePermutation as_permutation(const AffineTransposition& t, int n);

// w_{i+m} > w_i for all i
bool is_m_stable(const AffinePermutation& w, int m);
bool is_m_restricted(const AffinePermutation& w, int m);

// t_{a,b} with height < m and length(t w) < length(w).
std::vector<AffineTransposition> edges(const AffinePermutation& w, int m);
// counts[i][j] for 0-based residues i < j; lower triangle and diagonal are 0.
std::vector<std::vector<int>> edge_counts(const AffinePermutation& w, int m);

// ((n-1)(m-1) + gcd(n, m) - 1) / 2
int max_area(int n, int m);
// Full lattice cells above the diagonal of the n x m box, counted directly.
int max_area_by_cells(int n, int m);
// max_area == max_area_by_cells for all n, m <= bound
bool max_area_formula_holds(int bound = 8);
int dimv(const AffinePermutation& w, int m);

// A rational (n, m) Dyck path given by its coarea sequence: b_j is the
// x-coordinate of the j-th north step.
struct RationalDyckPath {
  int n = 0, m = 0;
  std::vector<int> coarea;
  bool is_valid() const;
  // a_j = floor(m (j-1) / n) - b_j
  std::vector<int> area_sequence() const;
  int area() const;
};

std::vector<int> wvec(const AffinePermutation& w, int m);
RationalDyckPath coarea_path(const AffinePermutation& w, int m);

enum class Order { ascending, descending };
// sigma with a_{sigma^{-1}} weakly monotone for the order and increasing on
// each fiber; one-line notation, 1-based.
std::vector<int> standardize(const Label& a, Order order);

// (n + m_1 n, ..., 1 + m_n n)
AffinePermutation tau(const std::vector<int>& m);
// shuff_>(rev b) tau_m shuff_<(a)^{-1}
AffinePermutation paff(const SortedTriple& s);

// Young subgroup S_alpha of S_n as one-line permutations.
std::vector<std::vector<int>> young_subgroup(const Composition& alpha);
// Minimal and maximal length elements of S_alpha w S_beta; nullopt when one
// of them is not unique.
std::optional<std::pair<AffinePermutation, AffinePermutation>> coset_min_max(const AffinePermutation& w,
                                                                            const Composition& alpha,
                                                                            const Composition& beta);
// The left coset S_n w.
std::optional<std::pair<AffinePermutation, AffinePermutation>> coset_min_max(const AffinePermutation& w);

// Positive permutations of d-grade exactly d.
std::vector<AffinePermutation> positive_permutations(int n, int d);

struct PaffReport {
  int n = 0, k = 0, D = 0, N = 0;
  long triples = 0;
  bool bijection = true;  // (i) injective, onto the double cosets, maximal representative
  bool dinv = true;       // (ii) dinv_k = dimv_{kn}
  bool area = true;       // (iii) area sequence difference
  bool degree = true;     // (iv) deg b_{w,k} = dimv_{kn}, exponents nonnegative
  bool grade = true;      // d-grade of paff = |m|
  bool area_formula = true;
  std::string first_failure;
  bool ok() const { return bijection && dinv && area && degree && grade && area_formula; }
};

PaffReport verify_paff(int n, int k, int D, int N);

// (1-q)^{-gcd(n,m)} sum over positive w with w^{-1} m-stable and d-grade <= D
// of t^{d-grade} q^{dimv_m(w)}
TSeries raths_series(int n, int m, int D);

std::string to_string(const AffineTransposition& t);

}  // namespace nabla
