#pragma once

// Labels, sorted triples, dinv_k and the attack relation, Dyck paths,
// inv_pi, xi_pi and the chromatic symmetric function.
//
// Positions inside tuples are 0-based in vectors; pairs (i, j) in D(pi) and
// the i, j arguments of attacks() are 1-based to match the usual notation.

#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "nabla/symfunc.hpp"

namespace nabla {

using Label = std::vector<int>;

// Simultaneous sort of parallel columns. direction[c] is +1 for increasing,
// -1 for decreasing; missing entries default to increasing. Ties are broken
// left to right.
std::vector<std::vector<int>> sort_tuple(const std::vector<std::vector<int>>& columns,
                                         const std::vector<int>& direction = {});
// Group sizes of equal rows after sorting, and the same sorted decreasingly.
Composition alpha_of(const std::vector<std::vector<int>>& columns);
Partition mu_of(const std::vector<std::vector<int>>& columns);

struct SortedTriple {
  std::vector<int> m;
  Label a;
  Label b;
  int size() const { return static_cast<int>(m.size()); }
  int weight() const;  // |m|
  friend bool operator==(const SortedTriple&, const SortedTriple&) = default;
};

bool is_sorted(const std::vector<int>& m, const Label& a, const Label& b);
bool is_sorted(const std::vector<int>& m, const Label& a);
// [m, a, b]: m decreasing, then a, b increasing.
SortedTriple sort_triple(const std::vector<int>& m, const Label& a, const Label& b);
// aut_q(m, a, b) = prod over groups of equal columns of [size]_q!
UPoly aut_q(const SortedTriple& s);
UPoly aut_q_pair(const std::vector<int>& m, const Label& a);

// Sum of max(m_j - m_i - 1 + k + [a_i > a_j] + [b_i > b_j], 0); throws
// std::invalid_argument on unsorted input.
int dinv_k(const SortedTriple& s, int k);
int dinv_k(const std::vector<int>& m, const Label& a, int k);

class DyckPath {
 public:
  DyckPath() = default;
  DyckPath(int n, std::set<std::pair<int, int>> cells);
  static DyckPath from_area(const std::vector<int>& area);
  int size() const { return n_; }
  const std::set<std::pair<int, int>>& cells() const { return cells_; }
  bool contains(int i, int j) const { return cells_.count({i, j}) > 0; }
  // a_j = #{i : (i, j) in D}
  std::vector<int> area_sequence() const;
  bool is_valid() const;
  friend bool operator==(const DyckPath&, const DyckPath&) = default;

 private:
  int n_ = 0;
  std::set<std::pair<int, int>> cells_;
};

// All Dyck paths of size n.
std::vector<DyckPath> dyck_paths(int n);

bool attacks(const std::vector<int>& m, const Label& a, int i, int j, int k);
DyckPath attack_path(const std::vector<int>& m, const Label& a, int k);
int inv_pi(const DyckPath& pi, const Label& b);

// Both returned on the y alphabet of size N.
Poly xi_pi(const DyckPath& pi, int N);
Poly chromatic(const DyckPath& pi, int N);
// (1-q)^n omega X_pi[Y/(1-q)] computed through the monomial basis.
Poly xi_via_chromatic(const DyckPath& pi, int N);

// Every label in [1..N]^n, lexicographic.
std::vector<Label> all_labels(int n, int N);

// Sorted triples with |m| = d and labels in [1..N], in increasing order of
// the (m decreasing, a, b) key.
void for_each_sorted_triple(int n, int d, int N, const std::function<void(const SortedTriple&)>& fn);
// Sorted pairs (m, a) with |m| = d.
void for_each_sorted_pair(int n, int d, int N,
                          const std::function<void(const std::vector<int>&, const Label&)>& fn);

std::string to_string(const SortedTriple& s);

}  // namespace nabla
