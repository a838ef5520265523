#pragma once

// Quadruples (l, a, m, b) for the vanishing argument, the reverse-frame
// statistic d_k(m, b), move_i, the involution iota_k and the T(A) diagram.
//
// Entries are ordered by the key (a ascending, m descending, b ascending).
// Positions l+1..n follow the key, positions 1..l follow it in reverse.
// Indices i, j in the public functions are 1-based.

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nabla/labels.hpp"

namespace nabla {

struct VanQuadruple {
  int l = 0;
  Label a;
  std::vector<int> m;
  Label b;
  int size() const { return static_cast<int>(m.size()); }
  int weight() const;  // |m|
  friend bool operator==(const VanQuadruple&, const VanQuadruple&) = default;
};

// d_k^{i,j} for entry (mi, bi) placed before (mj, bj).
int d_pair(int mi, int bi, int mj, int bj, int k);
// Full pairwise table, diagonal included.
std::vector<std::vector<int>> d_table(const std::vector<int>& m, const Label& b, int k);
// sum_{i<j} max(d_k^{i,j}, 0)
int d_k_rev(const std::vector<int>& m, const Label& b, int k);

// i before j k-attacks j when m_i lies in {m_j-k+1, ..., m_j+k}.
bool attacks_rev(int mi, int mj, int k);
bool is_van(const VanQuadruple& A, int k);

// Quadruples with |m| = d exactly, labels in [1..N].
void for_each_van(int n, int k, int d, int N, const std::function<void(const VanQuadruple&)>& fn);
// All quadruples with |m| <= D.
std::vector<VanQuadruple> enumerate_van(int n, int k, int D, int N);

// sigma_i: rank of entry i in the overall key order.
std::vector<int> sigma(const VanQuadruple& A);
// Entry i moved across the dividing line into its sorted slot; nullopt when
// the result leaves the quadruple set.
std::optional<VanQuadruple> move(const VanQuadruple& A, int i, int k);
bool movable(const VanQuadruple& A, int i, int k);
VanQuadruple iota(const VanQuadruple& A, int k);

struct TDiagram {
  // row r holds the (m, b) pairs with the r-th smallest a-value, in key order
  std::vector<std::vector<std::pair<int, int>>> rows;
  Composition shape() const;
  std::string to_string() const;
};
TDiagram t_diagram(const VanQuadruple& A);

// l = 0, row r of lambda filled with a = r, m = (r-1)k, b = 1..lambda_r.
VanQuadruple canonical_fixed_point(const Partition& lambda, int k);

// sum over quadruples with |m| <= D of (-1)^l t^|m| q^{d_k} X_a Y_b
SeriesTable van_series(int n, int k, int D, int N);
// Omega_k[X(t-1), Y(q-1)] from the Macdonald side, t-expanded through D.
SeriesTable macdonald_van_side(int n, int k, int N, int D);

struct FixedPointCensus {
  Partition lambda;
  Partition mu;
  int count = 0;
};

struct VanishingReport {
  int n = 0, k = 0, D = 0, N = 0;
  long quadruples = 0;
  long fixed_points = 0;
  bool involution = true;   // iota(iota(A)) = A
  bool bookkeeping = true;  // d_k, |m| kept, l parity flipped
  bool dominance = true;    // lambda <= mu' and both lemmas on fixed points
  bool leading = true;      // unique canonical fixed point with the right weight
  bool series = true;       // signed sum = Macdonald side through t^{D-1}
  int compared_degree = 0;
  std::vector<std::string> skipped;  // lambda = mu' cases outside the window
  std::vector<FixedPointCensus> census;
  std::string first_failure;
  bool ok() const { return involution && bookkeeping && dominance && leading && series; }
};

VanishingReport verify_vanishing(int n, int k, int D, int N, int workers = 1);

std::string to_string(const VanQuadruple& A);

}  // namespace nabla
