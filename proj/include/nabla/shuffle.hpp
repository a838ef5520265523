#pragma once

// Parking-function side of nabla^k e_n: PF/NPF conditions, the rotation rho,
// the rho-cancellation sets and the parking sum. Positions i are 1-based.

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "nabla/labels.hpp"

namespace nabla {

struct ShuffleTriple {
  int l = 0;
  std::vector<int> m;
  Label a;
  int size() const { return static_cast<int>(m.size()); }
  int weight() const;
  friend bool operator==(const ShuffleTriple&, const ShuffleTriple&) = default;
  friend auto operator<=>(const ShuffleTriple&, const ShuffleTriple&) = default;
};

// PF_{k,i}: m_{i+1} <= m_i + k - 1, or m_{i+1} = m_i + k and a_{i+1} > a_i.
bool pf(const std::vector<int>& m, const Label& a, int i, int k);
bool npf(const std::vector<int>& m, const Label& a, int i, int k);

// m'_1 = m_n + 1, x'_1 = x_n, everything else shifted right by one.
std::pair<std::vector<int>, Label> rho(const std::vector<int>& m, const Label& x);
// Throws std::invalid_argument when m_1 = 0.
std::pair<std::vector<int>, Label> rho_inverse(const std::vector<int>& m, const Label& x);

// PF for i <= n-l-1 and NPF for i >= n-l+1.
bool in_shuffle_set(const ShuffleTriple& s, int k);
// Members with |m| <= D and labels in [1..N].
void for_each_shuffle_triple(int n, int k, int D, int N, const std::function<void(const ShuffleTriple&)>& fn);

// The five conditions of the cancellation argument.
bool cond_1a(const ShuffleTriple& s);
bool cond_2a(const ShuffleTriple& s, int k);
bool cond_1b(const ShuffleTriple& s);
bool cond_2b(const ShuffleTriple& s, int k);
bool cond_3b(const ShuffleTriple& s);
// (l, m, a) -> (l - 1, rho(m, a)); the cancelling partner of a (1A)(2A) triple.
ShuffleTriple rho_pair(const ShuffleTriple& s);

// sum over (m, a) with PF_{k,i} for all i and m_1 = 0 of X_a t^|m| q^{d_k(m, a)},
// on the x alphabet of size N.
Poly parking_sum(int n, int k, int N);

struct CancellationReport {
  int n = 0, k = 0, D = 0, N = 0;
  long triples = 0, set_a = 0, set_b = 0, survivors = 0;
  bool empty = true;         // nothing satisfies all five conditions
  bool paired = true;        // rho maps every (1A)(2A) triple inside the window onto a (1B)(2B)(3B) one
  bool survivors_ok = true;  // survivors have l = 0 and m_1 = 0
  bool series = true;        // surviving signed sum = parking_sum through t^{D-1}
  std::string first_failure;
  bool ok() const { return empty && paired && survivors_ok && series; }
};

// check_series = false skips part (ii); the five-condition scan alone is
// much cheaper.
CancellationReport cancellation_check(int n, int k, int D, int N, bool check_series = true);

// parking_sum(n, k, n) == nabla^k e_n in n variables.
bool verify_shuffle(int n, int k);

std::string to_string(const ShuffleTriple& s);

}  // namespace nabla
