#pragma once

// The combinatorial side: Omega_k[X,Y] as a sum over sorted triples, its
// xi-factored form, the Y -> Y(q-1) enumerator, and the full-twist series.

#include "nabla/labels.hpp"

namespace nabla {

struct OmegaQuery {
  int n = 1;
  int k = 1;
  int N = 1;  // labels in [1..N]
  int D = 0;  // t-degree bound
  int workers = 1;
};

void validate(const OmegaQuery& q);

// sum over [m,a,b], |m| <= D, of t^|m| q^dinv_k X_a Y_b / ((1-q)^n aut_q(m,a,b))
SeriesTable omega_series(const OmegaQuery& q);
// sum over [m,a] of t^|m| q^dinv_k(m,a) X_a xi_{pi_k(m,a)}[Y] / ((1-q)^n aut_q(m,a))
SeriesTable omega_via_xi(const OmegaQuery& q);
// (-1)^n sum over [m,a,b] with b_i != b_j whenever i k-attacks j, of t^|m| q^dinv_k X_a Y_b
SeriesTable omega_sub_y(const OmegaQuery& q);
// Same quantity from the pair sum, using xi_pi[Y(q-1)] = (-1)^n (1-q)^n X_pi[Y].
SeriesTable omega_sub_y_via_chromatic(const OmegaQuery& q);

// Combinatorial Cauchy sum: [m,a,b] weighted by t^|m| q^{n(mu')} /
// ((1-q)^n aut_q(m,a,b)). mu is the multiplicity partition of the whole
// triple; label_only = true uses mu(a) instead.
SeriesTable cauchy_combinatorial(const OmegaQuery& q, bool label_only = false);

// F[X, Y g] for a table whose y-part is symmetric of degree n in N >= n
// variables, applied slice by slice.
SeriesTable substitute_y(const SeriesTable& s, const QtScalar& g, int n);
SeriesTable substitute_x(const SeriesTable& s, const QtScalar& g, int n);

// Full twist exponent as printed: sum_{i<j} max(k - m_i + m_j + 1, k - m_j + m_i).
int d_k_printed(const std::vector<int>& m, int k);
// dinv_k of the sorted pair [m', a] attached to the composition m:
// sum_{i<j} max(min(k - 1 - m_i + m_j, k - m_j + m_i), 0).
int d_k(const std::vector<int>& m, int k);
// (1-q)^{-n} sum_{m in Z_{>=0}^n, |m| <= D} t^|m| q^{d(m)}
TSeries fulltwist_series(int n, int k, int D, bool printed = false);
// Coefficient of x_1...x_n y_1^n in omega_series (N = n).
TSeries fulltwist_extract(int n, int k, int D);
// Coefficient of x_1...x_n y_1...y_n in omega_series (N = n).
TSeries hilbert_coefficient(int n, int k, int D);

// Multiply every entry by (1-q)^n.
SeriesTable times_one_minus_q_pow(const SeriesTable& s, int n);

}  // namespace nabla
