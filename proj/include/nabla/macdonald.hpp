#pragma once

// Modified Macdonald polynomials, nabla, and the Macdonald side of the
// Cauchy sum for nabla^k e_n[XY/((1-q)(1-t))].

#include <map>
#include <vector>

#include "nabla/symfunc.hpp"

namespace nabla {

int nstat(const Partition& lambda);
// q^{n(lambda')} t^{n(lambda)}
QtScalar nabla_eigenvalue(const Partition& lambda);

// Largest degree served by the cache (default 8).
int degree_cap();
void set_degree_cap(int n);

// P_lambda in the monomial basis, by Gram-Schmidt under qt_inner.
SymFunc macdonald_P(const Partition& lambda);
// J_lambda = prod_s (1 - q^{a(s)} t^{l(s)+1}) P_lambda, power-sum basis.
SymFunc macdonald_J(const Partition& lambda);
// H~_lambda in the Schur basis.
const SymFunc& modified_macdonald(const Partition& lambda);

// Expansion in the H~ basis (result has Basis::H) and back.
SymFunc to_modified_basis(const SymFunc& f);
SymFunc from_modified_basis(const SymFunc& f, Basis target = Basis::s);

// nabla^k f; k may be negative.
SymFunc nabla_power(const SymFunc& f, int k);

// Exact coefficients of nabla^k e_n[XY/((1-q)(1-t))] in N + N variables.
Poly cauchy_macdonald(int n, int k, int N);
SeriesTable cauchy_macdonald_series(int n, int k, int N, int D);

// Checks the pairing with s_{1^n}, the t = 0 specialization and the q<->t
// symmetry for every lambda of size n; returns false on the first failure.
bool validate_degree(int n);

}  // namespace nabla
