#pragma once

// Symmetric functions over QtScalar in the classical bases, transition
// matrices, inner products, plethysm by the power-sum rule, and expansion
// into finite alphabets x_1..x_N, y_1..y_N.

#include <map>
#include <string>
#include <vector>

#include "nabla/partition.hpp"
#include "nabla/scalar.hpp"

namespace nabla {

enum class Basis { m, e, h, p, s, H };

const char* basis_name(Basis b);

class SymFunc {
 public:
  SymFunc() = default;
  explicit SymFunc(Basis b) : basis_(b) {}
  SymFunc(Basis b, const Partition& lambda, QtScalar c = QtScalar(1));

  Basis basis() const { return basis_; }
  const std::map<Partition, QtScalar>& terms() const { return terms_; }
  QtScalar coeff(const Partition& lambda) const;
  bool is_zero() const { return terms_.empty(); }
  // Highest degree present, -1 for zero.
  int degree() const;

  void add(const Partition& lambda, const QtScalar& c);
  SymFunc& operator+=(const SymFunc& o);
  SymFunc& operator-=(const SymFunc& o);
  friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
  friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
  SymFunc scaled(const QtScalar& c) const;
  SymFunc map_coeffs(QtScalar (*fn)(const QtScalar&)) const;
  friend bool operator==(const SymFunc& a, const SymFunc& b);
  friend bool operator!=(const SymFunc& a, const SymFunc& b) { return !(a == b); }

  // "q*s[1,1] + s[2]"-style listing, terms in increasing partition order.
  std::string to_string() const;

 private:
  Basis basis_ = Basis::m;
  std::map<Partition, QtScalar> terms_;
};

SymFunc elementary(int n);
SymFunc complete(int n);
SymFunc power_sum(int r);

// Integer matrix A with b_lambda = sum_mu A[lambda][mu] m_mu, rows and
// columns indexed by partitions_of(n). Supported for b in {m, e, h, p, s}.
const std::vector<std::vector<mpz_class>>& to_monomial_matrix(Basis b, int n);
// Inverse of to_monomial_matrix.
const std::vector<std::vector<mpq_class>>& from_monomial_matrix(Basis b, int n);

// Basis change among {m, e, h, p, s}; H is handled by the macdonald module.
SymFunc convert(const SymFunc& f, Basis target);
SymFunc multiply(const SymFunc& f, const SymFunc& g);

QtScalar hall_inner(const SymFunc& f, const SymFunc& g);
QtScalar qt_inner(const SymFunc& f, const SymFunc& g);

// f[X g(q,t)] via p_r -> g(q^r, t^r) p_r; returned in the power-sum basis.
SymFunc plethysm(const SymFunc& f, const QtScalar& g);
SymFunc omega_involution(const SymFunc& f);

// A monomial in two finite alphabets x_1..x_N and y_1..y_N.
struct Monomial {
  std::vector<int> x;
  std::vector<int> y;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;
  int x_degree() const;
  int y_degree() const;
  std::string to_string() const;
};

class Poly {
 public:
  const std::map<Monomial, QtScalar>& terms() const { return terms_; }
  QtScalar coeff(const Monomial& m) const;
  void add(const Monomial& m, const QtScalar& c);
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly scaled(const QtScalar& c) const;
  bool is_zero() const { return terms_.empty(); }
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
  std::string to_string() const;

 private:
  std::map<Monomial, QtScalar> terms_;
};

// Per-monomial t-series; the shape in which both sides of the main
// identities are compared.
using SeriesTable = std::map<Monomial, TSeries>;
SeriesTable t_expand(const Poly& p, int D);
// Multiply every entry by r; zero series are dropped.
SeriesTable scaled(const SeriesTable& s, const QRat& r);
void accumulate(SeriesTable& into, const SeriesTable& from);
bool equal_tables(const SeriesTable& a, const SeriesTable& b);

// Every distinct rearrangement of v (zero padded to N).
std::vector<std::vector<int>> rearrangements(const std::vector<int>& v, int N);
// Exponent vectors of total degree n in N variables.
std::vector<std::vector<int>> exponent_vectors(int n, int N);

// f(x_1..x_N), stored on the x alphabet.
Poly expand(const SymFunc& f, int N);
// Coefficient of x^alpha y^beta in f[X Y g(q,t)], for |alpha| = |beta| = deg.
// Only homogeneous f is supported; result in N + N variables.
Poly expand_xy(const SymFunc& f, const QtScalar& g, int N);
// Reverse of expand: read a symmetric polynomial of degree n in N >= n
// variables back into the monomial basis (coefficients of sorted exponents).
SymFunc monomial_part(const Poly& p, int n, bool y_alphabet = false);
Poly swap_alphabets(const Poly& p);
// p[X g] (or p[Y g]) where p is symmetric of degree n in the chosen
// alphabet of N >= n variables; the other alphabet is carried along.
Poly plethysm_alphabet(const Poly& p, const QtScalar& g, int n, bool y_alphabet);

// Quasi-symmetric monomial M_alpha(x_1..x_N).
Poly quasisym_M(const Composition& alpha, int N);

}  // namespace nabla
