#pragma once

// Dense integer polynomials in one variable q (UPoly) and in two variables
// q, t (BPoly, stored as a polynomial in t with UPoly coefficients).

#include <gmpxx.h>

#include <string>
#include <vector>

namespace nabla {

class UPoly {
 public:
  UPoly() = default;
  UPoly(long c);  // NOLINT(google-explicit-constructor)
  UPoly(const mpz_class& c);  // NOLINT(google-explicit-constructor)
  explicit UPoly(std::vector<mpz_class> coeffs);

  static UPoly monomial(const mpz_class& c, int degree);
  static UPoly q() { return monomial(1, 1); }

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  int valuation() const;
  const std::vector<mpz_class>& coeffs() const { return c_; }
  mpz_class coeff(int i) const;
  const mpz_class& lead() const { return c_.back(); }

  UPoly operator-() const;
  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  UPoly& operator*=(const UPoly& o);
  UPoly& operator*=(const mpz_class& c);

  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }
  friend bool operator<(const UPoly& a, const UPoly& b);

  // Multiply by q^k (k may be negative if the result stays polynomial).
  UPoly shifted(int k) const;
  // q -> q^r
  UPoly substitute_power(int r) const;
  mpz_class eval(const mpz_class& x) const;
  mpz_class content() const;  // positive gcd of the coefficients
  UPoly primitive_part() const;

  std::string to_string(const char* var = "q") const;

 private:
  void trim();
  std::vector<mpz_class> c_;
};

// Exact quotient; throws std::domain_error when b does not divide a.
UPoly divexact(const UPoly& a, const UPoly& b);
UPoly divexact(const UPoly& a, const mpz_class& c);
// Remainder after pseudo-division: lc(b)^(deg a - deg b + 1) a mod b.
UPoly pseudo_remainder(const UPoly& a, const UPoly& b);
// gcd in Z[q], normalized to a positive leading coefficient.
UPoly gcd(const UPoly& a, const UPoly& b);

class BPoly {
 public:
  BPoly() = default;
  BPoly(long c);  // NOLINT(google-explicit-constructor)
  BPoly(const mpz_class& c);  // NOLINT(google-explicit-constructor)
  BPoly(const UPoly& p);  // NOLINT(google-explicit-constructor)
  explicit BPoly(std::vector<UPoly> t_coeffs);

  static BPoly monomial(const mpz_class& c, int q_deg, int t_deg);
  static BPoly q() { return monomial(1, 1, 0); }
  static BPoly t() { return monomial(1, 0, 1); }

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1 && (c_.empty() || c_[0].is_constant()); }
  bool is_q_only() const { return c_.size() <= 1; }
  int t_degree() const { return static_cast<int>(c_.size()) - 1; }
  int q_degree() const;
  int t_valuation() const;
  int q_valuation() const;
  const std::vector<UPoly>& t_coeffs() const { return c_; }
  UPoly t_coeff(int j) const;
  mpz_class coeff(int q_deg, int t_deg) const;
  // Leading coefficient under lex order with q > t.
  mpz_class lex_lead() const;

  BPoly operator-() const;
  BPoly& operator+=(const BPoly& o);
  BPoly& operator-=(const BPoly& o);
  BPoly& operator*=(const mpz_class& c);
  friend BPoly operator+(BPoly a, const BPoly& b) { return a += b; }
  friend BPoly operator-(BPoly a, const BPoly& b) { return a -= b; }
  friend BPoly operator*(const BPoly& a, const BPoly& b);
  friend bool operator==(const BPoly& a, const BPoly& b) { return a.c_ == b.c_; }

  BPoly shifted(int dq, int dt) const;
  // q -> q^r, t -> t^r
  BPoly substitute_power(int r) const;
  // t^d * p(q, 1/t); requires d >= t_degree().
  BPoly reversed_t(int d) const;
  BPoly swapped_qt() const;
  UPoly at_t_zero() const { return t_coeff(0); }
  mpz_class content() const;
  UPoly t_content() const;  // gcd over Z[q] of the t-coefficients

  std::string to_string() const;

 private:
  void trim();
  std::vector<UPoly> c_;
};

BPoly divexact(const BPoly& a, const BPoly& b);
BPoly divexact(const BPoly& a, const UPoly& c);
// gcd in Z[q,t], normalized to a positive lex-leading coefficient.
BPoly gcd(const BPoly& a, const BPoly& b);

}  // namespace nabla
