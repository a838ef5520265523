#pragma once

// Exact rational functions in q,t (QtScalar) and in q alone (QRat), and
// truncated power series in t with QRat coefficients.

#include <gmpxx.h>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nabla/poly.hpp"

namespace nabla {

inline int lead_sign(const UPoly& p) { return p.is_zero() ? 0 : sgn(p.lead()); }
inline int lead_sign(const BPoly& p) { return p.is_zero() ? 0 : sgn(p.lex_lead()); }

// num/den with gcd(num, den) = 1 and positive leading coefficient in den.
template <class P>
class Frac {
 public:
  Frac() : num_(), den_(1) {}
  Frac(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  Frac(const mpz_class& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  Frac(P num) : num_(std::move(num)), den_(1) {}  // NOLINT(google-explicit-constructor)
  Frac(P num, P den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

  static Frac from_mpq(const mpq_class& r) {
    return Frac(P(mpz_class(r.get_num())), P(mpz_class(r.get_den())));
  }
  // Build from parts already known to be coprime (sign still fixed up).
  static Frac unchecked(P num, P den) {
    Frac f;
    f.num_ = std::move(num);
    f.den_ = std::move(den);
    if (lead_sign(f.den_) < 0) {
      f.num_ = -f.num_;
      f.den_ = -f.den_;
    }
    return f;
  }

  const P& num() const { return num_; }
  const P& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }

  Frac operator-() const { return unchecked(-num_, den_); }

  friend Frac operator+(const Frac& a, const Frac& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) {
      if (a.den_.is_constant() && a.den_ == P(1)) return Frac(a.num_ + b.num_);
      return Frac(a.num_ + b.num_, a.den_);
    }
    P g = gcd(a.den_, b.den_);
    P bd = divexact(b.den_, g);
    P ad = divexact(a.den_, g);
    P n = a.num_ * bd + b.num_ * ad;
    if (n.is_zero()) return Frac();
    P d = a.den_ * bd;
    P h = gcd(n, g);
    return unchecked(divexact(n, h), divexact(d, h));
  }
  friend Frac operator-(const Frac& a, const Frac& b) { return a + (-b); }
  friend Frac operator*(const Frac& a, const Frac& b) {
    if (a.is_zero() || b.is_zero()) return Frac();
    P g1 = gcd(a.num_, b.den_);
    P g2 = gcd(b.num_, a.den_);
    return unchecked(divexact(a.num_, g1) * divexact(b.num_, g2),
                     divexact(a.den_, g2) * divexact(b.den_, g1));
  }
  Frac inverse() const {
    if (is_zero()) throw std::domain_error("Frac::inverse: zero");
    return unchecked(den_, num_);
  }
  friend Frac operator/(const Frac& a, const Frac& b) { return a * b.inverse(); }
  Frac& operator+=(const Frac& o) { return *this = *this + o; }
  Frac& operator-=(const Frac& o) { return *this = *this - o; }
  Frac& operator*=(const Frac& o) { return *this = *this * o; }
  Frac& operator/=(const Frac& o) { return *this = *this / o; }
  friend bool operator==(const Frac& a, const Frac& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const Frac& a, const Frac& b) { return !(a == b); }

  Frac pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    Frac r(1), base = *this;
    while (e > 0) {
      if (e & 1) r *= base;
      base *= base;
      e >>= 1;
    }
    return r;
  }

  std::string to_string() const {
    if (den_ == P(1)) return num_.to_string();
    std::string n = num_.to_string(), d = den_.to_string();
    auto wrap = [](const std::string& s) { return s.find(' ') == std::string::npos ? s : "(" + s + ")"; };
    return wrap(n) + "/" + wrap(d);
  }

 private:
  void normalize() {
    if (den_.is_zero()) throw std::domain_error("Frac: zero denominator");
    if (num_.is_zero()) {
      den_ = P(1);
      return;
    }
    P g = gcd(num_, den_);
    num_ = divexact(num_, g);
    den_ = divexact(den_, g);
    if (lead_sign(den_) < 0) {
      num_ = -num_;
      den_ = -den_;
    }
  }

  P num_;
  P den_;
};

using QtScalar = Frac<BPoly>;
using QRat = Frac<UPoly>;

inline QtScalar qt_q() { return QtScalar(BPoly::q()); }
inline QtScalar qt_t() { return QtScalar(BPoly::t()); }
inline QtScalar qt_monomial(int qd, int td, long c = 1) {
  if (qd >= 0 && td >= 0) return QtScalar(BPoly::monomial(c, qd, td));
  return QtScalar(BPoly::monomial(c, std::max(qd, 0), std::max(td, 0)),
                  BPoly::monomial(1, std::max(-qd, 0), std::max(-td, 0)));
}

// f(q, t) -> f(q^r, t^r)
QtScalar substitute_power(const QtScalar& f, int r);
// f(q, t) -> f(q, 1/t)
QtScalar invert_t(const QtScalar& f);
// f(q, t) -> f(t, q)
QtScalar swap_qt(const QtScalar& f);
// f(q, 0); requires den(q, 0) != 0
QtScalar at_t_zero(const QtScalar& f);
// Embedding of a q-only rational function.
QtScalar to_qt(const QRat& r);
// Inverse embedding; throws if f involves t.
QRat to_qrat(const QtScalar& f);

using QtMatrix = std::vector<std::vector<QtScalar>>;
// Gauss-Jordan inverse; throws std::domain_error when singular.
QtMatrix invert(const QtMatrix& a);

// [k]_q, [k]_q!, and aut_q(mu) = prod_i [mu_i]_q!
UPoly q_number(int k);
UPoly q_factorial(int k);
UPoly aut_q(const std::vector<int>& parts);

class TSeries {
 public:
  TSeries() = default;
  explicit TSeries(int degree) : c_(degree + 1) {}

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const QRat& operator[](int j) const { return c_.at(j); }
  QRat& operator[](int j) { return c_.at(j); }
  const std::vector<QRat>& coeffs() const { return c_; }
  bool is_zero() const;

  TSeries& operator+=(const TSeries& o);
  TSeries& operator-=(const TSeries& o);
  friend TSeries operator+(TSeries a, const TSeries& b) { return a += b; }
  friend TSeries operator-(TSeries a, const TSeries& b) { return a -= b; }
  friend TSeries operator*(const TSeries& a, const TSeries& b);
  TSeries scaled(const QRat& r) const;
  TSeries truncated(int degree) const;
  friend bool operator==(const TSeries& a, const TSeries& b) { return a.c_ == b.c_; }
  friend bool operator!=(const TSeries& a, const TSeries& b) { return !(a == b); }

  std::string to_string() const;

 private:
  std::vector<QRat> c_;
};

// t-expansion of s through degree D. Throws std::domain_error when the
// denominator vanishes at t = 0.
TSeries t_expand(const QtScalar& s, int D);

}  // namespace nabla
