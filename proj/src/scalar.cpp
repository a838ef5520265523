#include "nabla/scalar.hpp"

#include <algorithm>

namespace nabla {

QtScalar substitute_power(const QtScalar& f, int r) {
  if (r == 1) return f;
  return QtScalar::unchecked(f.num().substitute_power(r), f.den().substitute_power(r));
}

QtScalar invert_t(const QtScalar& f) {
  const int dn = std::max(f.num().t_degree(), 0);
  const int dd = std::max(f.den().t_degree(), 0);
  // f(q,1/t) = t^dd rev(num) / (t^dn rev(den))
  BPoly n = f.num().reversed_t(dn);
  BPoly d = f.den().reversed_t(dd);
  if (dd >= dn) {
    n = n.shifted(0, dd - dn);
  } else {
    d = d.shifted(0, dn - dd);
  }
  return QtScalar(std::move(n), std::move(d));
}

QtScalar swap_qt(const QtScalar& f) {
  return QtScalar::unchecked(f.num().swapped_qt(), f.den().swapped_qt());
}

QtScalar at_t_zero(const QtScalar& f) {
  UPoly d = f.den().at_t_zero();
  if (d.is_zero()) throw std::domain_error("at_t_zero: pole at t = 0");
  return QtScalar(BPoly(f.num().at_t_zero()), BPoly(d));
}

QtScalar to_qt(const QRat& r) { return QtScalar::unchecked(BPoly(r.num()), BPoly(r.den())); }

QRat to_qrat(const QtScalar& f) {
  if (!f.num().is_q_only() || !f.den().is_q_only())
    throw std::domain_error("to_qrat: value depends on t");
  return QRat::unchecked(f.num().t_coeff(0), f.den().t_coeff(0));
}

QtMatrix invert(const QtMatrix& a) {
  const std::size_t n = a.size();
  QtMatrix m = a, inv(n, std::vector<QtScalar>(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = QtScalar(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c].is_zero()) ++piv;
    if (piv == n) throw std::domain_error("invert: singular matrix");
    std::swap(m[piv], m[c]);
    std::swap(inv[piv], inv[c]);
    const QtScalar r = m[c][c].inverse();
    for (std::size_t j = 0; j < n; ++j) {
      if (!m[c][j].is_zero()) m[c][j] *= r;
      if (!inv[c][j].is_zero()) inv[c][j] *= r;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m[i][c].is_zero()) continue;
      const QtScalar f = m[i][c];
      for (std::size_t j = 0; j < n; ++j) {
        if (!m[c][j].is_zero()) m[i][j] -= f * m[c][j];
        if (!inv[c][j].is_zero()) inv[i][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

UPoly q_number(int k) {
  if (k <= 0) return {};
  return UPoly(std::vector<mpz_class>(k, mpz_class(1)));
}

UPoly q_factorial(int k) {
  UPoly r(1);
  for (int j = 2; j <= k; ++j) r *= q_number(j);
  return r;
}

UPoly aut_q(const std::vector<int>& parts) {
  UPoly r(1);
  for (int p : parts) r *= q_factorial(p);
  return r;
}

bool TSeries::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const QRat& x) { return x.is_zero(); });
}

TSeries& TSeries::operator+=(const TSeries& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

TSeries& TSeries::operator-=(const TSeries& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

TSeries operator*(const TSeries& a, const TSeries& b) {
  const int d = std::min(a.degree(), b.degree());
  TSeries r(d);
  for (int i = 0; i <= d; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (int j = 0; i + j <= d; ++j) {
      if (b.c_[j].is_zero()) continue;
      r.c_[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return r;
}

TSeries TSeries::scaled(const QRat& r) const {
  TSeries out = *this;
  for (auto& x : out.c_) x *= r;
  return out;
}

TSeries TSeries::truncated(int degree) const {
  TSeries out(degree);
  for (int j = 0; j <= degree && j <= this->degree(); ++j) out.c_[j] = c_[j];
  return out;
}

std::string TSeries::to_string() const {
  std::string out;
  for (int j = 0; j <= degree(); ++j) {
    if (c_[j].is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string c = c_[j].to_string();
    bool needs_paren = c.find(' ') != std::string::npos && c.front() != '(';
    if (needs_paren) c = "(" + c + ")";
    if (j == 0) {
      out += c;
    } else {
      std::string tp = j == 1 ? "t" : "t^" + std::to_string(j);
      out += c == "1" ? tp : c + "*" + tp;
    }
  }
  return out.empty() ? "0" : out;
}

TSeries t_expand(const QtScalar& s, int D) {
  TSeries out(D);
  if (s.is_zero()) return out;
  const BPoly& num = s.num();
  const BPoly& den = s.den();
  const UPoly d0 = den.t_coeff(0);
  if (d0.is_zero()) throw std::domain_error("t_expand: denominator vanishes at t = 0");
  const QRat inv0 = QRat(UPoly(1), d0);
  std::vector<QRat> dq(den.t_degree() + 1);
  for (int i = 0; i <= den.t_degree(); ++i) dq[i] = QRat(den.t_coeff(i));
  for (int j = 0; j <= D; ++j) {
    QRat acc(num.t_coeff(j));
    for (int i = 1; i <= j && i <= den.t_degree(); ++i) {
      if (dq[i].is_zero() || out[j - i].is_zero()) continue;
      acc -= dq[i] * out[j - i];
    }
    out[j] = acc * inv0;
  }
  return out;
}

}  // namespace nabla
