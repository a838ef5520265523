#include "nabla/poly.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>

namespace nabla {

namespace {

std::string render_term(const mpz_class& c, int qd, int td, bool first) {
  std::string out;
  mpz_class a = abs(c);
  if (first) {
    if (sgn(c) < 0) out += "-";
  } else {
    out += sgn(c) < 0 ? " - " : " + ";
  }
  std::string mono;
  auto append = [&mono](const char* v, int d) {
    if (d == 0) return;
    if (!mono.empty()) mono += "*";
    mono += v;
    if (d != 1) mono += "^" + std::to_string(d);
  };
  append("q", qd);
  append("t", td);
  if (mono.empty()) {
    out += a.get_str();
  } else if (a == 1) {
    out += mono;
  } else {
    out += a.get_str() + "*" + mono;
  }
  return out;
}

mpz_class max_abs(const std::vector<mpz_class>& c) {
  mpz_class m = 0;
  for (const auto& x : c)
    if (abs(x) > m) m = abs(x);
  return m;
}

// Symmetric base-xi digits of g, read as polynomial coefficients.
std::vector<mpz_class> xi_adic(mpz_class g, const mpz_class& xi) {
  std::vector<mpz_class> c;
  const mpz_class half = xi / 2;
  while (g != 0) {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), g.get_mpz_t(), xi.get_mpz_t());
    if (r > half) r -= xi;
    g -= r;
    mpz_divexact(g.get_mpz_t(), g.get_mpz_t(), xi.get_mpz_t());
    c.push_back(r);
  }
  return c;
}

// Heuristic gcd: gcd of evaluations at a large integer, lifted back and
// confirmed by exact division. Starting point and growth factor follow
// the usual GCDHEU choices.
mpz_class heu_start(const mpz_class& na, const mpz_class& nb) { return 2 * std::min(na, nb) + 29; }
void heu_grow(mpz_class& xi) { xi = xi * 73794 / 27011; }
constexpr int kHeuTries = 6;

}  // namespace

// ---------------------------------------------------------------- UPoly

UPoly::UPoly(long c) {
  if (c != 0) c_.emplace_back(c);
}

UPoly::UPoly(const mpz_class& c) {
  if (c != 0) c_.push_back(c);
}

UPoly::UPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::monomial(const mpz_class& c, int degree) {
  UPoly p;
  if (c == 0) return p;
  p.c_.assign(degree + 1, mpz_class(0));
  p.c_[degree] = c;
  return p;
}

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int UPoly::valuation() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return static_cast<int>(i);
  return -1;
}

mpz_class UPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[i];
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), mpz_class(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), mpz_class(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> r(a.c_.size() + b.c_.size() - 1, mpz_class(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      mpz_addmul(r[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
    }
  }
  return UPoly(std::move(r));
}

UPoly& UPoly::operator*=(const UPoly& o) { return *this = *this * o; }

UPoly& UPoly::operator*=(const mpz_class& c) {
  if (c == 0) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= c;
  return *this;
}

bool operator<(const UPoly& a, const UPoly& b) {
  if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
  for (std::size_t i = a.c_.size(); i-- > 0;) {
    if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
  }
  return false;
}

UPoly UPoly::shifted(int k) const {
  if (is_zero() || k == 0) return *this;
  UPoly r;
  if (k > 0) {
    r.c_.assign(k, mpz_class(0));
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
  } else {
    if (valuation() < -k) throw std::domain_error("UPoly::shifted: negative power");
    r.c_.assign(c_.begin() + (-k), c_.end());
  }
  return r;
}

UPoly UPoly::substitute_power(int r) const {
  if (r == 1 || is_constant()) return *this;
  std::vector<mpz_class> out(static_cast<std::size_t>(degree()) * r + 1, mpz_class(0));
  for (std::size_t i = 0; i < c_.size(); ++i) out[i * r] = c_[i];
  return UPoly(std::move(out));
}

mpz_class UPoly::eval(const mpz_class& x) const {
  mpz_class acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

mpz_class UPoly::content() const {
  mpz_class g = 0;
  for (const auto& x : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

UPoly UPoly::primitive_part() const {
  if (is_zero()) return {};
  mpz_class g = content();
  if (sgn(lead()) < 0) g = -g;
  return divexact(*this, g);
}

std::string UPoly::to_string(const char* var) const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    std::string term = render_term(c_[i], static_cast<int>(i), 0, first);
    if (var[0] != 'q') std::replace(term.begin(), term.end(), 'q', var[0]);
    out += term;
    first = false;
  }
  return out;
}

UPoly divexact(const UPoly& a, const mpz_class& c) {
  if (c == 0) throw std::domain_error("divexact: division by zero");
  std::vector<mpz_class> r = a.coeffs();
  for (auto& x : r) {
    if (!mpz_divisible_p(x.get_mpz_t(), c.get_mpz_t()))
      throw std::domain_error("divexact: inexact integer division");
    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  }
  return UPoly(std::move(r));
}

UPoly divexact(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw std::domain_error("divexact: division by zero polynomial");
  if (a.is_zero()) return {};
  if (b.degree() == 0) return divexact(a, b.lead());
  if (a.degree() < b.degree()) throw std::domain_error("divexact: inexact polynomial division");
  std::vector<mpz_class> r = a.coeffs();
  const auto& bc = b.coeffs();
  const int db = b.degree();
  std::vector<mpz_class> quo(a.degree() - db + 1, mpz_class(0));
  for (int i = a.degree(); i >= db; --i) {
    if (r[i] == 0) continue;
    if (!mpz_divisible_p(r[i].get_mpz_t(), b.lead().get_mpz_t()))
      throw std::domain_error("divexact: inexact polynomial division");
    mpz_class qc;
    mpz_divexact(qc.get_mpz_t(), r[i].get_mpz_t(), b.lead().get_mpz_t());
    for (int j = 0; j <= db; ++j) {
      mpz_submul(r[i - db + j].get_mpz_t(), qc.get_mpz_t(), bc[j].get_mpz_t());
    }
    quo[i - db] = qc;
  }
  for (int i = 0; i < db; ++i) {
    if (r[i] != 0) throw std::domain_error("divexact: inexact polynomial division");
  }
  return UPoly(std::move(quo));
}

UPoly pseudo_remainder(const UPoly& a, const UPoly& b) {
  UPoly r = a;
  const int db = b.degree();
  while (!r.is_zero() && r.degree() >= db) {
    UPoly lr = UPoly::monomial(r.lead(), r.degree() - db);
    r *= b.lead();
    r -= lr * b;
  }
  return r;
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  if (a.is_zero()) return b.primitive_part() * b.content();
  if (b.is_zero()) return a.primitive_part() * a.content();
  const int v = std::min(a.valuation(), b.valuation());
  UPoly x = a.shifted(-a.valuation());
  UPoly y = b.shifted(-b.valuation());
  mpz_class c;
  {
    mpz_class ca = x.content(), cb = y.content();
    mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  }
  x = x.primitive_part();
  y = y.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  UPoly g;
  bool found = false;
  if (y.degree() > 0) {
    mpz_class xi = heu_start(max_abs(x.coeffs()), max_abs(y.coeffs()));
    for (int attempt = 0; attempt < kHeuTries && !found; ++attempt, heu_grow(xi)) {
      mpz_class u = x.eval(xi), w = y.eval(xi), h;
      if (u == 0 || w == 0) continue;
      mpz_gcd(h.get_mpz_t(), u.get_mpz_t(), w.get_mpz_t());
      UPoly cand(xi_adic(h, xi));
      if (cand.is_zero()) continue;
      cand = cand.primitive_part();
      try {
        divexact(x, cand);
        divexact(y, cand);
        g = cand;
        found = true;
      } catch (const std::domain_error&) {
      }
    }
  }
  if (found) {
  } else if (y.degree() == 0) {
    g = UPoly(1);
  } else if (x == y) {
    g = y;
  } else {
    while (true) {
      UPoly r = pseudo_remainder(x, y);
      if (r.is_zero()) {
        g = y;
        break;
      }
      if (r.degree() == 0) {
        g = UPoly(1);
        break;
      }
      x = std::move(y);
      y = r.primitive_part();
    }
  }
  g = g.primitive_part();
  g *= c;
  return g.shifted(v);
}

// ---------------------------------------------------------------- BPoly

BPoly::BPoly(long c) {
  if (c != 0) c_.emplace_back(c);
}

BPoly::BPoly(const mpz_class& c) {
  if (c != 0) c_.emplace_back(c);
}

BPoly::BPoly(const UPoly& p) {
  if (!p.is_zero()) c_.push_back(p);
}

BPoly::BPoly(std::vector<UPoly> t_coeffs) : c_(std::move(t_coeffs)) { trim(); }

BPoly BPoly::monomial(const mpz_class& c, int q_deg, int t_deg) {
  BPoly p;
  if (c == 0) return p;
  p.c_.assign(t_deg + 1, UPoly());
  p.c_[t_deg] = UPoly::monomial(c, q_deg);
  return p;
}

void BPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

int BPoly::q_degree() const {
  int d = -1;
  for (const auto& u : c_) d = std::max(d, u.degree());
  return d;
}

int BPoly::t_valuation() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return static_cast<int>(i);
  return -1;
}

int BPoly::q_valuation() const {
  int v = -1;
  for (const auto& u : c_) {
    if (u.is_zero()) continue;
    int w = u.valuation();
    if (v < 0 || w < v) v = w;
  }
  return v;
}

UPoly BPoly::t_coeff(int j) const {
  if (j < 0 || j >= static_cast<int>(c_.size())) return {};
  return c_[j];
}

mpz_class BPoly::coeff(int q_deg, int t_deg) const { return t_coeff(t_deg).coeff(q_deg); }

mpz_class BPoly::lex_lead() const {
  const int qd = q_degree();
  for (std::size_t j = c_.size(); j-- > 0;) {
    if (c_[j].degree() == qd) return c_[j].lead();
  }
  return 0;
}

BPoly BPoly::operator-() const {
  BPoly r = *this;
  for (auto& u : r.c_) u = -u;
  return r;
}

BPoly& BPoly::operator+=(const BPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

BPoly& BPoly::operator-=(const BPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

BPoly& BPoly::operator*=(const mpz_class& c) {
  if (c == 0) {
    c_.clear();
    return *this;
  }
  for (auto& u : c_) u *= c;
  return *this;
}

BPoly operator*(const BPoly& a, const BPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<UPoly> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j].is_zero()) continue;
      r[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return BPoly(std::move(r));
}

BPoly BPoly::shifted(int dq, int dt) const {
  if (is_zero()) return *this;
  std::vector<UPoly> r;
  if (dt >= 0) {
    r.assign(dt, UPoly());
    for (const auto& u : c_) r.push_back(u.shifted(dq));
  } else {
    if (t_valuation() < -dt) throw std::domain_error("BPoly::shifted: negative t power");
    for (std::size_t j = -dt; j < c_.size(); ++j) r.push_back(c_[j].shifted(dq));
  }
  return BPoly(std::move(r));
}

BPoly BPoly::substitute_power(int r) const {
  if (r == 1 || is_zero()) return *this;
  std::vector<UPoly> out(static_cast<std::size_t>(t_degree()) * r + 1);
  for (std::size_t j = 0; j < c_.size(); ++j) out[j * r] = c_[j].substitute_power(r);
  return BPoly(std::move(out));
}

BPoly BPoly::reversed_t(int d) const {
  if (d < t_degree()) throw std::domain_error("BPoly::reversed_t: degree too small");
  if (is_zero()) return *this;
  std::vector<UPoly> out(d + 1);
  for (std::size_t j = 0; j < c_.size(); ++j) out[d - j] = c_[j];
  return BPoly(std::move(out));
}

BPoly BPoly::swapped_qt() const {
  const int qd = q_degree();
  if (qd < 0) return *this;
  std::vector<UPoly> out(qd + 1);
  std::vector<std::vector<mpz_class>> tmp(qd + 1, std::vector<mpz_class>(c_.size(), mpz_class(0)));
  for (std::size_t j = 0; j < c_.size(); ++j) {
    const auto& cs = c_[j].coeffs();
    for (std::size_t i = 0; i < cs.size(); ++i) tmp[i][j] = cs[i];
  }
  for (int i = 0; i <= qd; ++i) out[i] = UPoly(std::move(tmp[i]));
  return BPoly(std::move(out));
}

mpz_class BPoly::content() const {
  mpz_class g = 0;
  for (const auto& u : c_) {
    mpz_class cu = u.content();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), cu.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

UPoly BPoly::t_content() const {
  UPoly g;
  for (const auto& u : c_) {
    if (u.is_zero()) continue;
    g = gcd(g, u);
    if (g.degree() == 0 && g.lead() == 1) break;
  }
  return g;
}

std::string BPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  // ascending total degree, q before t within a degree
  const int qd = q_degree();
  const int top = qd + t_degree();
  for (int tot = 0; tot <= top; ++tot) {
    for (int i = std::min(tot, qd); i >= 0; --i) {
      mpz_class c = coeff(i, tot - i);
      if (c == 0) continue;
      out += render_term(c, i, tot - i, first);
      first = false;
    }
  }
  return out;
}

BPoly divexact(const BPoly& a, const UPoly& c) {
  std::vector<UPoly> r;
  r.reserve(a.t_coeffs().size());
  for (const auto& u : a.t_coeffs()) r.push_back(divexact(u, c));
  return BPoly(std::move(r));
}

BPoly divexact(const BPoly& a, const BPoly& b) {
  if (b.is_zero()) throw std::domain_error("divexact: division by zero polynomial");
  if (a.is_zero()) return {};
  if (b.is_q_only()) return divexact(a, b.t_coeff(0));
  const int db = b.t_degree();
  if (a.t_degree() < db) throw std::domain_error("divexact: inexact polynomial division");
  std::vector<UPoly> r = a.t_coeffs();
  std::vector<UPoly> quo(a.t_degree() - db + 1);
  const UPoly& lb = b.t_coeffs().back();
  for (int i = a.t_degree(); i >= db; --i) {
    if (r[i].is_zero()) continue;
    UPoly qc = divexact(r[i], lb);
    for (int j = 0; j <= db; ++j) r[i - db + j] -= qc * b.t_coeffs()[j];
    quo[i - db] = std::move(qc);
  }
  for (int i = 0; i < db; ++i) {
    if (!r[i].is_zero()) throw std::domain_error("divexact: inexact polynomial division");
  }
  return BPoly(std::move(quo));
}

namespace {

BPoly lex_normalized(BPoly p) {
  if (!p.is_zero() && sgn(p.lex_lead()) < 0) p = -p;
  return p;
}

BPoly prem_t(const BPoly& a, const BPoly& b) {
  BPoly r = a;
  const int db = b.t_degree();
  const UPoly& lb = b.t_coeffs().back();
  while (!r.is_zero() && r.t_degree() >= db) {
    BPoly lr = BPoly(r.t_coeffs().back()).shifted(0, r.t_degree() - db);
    r = BPoly(lb) * r - lr * b;
  }
  return r;
}

BPoly t_primitive(const BPoly& p) {
  UPoly c = p.t_content();
  return divexact(p, c);
}

mpz_class max_abs(const BPoly& p) {
  mpz_class m = 0;
  for (const auto& u : p.t_coeffs()) m = std::max(m, max_abs(u.coeffs()));
  return m;
}

// Evaluate q at xi, take the gcd in Z[t], lift the coefficients back.
std::optional<BPoly> heuristic_gcd(const BPoly& a, const BPoly& b) {
  if (a.is_q_only() || b.is_q_only()) return std::nullopt;
  const mpz_class ca = a.content(), cb = b.content();
  mpz_class c;
  mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  const BPoly x = divexact(a, UPoly(ca)), y = divexact(b, UPoly(cb));
  mpz_class xi = heu_start(max_abs(x), max_abs(y));
  for (int attempt = 0; attempt < kHeuTries; ++attempt, heu_grow(xi)) {
    std::vector<mpz_class> ux, uy;
    for (const auto& r : x.t_coeffs()) ux.push_back(r.eval(xi));
    for (const auto& r : y.t_coeffs()) uy.push_back(r.eval(xi));
    UPoly gx(std::move(ux)), gy(std::move(uy));
    if (gx.is_zero() || gy.is_zero()) continue;
    UPoly g = gcd(gx, gy);
    std::vector<UPoly> rows;
    for (const auto& coef : g.coeffs()) rows.emplace_back(xi_adic(coef, xi));
    BPoly cand(std::move(rows));
    if (cand.is_zero()) continue;
    cand = divexact(cand, UPoly(cand.content()));
    try {
      divexact(x, cand);
      divexact(y, cand);
    } catch (const std::domain_error&) {
      continue;
    }
    cand *= c;
    return cand;
  }
  return std::nullopt;
}

}  // namespace

BPoly gcd(const BPoly& a, const BPoly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  if (a.is_zero()) return lex_normalized(b);
  if (b.is_zero()) return lex_normalized(a);
  const int vt = std::min(a.t_valuation(), b.t_valuation());
  const int vq = std::min(a.q_valuation(), b.q_valuation());
  BPoly x = a.shifted(-a.q_valuation(), -a.t_valuation());
  BPoly y = b.shifted(-b.q_valuation(), -b.t_valuation());
  if (auto h = heuristic_gcd(x, y)) return lex_normalized(h->shifted(vq, vt));
  BPoly g;
  if (x.is_q_only() && y.is_q_only()) {
    g = BPoly(gcd(x.t_coeff(0), y.t_coeff(0)));
  } else if (x.is_q_only()) {
    g = BPoly(gcd(x.t_coeff(0), y.t_content()));
  } else if (y.is_q_only()) {
    g = BPoly(gcd(y.t_coeff(0), x.t_content()));
  } else {
    UPoly cx = x.t_content(), cy = y.t_content();
    UPoly g0 = gcd(cx, cy);
    x = divexact(x, cx);
    y = divexact(y, cy);
    if (x.t_degree() < y.t_degree()) std::swap(x, y);
    BPoly h;
    if (x == y || (lex_normalized(x) == lex_normalized(y))) {
      h = y;
    } else {
      while (true) {
        BPoly r = prem_t(x, y);
        if (r.is_zero()) {
          h = y;
          break;
        }
        if (r.t_degree() == 0) {
          h = BPoly(1);
          break;
        }
        x = std::move(y);
        y = t_primitive(r);
      }
    }
    g = BPoly(g0) * t_primitive(h);
  }
  return lex_normalized(g.shifted(vq, vt));
}

}  // namespace nabla
