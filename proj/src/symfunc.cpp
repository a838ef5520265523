#include "nabla/symfunc.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <stdexcept>

namespace nabla {

const char* basis_name(Basis b) {
  switch (b) {
    case Basis::m: return "m";
    case Basis::e: return "e";
    case Basis::h: return "h";
    case Basis::p: return "p";
    case Basis::s: return "s";
    case Basis::H: return "H";
  }
  return "?";
}

namespace {

// c * r where r is rational; only integer content can cancel.
QtScalar mul_rational(const QtScalar& c, const mpq_class& r) {
  if (r == 0 || c.is_zero()) return QtScalar();
  if (r == 1) return c;
  mpz_class p = r.get_num(), q = r.get_den();
  mpz_class cn = c.num().content(), cd = c.den().content();
  mpz_class g1, g2;
  mpz_gcd(g1.get_mpz_t(), p.get_mpz_t(), cd.get_mpz_t());
  mpz_gcd(g2.get_mpz_t(), q.get_mpz_t(), cn.get_mpz_t());
  BPoly num = c.num(), den = c.den();
  if (g1 != 1) {
    p /= g1;
    den = divexact(den, UPoly(g1));
  }
  if (g2 != 1) {
    q /= g2;
    num = divexact(num, UPoly(g2));
  }
  num *= p;
  den *= q;
  return QtScalar::unchecked(std::move(num), std::move(den));
}

std::string coeff_prefix(const QtScalar& c, bool first) {
  std::string s = c.to_string();
  bool neg = false;
  if (s.front() == '-' && s.find(' ') == std::string::npos) {
    neg = true;
    s = s.substr(1);
  }
  std::string out = first ? (neg ? "-" : "") : (neg ? " - " : " + ");
  if (s == "1") return out;
  if (s.find(' ') != std::string::npos && s.front() != '(') s = "(" + s + ")";
  return out + s + "*";
}

}  // namespace

SymFunc::SymFunc(Basis b, const Partition& lambda, QtScalar c) : basis_(b) { add(lambda, c); }

QtScalar SymFunc::coeff(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? QtScalar() : it->second;
}

int SymFunc::degree() const {
  int d = -1;
  for (const auto& [lam, c] : terms_) d = std::max(d, size_of(lam));
  return d;
}

void SymFunc::add(const Partition& lambda, const QtScalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(lambda);
  if (it == terms_.end()) {
    terms_.emplace(lambda, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

SymFunc& SymFunc::operator+=(const SymFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) basis_ = o.basis_;
  if (o.basis_ != basis_) return *this += convert(o, basis_);
  for (const auto& [lam, c] : o.terms_) add(lam, c);
  return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& o) { return *this += o.scaled(QtScalar(-1)); }

SymFunc SymFunc::scaled(const QtScalar& c) const {
  SymFunc r(basis_);
  if (c.is_zero()) return r;
  for (const auto& [lam, x] : terms_) r.terms_.emplace(lam, x * c);
  return r;
}

SymFunc SymFunc::map_coeffs(QtScalar (*fn)(const QtScalar&)) const {
  SymFunc r(basis_);
  for (const auto& [lam, x] : terms_) r.add(lam, fn(x));
  return r;
}

bool operator==(const SymFunc& a, const SymFunc& b) {
  if (a.basis_ == b.basis_) return a.terms_ == b.terms_;
  if (a.basis_ == Basis::H || b.basis_ == Basis::H) throw std::invalid_argument("compare: H basis");
  return convert(a, Basis::m).terms_ == convert(b, Basis::m).terms_;
}

std::string SymFunc::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    out += coeff_prefix(it->second, first);
    out += basis_name(basis_);
    out += "[";
    for (std::size_t i = 0; i < it->first.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(it->first[i]);
    }
    out += "]";
    first = false;
  }
  return out;
}

SymFunc elementary(int n) { return SymFunc(Basis::e, n == 0 ? Partition{} : Partition{n}); }
SymFunc complete(int n) { return SymFunc(Basis::h, n == 0 ? Partition{} : Partition{n}); }
SymFunc power_sum(int r) { return SymFunc(Basis::p, r == 0 ? Partition{} : Partition{r}); }

// ------------------------------------------------------------ transitions

namespace {

enum class Fill { h, e, p };

// Number of ways to distribute the parts of lambda (from index i on) into
// columns with remaining capacities cap, each part placed per `kind`.
mpz_class count_fill(const Partition& lambda, std::size_t i, std::vector<int>& cap, Fill kind) {
  if (i == lambda.size()) {
    for (int c : cap)
      if (c != 0) return 0;
    return 1;
  }
  mpz_class total = 0;
  const int r = lambda[i];
  if (kind == Fill::p) {
    for (std::size_t j = 0; j < cap.size(); ++j) {
      if (cap[j] < r) continue;
      cap[j] -= r;
      total += count_fill(lambda, i + 1, cap, kind);
      cap[j] += r;
    }
    return total;
  }
  // distribute r into columns
  std::function<void(std::size_t, int)> rec = [&](std::size_t j, int left) {
    if (j == cap.size()) {
      if (left == 0) total += count_fill(lambda, i + 1, cap, kind);
      return;
    }
    int hi = std::min(left, cap[j]);
    if (kind == Fill::e) hi = std::min(hi, 1);
    for (int x = 0; x <= hi; ++x) {
      cap[j] -= x;
      rec(j + 1, left - x);
      cap[j] += x;
    }
  };
  rec(0, r);
  return total;
}

using IntMat = std::vector<std::vector<mpz_class>>;
using RatMat = std::vector<std::vector<mpq_class>>;

IntMat compute_to_m(Basis b, int n) {
  const auto& parts = partitions_of(n);
  const std::size_t k = parts.size();
  IntMat a(k, std::vector<mpz_class>(k, mpz_class(0)));
  if (b == Basis::m) {
    for (std::size_t i = 0; i < k; ++i) a[i][i] = 1;
    return a;
  }
  if (b == Basis::s) {
    // Jacobi-Trudi: s_lambda = det(h_{lambda_i - i + j}), expanded into h.
    const IntMat& hm = to_monomial_matrix(Basis::h, n);
    for (std::size_t li = 0; li < k; ++li) {
      const Partition& lam = parts[li];
      const int l = static_cast<int>(lam.size());
      std::vector<int> perm(l);
      for (int i = 0; i < l; ++i) perm[i] = i;
      std::vector<mpz_class> in_h(k, mpz_class(0));
      do {
        std::vector<int> idx;
        bool zero = false;
        for (int i = 0; i < l; ++i) {
          int d = lam[i] - i + perm[i];
          if (d < 0) {
            zero = true;
            break;
          }
          if (d > 0) idx.push_back(d);
        }
        if (zero) continue;
        int inv = 0;
        for (int i = 0; i < l; ++i)
          for (int j = i + 1; j < l; ++j)
            if (perm[i] > perm[j]) ++inv;
        in_h[partition_index(sort_to_partition(idx))] += (inv % 2 ? -1 : 1);
      } while (std::next_permutation(perm.begin(), perm.end()));
      for (std::size_t hi = 0; hi < k; ++hi) {
        if (in_h[hi] == 0) continue;
        for (std::size_t mi = 0; mi < k; ++mi) a[li][mi] += in_h[hi] * hm[hi][mi];
      }
    }
    return a;
  }
  Fill kind = b == Basis::h ? Fill::h : b == Basis::e ? Fill::e : Fill::p;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      std::vector<int> cap = parts[j];
      a[i][j] = count_fill(parts[i], 0, cap, kind);
    }
  }
  return a;
}

RatMat invert(const IntMat& a) {
  const std::size_t k = a.size();
  RatMat m(k, std::vector<mpq_class>(2 * k, mpq_class(0)));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) m[i][j] = a[i][j];
    m[i][k + i] = 1;
  }
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t piv = c;
    while (piv < k && m[piv][c] == 0) ++piv;
    if (piv == k) throw std::logic_error("transition matrix is singular");
    std::swap(m[piv], m[c]);
    mpq_class inv = 1 / m[c][c];
    for (auto& x : m[c]) x *= inv;
    for (std::size_t r = 0; r < k; ++r) {
      if (r == c || m[r][c] == 0) continue;
      mpq_class f = m[r][c];
      for (std::size_t j = 0; j < 2 * k; ++j) m[r][j] -= f * m[c][j];
    }
  }
  RatMat out(k, std::vector<mpq_class>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) out[i][j] = m[i][k + j];
  return out;
}

std::recursive_mutex mat_mutex;
std::map<std::pair<int, int>, IntMat> to_m_cache;
std::map<std::pair<int, int>, RatMat> from_m_cache;

// Coefficients of f grouped by degree.
std::map<int, std::map<Partition, QtScalar>> by_degree(const SymFunc& f) {
  std::map<int, std::map<Partition, QtScalar>> out;
  for (const auto& [lam, c] : f.terms()) out[size_of(lam)].emplace(lam, c);
  return out;
}

}  // namespace

const std::vector<std::vector<mpz_class>>& to_monomial_matrix(Basis b, int n) {
  if (b == Basis::H) throw std::invalid_argument("to_monomial_matrix: H basis");
  std::lock_guard<std::recursive_mutex> lock(mat_mutex);
  auto key = std::make_pair(static_cast<int>(b), n);
  auto it = to_m_cache.find(key);
  if (it != to_m_cache.end()) return it->second;
  IntMat a = compute_to_m(b, n);
  return to_m_cache.emplace(key, std::move(a)).first->second;
}

const std::vector<std::vector<mpq_class>>& from_monomial_matrix(Basis b, int n) {
  std::lock_guard<std::recursive_mutex> lock(mat_mutex);
  auto key = std::make_pair(static_cast<int>(b), n);
  auto it = from_m_cache.find(key);
  if (it != from_m_cache.end()) return it->second;
  RatMat inv = invert(to_monomial_matrix(b, n));
  return from_m_cache.emplace(key, std::move(inv)).first->second;
}

SymFunc convert(const SymFunc& f, Basis target) {
  if (f.basis() == target) return f;
  if (f.basis() == Basis::H || target == Basis::H)
    throw std::invalid_argument("convert: H basis needs the macdonald module");
  SymFunc out(target);
  for (const auto& [n, terms] : by_degree(f)) {
    const auto& parts = partitions_of(n);
    const std::size_t k = parts.size();
    std::vector<QtScalar> mono(k);
    if (f.basis() == Basis::m) {
      for (const auto& [lam, c] : terms) mono[partition_index(lam)] = c;
    } else {
      const auto& a = to_monomial_matrix(f.basis(), n);
      for (const auto& [lam, c] : terms) {
        const auto& row = a[partition_index(lam)];
        for (std::size_t j = 0; j < k; ++j)
          if (row[j] != 0) mono[j] += mul_rational(c, mpq_class(row[j]));
      }
    }
    if (target == Basis::m) {
      for (std::size_t j = 0; j < k; ++j) out.add(parts[j], mono[j]);
      continue;
    }
    const auto& inv = from_monomial_matrix(target, n);
    std::vector<QtScalar> res(k);
    for (std::size_t i = 0; i < k; ++i) {
      if (mono[i].is_zero()) continue;
      for (std::size_t j = 0; j < k; ++j)
        if (inv[i][j] != 0) res[j] += mul_rational(mono[i], inv[i][j]);
    }
    for (std::size_t j = 0; j < k; ++j) out.add(parts[j], res[j]);
  }
  return out;
}

SymFunc multiply(const SymFunc& f, const SymFunc& g) {
  SymFunc a = convert(f, Basis::p), b = convert(g, Basis::p);
  SymFunc out(Basis::p);
  for (const auto& [l1, c1] : a.terms()) {
    for (const auto& [l2, c2] : b.terms()) {
      Partition u = l1;
      u.insert(u.end(), l2.begin(), l2.end());
      out.add(sort_to_partition(u), c1 * c2);
    }
  }
  return out;
}

QtScalar hall_inner(const SymFunc& f, const SymFunc& g) {
  SymFunc a = convert(f, Basis::h), b = convert(g, Basis::m);
  QtScalar r;
  for (const auto& [lam, c] : a.terms()) {
    auto it = b.terms().find(lam);
    if (it != b.terms().end()) r += c * it->second;
  }
  return r;
}

QtScalar qt_inner(const SymFunc& f, const SymFunc& g) {
  SymFunc a = convert(f, Basis::p), b = convert(g, Basis::p);
  QtScalar r;
  for (const auto& [lam, c] : a.terms()) {
    auto it = b.terms().find(lam);
    if (it == b.terms().end()) continue;
    BPoly num(z_lambda(lam)), den(1);
    for (int x : lam) {
      num = num * (BPoly(1) - BPoly::monomial(1, x, 0));
      den = den * (BPoly(1) - BPoly::monomial(1, 0, x));
    }
    r += c * it->second * QtScalar(num, den);
  }
  return r;
}

SymFunc plethysm(const SymFunc& f, const QtScalar& g) {
  SymFunc a = convert(f, Basis::p);
  SymFunc out(Basis::p);
  std::map<int, QtScalar> powers;
  for (const auto& [lam, c] : a.terms()) {
    QtScalar w = c;
    for (int r : lam) {
      auto it = powers.find(r);
      if (it == powers.end()) it = powers.emplace(r, substitute_power(g, r)).first;
      w *= it->second;
    }
    out.add(lam, w);
  }
  return out;
}

SymFunc omega_involution(const SymFunc& f) {
  SymFunc a = convert(f, Basis::p);
  SymFunc out(Basis::p);
  for (const auto& [lam, c] : a.terms()) {
    int sign = (size_of(lam) - static_cast<int>(lam.size())) % 2 ? -1 : 1;
    out.add(lam, sign < 0 ? -c : c);
  }
  return f.basis() == Basis::p ? out : convert(out, f.basis());
}

// ------------------------------------------------------------ finite alphabets

int Monomial::x_degree() const {
  int d = 0;
  for (int e : x) d += e;
  return d;
}

int Monomial::y_degree() const {
  int d = 0;
  for (int e : y) d += e;
  return d;
}

std::string Monomial::to_string() const {
  std::string out;
  auto emit = [&out](const std::vector<int>& v, char var) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] == 0) continue;
      if (!out.empty()) out += "*";
      out += var + std::to_string(i + 1);
      if (v[i] != 1) out += "^" + std::to_string(v[i]);
    }
  };
  emit(x, 'x');
  emit(y, 'y');
  return out.empty() ? "1" : out;
}

QtScalar Poly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? QtScalar() : it->second;
}

void Poly::add(const Monomial& m, const QtScalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

Poly Poly::scaled(const QtScalar& c) const {
  Poly r;
  for (const auto& [m, x] : terms_) r.add(m, x * c);
  return r;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string mono = m.to_string();
    std::string pre = coeff_prefix(c, first);
    if (mono == "1") {
      std::string s = c.to_string();
      out += first ? s : " + " + s;
    } else {
      out += pre + mono;
    }
    first = false;
  }
  return out;
}

std::vector<std::vector<int>> rearrangements(const std::vector<int>& v, int N) {
  std::vector<std::vector<int>> out;
  if (static_cast<int>(v.size()) > N) {
    int nonzero = 0;
    for (int x : v)
      if (x) ++nonzero;
    if (nonzero > N) return out;
  }
  std::vector<int> w;
  for (int x : v)
    if (x) w.push_back(x);
  w.resize(N, 0);
  std::sort(w.begin(), w.end());
  do {
    out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

std::vector<std::vector<int>> exponent_vectors(int n, int N) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(N, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == N - 1) {
      cur[i] = left;
      out.push_back(cur);
      return;
    }
    for (int x = left; x >= 0; --x) {
      cur[i] = x;
      rec(i + 1, left - x);
    }
  };
  if (N == 0) {
    if (n == 0) out.emplace_back();
    return out;
  }
  rec(0, n);
  return out;
}

Poly expand(const SymFunc& f, int N) {
  SymFunc a = convert(f, Basis::m);
  Poly out;
  for (const auto& [lam, c] : a.terms()) {
    for (auto& ex : rearrangements(lam, N)) out.add(Monomial{ex, std::vector<int>(N, 0)}, c);
  }
  return out;
}

Poly expand_xy(const SymFunc& f, const QtScalar& g, int N) {
  SymFunc a = plethysm(f, g);
  const int n = a.degree();
  Poly out;
  if (n < 0) return out;
  const auto& parts = partitions_of(n);
  const auto& pm = to_monomial_matrix(Basis::p, n);
  std::vector<Partition> fit;
  for (const auto& nu : parts)
    if (static_cast<int>(nu.size()) <= N) fit.push_back(nu);
  for (const auto& nu1 : fit) {
    const int j1 = partition_index(nu1);
    for (const auto& nu2 : fit) {
      const int j2 = partition_index(nu2);
      QtScalar c;
      for (const auto& [lam, x] : a.terms()) {
        if (size_of(lam) != n) throw std::invalid_argument("expand_xy: inhomogeneous input");
        const int li = partition_index(lam);
        mpz_class w = pm[li][j1] * pm[li][j2];
        if (w != 0) c += mul_rational(x, mpq_class(w));
      }
      if (c.is_zero()) continue;
      auto xs = rearrangements(nu1, N);
      auto ys = rearrangements(nu2, N);
      for (const auto& ex : xs)
        for (const auto& ey : ys) out.add(Monomial{ex, ey}, c);
    }
  }
  return out;
}

SymFunc monomial_part(const Poly& p, int n, bool y_alphabet) {
  SymFunc out(Basis::m);
  int N = 0;
  for (const auto& [m, c] : p.terms()) {
    N = static_cast<int>(y_alphabet ? m.y.size() : m.x.size());
    break;
  }
  if (N < n && !p.is_zero()) throw std::invalid_argument("monomial_part: too few variables");
  for (const auto& lam : partitions_of(n)) {
    std::vector<int> ex = lam;
    ex.resize(N, 0);
    for (const auto& [m, c] : p.terms()) {
      if ((y_alphabet ? m.y : m.x) == ex) out.add(lam, c);
    }
  }
  return out;
}

Poly swap_alphabets(const Poly& p) {
  Poly out;
  for (const auto& [m, c] : p.terms()) out.add(Monomial{m.y, m.x}, c);
  return out;
}

Poly plethysm_alphabet(const Poly& p, const QtScalar& g, int n, bool y_alphabet) {
  std::map<std::vector<int>, Poly> groups;
  for (const auto& [m, c] : p.terms()) {
    const auto& other = y_alphabet ? m.x : m.y;
    const auto& own = y_alphabet ? m.y : m.x;
    groups[other].add(Monomial{own, std::vector<int>(own.size(), 0)}, c);
  }
  Poly out;
  for (const auto& [other, sub] : groups) {
    const int N = static_cast<int>(sub.terms().begin()->first.x.size());
    SymFunc f = plethysm(monomial_part(sub, n, false), g);
    const Poly e = expand(f, N);
    for (const auto& [m, c] : e.terms())
      out.add(y_alphabet ? Monomial{other, m.x} : Monomial{m.x, other}, c);
  }
  return out;
}

Poly quasisym_M(const Composition& alpha, int N) {
  Poly out;
  const int l = static_cast<int>(alpha.size());
  if (l > N) return out;
  std::vector<int> pos(l);
  std::function<void(int, int)> rec = [&](int i, int start) {
    if (i == l) {
      std::vector<int> ex(N, 0);
      for (int j = 0; j < l; ++j) ex[pos[j]] = alpha[j];
      out.add(Monomial{ex, std::vector<int>(N, 0)}, QtScalar(1));
      return;
    }
    for (int v = start; v < N; ++v) {
      pos[i] = v;
      rec(i + 1, v + 1);
    }
  };
  rec(0, 0);
  return out;
}

SeriesTable t_expand(const Poly& p, int D) {
  SeriesTable out;
  for (const auto& [m, c] : p.terms()) {
    TSeries s = t_expand(c, D);
    if (!s.is_zero()) out.emplace(m, std::move(s));
  }
  return out;
}

SeriesTable scaled(const SeriesTable& s, const QRat& r) {
  SeriesTable out;
  if (r.is_zero()) return out;
  for (const auto& [m, x] : s) out.emplace(m, x.scaled(r));
  return out;
}

void accumulate(SeriesTable& into, const SeriesTable& from) {
  for (const auto& [m, x] : from) {
    auto it = into.find(m);
    if (it == into.end()) {
      into.emplace(m, x);
      continue;
    }
    it->second += x;
    if (it->second.is_zero()) into.erase(it);
  }
}

bool equal_tables(const SeriesTable& a, const SeriesTable& b) {
  auto nonzero = [](const SeriesTable& s) {
    SeriesTable out;
    for (const auto& [m, x] : s)
      if (!x.is_zero()) out.emplace(m, x);
    return out;
  };
  return nonzero(a) == nonzero(b);
}

}  // namespace nabla
