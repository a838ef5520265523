#include "nabla/bundles.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "nabla/omega.hpp"

namespace nabla {

namespace {

int delta(bool c) { return c ? 1 : 0; }

// c_{ij} for i < j in a sorted sum: m_i - m_j - [a_j < a_i] - [b_j < b_i]
int c_pair(const SortedTriple& s, int i, int j) {
  return s.m[i] - s.m[j] - delta(s.a[j] < s.a[i]) - delta(s.b[j] < s.b[i]);
}

Partition triple_multiplicities(const SortedTriple& s) { return mu_of({s.m, s.a, s.b}); }

int binom2(int r) { return r * (r - 1) / 2; }

// Dense polynomials over F_p in z, index = exponent.
using FpPoly = std::vector<int>;

FpPoly mul(const FpPoly& f, const FpPoly& g, int p) {
  if (f.empty() || g.empty()) return {};
  FpPoly h(f.size() + g.size() - 1, 0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!f[i]) continue;
    for (std::size_t j = 0; j < g.size(); ++j) h[i + j] = (h[i + j] + f[i] * g[j]) % p;
  }
  return h;
}

void add_to(FpPoly& f, const FpPoly& g, int p, int sign = 1) {
  if (f.size() < g.size()) f.resize(g.size(), 0);
  for (std::size_t i = 0; i < g.size(); ++i) f[i] = ((f[i] + sign * g[i]) % p + p) % p;
}

bool is_zero(const FpPoly& f) {
  return std::all_of(f.begin(), f.end(), [](int c) { return c == 0; });
}

int eval(const FpPoly& f, int z, int p) {
  long v = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) v = (v * z + *it) % p;
  return static_cast<int>(v);
}

using FpMatrix = std::vector<std::vector<FpPoly>>;

FpMatrix mat_mul(const FpMatrix& A, const FpMatrix& B, int p) {
  const std::size_t n = A.size();
  FpMatrix C(n, std::vector<FpPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) add_to(C[i][j], mul(A[i][l], B[l][j], p), p);
  return C;
}

// Leibniz expansion; n is tiny.
FpPoly det(const FpMatrix& A, int p) {
  const int n = static_cast<int>(A.size());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  FpPoly out;
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    FpPoly term{1};
    for (int i = 0; i < n && !term.empty(); ++i) term = mul(term, A[i][perm[i]], p);
    add_to(out, term, p, inversions % 2 ? -1 : 1);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

int dim_cap(int p) {
  switch (p) {
    case 2: return 14;
    case 3: return 9;
    case 5: return 6;
    default: throw std::invalid_argument("brute_force_counts: p must be 2, 3 or 5");
  }
}

Monomial xy_monomial(const Label& a, const Label& b, int N) {
  Monomial mono{std::vector<int>(N, 0), std::vector<int>(N, 0)};
  for (int v : a) ++mono.x[v - 1];
  for (int v : b) ++mono.y[v - 1];
  return mono;
}

QRat q_minus_one() { return QRat(UPoly::q() - UPoly(1)); }

void note(BundleReport& r, bool& flag, const std::string& what) {
  flag = false;
  if (r.first_failure.empty()) r.first_failure = what;
}

}  // namespace

int hom_dim(const LineBundle& from, const LineBundle& to) {
  return std::max(1 + to.m - from.m - delta(from.a < to.a) - delta(from.b < to.b), 0);
}

int ext_dim(const LineBundle& from, const LineBundle& to) {
  return std::max(from.m - to.m - 1 + delta(from.a < to.a) + delta(from.b < to.b), 0);
}

int euler_form(const LineBundle& from, const LineBundle& to, int N) {
  int v = 1 + to.m - from.m;
  for (int point = 0; point < 2; ++point) {
    const int jf = point == 0 ? from.a : from.b, jt = point == 0 ? to.a : to.b;
    for (int j = 1; j <= N; ++j)
      for (int j2 = j + 1; j2 <= N; ++j2) v -= delta(j == jf) * delta(j2 == jt);
  }
  return v;
}

bool bundle_less(const LineBundle& x, const LineBundle& y) {
  return std::make_tuple(x.m, -x.a, -x.b) < std::make_tuple(y.m, -y.a, -y.b);
}

bool bundle_le(const LineBundle& x, const LineBundle& y) { return !bundle_less(y, x); }

std::vector<LineBundle> summands(const SortedTriple& s) {
  std::vector<LineBundle> out;
  for (int i = 0; i < s.size(); ++i) out.push_back({s.m[i], s.a[i], s.b[i]});
  return out;
}

UPoly aut_count(const SortedTriple& s) {
  const int n = s.size();
  int e = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e += std::max(1 + c_pair(s, i, j), 0);
  UPoly out = UPoly::monomial(1, e) * aut_q(s);
  for (int i = 0; i < n; ++i) out *= UPoly::q() - UPoly(1);
  return out;
}

mpz_class aut_count(const SortedTriple& s, int p) {
  const UPoly f = aut_count(s);
  mpz_class v = 0;
  const auto& c = f.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * p + *it;
  return v;
}

UPoly nilp_count(const SortedTriple& s, int k) {
  if (k < 0) throw std::invalid_argument("nilp_count: k must be nonnegative");
  const int n = s.size();
  int e = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e += std::max(1 - k + c_pair(s, i, j), 0);
  if (k == 0)
    for (int r : triple_multiplicities(s)) e += binom2(r);
  return UPoly::monomial(1, e);
}

mpz_class nilp_count(const SortedTriple& s, int k, int p) {
  mpz_class v;
  mpz_ui_pow_ui(v.get_mpz_t(), p, static_cast<unsigned long>(nilp_count(s, k).degree()));
  return v;
}

HomWindow hom_window(const LineBundle& from, const LineBundle& to) {
  return {delta(from.a < to.a), to.m - from.m - delta(from.b < to.b)};
}

int endomorphism_dim(const SortedTriple& s) {
  const auto L = summands(s);
  int d = 0;
  for (const auto& from : L)
    for (const auto& to : L) d += hom_window(from, to).dim();
  return d;
}

BruteCounts brute_force_counts(const SortedTriple& s, int p, const std::vector<int>& points) {
  const int cap = dim_cap(p);
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i] <= 0 || points[i] >= p) throw std::invalid_argument("brute_force_counts: points must be nonzero in F_p");
    for (std::size_t j = 0; j < i; ++j)
      if (points[j] == points[i]) throw std::invalid_argument("brute_force_counts: repeated point");
  }
  const int dim = endomorphism_dim(s);
  if (dim > cap) throw std::invalid_argument("brute_force_counts: endomorphism space too large");

  const auto L = summands(s);
  const int n = s.size();
  // theta_{ij} in Hom(L_j, L_i)
  struct Slot {
    int i, j, e;
  };
  std::vector<Slot> slots;
  std::vector<std::vector<HomWindow>> win(n, std::vector<HomWindow>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      win[i][j] = hom_window(L[j], L[i]);
      for (int e = win[i][j].lo; e <= win[i][j].hi; ++e) slots.push_back({i, j, e});
    }

  auto inside = [&](const FpMatrix& A) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int e = 0; e < static_cast<int>(A[i][j].size()); ++e)
          if (A[i][j][e] && (e < win[i][j].lo || e > win[i][j].hi)) return false;
    return true;
  };

  BruteCounts out;
  std::vector<int> digits(slots.size(), 0);
  while (true) {
    FpMatrix theta(n, std::vector<FpPoly>(n));
    for (std::size_t t = 0; t < slots.size(); ++t) {
      auto& f = theta[slots[t].i][slots[t].j];
      if (static_cast<int>(f.size()) <= slots[t].e) f.resize(slots[t].e + 1, 0);
      f[slots[t].e] = digits[t];
    }
    ++out.endomorphisms;

    const FpPoly dt = det(theta, p);
    if (!is_zero(dt)) {
      for (std::size_t e = 1; e < dt.size(); ++e)
        if (dt[e]) throw std::logic_error("brute_force_counts: nonconstant determinant");
      ++out.aut;
    }

    FpMatrix power = theta;
    for (int r = 1; r < n; ++r) {
      power = mat_mul(power, theta, p);
      if (!inside(power)) throw std::logic_error("brute_force_counts: composition left the Hom windows");
    }
    bool nilpotent = true;
    for (const auto& row : power)
      for (const auto& f : row) nilpotent = nilpotent && is_zero(f);
    bool vanishes = true;
    for (int z : points)
      for (const auto& row : theta)
        for (const auto& f : row) vanishes = vanishes && eval(f, z, p) == 0;
    if (nilpotent && vanishes) ++out.nilp;

    std::size_t t = 0;
    while (t < digits.size() && ++digits[t] == p) digits[t++] = 0;
    if (t == digits.size()) break;
  }
  return out;
}

int bundle_q_degree(const SortedTriple& s, int k) {
  const int n = s.size();
  return k * binom2(n) + nilp_count(s, k).degree() - (aut_count(s).degree() - n - aut_q(s).degree());
}

SeriesTable bundle_side_series(int n, int k, int N, int D) {
  if (n < 1 || k < 0 || N < 1 || D < 0) throw std::invalid_argument("bundle_side_series: bad arguments");
  SeriesTable out;
  const QRat lift(UPoly::monomial(1, k * binom2(n)));
  for (int d = 0; d <= D; ++d)
    for_each_sorted_triple(n, d, N, [&](const SortedTriple& s) {
      auto [it, fresh] = out.try_emplace(xy_monomial(s.a, s.b, N), D);
      it->second[d] += lift * QRat(nilp_count(s, k)) / QRat(aut_count(s));
    });
  return out;
}

SeriesTable k0_product_series(int n, int N, int D) {
  // state: X-degree n part built up factor by factor
  std::map<Monomial, TSeries> state;
  state.emplace(Monomial{std::vector<int>(N, 0), std::vector<int>(N, 0)}, TSeries(D));
  state.begin()->second[0] = QRat(1);
  for (int m = 0; m <= D; ++m)
    for (int a = 1; a <= N; ++a)
      for (int b = 1; b <= N; ++b) {
        std::map<Monomial, TSeries> next;
        for (const auto& [mono, series] : state) {
          const int room = n - mono.x_degree();
          for (int mu = 0; mu <= room && mu * m <= D; ++mu) {
            QRat c = QRat(UPoly::monomial(1, binom2(mu))) / (q_minus_one().pow(mu) * QRat(q_factorial(mu)));
            Monomial target = mono;
            target.x[a - 1] += mu;
            target.y[b - 1] += mu;
            auto [it, fresh] = next.try_emplace(target, D);
            for (int d = 0; d + mu * m <= D; ++d)
              if (!series[d].is_zero()) it->second[d + mu * m] += c * series[d];
          }
        }
        state = std::move(next);
      }
  SeriesTable out;
  for (auto& [mono, series] : state)
    if (mono.x_degree() == n && !series.is_zero()) out.emplace(mono, series);
  return out;
}

SeriesTable k0_pexp_series(int n, int N, int D) {
  const QtScalar M = (QtScalar(1) - qt_q()) * (QtScalar(1) - qt_t());
  const Poly p = expand_xy(complete(n), -M.inverse(), N);
  return t_expand(p, D);
}

bool q_degree_identity_holds(int k_max, int c_max) {
  for (int k = 0; k <= k_max; ++k)
    for (int c = -1; c <= c_max; ++c)
      if (k + std::max(1 - k + c, 0) - (1 + c) != std::max(k - 1 - c, 0)) return false;
  return true;
}

BundleReport verify_bundles(const BundleConfig& c) {
  BundleReport rep;

  // Hom order and the Euler form on small line bundles
  std::vector<LineBundle> lines;
  for (int m = -3; m <= 3; ++m)
    for (int a = 1; a <= 3; ++a)
      for (int b = 1; b <= 3; ++b) lines.push_back({m, a, b});
  for (const auto& x : lines)
    for (const auto& y : lines) {
      if (hom_dim(x, y) != 0 && !bundle_le(x, y)) note(rep, rep.hom_order, "Hom nonzero against the order: " + to_string(x) + " -> " + to_string(y));
      if (hom_dim(x, y) - ext_dim(x, y) != euler_form(x, y, 3)) note(rep, rep.euler, "Euler form: " + to_string(x) + " -> " + to_string(y));
    }

  if (!q_degree_identity_holds(4, 12)) note(rep, rep.q_degree, "q-degree bookkeeping identity");

  // brute force
  for (int n = 1; n <= c.n_max; ++n)
    for (int d = 0; d <= n * c.m_max; ++d)
      for_each_sorted_triple(n, d, c.label_max, [&](const SortedTriple& s) {
        if (*std::max_element(s.m.begin(), s.m.end()) > c.m_max) return;
        ++rep.sums_checked;
        for (int p : c.primes)
          for (int k : c.ks) {
            if (k >= p) continue;  // not enough points in F_p
            std::vector<int> points(k);
            std::iota(points.begin(), points.end(), 1);
            const BruteCounts bc = brute_force_counts(s, p, points);
            ++rep.brute_cases;
            if (aut_count(s, p) != bc.aut || nilp_count(s, k, p) != bc.nilp)
              note(rep, rep.counts,
                   "counts differ for " + to_string(s) + " p=" + std::to_string(p) + " k=" + std::to_string(k) + ": aut " +
                       aut_count(s, p).get_str() + " vs " + std::to_string(bc.aut) + ", nilp " + nilp_count(s, k, p).get_str() +
                       " vs " + std::to_string(bc.nilp));
          }
      });

  // series
  for (int n = 1; n <= c.series_n; ++n)
    for (int k = 1; k <= c.series_k; ++k) {
      for (int d = 0; d <= c.D; ++d)
        for_each_sorted_triple(n, d, c.N, [&](const SortedTriple& s) {
          if (bundle_q_degree(s, k) != dinv_k(s, k)) note(rep, rep.q_degree, "q-degree differs from dinv_k at " + to_string(s));
        });
      OmegaQuery q;
      q.n = n;
      q.k = k;
      q.N = c.N;
      q.D = c.D;
      q.workers = c.workers;
      const SeriesTable want = scaled(omega_series(q), QRat(n % 2 ? -1 : 1));
      if (!equal_tables(bundle_side_series(n, k, c.N, c.D), want))
        note(rep, rep.series, "bundle side differs from omega_series at n=" + std::to_string(n) + " k=" + std::to_string(k));
    }

  // k = 0
  for (int n = 1; n <= c.product_n; ++n) {
    const SeriesTable side = bundle_side_series(n, 0, c.N, c.product_D);
    if (!equal_tables(side, k0_product_series(n, c.N, c.product_D)) || !equal_tables(side, k0_pexp_series(n, c.N, c.product_D)))
      note(rep, rep.product, "k = 0 product mismatch at n=" + std::to_string(n));
  }
  return rep;
}

std::string to_string(const LineBundle& L) {
  return "O(" + std::to_string(L.m) + ";" + std::to_string(L.a) + "," + std::to_string(L.b) + ")";
}

}  // namespace nabla
