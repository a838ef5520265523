#include "nabla/involution.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "nabla/macdonald.hpp"
#include "nabla/parallel.hpp"

namespace nabla {

namespace {

using Entry = std::tuple<int, int, int>;  // (a, m, b)

// (a ascending, m descending, b ascending)
bool key_less(const Entry& x, const Entry& y) {
  const auto& [a1, m1, b1] = x;
  const auto& [a2, m2, b2] = y;
  return std::tie(a1, m2, b1) < std::tie(a2, m1, b2);
}

Entry entry(const VanQuadruple& A, int i) { return {A.a[i], A.m[i], A.b[i]}; }

VanQuadruple from_entries(int l, const std::vector<Entry>& es) {
  VanQuadruple A;
  A.l = l;
  for (const auto& [a, m, b] : es) {
    A.a.push_back(a);
    A.m.push_back(m);
    A.b.push_back(b);
  }
  return A;
}

Monomial xy_monomial(const Label& a, const Label& b, int N) {
  Monomial mono{std::vector<int>(N, 0), std::vector<int>(N, 0)};
  for (int v : a) ++mono.x[v - 1];
  for (int v : b) ++mono.y[v - 1];
  return mono;
}

// Multiplicity of each value 1..max; a partition exactly when the label is
// normalized.
std::vector<int> content(const Label& a) {
  const int top = a.empty() ? 0 : *std::max_element(a.begin(), a.end());
  std::vector<int> c(top, 0);
  for (int v : a) ++c[v - 1];
  return c;
}

bool is_normalized_partition(const std::vector<int>& c) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) return false;
    if (i > 0 && c[i] > c[i - 1]) return false;
  }
  return true;
}

SeriesTable truncated(const SeriesTable& s, int D) {
  SeriesTable out;
  for (const auto& [mono, ser] : s) {
    TSeries t = ser.truncated(D);
    if (!t.is_zero()) out.emplace(mono, std::move(t));
  }
  return out;
}

}  // namespace

int VanQuadruple::weight() const { return std::accumulate(m.begin(), m.end(), 0); }

int d_pair(int mi, int bi, int mj, int bj, int k) {
  if (mi > mj) return k + mj - mi + (bi > bj ? 1 : 0);
  return k - 1 + mi - mj + (bi < bj ? 1 : 0);
}

std::vector<std::vector<int>> d_table(const std::vector<int>& m, const Label& b, int k) {
  const std::size_t n = m.size();
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i][j] = d_pair(m[i], b[i], m[j], b[j], k);
  return t;
}

int d_k_rev(const std::vector<int>& m, const Label& b, int k) {
  int d = 0;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j) d += std::max(d_pair(m[i], b[i], m[j], b[j], k), 0);
  return d;
}

bool attacks_rev(int mi, int mj, int k) { return mi >= mj - k + 1 && mi <= mj + k; }

bool is_van(const VanQuadruple& A, int k) {
  const int n = A.size();
  if (A.l < 0 || A.l > n || static_cast<int>(A.a.size()) != n || static_cast<int>(A.b.size()) != n) return false;
  for (int i = 0; i < A.l; ++i)
    if (A.m[i] <= 0) return false;
  for (int i = 0; i + 1 < n; ++i) {
    if (i + 1 == A.l) continue;
    const Entry x = entry(A, i), y = entry(A, i + 1);
    if (i + 1 < A.l ? key_less(x, y) : key_less(y, x)) return false;
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (A.b[i] == A.b[j] && attacks_rev(A.m[i], A.m[j], k)) return false;
  return true;
}

void for_each_van(int n, int k, int d, int N, const std::function<void(const VanQuadruple&)>& fn) {
  std::vector<Entry> pool;
  for (int a = 1; a <= N; ++a)
    for (int m = 0; m <= d; ++m)
      for (int b = 1; b <= N; ++b) pool.emplace_back(a, m, b);
  std::sort(pool.begin(), pool.end(), key_less);
  const int P = static_cast<int>(pool.size());

  std::vector<Entry> cur(n);
  std::vector<int> idx(n);
  int l = 0;
  std::function<void(int, int)> rec = [&](int p, int rest) {
    if (p == n) {
      if (rest == 0) fn(from_entries(l, cur));
      return;
    }
    const bool left = p < l;
    int lo = 0, hi = P - 1;
    if (left && p > 0) hi = idx[p - 1];
    if (!left && p > l) lo = idx[p - 1];
    for (int x = lo; x <= hi; ++x) {
      const auto& [a, m, b] = pool[x];
      if (m > rest || (left && m == 0)) continue;
      bool ok = true;
      for (int i = 0; i < p && ok; ++i)
        if (std::get<2>(cur[i]) == b && attacks_rev(std::get<1>(cur[i]), m, k)) ok = false;
      if (!ok) continue;
      cur[p] = pool[x];
      idx[p] = x;
      rec(p + 1, rest - m);
    }
  };
  for (l = 0; l <= n; ++l) rec(0, d);
}

std::vector<VanQuadruple> enumerate_van(int n, int k, int D, int N) {
  std::vector<VanQuadruple> out;
  for (int d = 0; d <= D; ++d) for_each_van(n, k, d, N, [&](const VanQuadruple& A) { out.push_back(A); });
  return out;
}

std::vector<int> sigma(const VanQuadruple& A) {
  const int n = A.size();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return key_less(entry(A, x), entry(A, y)); });
  std::vector<int> s(n);
  for (int r = 0; r < n; ++r) s[order[r]] = r + 1;
  return s;
}

std::optional<VanQuadruple> move(const VanQuadruple& A, int i, int k) {
  const int n = A.size();
  if (i < 1 || i > n) throw std::out_of_range("move: index outside 1..n");
  std::vector<Entry> left, right;
  for (int p = 0; p < n; ++p) {
    if (p == i - 1) continue;
    (p < A.l ? left : right).push_back(entry(A, p));
  }
  const Entry e = entry(A, i - 1);
  if (i <= A.l) {
    right.insert(std::upper_bound(right.begin(), right.end(), e, key_less), e);
  } else {
    auto pos = std::find_if(left.begin(), left.end(), [&](const Entry& x) { return key_less(x, e); });
    left.insert(pos, e);
  }
  std::vector<Entry> all = left;
  all.insert(all.end(), right.begin(), right.end());
  VanQuadruple B = from_entries(static_cast<int>(left.size()), all);
  if (!is_van(B, k)) return std::nullopt;
  return B;
}

bool movable(const VanQuadruple& A, int i, int k) {
  if (!move(A, i, k)) return false;
  const auto s = sigma(A);
  const int n = A.size();
  const int x = i - 1;
  for (int j = 0; j < n; ++j) {
    if (s[j] >= s[x]) continue;
    if (d_pair(A.m[x], A.b[x], A.m[j], A.b[j], k) > 0) return false;
    if (d_pair(A.m[j], A.b[j], A.m[x], A.b[x], k) > 0) return false;
  }
  return true;
}

VanQuadruple iota(const VanQuadruple& A, int k) {
  const auto s = sigma(A);
  std::vector<int> order(A.size());
  std::iota(order.begin(), order.end(), 1);
  std::sort(order.begin(), order.end(), [&](int x, int y) { return s[x - 1] < s[y - 1]; });
  for (int i : order)
    if (movable(A, i, k)) return *move(A, i, k);
  return A;
}

Composition TDiagram::shape() const {
  Composition c;
  for (const auto& r : rows) c.push_back(static_cast<int>(r.size()));
  return c;
}

std::string TDiagram::to_string() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r) os << '\n';
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (c) os << ' ';
      const auto [m, b] = rows[r][c];
      if (m < 10 && b < 10)
        os << m << b;
      else
        os << '(' << m << ',' << b << ')';
    }
  }
  return os.str();
}

TDiagram t_diagram(const VanQuadruple& A) {
  std::vector<Entry> es;
  for (int i = 0; i < A.size(); ++i) es.push_back(entry(A, i));
  std::sort(es.begin(), es.end(), key_less);
  TDiagram T;
  int last = 0;
  for (const auto& [a, m, b] : es) {
    if (T.rows.empty() || a != last) T.rows.emplace_back();
    T.rows.back().emplace_back(m, b);
    last = a;
  }
  return T;
}

VanQuadruple canonical_fixed_point(const Partition& lambda, int k) {
  VanQuadruple A;
  for (std::size_t r = 0; r < lambda.size(); ++r)
    for (int c = 1; c <= lambda[r]; ++c) {
      A.a.push_back(static_cast<int>(r) + 1);
      A.m.push_back(static_cast<int>(r) * k);
      A.b.push_back(c);
    }
  return A;
}

SeriesTable van_series(int n, int k, int D, int N) {
  SeriesTable out;
  for (int d = 0; d <= D; ++d) {
    std::map<Monomial, UPoly> slice;
    for_each_van(n, k, d, N, [&](const VanQuadruple& A) {
      UPoly term = UPoly::monomial(A.l % 2 ? -1 : 1, d_k_rev(A.m, A.b, k));
      slice[xy_monomial(A.a, A.b, N)] += term;
    });
    for (const auto& [mono, p] : slice) {
      if (p.is_zero()) continue;
      auto it = out.find(mono);
      if (it == out.end()) it = out.emplace(mono, TSeries(D)).first;
      it->second[d] = QRat(p);
    }
  }
  return out;
}

SeriesTable macdonald_van_side(int n, int k, int N, int D) {
  // plethysm needs at least n variables; extra ones are set to zero after
  const int M = std::max(N, n);
  Poly P = cauchy_macdonald(n, k, M);
  P = plethysm_alphabet(P, qt_q() - QtScalar(1), n, true);
  P = plethysm_alphabet(P, qt_t() - QtScalar(1), n, false);
  Poly R;
  for (const auto& [mono, c] : P.terms()) {
    bool inside = true;
    for (int v = N; v < M; ++v)
      if (mono.x[v] || mono.y[v]) inside = false;
    if (!inside) continue;
    R.add(Monomial{std::vector<int>(mono.x.begin(), mono.x.begin() + N),
                   std::vector<int>(mono.y.begin(), mono.y.begin() + N)},
          c);
  }
  return t_expand(R, D);
}

namespace {

struct SliceResult {
  long quadruples = 0;
  long fixed = 0;
  bool involution = true, bookkeeping = true, dominance = true;
  std::string failure;
  std::vector<VanQuadruple> fixed_points;
};

void fail(SliceResult& r, bool& flag, const std::string& what, const VanQuadruple& A) {
  flag = false;
  if (r.failure.empty()) r.failure = what + ": " + to_string(A);
}

// Lemma checks on a fixed point: row r carries m <= (r-1)k; a b-value
// appears at most r times in the first r rows, and when exactly r times
// they sit in distinct rows right of the line; row sizes are dominated by
// the conjugate of the b-multiplicities.
bool fixed_point_lemmas(const VanQuadruple& A, int k) {
  const TDiagram T = t_diagram(A);
  for (std::size_t r = 0; r < T.rows.size(); ++r)
    for (const auto& [m, b] : T.rows[r])
      if (m > static_cast<int>(r) * k) return false;

  // row of each position: rank of a_i among the distinct a-values
  std::vector<int> values(A.a.begin(), A.a.end());
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  std::map<int, std::vector<std::pair<int, int>>> by_b;  // b -> (row, position)
  for (int i = 0; i < A.size(); ++i) {
    const int row = static_cast<int>(std::lower_bound(values.begin(), values.end(), A.a[i]) - values.begin());
    by_b[A.b[i]].emplace_back(row, i);
  }
  const int rows = static_cast<int>(values.size());
  for (const auto& [b, occ] : by_b) {
    for (int r = 1; r <= rows; ++r) {
      std::set<int> distinct;
      int cnt = 0;
      bool right = true;
      for (const auto& [row, i] : occ)
        if (row < r) {
          ++cnt;
          distinct.insert(row);
          if (i < A.l) right = false;
        }
      if (cnt > r) return false;
      if (cnt == r && (static_cast<int>(distinct.size()) != r || !right)) return false;
    }
  }

  const Composition lam = T.shape();
  const Partition mu_conj = conjugate(multiplicities(A.b));
  int s1 = 0, s2 = 0;
  for (std::size_t r = 0; r < lam.size(); ++r) {
    s1 += lam[r];
    s2 += r < mu_conj.size() ? mu_conj[r] : 0;
    if (s1 > s2) return false;
  }
  return true;
}

}  // namespace

VanishingReport verify_vanishing(int n, int k, int D, int N, int workers) {
  if (n < 1 || k < 1 || D < 0 || N < 1) throw std::invalid_argument("verify_vanishing: need n, k, N >= 1 and D >= 0");
  VanishingReport rep;
  rep.n = n;
  rep.k = k;
  rep.D = D;
  rep.N = N;

  std::vector<SliceResult> slices(D + 1);
  parallel_for(D + 1, workers, [&](int d) {
    SliceResult& r = slices[d];
    for_each_van(n, k, d, N, [&](const VanQuadruple& A) {
      ++r.quadruples;
      const VanQuadruple B = iota(A, k);
      if (B == A) {
        ++r.fixed;
        r.fixed_points.push_back(A);
        if (!fixed_point_lemmas(A, k)) fail(r, r.dominance, "fixed point violates the dominance lemmas", A);
        return;
      }
      if (!is_van(B, k)) fail(r, r.involution, "iota left the set", A);
      if (!(iota(B, k) == A)) fail(r, r.involution, "iota is not an involution", A);
      if (d_k_rev(A.m, A.b, k) != d_k_rev(B.m, B.b, k) || A.weight() != B.weight() || (A.l + B.l) % 2 == 0)
        fail(r, r.bookkeeping, "cancelling pair changes the weight", A);
    });
  });

  std::map<std::pair<Partition, Partition>, int> census;
  std::vector<VanQuadruple> fixed;
  for (const auto& r : slices) {
    rep.quadruples += r.quadruples;
    rep.fixed_points += r.fixed;
    rep.involution = rep.involution && r.involution;
    rep.bookkeeping = rep.bookkeeping && r.bookkeeping;
    rep.dominance = rep.dominance && r.dominance;
    if (rep.first_failure.empty()) rep.first_failure = r.failure;
    fixed.insert(fixed.end(), r.fixed_points.begin(), r.fixed_points.end());
  }
  for (const auto& A : fixed) {
    const auto ca = content(A.a), cb = content(A.b);
    if (is_normalized_partition(ca) && is_normalized_partition(cb)) ++census[{ca, cb}];
  }
  for (const auto& [key, count] : census) rep.census.push_back({key.first, key.second, count});

  for (const auto& lam : partitions_of(n)) {
    const Partition lc = conjugate(lam);
    if (static_cast<int>(lam.size()) > N || lam[0] > N || k * n_stat(lam) > D) {
      rep.skipped.push_back(to_string(lam));
      continue;
    }
    std::vector<VanQuadruple> hits;
    for (const auto& A : fixed)
      if (content(A.a) == lam && content(A.b) == lc) hits.push_back(A);
    const VanQuadruple want = canonical_fixed_point(lam, k);
    const bool good = hits.size() == 1 && hits[0] == want && want.weight() == k * n_stat(lam) &&
                      d_k_rev(want.m, want.b, k) == k * n_stat(lc);
    if (!good) {
      rep.leading = false;
      if (rep.first_failure.empty())
        rep.first_failure = "lambda = mu' census for " + to_string(lam) + ": " + std::to_string(hits.size()) + " fixed points";
    }
  }

  rep.compared_degree = D - 1;
  if (D >= 1) {
    const SeriesTable lhs = truncated(van_series(n, k, D, N), D - 1);
    const SeriesTable rhs = truncated(macdonald_van_side(n, k, N, D), D - 1);
    rep.series = equal_tables(lhs, rhs);
    if (!rep.series && rep.first_failure.empty()) rep.first_failure = "signed sum differs from the Macdonald side";
  }
  return rep;
}

std::string to_string(const VanQuadruple& A) {
  return "(l=" + std::to_string(A.l) + ", a=" + to_string(A.a) + ", m=" + to_string(A.m) + ", b=" + to_string(A.b) + ")";
}

}  // namespace nabla
