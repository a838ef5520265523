#include "nabla/affine.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "nabla/symfunc.hpp"

namespace nabla {

namespace {

int floor_div(int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

// residue in 1..n
int residue(int i, int n) { return i - n * floor_div(i - 1, n); }

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Composition multiplicity_runs(Label a) {
  std::sort(a.begin(), a.end());
  Composition alpha;
  for (std::size_t i = 0; i < a.size();) {
    std::size_t j = i;
    while (j < a.size() && a[j] == a[i]) ++j;
    alpha.push_back(static_cast<int>(j - i));
    i = j;
  }
  return alpha;
}

using Extremes = std::optional<std::pair<AffinePermutation, AffinePermutation>>;

Extremes extremes(const std::set<AffinePermutation>& coset) {
  std::map<long, std::vector<const AffinePermutation*>> by_length;
  for (const auto& v : coset) by_length[length(v)].push_back(&v);
  if (by_length.empty()) return std::nullopt;
  const auto& lo = by_length.begin()->second;
  const auto& hi = by_length.rbegin()->second;
  if (lo.size() != 1 || hi.size() != 1) return std::nullopt;
  return std::make_pair(*lo.front(), *hi.front());
}

std::set<AffinePermutation> double_coset(const AffinePermutation& w, const Composition& alpha, const Composition& beta) {
  std::set<AffinePermutation> out;
  const auto left = young_subgroup(alpha), right = young_subgroup(beta);
  for (const auto& l : left) {
    const AffinePermutation lw = compose(AffinePermutation::finite(l), w);
    for (const auto& r : right) out.insert(compose(lw, AffinePermutation::finite(r)));
  }
  return out;
}

}  // namespace

AffinePermutation::AffinePermutation(std::vector<int> window) : w_(std::move(window)) {
  const int n = size();
  std::vector<bool> seen(n + 1, false);
  for (int v : w_) {
    const int r = residue(v, n);
    if (seen[r]) throw std::invalid_argument("AffinePermutation: repeated residue in window " + nabla::to_string(w_));
    seen[r] = true;
  }
}

AffinePermutation AffinePermutation::identity(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  return AffinePermutation(w);
}

AffinePermutation AffinePermutation::finite(const std::vector<int>& perm) {
  for (int v : perm)
    if (v < 1 || v > static_cast<int>(perm.size())) throw std::invalid_argument("finite: entries must lie in 1..n");
  return AffinePermutation(perm);
}

int AffinePermutation::operator()(int i) const {
  const int n = size();
  const int r = residue(i, n);
  return w_[r - 1] + (i - r);
}

int AffinePermutation::d_grade() const {
  const int n = size();
  const long s = std::accumulate(w_.begin(), w_.end(), 0L) - static_cast<long>(n) * (n + 1) / 2;
  return static_cast<int>(s / n);
}

bool AffinePermutation::is_positive() const {
  return std::all_of(w_.begin(), w_.end(), [](int v) { return v >= 1; });
}

std::string AffinePermutation::to_string() const { return nabla::to_string(w_); }

AffinePermutation compose(const AffinePermutation& u, const AffinePermutation& v) {
  if (u.size() != v.size()) throw std::invalid_argument("compose: sizes differ");
  std::vector<int> w(v.size());
  for (int i = 1; i <= v.size(); ++i) w[i - 1] = u(v(i));
  return AffinePermutation(w);
}

AffinePermutation inverse(const AffinePermutation& w) {
  const int n = w.size();
  std::vector<int> out(n);
  for (int i = 1; i <= n; ++i) {
    const int r = residue(w(i), n);
    out[r - 1] = i - (w(i) - r);
  }
  return AffinePermutation(out);
}

long length(const AffinePermutation& w) {
  const int n = w.size();
  long len = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      // j + r n > i and w(i) > w(j) + r n
      const int r0 = j > i ? 0 : 1;
      const int hi = floor_div(w(i) - w(j), n) + 1;  // w(i) - w(j) is never a multiple of n
      len += std::max(0, hi - r0);
    }
  return len;
}

AffinePermutation as_permutation(const AffineTransposition& t, int n) {
  if (t.a >= t.b || (t.b - t.a) % n == 0) throw std::invalid_argument("as_permutation: not a transposition");
  std::vector<int> w(n);
  const int ra = residue(t.a, n), rb = residue(t.b, n), h = t.b - t.a;
  for (int i = 1; i <= n; ++i) w[i - 1] = i == ra ? i + h : i == rb ? i - h : i;
  return AffinePermutation(w);
}

bool is_m_stable(const AffinePermutation& w, int m) {
  if (m < 1) throw std::invalid_argument("is_m_stable: m must be positive");
  for (int i = 1; i <= w.size(); ++i)
    if (w(i + m) <= w(i)) return false;
  return true;
}

bool is_m_restricted(const AffinePermutation& w, int m) { return is_m_stable(inverse(w), m); }

std::vector<AffineTransposition> edges(const AffinePermutation& w, int m) {
  const int n = w.size();
  const long len = length(w);
  std::vector<AffineTransposition> out;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b < a + m; ++b) {
      if ((b - a) % n == 0) continue;
      const AffineTransposition t{a, b};
      if (length(compose(as_permutation(t, n), w)) < len) out.push_back(t);
    }
  return out;
}

std::vector<std::vector<int>> edge_counts(const AffinePermutation& w, int m) {
  const int n = w.size();
  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  for (const auto& t : edges(w, m)) {
    int i = residue(t.a, n) - 1, j = residue(t.b, n) - 1;
    if (i > j) std::swap(i, j);
    ++c[i][j];
  }
  return c;
}

int max_area(int n, int m) { return ((n - 1) * (m - 1) + std::gcd(n, m) - 1) / 2; }

int max_area_by_cells(int n, int m) {
  int cells = 0;
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < n; ++y)
      if (m * y >= n * (x + 1)) ++cells;
  return cells;
}

bool max_area_formula_holds(int bound) {
  for (int n = 1; n <= bound; ++n)
    for (int m = 1; m <= bound; ++m)
      if (max_area(n, m) != max_area_by_cells(n, m)) return false;
  return true;
}

int dimv(const AffinePermutation& w, int m) {
  return max_area(w.size(), m) - static_cast<int>(edges(w, m).size());
}

bool RationalDyckPath::is_valid() const {
  if (static_cast<int>(coarea.size()) != n) return false;
  for (int j = 1; j <= n; ++j) {
    const int b = coarea[j - 1];
    if (b < 0 || b * n > m * (j - 1)) return false;
    if (j > 1 && b < coarea[j - 2]) return false;
  }
  return true;
}

std::vector<int> RationalDyckPath::area_sequence() const {
  std::vector<int> a(n);
  for (int j = 1; j <= n; ++j) a[j - 1] = m * (j - 1) / n - coarea[j - 1];
  return a;
}

int RationalDyckPath::area() const {
  const auto a = area_sequence();
  return std::accumulate(a.begin(), a.end(), 0);
}

std::vector<int> wvec(const AffinePermutation& w, int m) {
  const int n = w.size();
  const AffinePermutation inv = inverse(w);
  std::vector<int> out(n, 0);
  for (const auto& t : edges(w, m)) {
    const int j = std::max(inv(t.a), inv(t.b));
    ++out[residue(j, n) - 1];
  }
  return out;
}

RationalDyckPath coarea_path(const AffinePermutation& w, int m) {
  RationalDyckPath p{w.size(), m, wvec(w, m)};
  std::sort(p.coarea.begin(), p.coarea.end());
  return p;
}

std::vector<int> standardize(const Label& a, Order order) {
  const int n = static_cast<int>(a.size());
  std::vector<int> pos(n);
  std::iota(pos.begin(), pos.end(), 0);
  std::stable_sort(pos.begin(), pos.end(), [&](int i, int j) { return order == Order::ascending ? a[i] < a[j] : a[i] > a[j]; });
  std::vector<int> sigma(n);
  for (int r = 0; r < n; ++r) sigma[pos[r]] = r + 1;
  return sigma;
}

AffinePermutation tau(const std::vector<int>& m) {
  const int n = static_cast<int>(m.size());
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = (n - i) + m[i] * n;
  return AffinePermutation(w);
}

AffinePermutation paff(const SortedTriple& s) {
  Label rb(s.b.rbegin(), s.b.rend());
  const AffinePermutation left = AffinePermutation::finite(standardize(rb, Order::descending));
  const AffinePermutation right = inverse(AffinePermutation::finite(standardize(s.a, Order::ascending)));
  return compose(compose(left, tau(s.m)), right);
}

std::vector<std::vector<int>> young_subgroup(const Composition& alpha) {
  const int n = std::accumulate(alpha.begin(), alpha.end(), 0);
  std::vector<int> block(n);
  for (int b = 0, p = 0; b < static_cast<int>(alpha.size()); ++b)
    for (int c = 0; c < alpha[b]; ++c) block[p++] = b;
  std::vector<std::vector<int>> out;
  for (auto& p : all_permutations(n)) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) ok = block[p[i] - 1] == block[i];
    if (ok) out.push_back(std::move(p));
  }
  return out;
}

std::optional<std::pair<AffinePermutation, AffinePermutation>> coset_min_max(const AffinePermutation& w,
                                                                            const Composition& alpha,
                                                                            const Composition& beta) {
  return extremes(double_coset(w, alpha, beta));
}

std::optional<std::pair<AffinePermutation, AffinePermutation>> coset_min_max(const AffinePermutation& w) {
  return coset_min_max(w, Composition{w.size()}, Composition(w.size(), 1));
}

std::vector<AffinePermutation> positive_permutations(int n, int d) {
  std::vector<AffinePermutation> out;
  const auto quotients = exponent_vectors(d, n);
  for (const auto& r : all_permutations(n))
    for (const auto& q : quotients) {
      std::vector<int> w(n);
      for (int i = 0; i < n; ++i) w[i] = r[i] + n * q[i];
      out.emplace_back(w);
    }
  return out;
}

PaffReport verify_paff(int n, int k, int D, int N) {
  if (n < 1 || k < 1 || D < 0 || N < 1) throw std::invalid_argument("verify_paff: need n, k, N >= 1 and D >= 0");
  PaffReport rep;
  rep.n = n;
  rep.k = k;
  rep.D = D;
  rep.N = N;
  const int m = k * n;
  rep.area_formula = max_area_formula_holds();
  if (!rep.area_formula) rep.first_failure = "closed form for the maximal area disagrees with the cell count";
  auto fail = [&](bool& flag, const std::string& what, const SortedTriple& s, const AffinePermutation& w) {
    flag = false;
    if (rep.first_failure.empty()) rep.first_failure = what + ": " + to_string(s) + " -> " + w.to_string();
  };

  // images grouped by the contents (A, B)
  std::map<std::pair<Label, Label>, std::set<AffinePermutation>> images;
  std::map<std::pair<Label, Label>, long> counts;
  std::map<std::pair<std::vector<int>, Label>, std::vector<int>> path_cache;
  for (int d = 0; d <= D; ++d)
    for_each_sorted_triple(n, d, N, [&](const SortedTriple& s) {
      ++rep.triples;
      const AffinePermutation w = paff(s);
      if (!w.is_positive() || w.d_grade() != d) fail(rep.grade, "d-grade differs from |m|", s, w);

      Label A = s.a, B = s.b;
      std::sort(A.begin(), A.end());
      std::sort(B.begin(), B.end());
      const auto key = std::make_pair(A, B);
      ++counts[key];
      if (!images[key].insert(w).second) fail(rep.bijection, "paff not injective", s, w);
      Composition left = multiplicity_runs(B);
      std::reverse(left.begin(), left.end());
      const auto ext = coset_min_max(w, left, multiplicity_runs(A));
      if (!ext || !(ext->second == w)) fail(rep.bijection, "not the maximal double coset representative", s, w);

      const int dv = dimv(w, m);
      if (dinv_k(s, k) != dv) fail(rep.dinv, "dinv_k != dimv_kn", s, w);

      const auto c = edge_counts(w, m);
      int deg = 0;
      bool nonneg = true;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          deg += k - c[i][j];
          nonneg = nonneg && c[i][j] <= k;
        }
      if (deg != dv || !nonneg) fail(rep.degree, "deg b_{w,k} != dimv_kn", s, w);

      auto [it, fresh] = path_cache.try_emplace({s.m, s.a});
      if (fresh) {
        const auto lr = coset_min_max(w);
        if (!lr) {
          fail(rep.area, "left coset extremes not unique", s, w);
          return;
        }
        const auto lo = coarea_path(lr->first, m).area_sequence(), hi = coarea_path(lr->second, m).area_sequence();
        it->second.resize(n);
        for (int j = 0; j < n; ++j) it->second[j] = lo[j] - hi[j];
        if (it->second != attack_path(s.m, s.a, k).area_sequence()) fail(rep.area, "area sequence difference", s, w);
      }
    });

  // onto: one double coset per triple among positive permutations of grade <= D
  for (const auto& [key, imgs] : images) {
    Composition left = multiplicity_runs(key.second);
    std::reverse(left.begin(), left.end());
    const Composition right = multiplicity_runs(key.first);
    std::set<AffinePermutation> maxima;
    for (int d = 0; d <= D; ++d)
      for (const auto& v : positive_permutations(n, d)) {
        const auto ext = coset_min_max(v, left, right);
        if (ext) maxima.insert(ext->second);
      }
    if (maxima != imgs) {
      rep.bijection = false;
      if (rep.first_failure.empty())
        rep.first_failure = "image is not the set of double coset maxima for contents " + to_string(key.first) + ", " +
                            to_string(key.second);
    }
  }
  return rep;
}

TSeries raths_series(int n, int m, int D) {
  if (n < 1 || m < 1 || D < 0) throw std::invalid_argument("raths_series: need n, m >= 1 and D >= 0");
  TSeries out(D);
  for (int d = 0; d <= D; ++d) {
    std::map<int, long> by_dimv;
    for (const auto& w : positive_permutations(n, d))
      if (is_m_restricted(w, m)) ++by_dimv[dimv(w, m)];
    UPoly num;
    for (const auto& [e, c] : by_dimv) num += UPoly::monomial(c, e);
    out[d] = QRat(num) / QRat(UPoly(1) - UPoly::q()).pow(std::gcd(n, m));
  }
  return out;
}

std::string to_string(const AffineTransposition& t) {
  return "t(" + std::to_string(t.a) + "," + std::to_string(t.b) + ")";
}

}  // namespace nabla
