#include "nabla/labels.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace nabla {

namespace {

std::vector<std::vector<int>> rows_of(const std::vector<std::vector<int>>& columns) {
  if (columns.empty()) return {};
  const std::size_t n = columns[0].size();
  for (const auto& c : columns)
    if (c.size() != n) throw std::invalid_argument("sort_tuple: length mismatch");
  std::vector<std::vector<int>> rows(n, std::vector<int>(columns.size()));
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (std::size_t i = 0; i < n; ++i) rows[i][c] = columns[c][i];
  return rows;
}

UPoly aut_of_rows(std::vector<std::vector<int>> rows) {
  std::sort(rows.begin(), rows.end());
  std::vector<int> sizes;
  for (std::size_t i = 0; i < rows.size();) {
    std::size_t j = i;
    while (j < rows.size() && rows[j] == rows[i]) ++j;
    sizes.push_back(static_cast<int>(j - i));
    i = j;
  }
  return aut_q(sizes);
}

int delta(bool c) { return c ? 1 : 0; }

}  // namespace

std::vector<std::vector<int>> sort_tuple(const std::vector<std::vector<int>>& columns,
                                         const std::vector<int>& direction) {
  auto rows = rows_of(columns);
  auto sign = [&](std::size_t c) { return c < direction.size() ? direction[c] : 1; };
  std::sort(rows.begin(), rows.end(), [&](const std::vector<int>& x, const std::vector<int>& y) {
    for (std::size_t c = 0; c < x.size(); ++c) {
      if (x[c] != y[c]) return sign(c) > 0 ? x[c] < y[c] : x[c] > y[c];
    }
    return false;
  });
  std::vector<std::vector<int>> out(columns.size(), std::vector<int>(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t c = 0; c < columns.size(); ++c) out[c][i] = rows[i][c];
  return out;
}

Composition alpha_of(const std::vector<std::vector<int>>& columns) {
  auto rows = rows_of(columns);
  std::sort(rows.begin(), rows.end());
  Composition alpha;
  for (std::size_t i = 0; i < rows.size();) {
    std::size_t j = i;
    while (j < rows.size() && rows[j] == rows[i]) ++j;
    alpha.push_back(static_cast<int>(j - i));
    i = j;
  }
  return alpha;
}

Partition mu_of(const std::vector<std::vector<int>>& columns) { return sort_to_partition(alpha_of(columns)); }

int SortedTriple::weight() const { return std::accumulate(m.begin(), m.end(), 0); }

bool is_sorted(const std::vector<int>& m, const Label& a, const Label& b) {
  for (std::size_t i = 0; i + 1 < m.size(); ++i) {
    if (m[i] < m[i + 1]) return false;
    if (m[i] == m[i + 1]) {
      if (a[i] > a[i + 1]) return false;
      if (a[i] == a[i + 1] && b[i] > b[i + 1]) return false;
    }
  }
  return true;
}

bool is_sorted(const std::vector<int>& m, const Label& a) {
  for (std::size_t i = 0; i + 1 < m.size(); ++i) {
    if (m[i] < m[i + 1]) return false;
    if (m[i] == m[i + 1] && a[i] > a[i + 1]) return false;
  }
  return true;
}

SortedTriple sort_triple(const std::vector<int>& m, const Label& a, const Label& b) {
  auto s = sort_tuple({m, a, b}, {-1, 1, 1});
  return SortedTriple{s[0], s[1], s[2]};
}

UPoly aut_q(const SortedTriple& s) { return aut_of_rows(rows_of({s.m, s.a, s.b})); }
UPoly aut_q_pair(const std::vector<int>& m, const Label& a) { return aut_of_rows(rows_of({m, a})); }

int dinv_k(const SortedTriple& s, int k) {
  if (!is_sorted(s.m, s.a, s.b)) throw std::invalid_argument("dinv_k: unsorted triple");
  int d = 0;
  const int n = s.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      d += std::max(s.m[j] - s.m[i] - 1 + k + delta(s.a[i] > s.a[j]) + delta(s.b[i] > s.b[j]), 0);
  return d;
}

int dinv_k(const std::vector<int>& m, const Label& a, int k) {
  if (!is_sorted(m, a)) throw std::invalid_argument("dinv_k: unsorted pair");
  int d = 0;
  const int n = static_cast<int>(m.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) d += std::max(m[j] - m[i] - 1 + k + delta(a[i] > a[j]), 0);
  return d;
}

// ------------------------------------------------------------------ Dyck paths

DyckPath::DyckPath(int n, std::set<std::pair<int, int>> cells) : n_(n), cells_(std::move(cells)) {}

DyckPath DyckPath::from_area(const std::vector<int>& area) {
  const int n = static_cast<int>(area.size());
  std::set<std::pair<int, int>> cells;
  for (int j = 1; j <= n; ++j)
    for (int i = j - area[j - 1]; i < j; ++i) cells.emplace(i, j);
  DyckPath p(n, std::move(cells));
  if (!p.is_valid()) throw std::invalid_argument("DyckPath::from_area: not an area sequence");
  return p;
}

std::vector<int> DyckPath::area_sequence() const {
  std::vector<int> a(n_, 0);
  for (const auto& [i, j] : cells_) ++a[j - 1];
  return a;
}

bool DyckPath::is_valid() const {
  for (const auto& [i, j] : cells_) {
    if (i < 1 || j > n_ || i >= j) return false;
    for (int x = i + 1; x < j; ++x)
      if (!contains(x, j) || !contains(i, x)) return false;
  }
  auto a = area_sequence();
  if (n_ > 0 && a[0] != 0) return false;
  for (int j = 1; j < n_; ++j)
    if (a[j] > a[j - 1] + 1) return false;
  return true;
}

std::vector<DyckPath> dyck_paths(int n) {
  std::vector<DyckPath> out;
  std::vector<int> area;
  std::function<void()> rec = [&] {
    if (static_cast<int>(area.size()) == n) {
      out.push_back(DyckPath::from_area(area));
      return;
    }
    const int top = area.empty() ? 0 : area.back() + 1;
    for (int v = 0; v <= top; ++v) {
      area.push_back(v);
      rec();
      area.pop_back();
    }
  };
  rec();
  return out;
}

bool attacks(const std::vector<int>& m, const Label& a, int i, int j, int k) {
  return m[j - 1] - m[i - 1] - 1 + k + delta(a[i - 1] > a[j - 1]) >= 0;
}

DyckPath attack_path(const std::vector<int>& m, const Label& a, int k) {
  if (!is_sorted(m, a)) throw std::invalid_argument("attack_path: unsorted pair");
  const int n = static_cast<int>(m.size());
  std::set<std::pair<int, int>> cells;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (attacks(m, a, i, j, k)) cells.emplace(i, j);
  DyckPath p(n, std::move(cells));
  if (!p.is_valid()) throw std::logic_error("attack_path: attack set is not a Dyck path");
  return p;
}

int inv_pi(const DyckPath& pi, const Label& b) {
  int c = 0;
  for (const auto& [i, j] : pi.cells())
    if (b[i - 1] > b[j - 1]) ++c;
  return c;
}

std::vector<Label> all_labels(int n, int N) {
  std::vector<Label> out;
  Label cur(n, 1);
  if (n == 0) return {cur};
  if (N < 1) return out;
  while (true) {
    out.push_back(cur);
    int i = n - 1;
    while (i >= 0 && cur[i] == N) cur[i--] = 1;
    if (i < 0) break;
    ++cur[i];
  }
  return out;
}

namespace {

Monomial y_monomial(const Label& b, int N) {
  Monomial mono{std::vector<int>(N, 0), std::vector<int>(N, 0)};
  for (int v : b) ++mono.y[v - 1];
  return mono;
}

Poly label_sum(const DyckPath& pi, int N, bool proper) {
  Poly out;
  for (const auto& b : all_labels(pi.size(), N)) {
    if (proper) {
      bool ok = true;
      for (const auto& [i, j] : pi.cells())
        if (b[i - 1] == b[j - 1]) {
          ok = false;
          break;
        }
      if (!ok) continue;
    }
    out.add(y_monomial(b, N), qt_monomial(inv_pi(pi, b), 0));
  }
  return out;
}

}  // namespace

Poly xi_pi(const DyckPath& pi, int N) { return label_sum(pi, N, false); }
Poly chromatic(const DyckPath& pi, int N) { return label_sum(pi, N, true); }

Poly xi_via_chromatic(const DyckPath& pi, int N) {
  const int n = pi.size();
  SymFunc X = monomial_part(chromatic(pi, std::max(N, n)), n, true);
  const QtScalar one_minus_q(BPoly(1) - BPoly::q());
  SymFunc f = omega_involution(plethysm(X, one_minus_q.inverse()));
  return swap_alphabets(expand(f.scaled(one_minus_q.pow(n)), N));
}

// ------------------------------------------------------------------ enumeration

void for_each_sorted_triple(int n, int d, int N, const std::function<void(const SortedTriple&)>& fn) {
  SortedTriple s{std::vector<int>(n), Label(n), Label(n)};
  std::function<void(int, int)> rec = [&](int i, int rest) {
    if (i == n) {
      if (rest == 0) fn(s);
      return;
    }
    const int slots = n - i;
    const int hi = i == 0 ? rest : std::min(s.m[i - 1], rest);
    for (int m = hi; m >= 0; --m) {
      if (m * slots < rest) break;
      s.m[i] = m;
      const bool tie_m = i > 0 && s.m[i - 1] == m;
      for (int a = tie_m ? s.a[i - 1] : 1; a <= N; ++a) {
        s.a[i] = a;
        const bool tie_a = tie_m && s.a[i - 1] == a;
        for (int b = tie_a ? s.b[i - 1] : 1; b <= N; ++b) {
          s.b[i] = b;
          rec(i + 1, rest - m);
        }
      }
    }
  };
  rec(0, d);
}

void for_each_sorted_pair(int n, int d, int N,
                          const std::function<void(const std::vector<int>&, const Label&)>& fn) {
  std::vector<int> m(n);
  Label a(n);
  std::function<void(int, int)> rec = [&](int i, int rest) {
    if (i == n) {
      if (rest == 0) fn(m, a);
      return;
    }
    const int slots = n - i;
    const int hi = i == 0 ? rest : std::min(m[i - 1], rest);
    for (int v = hi; v >= 0; --v) {
      if (v * slots < rest) break;
      m[i] = v;
      const bool tie = i > 0 && m[i - 1] == v;
      for (int x = tie ? a[i - 1] : 1; x <= N; ++x) {
        a[i] = x;
        rec(i + 1, rest - v);
      }
    }
  };
  rec(0, d);
}

std::string to_string(const SortedTriple& s) {
  return "[" + to_string(s.m) + "," + to_string(s.a) + "," + to_string(s.b) + "]";
}

}  // namespace nabla
