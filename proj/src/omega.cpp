#include "nabla/omega.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "nabla/parallel.hpp"

namespace nabla {

namespace {

// Per monomial, q-polynomial numerators grouped by the automorphism type.
using Slice = std::map<Monomial, std::map<Partition, UPoly>>;

Monomial xy_monomial(const Label& a, const Label& b, int N) {
  Monomial mono{std::vector<int>(N, 0), std::vector<int>(N, 0)};
  for (int v : a) ++mono.x[v - 1];
  for (int v : b) ++mono.y[v - 1];
  return mono;
}

// Run lengths of equal consecutive rows of a sorted tuple.
Partition row_runs(const std::vector<int>& m, const Label& a, const Label* b) {
  std::vector<int> runs;
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i + 1;
    while (j < n && m[j] == m[i] && a[j] == a[i] && (!b || (*b)[j] == (*b)[i])) ++j;
    runs.push_back(static_cast<int>(j - i));
    i = j;
  }
  return sort_to_partition(runs);
}

QRat one_minus_q_pow(int n) { return QRat(UPoly(1) - UPoly::q()).pow(n); }

// Folds one t-degree slice into the table.
void fold(SeriesTable& out, const Slice& slice, int d, int D, const QRat& scale) {
  for (const auto& [mono, groups] : slice) {
    QRat v;
    for (const auto& [mu, num] : groups) {
      if (num.is_zero()) continue;
      v += QRat(num, aut_q(mu));
    }
    if (v.is_zero()) continue;
    auto it = out.find(mono);
    if (it == out.end()) it = out.emplace(mono, TSeries(D)).first;
    it->second[d] = v * scale;
  }
}

template <class SliceFn>
SeriesTable by_degree(const OmegaQuery& q, const QRat& scale, SliceFn make_slice) {
  validate(q);
  std::vector<Slice> slices(q.D + 1);
  parallel_for(q.D + 1, q.workers, [&](int d) { slices[d] = make_slice(d); });
  SeriesTable out;
  for (int d = 0; d <= q.D; ++d) fold(out, slices[d], d, q.D, scale);
  return out;
}

void add_power(UPoly& p, int e, const mpz_class& c = 1) { p += UPoly::monomial(c, e); }

bool attack_constraint_ok(const SortedTriple& s, int k) {
  const int n = s.size();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (attacks(s.m, s.a, i, j, k) && s.b[i - 1] == s.b[j - 1]) return false;
  return true;
}

Poly table_to_poly(const SeriesTable& s) {
  Poly out;
  for (const auto& [mono, ser] : s) {
    QtScalar c;
    for (int j = 0; j <= ser.degree(); ++j)
      if (!ser[j].is_zero()) c += to_qt(ser[j]) * qt_monomial(0, j);
    out.add(mono, c);
  }
  return out;
}

int table_degree(const SeriesTable& s) {
  for (const auto& [mono, ser] : s) return ser.degree();
  return 0;
}

// Coefficient of the monomial with x-content of a and y-content of b, read
// off the sorted triples directly.
TSeries coefficient(int n, int k, int D, const Label& a0, const Label& b0) {
  TSeries out(D);
  Label a = a0;
  std::sort(a.begin(), a.end());
  for (int d = 0; d <= D; ++d) {
    std::set<std::vector<std::vector<int>>> seen;
    std::map<Partition, UPoly> groups;
    for (const auto& m : exponent_vectors(d, n)) {
      Label perm = a;
      do {
        SortedTriple s = sort_triple(m, perm, b0);
        if (!seen.insert({s.m, s.a, s.b}).second) continue;
        add_power(groups[row_runs(s.m, s.a, &s.b)], dinv_k(s, k));
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
    QRat v;
    for (const auto& [mu, num] : groups) v += QRat(num, aut_q(mu));
    out[d] = v / one_minus_q_pow(n);
  }
  return out;
}

}  // namespace

void validate(const OmegaQuery& q) {
  if (q.n < 1 || q.k < 0 || q.N < 1 || q.D < 0 || q.workers < 1)
    throw std::invalid_argument("OmegaQuery: need n >= 1, k >= 0, N >= 1, D >= 0, workers >= 1");
}

SeriesTable omega_series(const OmegaQuery& q) {
  return by_degree(q, one_minus_q_pow(q.n).inverse(), [&](int d) {
    Slice slice;
    for_each_sorted_triple(q.n, d, q.N, [&](const SortedTriple& s) {
      add_power(slice[xy_monomial(s.a, s.b, q.N)][row_runs(s.m, s.a, &s.b)], dinv_k(s, q.k));
    });
    return slice;
  });
}

SeriesTable omega_via_xi(const OmegaQuery& q) {
  return by_degree(q, one_minus_q_pow(q.n).inverse(), [&](int d) {
    Slice slice;
    std::map<std::set<std::pair<int, int>>, Poly> xi_cache;
    for_each_sorted_pair(q.n, d, q.N, [&](const std::vector<int>& m, const Label& a) {
      DyckPath pi = attack_path(m, a, q.k);
      auto it = xi_cache.find(pi.cells());
      if (it == xi_cache.end()) it = xi_cache.emplace(pi.cells(), xi_pi(pi, q.N)).first;
      const int dv = dinv_k(m, a, q.k);
      const Partition aut = row_runs(m, a, nullptr);
      for (const auto& [ym, c] : it->second.terms()) {
        Monomial mono = xy_monomial(a, {}, q.N);
        mono.y = ym.y;
        // xi coefficients are polynomials in q alone
        slice[mono][aut] += c.num().t_coeff(0).shifted(dv);
      }
    });
    return slice;
  });
}

SeriesTable omega_sub_y(const OmegaQuery& q) {
  return by_degree(q, QRat(q.n % 2 ? -1 : 1), [&](int d) {
    Slice slice;
    for_each_sorted_triple(q.n, d, q.N, [&](const SortedTriple& s) {
      if (!attack_constraint_ok(s, q.k)) return;
      add_power(slice[xy_monomial(s.a, s.b, q.N)][{}], dinv_k(s, q.k));
    });
    return slice;
  });
}

SeriesTable omega_sub_y_via_chromatic(const OmegaQuery& q) {
  return by_degree(q, QRat(q.n % 2 ? -1 : 1), [&](int d) {
    Slice slice;
    std::map<std::set<std::pair<int, int>>, Poly> cache;
    for_each_sorted_pair(q.n, d, q.N, [&](const std::vector<int>& m, const Label& a) {
      DyckPath pi = attack_path(m, a, q.k);
      auto it = cache.find(pi.cells());
      if (it == cache.end()) it = cache.emplace(pi.cells(), chromatic(pi, q.N)).first;
      const int dv = dinv_k(m, a, q.k);
      const Partition aut = row_runs(m, a, nullptr);
      for (const auto& [ym, c] : it->second.terms()) {
        Monomial mono = xy_monomial(a, {}, q.N);
        mono.y = ym.y;
        slice[mono][aut] += c.num().t_coeff(0).shifted(dv);
      }
    });
    return slice;
  });
}

SeriesTable cauchy_combinatorial(const OmegaQuery& q, bool label_only) {
  return by_degree(q, one_minus_q_pow(q.n).inverse(), [&](int d) {
    Slice slice;
    for_each_sorted_triple(q.n, d, q.N, [&](const SortedTriple& s) {
      const Partition aut = row_runs(s.m, s.a, &s.b);
      const Partition mu = label_only ? mu_of({s.a}) : aut;
      add_power(slice[xy_monomial(s.a, s.b, q.N)][aut], n_stat(conjugate(mu)));
    });
    return slice;
  });
}

SeriesTable substitute_y(const SeriesTable& s, const QtScalar& g, int n) {
  return t_expand(plethysm_alphabet(table_to_poly(s), g, n, true), table_degree(s));
}

SeriesTable substitute_x(const SeriesTable& s, const QtScalar& g, int n) {
  return t_expand(plethysm_alphabet(table_to_poly(s), g, n, false), table_degree(s));
}

int d_k_printed(const std::vector<int>& m, int k) {
  int d = 0;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j) d += std::max(k - m[i] + m[j] + 1, k - m[j] + m[i]);
  return d;
}

int d_k(const std::vector<int>& m, int k) {
  int d = 0;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      d += std::max(std::min(k - 1 - m[i] + m[j], k - m[j] + m[i]), 0);
  return d;
}

TSeries fulltwist_series(int n, int k, int D, bool printed) {
  TSeries out(D);
  const QRat scale = one_minus_q_pow(n).inverse();
  for (int d = 0; d <= D; ++d) {
    UPoly acc;
    for (const auto& m : exponent_vectors(d, n)) add_power(acc, printed ? d_k_printed(m, k) : d_k(m, k));
    out[d] = QRat(acc) * scale;
  }
  return out;
}

TSeries fulltwist_extract(int n, int k, int D) {
  Label a(n), b(n, 1);
  for (int i = 0; i < n; ++i) a[i] = i + 1;
  return coefficient(n, k, D, a, b);
}

TSeries hilbert_coefficient(int n, int k, int D) {
  Label a(n);
  for (int i = 0; i < n; ++i) a[i] = i + 1;
  return coefficient(n, k, D, a, a);
}

SeriesTable times_one_minus_q_pow(const SeriesTable& s, int n) { return scaled(s, one_minus_q_pow(n)); }

}  // namespace nabla
