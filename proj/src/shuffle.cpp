#include "nabla/shuffle.hpp"

#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "nabla/involution.hpp"
#include "nabla/macdonald.hpp"

namespace nabla {

namespace {

void check_index(int n, int i) {
  if (i < 1 || i > n - 1) throw std::out_of_range("pf/npf: position outside 1..n-1");
}

// Condition at 1-based position i required by membership with dividing
// value l: +1 PF, -1 NPF, 0 free.
int required(int n, int l, int i) {
  if (i <= n - l - 1) return 1;
  if (i >= n - l + 1) return -1;
  return 0;
}

bool pf_values(int m0, int a0, int m1, int a1, int k) { return m1 <= m0 + k - 1 || (m1 == m0 + k && a1 > a0); }

Monomial x_monomial(const Label& a, int N) {
  Monomial mono{std::vector<int>(N, 0), std::vector<int>(N, 0)};
  for (int v : a) ++mono.x[v - 1];
  return mono;
}

BPoly low_t_part(const BPoly& p, int D) {
  std::vector<UPoly> c = p.t_coeffs();
  if (static_cast<int>(c.size()) > D + 1) c.resize(std::max(D + 1, 0));
  return BPoly(c);
}

// Recursive scan of members. `restrict_lm` limits the scan to 1 <= l <= n-1
// and m_1 > 0, the only triples that can meet all five conditions.
void scan(int n, int k, int D, int N, bool restrict_lm, const std::function<void(const ShuffleTriple&)>& fn) {
  ShuffleTriple s{0, std::vector<int>(n), Label(n)};
  std::function<void(int, int)> rec = [&](int p, int rest) {
    if (p == n) {
      fn(s);
      return;
    }
    for (int m = restrict_lm && p == 0 ? 1 : 0; m <= rest; ++m) {
      s.m[p] = m;
      for (int a = 1; a <= N; ++a) {
        s.a[p] = a;
        if (p > 0) {
          const int need = required(n, s.l, p);
          const bool ok = pf_values(s.m[p - 1], s.a[p - 1], m, a, k);
          if ((need == 1 && !ok) || (need == -1 && ok)) continue;
        }
        rec(p + 1, rest - m);
      }
    }
  };
  const int lo = restrict_lm ? 1 : 0, hi = restrict_lm ? n - 1 : n;
  for (s.l = lo; s.l <= hi; ++s.l) rec(0, D);
}

}  // namespace

int ShuffleTriple::weight() const { return std::accumulate(m.begin(), m.end(), 0); }

bool pf(const std::vector<int>& m, const Label& a, int i, int k) {
  check_index(static_cast<int>(m.size()), i);
  return pf_values(m[i - 1], a[i - 1], m[i], a[i], k);
}

bool npf(const std::vector<int>& m, const Label& a, int i, int k) {
  check_index(static_cast<int>(m.size()), i);
  return m[i] > m[i - 1] + k || (m[i] == m[i - 1] + k && a[i] <= a[i - 1]);
}

std::pair<std::vector<int>, Label> rho(const std::vector<int>& m, const Label& x) {
  const std::size_t n = m.size();
  if (n == 0) return {m, x};
  std::vector<int> m2(n);
  Label x2(n);
  m2[0] = m[n - 1] + 1;
  x2[0] = x[n - 1];
  for (std::size_t i = 1; i < n; ++i) {
    m2[i] = m[i - 1];
    x2[i] = x[i - 1];
  }
  return {m2, x2};
}

std::pair<std::vector<int>, Label> rho_inverse(const std::vector<int>& m, const Label& x) {
  const std::size_t n = m.size();
  if (n == 0) return {m, x};
  if (m[0] < 1) throw std::invalid_argument("rho_inverse: needs m_1 >= 1");
  std::vector<int> m2(n);
  Label x2(n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    m2[i] = m[i + 1];
    x2[i] = x[i + 1];
  }
  m2[n - 1] = m[0] - 1;
  x2[n - 1] = x[0];
  return {m2, x2};
}

bool in_shuffle_set(const ShuffleTriple& s, int k) {
  const int n = s.size();
  if (s.l < 0 || s.l > n || static_cast<int>(s.a.size()) != n) return false;
  for (int i = 1; i <= n - 1; ++i) {
    const int need = required(n, s.l, i);
    if (need == 1 && !pf(s.m, s.a, i, k)) return false;
    if (need == -1 && !npf(s.m, s.a, i, k)) return false;
  }
  return true;
}

void for_each_shuffle_triple(int n, int k, int D, int N, const std::function<void(const ShuffleTriple&)>& fn) {
  scan(n, k, D, N, false, fn);
}

bool cond_1a(const ShuffleTriple& s) { return s.l > 0; }

bool cond_2a(const ShuffleTriple& s, int k) {
  if (s.l >= s.size() || s.size() < 2) return true;
  auto [m, a] = rho(s.m, s.a);
  return pf(m, a, 1, k);
}

bool cond_1b(const ShuffleTriple& s) { return s.l < s.size(); }

bool cond_2b(const ShuffleTriple& s, int k) {
  const int n = s.size();
  if (s.l <= 0 || n < 2) return true;
  if (s.m[0] < 1) return false;  // rho^{-1} undefined; (3B) fails anyway
  auto [m, a] = rho_inverse(s.m, s.a);
  return npf(m, a, n - 1, k);
}

bool cond_3b(const ShuffleTriple& s) { return !s.m.empty() && s.m[0] > 0; }

ShuffleTriple rho_pair(const ShuffleTriple& s) {
  auto [m, a] = rho(s.m, s.a);
  return ShuffleTriple{s.l - 1, m, a};
}

Poly parking_sum(int n, int k, int N) {
  std::map<Monomial, BPoly> acc;
  std::vector<int> m(n);
  Label a(n);
  std::function<void(int)> rec = [&](int p) {
    if (p == n) {
      acc[x_monomial(a, N)] += BPoly::monomial(1, d_k_rev(m, a, k), std::accumulate(m.begin(), m.end(), 0));
      return;
    }
    const int top = p == 0 ? 0 : m[p - 1] + k;
    for (int v = 0; v <= top; ++v) {
      m[p] = v;
      for (int x = 1; x <= N; ++x) {
        a[p] = x;
        if (p > 0 && !pf_values(m[p - 1], a[p - 1], v, x, k)) continue;
        rec(p + 1);
      }
    }
  };
  if (n > 0) rec(0);
  Poly out;
  for (const auto& [mono, c] : acc)
    if (!c.is_zero()) out.add(mono, QtScalar(c));
  return out;
}

CancellationReport cancellation_check(int n, int k, int D, int N, bool check_series) {
  if (n < 1 || k < 1 || D < 0 || N < 1) throw std::invalid_argument("cancellation_check: need n, k, N >= 1 and D >= 0");
  CancellationReport rep;
  rep.n = n;
  rep.k = k;
  rep.D = D;
  rep.N = N;
  auto note = [&](bool& flag, const std::string& what, const ShuffleTriple& s) {
    flag = false;
    if (rep.first_failure.empty()) rep.first_failure = what + ": " + to_string(s);
  };

  if (!check_series) {
    scan(n, k, D, N, true, [&](const ShuffleTriple& s) {
      ++rep.triples;
      if (cond_2a(s, k) && cond_2b(s, k)) note(rep.empty, "all five conditions hold", s);
    });
    return rep;
  }

  std::set<ShuffleTriple> all;
  scan(n, k, D, N, false, [&](const ShuffleTriple& s) { all.insert(s); });
  rep.triples = static_cast<long>(all.size());
  std::map<Monomial, BPoly> acc;
  for (const auto& s : all) {
    const bool in_a = cond_1a(s) && cond_2a(s, k);
    const bool in_b = cond_1b(s) && cond_2b(s, k) && cond_3b(s);
    if (in_a && in_b) note(rep.empty, "all five conditions hold", s);
    if (in_a) {
      ++rep.set_a;
      const ShuffleTriple t = rho_pair(s);
      if (t.weight() <= D) {
        auto it = all.find(t);
        if (it == all.end() || !(cond_1b(t) && cond_2b(t, k) && cond_3b(t)) ||
            d_k_rev(t.m, t.a, k) != d_k_rev(s.m, s.a, k))
          note(rep.paired, "rho partner missing or not cancelling", s);
      }
    }
    if (in_b) {
      ++rep.set_b;
      auto [m, a] = rho_inverse(s.m, s.a);
      const ShuffleTriple pre{s.l + 1, m, a};
      if (!all.count(pre) || !(cond_1a(pre) && cond_2a(pre, k))) note(rep.paired, "rho preimage missing", s);
    }
    if (in_a || in_b) continue;
    ++rep.survivors;
    if (s.l != 0 || s.m[0] != 0) note(rep.survivors_ok, "unexpected survivor", s);
    const int td = s.weight() + s.l;
    if (td > D - 1) continue;
    acc[x_monomial(s.a, N)] += BPoly::monomial(s.l % 2 ? -1 : 1, d_k_rev(s.m, s.a, k), td);
  }

  std::map<Monomial, BPoly> want;
  const Poly parking = parking_sum(n, k, N);
  for (const auto& [mono, c] : parking.terms()) {
    BPoly p = low_t_part(c.num(), D - 1);
    if (!p.is_zero()) want[mono] = p;
  }
  std::map<Monomial, BPoly> got;
  for (const auto& [mono, c] : acc)
    if (!c.is_zero()) got[mono] = c;
  rep.series = got == want;
  if (!rep.series && rep.first_failure.empty()) rep.first_failure = "surviving signed sum differs from parking_sum";
  return rep;
}

bool verify_shuffle(int n, int k) { return parking_sum(n, k, n) == expand(nabla_power(elementary(n), k), n); }

std::string to_string(const ShuffleTriple& s) {
  return "(l=" + std::to_string(s.l) + ", m=" + to_string(s.m) + ", a=" + to_string(s.a) + ")";
}

}  // namespace nabla
