#include "nabla/partition.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace nabla {

int size_of(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

bool is_partition(const std::vector<int>& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0) return false;
    if (i > 0 && p[i] > p[i - 1]) return false;
  }
  return true;
}

Partition conjugate(const Partition& p) {
  Partition c;
  if (p.empty()) return c;
  for (int j = 1; j <= p[0]; ++j) {
    int cnt = 0;
    for (int x : p)
      if (x >= j) ++cnt;
    c.push_back(cnt);
  }
  return c;
}

int n_stat(const Partition& p) {
  int s = 0;
  for (std::size_t i = 0; i < p.size(); ++i) s += static_cast<int>(i) * p[i];
  return s;
}

bool dominated_by(const Partition& lambda, const Partition& mu) {
  int a = 0, b = 0;
  const std::size_t len = std::max(lambda.size(), mu.size());
  for (std::size_t i = 0; i < len; ++i) {
    a += i < lambda.size() ? lambda[i] : 0;
    b += i < mu.size() ? mu[i] : 0;
    if (a > b) return false;
  }
  return true;
}

mpz_class z_lambda(const Partition& p) {
  mpz_class z = 1;
  std::map<int, int> mult;
  for (int x : p) {
    z *= x;
    ++mult[x];
  }
  for (auto [part, m] : mult) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), m);
    z *= f;
  }
  return z;
}

Partition sort_to_partition(const std::vector<int>& v) {
  Partition p;
  for (int x : v)
    if (x > 0) p.push_back(x);
  std::sort(p.rbegin(), p.rend());
  return p;
}

Partition multiplicities(const std::vector<int>& v) {
  std::map<int, int> mult;
  for (int x : v) ++mult[x];
  Partition p;
  for (auto [k, m] : mult) p.push_back(m);
  std::sort(p.rbegin(), p.rend());
  return p;
}

namespace {

void gen(int n, int max_part, Partition& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int k = std::min(n, max_part); k >= 1; --k) {
    cur.push_back(k);
    gen(n - k, k, cur, out);
    cur.pop_back();
  }
}

std::mutex part_mutex;
std::map<int, std::vector<Partition>> part_cache;

}  // namespace

const std::vector<Partition>& partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: negative size");
  std::lock_guard<std::mutex> lock(part_mutex);
  auto it = part_cache.find(n);
  if (it != part_cache.end()) return it->second;
  std::vector<Partition> out;
  Partition cur;
  gen(n, n, cur, out);
  return part_cache.emplace(n, std::move(out)).first->second;
}

int partition_index(const Partition& p) {
  const auto& all = partitions_of(size_of(p));
  // reverse lex order: search with a comparator that inverts lexicographic order
  auto it = std::lower_bound(all.begin(), all.end(), p,
                             [](const Partition& a, const Partition& b) { return a > b; });
  if (it == all.end() || *it != p) throw std::invalid_argument("partition_index: not a partition");
  return static_cast<int>(it - all.begin());
}

int arm(const Partition& p, int i, int j) { return p[i] - j - 1; }

int leg(const Partition& p, int i, int j) {
  int l = 0;
  for (std::size_t r = i + 1; r < p.size() && p[r] > j; ++r) ++l;
  return l;
}

std::string to_string(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

}  // namespace nabla
