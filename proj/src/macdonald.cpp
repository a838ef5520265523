#include "nabla/macdonald.hpp"

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "json.hpp"

namespace nabla {

namespace {

std::atomic<int> cap{8};

struct DegreeTables {
  std::once_flag built;
  std::map<Partition, SymFunc> H;  // Schur basis
  std::once_flag inverted;
  QtMatrix s_to_H;  // row mu, column lambda: s_mu = sum_lambda M[mu][lambda] H~_lambda
  std::once_flag monomial;
  QtMatrix H_to_m;  // row lambda, column mu
};

std::mutex tables_mutex;
std::map<int, std::unique_ptr<DegreeTables>> tables;

DegreeTables& tables_for(int n) {
  if (n > cap.load()) throw std::out_of_range("macdonald: degree above cap");
  std::lock_guard<std::mutex> lock(tables_mutex);
  auto& slot = tables[n];
  if (!slot) slot = std::make_unique<DegreeTables>();
  return *slot;
}

QtScalar one_minus(int qd, int td) { return QtScalar(BPoly(1) - BPoly::monomial(1, qd, td)); }

// Coefficients of P_lambda in the power-sum basis, indexed like partitions_of(n).
std::vector<std::vector<QtScalar>> gram_schmidt(int n) {
  const auto& parts = partitions_of(n);
  const std::size_t K = parts.size();
  const auto& m_to_p = from_monomial_matrix(Basis::p, n);
  std::vector<QtScalar> w(K);
  for (std::size_t j = 0; j < K; ++j) {
    QtScalar x(z_lambda(parts[j]));
    for (int r : parts[j]) x *= one_minus(r, 0) / one_minus(0, r);
    w[j] = x;
  }
  auto inner = [&](const std::vector<QtScalar>& u, const std::vector<QtScalar>& v) {
    QtScalar r;
    for (std::size_t j = 0; j < K; ++j)
      if (!u[j].is_zero() && !v[j].is_zero()) r += u[j] * v[j] * w[j];
    return r;
  };
  std::vector<std::vector<QtScalar>> P(K);
  std::vector<QtScalar> norm(K);
  // partitions_of lists (n) first; walk upward in dominance from (1^n).
  for (std::size_t i = K; i-- > 0;) {
    std::vector<QtScalar> v(K);
    for (std::size_t j = 0; j < K; ++j)
      if (m_to_p[i][j] != 0) v[j] = QtScalar::from_mpq(m_to_p[i][j]);
    std::vector<QtScalar> m = v;
    for (std::size_t l = K - 1; l > i; --l) {
      QtScalar c = inner(m, P[l]);
      if (c.is_zero()) continue;
      c /= norm[l];
      for (std::size_t j = 0; j < K; ++j)
        if (!P[l][j].is_zero()) v[j] -= c * P[l][j];
    }
    norm[i] = inner(v, v);
    P[i] = std::move(v);
  }
  return P;
}

QtScalar j_normalizer(const Partition& lambda) {
  QtScalar c(1);
  for (std::size_t i = 0; i < lambda.size(); ++i)
    for (int j = 0; j < lambda[i]; ++j)
      c *= one_minus(arm(lambda, static_cast<int>(i), j), leg(lambda, static_cast<int>(i), j) + 1);
  return c;
}

SymFunc htilde_from_J(const Partition& lambda, const SymFunc& J) {
  const int n = size_of(lambda);
  const int shift = n_stat(lambda) + n;
  SymFunc out(Basis::p);
  for (const auto& [nu, f] : J.terms()) {
    QtScalar g = invert_t(f) * qt_monomial(0, shift, nu.size() % 2 ? -1 : 1);
    for (int r : nu) g /= one_minus(0, r);
    out.add(nu, g);
  }
  SymFunc s = convert(out, Basis::s);
  for (const auto& [mu, c] : s.terms())
    if (!c.is_polynomial()) throw std::logic_error("modified_macdonald: non-polynomial coefficient");
  return s;
}

// ---------------------------------------------------------------- disk cache

nlohmann::json bpoly_json(const BPoly& p) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& u : p.t_coeffs()) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& c : u.coeffs()) row.push_back(c.get_str());
    out.push_back(row);
  }
  return out;
}

BPoly bpoly_from_json(const nlohmann::json& j) {
  std::vector<UPoly> rows;
  for (const auto& row : j) {
    std::vector<mpz_class> c;
    for (const auto& x : row) c.emplace_back(x.get<std::string>());
    rows.emplace_back(std::move(c));
  }
  return BPoly(std::move(rows));
}

std::filesystem::path cache_file(int n) {
  const char* dir = std::getenv("MACDONALD_CACHE_DIR");
  if (dir == nullptr || *dir == '\0') return {};
  return std::filesystem::path(dir) / ("htilde_" + std::to_string(n) + ".json");
}

bool load_cached(int n, std::map<Partition, SymFunc>& H) {
  auto path = cache_file(n);
  if (path.empty() || !std::filesystem::exists(path)) return false;
  try {
    std::ifstream in(path);
    nlohmann::json j = nlohmann::json::parse(in);
    if (j.at("n").get<int>() != n) return false;
    std::map<Partition, SymFunc> loaded;
    for (const auto& entry : j.at("H")) {
      SymFunc f(Basis::s);
      for (const auto& t : entry.at("terms"))
        f.add(t.at("mu").get<Partition>(), QtScalar(bpoly_from_json(t.at("c"))));
      loaded.emplace(entry.at("lambda").get<Partition>(), std::move(f));
    }
    if (loaded.size() != partitions_of(n).size()) return false;
    H = std::move(loaded);
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

void store_cached(int n, const std::map<Partition, SymFunc>& H) {
  auto path = cache_file(n);
  if (path.empty()) return;
  nlohmann::json j;
  j["n"] = n;
  j["H"] = nlohmann::json::array();
  for (const auto& [lam, f] : H) {
    nlohmann::json e;
    e["lambda"] = lam;
    e["terms"] = nlohmann::json::array();
    for (const auto& [mu, c] : f.terms()) e["terms"].push_back({{"mu", mu}, {"c", bpoly_json(c.num())}});
    j["H"].push_back(e);
  }
  std::error_code ec;
  std::filesystem::create_directories(path.parent_path(), ec);
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << j.dump();
  }
  std::filesystem::rename(tmp, path, ec);
}

bool check_degree(int n, const std::map<Partition, SymFunc>& H) {
  Partition col(n, 1);
  for (const auto& lam : partitions_of(n)) {
    auto it = H.find(lam);
    if (it == H.end()) return false;
    QtScalar c = it->second.coeff(col);
    if (c != nabla_eigenvalue(lam)) return false;
    QtScalar c0 = at_t_zero(c);
    QtScalar want = lam.size() == 1 ? qt_monomial(n * (n - 1) / 2, 0) : QtScalar();
    if (c0 != want) return false;
    auto jt = H.find(conjugate(lam));
    if (jt == H.end() || jt->second != it->second.map_coeffs(swap_qt)) return false;
  }
  return true;
}

DegreeTables& built_tables(int n) {
  DegreeTables& d = tables_for(n);
  std::call_once(d.built, [&] {
    if (n == 0) {
      d.H.emplace(Partition{}, SymFunc(Basis::s, Partition{}));
      return;
    }
    std::map<Partition, SymFunc> H;
    if (load_cached(n, H) && check_degree(n, H)) {
      d.H = std::move(H);
      return;
    }
    const auto& parts = partitions_of(n);
    auto P = gram_schmidt(n);
    for (std::size_t i = 0; i < parts.size(); ++i) {
      SymFunc J(Basis::p);
      QtScalar c = j_normalizer(parts[i]);
      for (std::size_t j = 0; j < parts.size(); ++j)
        if (!P[i][j].is_zero()) J.add(parts[j], P[i][j] * c);
      H.emplace(parts[i], htilde_from_J(parts[i], J));
    }
    if (!check_degree(n, H)) throw std::logic_error("modified_macdonald: validation failed");
    store_cached(n, H);
    d.H = std::move(H);
  });
  return d;
}

const QtMatrix& s_to_H(int n) {
  DegreeTables& d = built_tables(n);
  std::call_once(d.inverted, [&] {
    const auto& parts = partitions_of(n);
    QtMatrix m(parts.size(), std::vector<QtScalar>(parts.size()));
    for (std::size_t i = 0; i < parts.size(); ++i)
      for (const auto& [mu, c] : d.H.at(parts[i]).terms()) m[i][partition_index(mu)] = c;
    d.s_to_H = invert(m);
  });
  return d.s_to_H;
}

const QtMatrix& H_to_m(int n) {
  DegreeTables& d = built_tables(n);
  std::call_once(d.monomial, [&] {
    const auto& parts = partitions_of(n);
    d.H_to_m.assign(parts.size(), std::vector<QtScalar>(parts.size()));
    for (std::size_t i = 0; i < parts.size(); ++i) {
      SymFunc m = convert(d.H.at(parts[i]), Basis::m);
      for (const auto& [mu, c] : m.terms()) d.H_to_m[i][partition_index(mu)] = c;
    }
  });
  return d.H_to_m;
}

}  // namespace

int nstat(const Partition& lambda) { return n_stat(lambda); }

QtScalar nabla_eigenvalue(const Partition& lambda) {
  return qt_monomial(n_stat(conjugate(lambda)), n_stat(lambda));
}

int degree_cap() { return cap.load(); }
void set_degree_cap(int n) { cap.store(n); }

SymFunc macdonald_P(const Partition& lambda) {
  const int n = size_of(lambda);
  auto P = gram_schmidt(n);
  const auto& parts = partitions_of(n);
  SymFunc f(Basis::p);
  const auto& row = P[partition_index(lambda)];
  for (std::size_t j = 0; j < parts.size(); ++j)
    if (!row[j].is_zero()) f.add(parts[j], row[j]);
  return convert(f, Basis::m);
}

SymFunc macdonald_J(const Partition& lambda) {
  return convert(macdonald_P(lambda), Basis::p).scaled(j_normalizer(lambda));
}

const SymFunc& modified_macdonald(const Partition& lambda) {
  return built_tables(size_of(lambda)).H.at(lambda);
}

SymFunc to_modified_basis(const SymFunc& f) {
  if (f.basis() == Basis::H) return f;
  SymFunc s = convert(f, Basis::s);
  std::map<int, std::vector<QtScalar>> by_deg;
  for (const auto& [mu, c] : s.terms()) {
    const int n = size_of(mu);
    auto& v = by_deg[n];
    v.resize(partitions_of(n).size());
    v[partition_index(mu)] = c;
  }
  SymFunc out(Basis::H);
  for (const auto& [n, v] : by_deg) {
    const auto& inv = s_to_H(n);
    const auto& parts = partitions_of(n);
    for (std::size_t l = 0; l < parts.size(); ++l) {
      QtScalar c;
      for (std::size_t j = 0; j < parts.size(); ++j)
        if (!v[j].is_zero() && !inv[j][l].is_zero()) c += v[j] * inv[j][l];
      out.add(parts[l], c);
    }
  }
  return out;
}

SymFunc from_modified_basis(const SymFunc& f, Basis target) {
  if (f.basis() != Basis::H) return convert(f, target);
  if (target == Basis::H) return f;
  SymFunc out(Basis::s);
  for (const auto& [lam, c] : f.terms()) out += modified_macdonald(lam).scaled(c);
  return convert(out, target);
}

SymFunc nabla_power(const SymFunc& f, int k) {
  if (k == 0) return f;
  SymFunc h = to_modified_basis(f);
  SymFunc out(Basis::H);
  for (const auto& [lam, c] : h.terms()) out.add(lam, c * nabla_eigenvalue(lam).pow(k));
  return f.basis() == Basis::H ? out : from_modified_basis(out, f.basis());
}

Poly cauchy_macdonald(int n, int k, int N) {
  Poly out;
  const auto& parts = partitions_of(n);
  const auto& K = H_to_m(n);
  std::vector<QtScalar> weight(parts.size());
  for (std::size_t l = 0; l < parts.size(); ++l) {
    const Partition& mu = parts[l];
    QtScalar den(1);
    for (std::size_t i = 0; i < mu.size(); ++i) {
      for (int j = 0; j < mu[i]; ++j) {
        const int a = arm(mu, static_cast<int>(i), j), g = leg(mu, static_cast<int>(i), j);
        den *= QtScalar(BPoly::monomial(1, a + 1, 0) - BPoly::monomial(1, 0, g));
        den *= QtScalar(BPoly::monomial(1, a, 0) - BPoly::monomial(1, 0, g + 1));
      }
    }
    QtScalar c = nabla_eigenvalue(mu).pow(k) / den;
    weight[l] = n % 2 ? -c : c;
  }
  for (std::size_t a = 0; a < parts.size(); ++a) {
    if (static_cast<int>(parts[a].size()) > N) continue;
    auto xs = rearrangements(parts[a], N);
    for (std::size_t b = 0; b < parts.size(); ++b) {
      if (static_cast<int>(parts[b].size()) > N) continue;
      QtScalar c;
      for (std::size_t l = 0; l < parts.size(); ++l)
        if (!K[l][a].is_zero() && !K[l][b].is_zero()) c += weight[l] * K[l][a] * K[l][b];
      if (c.is_zero()) continue;
      auto ys = rearrangements(parts[b], N);
      for (const auto& ex : xs)
        for (const auto& ey : ys) out.add(Monomial{ex, ey}, c);
    }
  }
  return out;
}

SeriesTable cauchy_macdonald_series(int n, int k, int N, int D) {
  return t_expand(cauchy_macdonald(n, k, N), D);
}

bool validate_degree(int n) { return check_degree(n, built_tables(n).H); }

}  // namespace nabla
