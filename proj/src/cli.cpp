#include "nabla/cli.hpp"

#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "nabla/affine.hpp"
#include "nabla/bundles.hpp"
#include "nabla/involution.hpp"
#include "nabla/macdonald.hpp"
#include "nabla/omega.hpp"
#include "nabla/shuffle.hpp"

namespace nabla {

using nlohmann::json;

namespace {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  std::string object;  // compute only
  int n = 2, k = 1, N = 2, D = 3;
  std::vector<int> primes{2, 3};
  std::vector<int> lambda;
  std::string format = "json";
  std::string out_path;
  int workers = 1;
};

struct Report {
  json data = json::object();
  bool pass = true;
  std::vector<std::pair<std::string, bool>> checks;
  std::string first_failure;
  std::string text;  // rendering for compute

  void check(const std::string& name, bool ok) {
    checks.emplace_back(name, ok);
    pass = pass && ok;
  }
  void failure(const std::string& what) {
    if (first_failure.empty() && !what.empty()) first_failure = what;
  }
};

void require(bool ok, const std::string& msg) {
  if (!ok) throw ConfigError(msg);
}

// desk-scale caps shared by every subcommand
void validate_common(const RunConfig& c) {
  require(c.n >= 1 && c.n <= 8, "--n must lie in 1..8");
  require(c.k >= 0 && c.k <= 6, "--k must lie in 0..6");
  require(c.N >= 1 && c.N <= 8, "--N must lie in 1..8");
  require(c.D >= 0 && c.D <= 30, "--D must lie in 0..30");
  require(c.workers >= 1 && c.workers <= 64, "--workers must lie in 1..64");
}

json params(const RunConfig& c) {
  return json{{"n", c.n}, {"k", c.k}, {"N", c.N}, {"D", c.D}};
}

std::string first_difference(const SeriesTable& a, const SeriesTable& b) {
  for (const auto& [mono, s] : a) {
    auto it = b.find(mono);
    if (s.is_zero() && it == b.end()) continue;
    if (it == b.end() || it->second != s) return mono.to_string();
  }
  for (const auto& [mono, s] : b)
    if (!s.is_zero() && !a.count(mono)) return mono.to_string();
  return "";
}

OmegaQuery query_of(const RunConfig& c) {
  OmegaQuery q;
  q.n = c.n;
  q.k = c.k;
  q.N = c.N;
  q.D = c.D;
  q.workers = c.workers;
  return q;
}

Report verify_main(const RunConfig& c) {
  require(c.k >= 1, "verify-main needs --k >= 1");
  require(c.n <= degree_cap(), "--n exceeds the Macdonald degree cap");
  Report r;
  const QRat norm = QRat(UPoly(1) - UPoly::q()).pow(c.n);
  const SeriesTable lhs = scaled(cauchy_macdonald_series(c.n, c.k, c.N, c.D), norm);
  const SeriesTable rhs = scaled(omega_series(query_of(c)), norm);
  const bool ok = equal_tables(lhs, rhs);
  r.check("macdonald_equals_combinatorial", ok);
  if (!ok) r.failure("coefficient of " + first_difference(lhs, rhs));
  r.data["terms"] = lhs.size();
  return r;
}

Report verify_shuffle_cmd(const RunConfig& c) {
  require(c.k >= 1, "verify-shuffle needs --k >= 1");
  require(c.n <= 6, "verify-shuffle supports --n <= 6");
  Report r;
  const bool ok = verify_shuffle(c.n, c.k);
  r.check("parking_sum_equals_nabla", ok);
  if (!ok) r.failure("parking_sum(" + std::to_string(c.n) + ", " + std::to_string(c.k) + ") differs");
  return r;
}

Report verify_fulltwist(const RunConfig& c) {
  require(c.n <= 5, "verify-fulltwist supports --n <= 5");
  Report r;
  const TSeries sum = fulltwist_series(c.n, c.k, c.D);
  const TSeries extracted = fulltwist_extract(c.n, c.k, c.D);
  r.check("dk_sum_equals_extraction", sum == extracted);
  if (sum != extracted) r.failure("series " + sum.to_string() + " vs extraction " + extracted.to_string());
  r.data["series"] = sum.to_string();
  r.data["printed_exponent_matches"] = fulltwist_series(c.n, c.k, c.D, true) == extracted;
  return r;
}

Report verify_involution(const RunConfig& c) {
  require(c.k >= 1, "verify-involution needs --k >= 1");
  require(c.n <= 5, "verify-involution supports --n <= 5");
  Report r;
  const VanishingReport v = verify_vanishing(c.n, c.k, c.D, c.N, c.workers);
  r.check("involution", v.involution);
  r.check("bookkeeping", v.bookkeeping);
  r.check("dominance", v.dominance);
  r.check("leading", v.leading);
  r.check("series", v.series);
  r.failure(v.first_failure);
  r.data["quadruples"] = v.quadruples;
  r.data["fixed_points"] = v.fixed_points;
  r.data["compared_degree"] = v.compared_degree;
  r.data["skipped"] = v.skipped;
  json census = json::array();
  for (const auto& f : v.census) census.push_back({{"lambda", f.lambda}, {"mu", f.mu}, {"count", f.count}});
  r.data["census"] = census;
  return r;
}

Report verify_paff_cmd(const RunConfig& c) {
  require(c.k >= 1, "verify-paff needs --k >= 1");
  require(c.n <= 4, "verify-paff supports --n <= 4");
  Report r;
  const PaffReport p = verify_paff(c.n, c.k, c.D, c.N);
  r.check("bijection", p.bijection);
  r.check("dinv_equals_dimv", p.dinv);
  r.check("area_difference", p.area);
  r.check("b_degree", p.degree);
  r.check("d_grade", p.grade);
  r.check("max_area_formula", p.area_formula);
  r.failure(p.first_failure);
  r.data["triples"] = p.triples;
  return r;
}

Report verify_bundles_cmd(const RunConfig& c) {
  require(c.n <= 4, "verify-bundles supports --n <= 4");
  for (int p : c.primes) require(p == 2 || p == 3 || p == 5, "--primes accepts 2, 3 and 5");
  Report r;
  BundleConfig b;
  b.primes = c.primes;
  b.series_n = c.n;
  b.series_k = std::max(c.k, 1);
  b.N = c.N;
  b.D = c.D;
  b.product_n = c.n;
  b.product_D = std::min(c.D, 3);
  b.workers = c.workers;
  const BundleReport v = verify_bundles(b);
  r.check("counts", v.counts);
  r.check("hom_order", v.hom_order);
  r.check("euler_form", v.euler);
  r.check("q_degree", v.q_degree);
  r.check("series", v.series);
  r.check("k0_product", v.product);
  r.failure(v.first_failure);
  r.data["sums_checked"] = v.sums_checked;
  r.data["brute_cases"] = v.brute_cases;
  return r;
}

Report verify_xi(const RunConfig& c) {
  require(c.n <= 6, "verify-xi supports --n <= 6");
  Report r;
  long paths = 0;
  bool ok = true;
  for (int n = 1; n <= c.n; ++n)
    for (const auto& pi : dyck_paths(n)) {
      ++paths;
      if (xi_pi(pi, n) != xi_via_chromatic(pi, n)) {
        ok = false;
        r.failure("area sequence " + to_string(pi.area_sequence()));
      }
    }
  r.check("xi_equals_chromatic", ok);
  r.data["paths"] = paths;
  return r;
}

Report verify_rho(const RunConfig& c) {
  require(c.k >= 1, "verify-rho needs --k >= 1");
  require(c.n <= 5, "verify-rho supports --n <= 5");
  Report r;
  const CancellationReport v = cancellation_check(c.n, c.k, c.D, c.n, false);
  r.check("five_conditions_empty", v.empty);
  r.failure(v.first_failure);
  r.data["triples"] = v.triples;
  return r;
}

SymFunc in_schur(const SymFunc& f) { return f.basis() == Basis::H ? from_modified_basis(f, Basis::s) : convert(f, Basis::s); }

Report compute(const RunConfig& c) {
  Report r;
  if (c.object == "macdonald") {
    require(!c.lambda.empty() && is_partition(c.lambda), "compute macdonald needs --lambda, a partition");
    require(size_of(c.lambda) <= degree_cap(), "--lambda exceeds the Macdonald degree cap");
    const SymFunc& f = modified_macdonald(c.lambda);
    r.data["lambda"] = c.lambda;
    r.data["result"] = to_json(f);
    r.text = f.to_string();
  } else if (c.object == "nabla") {
    require(c.n <= degree_cap(), "--n exceeds the Macdonald degree cap");
    const SymFunc f = in_schur(nabla_power(elementary(c.n), c.k));
    r.data["result"] = to_json(f);
    r.text = f.to_string();
  } else if (c.object == "omega") {
    require(c.n <= 4, "compute omega supports --n <= 4");
    const SeriesTable s = omega_series(query_of(c));
    r.data["result"] = to_json(s);
    std::ostringstream text;
    for (const auto& [mono, series] : s)
      if (!series.is_zero()) text << mono.to_string() << ": " << series.to_string() << "\n";
    r.text = text.str();
  } else {  // parking
    require(c.k >= 1, "compute parking needs --k >= 1");
    require(c.n <= 6, "compute parking supports --n <= 6");
    const Poly p = parking_sum(c.n, c.k, c.N);
    r.data["result"] = to_json(p);
    r.text = p.to_string();
  }
  return r;
}

std::string render(const RunConfig& c, const Report& r) {
  const std::string name = c.command == "compute" ? "compute " + c.object : c.command;
  if (c.format == "text") {
    std::ostringstream s;
    if (c.command == "compute") {
      s << r.text;
      if (!r.text.empty() && r.text.back() != '\n') s << "\n";
      return s.str();
    }
    s << name << " " << params(c).dump() << ": " << (r.pass ? "PASS" : "FAIL") << "\n";
    for (const auto& [check, ok] : r.checks) s << "  " << check << ": " << (ok ? "ok" : "FAIL") << "\n";
    if (!r.first_failure.empty()) s << "  first failure: " << r.first_failure << "\n";
    return s.str();
  }
  json j = r.data;
  j["command"] = name;
  j["params"] = params(c);
  if (c.command == "compute") {
    j["text"] = r.text;
  } else {
    j["pass"] = r.pass;
    json checks = json::object();
    for (const auto& [check, ok] : r.checks) checks[check] = ok;
    j["checks"] = checks;
    if (!r.first_failure.empty()) j["first_failure"] = r.first_failure;
  }
  return j.dump(2) + "\n";
}

json series_terms(const Monomial* mono, const TSeries& s) {
  json out = json::array();
  for (int d = 0; d <= s.degree(); ++d) {
    if (s[d].is_zero()) continue;
    json t;
    if (mono) {
      t["x_exp"] = mono->x;
      t["y_exp"] = mono->y;
    }
    t["t_deg"] = d;
    t["q_num"] = to_json(s[d].num());
    t["q_den"] = to_json(s[d].den());
    out.push_back(t);
  }
  return out;
}

}  // namespace

json to_json(const UPoly& p) {
  json out = json::array();
  for (const auto& c : p.coeffs()) out.push_back(c.get_str());
  return out;
}

json to_json(const QRat& r) { return json{{"q_num", to_json(r.num())}, {"q_den", to_json(r.den())}}; }

json to_json(const QtScalar& c) {
  json out = json::array();
  if (c.is_zero()) return out;
  if (c.den().t_degree() == 0) {
    const UPoly den = c.den().t_coeff(0);
    for (int d = 0; d <= c.num().t_degree(); ++d) {
      const QRat v(c.num().t_coeff(d), den);
      if (v.is_zero()) continue;
      out.push_back(json{{"t_deg", d}, {"q_num", to_json(v.num())}, {"q_den", to_json(v.den())}});
    }
    return out;
  }
  json num = json::array(), den = json::array();
  for (const auto& u : c.num().t_coeffs()) num.push_back(to_json(u));
  for (const auto& u : c.den().t_coeffs()) den.push_back(to_json(u));
  out.push_back(json{{"qt_num", num}, {"qt_den", den}});
  return out;
}

json to_json(const SeriesTable& s) {
  json out = json::array();
  for (const auto& [mono, series] : s)
    for (auto& t : series_terms(&mono, series)) out.push_back(std::move(t));
  return out;
}

json to_json(const Poly& p) {
  json out = json::array();
  for (const auto& [mono, c] : p.terms())
    for (auto t : to_json(c)) {
      t["x_exp"] = mono.x;
      t["y_exp"] = mono.y;
      out.push_back(std::move(t));
    }
  return out;
}

json to_json(const SymFunc& f) {
  json terms = json::array();
  for (const auto& [lambda, c] : f.terms()) terms.push_back(json{{"partition", lambda}, {"coeff", to_json(c)}});
  return json{{"basis", basis_name(f.basis())}, {"terms", terms}};
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks of the nabla^k Cauchy identity and its combinatorial companions"};
  app.name("nabla-cli");
  app.require_subcommand(1);
  RunConfig c;

  auto common = [&](CLI::App* sub, bool with_primes = false) {
    sub->add_option("--n", c.n, "size n")->capture_default_str();
    sub->add_option("--k", c.k, "power k")->capture_default_str();
    sub->add_option("--N", c.N, "alphabet size / label bound")->capture_default_str();
    sub->add_option("--D,--t-degree", c.D, "t-degree bound")->capture_default_str();
    sub->add_option("--format", c.format, "json or text")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
    sub->add_option("--out", c.out_path, "write the report to this file");
    sub->add_option("--workers", c.workers, "worker threads")->capture_default_str();
    if (with_primes) sub->add_option("--primes", c.primes, "primes for the finite-field oracle")->delimiter(',');
  };

  const std::vector<std::pair<std::string, std::string>> verifiers{
      {"verify-main", "Macdonald side against the combinatorial sum"},
      {"verify-shuffle", "parking-function sum against nabla^k e_n"},
      {"verify-fulltwist", "d_k sum against the extracted coefficient"},
      {"verify-involution", "sign-reversing involution and its fixed points"},
      {"verify-paff", "affine permutation correspondence"},
      {"verify-bundles", "parabolic bundle counts and generating function"},
      {"verify-xi", "xi_pi against the chromatic symmetric function"},
      {"verify-rho", "emptiness of the five-condition set"}};
  for (const auto& [name, help] : verifiers) common(app.add_subcommand(name, help), name == "verify-bundles");
  CLI::App* comp = app.add_subcommand("compute", "compute and render one object");
  common(comp);
  comp->add_option("object", c.object, "macdonald, nabla, omega or parking")
      ->required()
      ->check(CLI::IsMember({"macdonald", "nabla", "omega", "parking"}));
  comp->add_option("--lambda", c.lambda, "partition, comma separated")->delimiter(',');

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << e.what() << "\n";
    return 2;
  }
  c.command = app.get_subcommands().front()->get_name();

  static const std::map<std::string, std::function<Report(const RunConfig&)>> handlers{
      {"verify-main", verify_main},          {"verify-shuffle", verify_shuffle_cmd}, {"verify-fulltwist", verify_fulltwist},
      {"verify-involution", verify_involution}, {"verify-paff", verify_paff_cmd},   {"verify-bundles", verify_bundles_cmd},
      {"verify-xi", verify_xi},              {"verify-rho", verify_rho},             {"compute", compute}};

  Report r;
  try {
    validate_common(c);
    r = handlers.at(c.command)(c);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    err << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "failure: " << e.what() << "\n";
    return 1;
  }

  const std::string text = render(c, r);
  if (c.out_path.empty()) {
    out << text;
  } else {
    std::ofstream f(c.out_path);
    if (!f) {
      err << "config error: cannot write " << c.out_path << "\n";
      return 2;
    }
    f << text;
  }
  return r.pass ? 0 : 1;
}

}  // namespace nabla
