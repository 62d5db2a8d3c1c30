#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "seidel/analysis.hpp"
#include "seidel/constructions.hpp"
#include "seidel/linalg.hpp"
#include "seidel/records.hpp"
#include "seidel/search.hpp"

using namespace seidel;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitMismatch = 2;
constexpr int kExitInvariant = 3;

std::string rational_str(const Rational& r) {
  Int num = numerator(r), den = denominator(r);
  return den == 1 ? num.str() : num.str() + "/" + den.str();
}

void emit(const std::string& out_path, const std::string& content) {
  std::string body = content;
  if (body.empty() || body.back() != '\n') body += '\n';
  if (out_path.empty()) {
    std::cout << body;
  } else {
    std::ofstream f(out_path);
    if (!f) throw std::runtime_error("cannot open output file: " + out_path);
    f << body;
  }
}

SeidelMatrix random_seidel(int n, std::mt19937_64& rng) {
  SeidelMatrix s(n);
  for (int idx = 0; idx < pair_count(n); ++idx)
    if (rng() & 1) s.flip_pair(idx);
  return s;
}

std::uint64_t pick_seed(std::uint64_t requested) {
  if (requested) return requested;
  std::random_device rd;
  return (std::uint64_t(rd()) << 32) | rd();
}

// Reads matrix records from stdin, skipping certificate lines so command
// pipelines ("residue | border") work without filtering.
std::vector<SeidelMatrix> read_stdin_records(std::size_t want) {
  std::vector<SeidelMatrix> out;
  std::string line;
  while (out.size() < want && std::getline(std::cin, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded()) throw std::invalid_argument("malformed JSON on stdin: " + line);
    if (!j.contains("n") || !j.contains("bits")) continue;  // certificate line etc.
    out.push_back(parse_record(line));
  }
  if (out.size() < want)
    throw std::invalid_argument("expected " + std::to_string(want) +
                                " matrix record(s) on stdin, got " +
                                std::to_string(out.size()));
  return out;
}

std::string report_table(const SearchReport& rep) {
  std::ostringstream os;
  os << "n          " << rep.n << "\n";
  os << "coverage   " << (rep.coverage == Coverage::exhaustive ? "exhaustive" : "certificates-only") << "\n";
  if (rep.has_charpolys) {
    os << "charpolys  " << rep.charpolys.size() << "\n";
    for (const auto& p : rep.charpolys) os << "  " << p.to_string() << "\n";
  } else {
    os << "sqrt_dets ";
    for (auto v : rep.dets.values()) os << " " << v;
    os << "\n";
    os << "gaps       ";
    if (rep.gaps.empty())
      os << "none";
    else
      for (const auto& g : rep.gaps) os << "[" << g.lo << ".." << g.hi << "] ";
    os << "\n";
  }
  os << "visited    " << rep.visited << "\n";
  os << "duration   " << rep.duration_ms << " ms\n";
  return os.str();
}

int check_expect_dets(const SearchReport& rep, const std::string& path) {
  Fixture f = load_fixture(path);
  if (f.kind != "sqrt_det_sets") {
    std::cerr << "fixture " << path << " has kind " << f.kind << ", expected sqrt_det_sets\n";
    return kExitUsage;
  }
  for (const auto& row : f.det_rows) {
    if (row.n != rep.n) continue;
    if (rep.dets.values() == row.sqrt_dets) return kExitOk;
    std::cerr << "sqrt_det set for n=" << rep.n << " does not match " << path << "\n";
    return kExitMismatch;
  }
  std::cerr << "fixture " << path << " has no row for n=" << rep.n << "\n";
  return kExitUsage;
}

int check_expect_charpolys(const SearchReport& rep, const std::string& path) {
  Fixture f = load_fixture(path);
  if (f.kind == "charpoly_sets") {
    for (const auto& row : f.charpoly_rows) {
      if (row.n != rep.n) continue;
      auto sorted = [](std::vector<IntPolynomial> v) {
        std::sort(v.begin(), v.end(), [](const IntPolynomial& a, const IntPolynomial& b) {
          return a.coeffs() < b.coeffs();
        });
        return v;
      };
      if (sorted(rep.charpolys) == sorted(row.polys)) return kExitOk;
      std::cerr << "char poly set for n=" << rep.n << " does not match " << path << "\n";
      return kExitMismatch;
    }
    std::cerr << "fixture " << path << " has no row for n=" << rep.n << "\n";
    return kExitUsage;
  }
  if (f.kind == "charpoly_coeffs") {
    if (f.coeffs.n != rep.n) {
      std::cerr << "fixture " << path << " is for n=" << f.coeffs.n << ", report is n=" << rep.n << "\n";
      return kExitUsage;
    }
    std::set<std::vector<long long>> expected(f.coeffs.tuples.begin(), f.coeffs.tuples.end());
    std::set<std::vector<long long>> got;
    for (const auto& p : rep.charpolys) {
      std::vector<long long> tuple;
      for (int d : f.coeffs.degrees) tuple.push_back(p.coeff(d).convert_to<long long>());
      got.insert(std::move(tuple));
    }
    if (got == expected) return kExitOk;
    std::cerr << "coefficient tuples for n=" << rep.n << " do not match " << path << "\n";
    return kExitMismatch;
  }
  std::cerr << "fixture " << path << " has kind " << f.kind << ", expected a char poly fixture\n";
  return kExitUsage;
}

int cmd_enumerate(bool dets, bool charpolys, int n, int workers, const std::string& expect,
                  const std::string& format, const std::string& out_path) {
  if (dets == charpolys) {
    std::cerr << "pass exactly one of --dets / --charpolys\n";
    return kExitUsage;
  }
  SearchReport rep = dets ? enumerate_dets(n, workers) : enumerate_charpolys_report(n, workers);
  int rc = kExitOk;
  if (!expect.empty())
    rc = dets ? check_expect_dets(rep, expect) : check_expect_charpolys(rep, expect);
  std::string body;
  if (format == "json")
    body = rep.to_json();
  else if (format == "csv")
    body = rep.to_csv();
  else
    body = report_table(rep);
  emit(out_path, body);
  return rc;
}

int cmd_construct(const std::string& name, int n, int k, int p, bool verify,
                  const std::string& out_path) {
  SeidelMatrix matrix(1);
  ConstructionCertificate cert;
  if (name == "transitive") {
    matrix = transitive(n);
    cert = certify_transitive(n);
  } else if (name == "join") {
    auto inputs = read_stdin_records(2);
    matrix = join(inputs[0], inputs[1]);
    cert = certify_join(inputs[0], inputs[1]);
  } else if (name == "target-det") {
    auto [m, c] = target_determinant(n, k);
    matrix = std::move(m);
    cert = std::move(c);
  } else if (name == "residue") {
    matrix = quadratic_residue(p);
    cert = certify_residue(p);
  } else if (name == "border") {
    auto inputs = read_stdin_records(1);
    matrix = border_all_ones(inputs[0]);
    cert = certify_bordered(inputs[0]);
  } else if (name == "hc1") {
    matrix = bordered_transitive_hc1(k);
    cert = certify_hc1(k);
  } else {
    std::cerr << "unknown construction: " << name
              << " (expected transitive|join|target-det|residue|border|hc1)\n";
    return kExitUsage;
  }
  emit(out_path, to_record(matrix) + "\n" + cert.to_json());
  if (verify && !verify_certificate(matrix, cert)) {
    std::cerr << "certificate verification failed for " << name << "\n";
    return kExitInvariant;
  }
  return kExitOk;
}

int cmd_stats(int max_n, int n, std::uint64_t samples, bool exact, std::uint64_t seed,
              int workers, const std::string& expect, const std::string& format,
              const std::string& out_path) {
  if (samples > 0) {
    std::uint64_t s = pick_seed(seed);
    MonteCarloStats st = monte_carlo_stats(n, samples, s, workers);
    json j;
    j["n"] = st.n;
    j["samples"] = st.samples;
    j["seed"] = st.seed;
    j["mean_det"] = rational_str(st.mean_det);
    j["mean_det_sq"] = rational_str(st.mean_det_sq);
    emit(out_path, j.dump());
    return kExitOk;
  }
  if (exact) {
    auto [m1, m2] = exact_moments(n, workers);
    json j;
    j["n"] = n;
    j["mean_det"] = rational_str(m1);
    j["mean_det_sq"] = rational_str(m2);
    emit(out_path, j.dump());
    return kExitOk;
  }
  MomentTable t = moment_table(max_n);
  int rc = kExitOk;
  if (!expect.empty()) {
    Fixture f = load_fixture(expect);
    if (f.kind != "moment_table") {
      std::cerr << "fixture " << expect << " has kind " << f.kind << ", expected moment_table\n";
      return kExitUsage;
    }
    for (const auto& row : f.moment_rows) {
      if (row.n > max_n) continue;
      auto it = std::find_if(t.rows.begin(), t.rows.end(),
                             [&](const MomentRow& r) { return r.n == row.n; });
      if (it == t.rows.end() || it->y != row.y || it->z != row.z) {
        std::cerr << "moment row n=" << row.n << " does not match " << expect << "\n";
        rc = kExitMismatch;
      }
    }
  }
  std::string body;
  if (format == "json") {
    body = t.to_json();
  } else if (format == "csv") {
    body = t.to_csv();
  } else {
    std::ostringstream os;
    os << std::setw(3) << "n" << std::setw(10) << "y_n" << std::setw(16) << "z_n" << "\n";
    for (const auto& r : t.rows)
      os << std::setw(3) << r.n << std::setw(10) << r.y.str() << std::setw(16) << r.z.str()
         << "\n";
    body = os.str();
  }
  emit(out_path, body);
  return rc;
}

std::string bound_cell(const RadicalBound& b) {
  if (b.integral) return b.value.str();
  std::ostringstream os;
  os << b.display() << " ~= " << std::setprecision(10) << b.approx();
  return os.str();
}

int cmd_bounds(int n, const std::string& format, const std::string& out_path) {
  BoundsProfile p = bounds_profile(n);
  std::string body;
  if (format == "json") {
    body = p.to_json();
  } else if (format == "csv") {
    body = p.to_csv();
  } else {
    std::ostringstream os;
    os << "n              " << p.n << "\n";
    os << "hadamard_sqrt  " << bound_cell(p.hadamard_sqrt) << "\n";
    if (p.has_mod2) os << "mod2_bound     " << bound_cell(p.mod2_bound) << "\n";
    os << "fischer_bound  " << bound_cell(p.fischer_bound) << "\n";
    os << "scm_minor      " << bound_cell(p.scm_minor) << "\n";
    os << "gap_threshold  " << bound_cell(p.gap_threshold) << "\n";
    body = os.str();
  }
  emit(out_path, body);
  return kExitOk;
}

bool suite_pfaffian_square(int n, std::uint64_t samples, std::uint64_t seed) {
  if (n < 2 || n % 2) throw std::invalid_argument("pfaffian-square needs even n");
  if (n <= 6) {
    std::uint64_t total = std::uint64_t(1) << pair_count(n - 1);
    for (std::uint64_t v = 0; v < total; ++v) {
      SeidelMatrix s = representative_matrix(n, v);
      Int pf = pfaffian(s);
      if (pf * pf != determinant(s) || pf != pfaffian_bruteforce(s)) return false;
    }
    std::cout << "[ok] pfaffian-square: " << total << " exhaustive representatives at n=" << n
              << "\n";
    return true;
  }
  std::mt19937_64 rng(seed);
  for (std::uint64_t i = 0; i < samples; ++i) {
    SeidelMatrix s = random_seidel(n, rng);
    Int pf = pfaffian(s);
    if (pf * pf != determinant(s)) return false;
    if (n <= 12 && pf != pfaffian_bruteforce(s)) return false;
  }
  std::cout << "[ok] pfaffian-square: " << samples << " random matrices at n=" << n << "\n";
  return true;
}

bool suite_join_mult(std::uint64_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int orders[] = {2, 3, 4, 5, 6};
  for (std::uint64_t i = 0; i < samples; ++i) {
    int m1 = orders[rng() % 5], m2 = orders[rng() % 5];
    if (m1 % 2 && m2 % 2) m2 = orders[2 * (rng() % 3)];  // need one even order
    SeidelMatrix a = random_seidel(m1, rng), b = random_seidel(m2, rng);
    if (determinant(join(a, b)) != determinant(a) * determinant(b)) return false;
  }
  std::cout << "[ok] join-mult: " << samples << " random order pairs\n";
  return true;
}

bool suite_reversal_formula(int n, std::uint64_t samples, std::uint64_t seed) {
  if (n < 2 || n % 2) throw std::invalid_argument("reversal-formula needs even n");
  std::mt19937_64 rng(seed);
  for (std::uint64_t it = 0; it < samples; ++it) {
    SeidelMatrix s = random_seidel(n, rng);
    int i = int(rng() % n), j = int(rng() % n);
    if (i == j) j = (j + 1) % n;
    ReversalResult r = reversal_det(s, i, j);
    if (r.det != determinant(r.matrix)) return false;
    if (r.matrix != reverse_arc(s, i, j)) return false;
  }
  std::cout << "[ok] reversal-formula: " << samples << " random reversals at n=" << n << "\n";
  return true;
}

bool suite_jacobi(std::uint64_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int p : {3, 7, 11}) {
    SeidelMatrix sc = border_all_ones(quadratic_residue(p));
    int n = sc.order();
    for (int k = 0; k <= 2; ++k)
      if (!jacobi_factor_check_all(sc, k)) return false;
    std::uint64_t extra = samples / 3;
    for (std::uint64_t it = 0; it < extra; ++it) {
      if (n / 2 < 3) break;
      int k = 3 + int(rng() % (n / 2 - 2));
      std::vector<int> verts(n);
      std::iota(verts.begin(), verts.end(), 0);
      std::shuffle(verts.begin(), verts.end(), rng);
      verts.resize(k);
      if (!jacobi_factor_check(sc, verts)) return false;
    }
    std::cout << "[ok] jacobi: order " << n << " (all subsets to size 2, " << extra
              << " random larger)\n";
  }
  return true;
}

bool suite_interlace(std::uint64_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (std::uint64_t it = 0; it < samples; ++it) {
    int n = 2 + int(rng() % 7);  // 2..8
    SeidelMatrix s = random_seidel(n, rng);
    int k = 1 + int(rng() % (n - 1));
    std::vector<int> verts(n);
    std::iota(verts.begin(), verts.end(), 0);
    std::shuffle(verts.begin(), verts.end(), rng);
    verts.resize(k);
    if (!interlace_check(s, verts)) return false;
  }
  std::cout << "[ok] interlace: " << samples << " random (matrix, subset) pairs, n <= 8\n";
  return true;
}

bool suite_moments(int n) {
  if (n < 2 || n % 2 || n > 8) throw std::invalid_argument("moments suite needs even n <= 8");
  auto [mean_det, mean_sq] = exact_moments(n);
  MomentTable t = moment_table(n);
  const MomentRow& row = t.rows.back();
  if (mean_det != Rational(row.expected) || mean_sq != Rational(row.z)) return false;
  std::cout << "[ok] moments: exact enumeration at n=" << n << " matches ("
            << row.expected.str() << ", " << row.z.str() << ")\n";
  return true;
}

int cmd_verify(const std::string& suite, int n, std::uint64_t samples, std::uint64_t seed) {
  std::uint64_t s = pick_seed(seed);
  bool ok;
  if (suite == "pfaffian-square") {
    std::cout << "seed " << s << "\n";
    ok = suite_pfaffian_square(n ? n : 6, samples ? samples : 500, s);
  } else if (suite == "join-mult") {
    std::cout << "seed " << s << "\n";
    ok = suite_join_mult(samples ? samples : 200, s);
  } else if (suite == "reversal-formula") {
    std::cout << "seed " << s << "\n";
    ok = suite_reversal_formula(n ? n : 6, samples ? samples : 300, s);
  } else if (suite == "jacobi") {
    std::cout << "seed " << s << "\n";
    ok = suite_jacobi(samples ? samples : 200, s);
  } else if (suite == "interlace") {
    std::cout << "seed " << s << "\n";
    ok = suite_interlace(samples ? samples : 500, s);
  } else if (suite == "moments") {
    ok = suite_moments(n ? n : 8);
  } else {
    std::cerr << "unknown suite: " << suite
              << " (expected pfaffian-square|join-mult|reversal-formula|jacobi|interlace|moments)\n";
    return kExitUsage;
  }
  if (!ok) {
    std::cerr << "[fail] suite " << suite << " found a violation\n";
    return kExitInvariant;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Seidel matrices of tournaments: enumeration, constructions, bounds"};
  app.require_subcommand(1);

  int n = 0, k = 0, p = 0, workers = 0, max_n = 14;
  std::uint64_t budget = 0, seed = 0, samples = 0;
  bool dets = false, charpolys = false, verify_flag = false, exact = false;
  std::string expect, format = "table", out_path, name, suite;

  auto* enumerate = app.add_subcommand("enumerate", "Exhaustive enumeration over switching representatives");
  enumerate->add_flag("--dets", dets, "enumerate sqrt(det) values");
  enumerate->add_flag("--charpolys", charpolys, "enumerate characteristic polynomials");
  enumerate->add_option("-n", n, "matrix order")->required();
  enumerate->add_option("--workers", workers, "worker threads (0 = hardware)");
  enumerate->add_option("--expect", expect, "fixture file to compare against");
  enumerate->add_option("--format", format, "json | csv | table")
      ->check(CLI::IsMember({"json", "csv", "table"}));
  enumerate->add_option("--out", out_path, "write the report to a file");

  auto* construct = app.add_subcommand("construct", "Emit a constructed matrix + certificate");
  construct->add_option("name", name, "transitive|join|target-det|residue|border|hc1")->required();
  construct->add_option("-n", n, "order parameter");
  construct->add_option("-k", k, "target sqrt(det) / step parameter");
  construct->add_option("-p", p, "prime (residue construction)");
  construct->add_flag("--verify", verify_flag, "recompute the certificate's claims");
  construct->add_option("--out", out_path, "write record + certificate to a file");

  auto* stats = app.add_subcommand("stats", "Moment table and sampled/exact det statistics");
  stats->add_option("--max-n", max_n, "table limit (even)");
  stats->add_option("-n", n, "order for --samples / --exact");
  stats->add_option("--samples", samples, "Monte Carlo sample count");
  stats->add_flag("--exact", exact, "exact enumeration moments (n <= 8)");
  stats->add_option("--seed", seed, "RNG seed (0 = auto, recorded in output)");
  stats->add_option("--workers", workers, "worker threads (0 = hardware)");
  stats->add_option("--expect", expect, "moment table fixture to compare against");
  stats->add_option("--format", format, "json | csv | table")
      ->check(CLI::IsMember({"json", "csv", "table"}));
  stats->add_option("--out", out_path, "write the report to a file");

  auto* bounds = app.add_subcommand("bounds", "Determinant bound profile for an order");
  bounds->add_option("-n", n, "matrix order (even, >= 4)")->required();
  bounds->add_option("--format", format, "json | csv | table")
      ->check(CLI::IsMember({"json", "csv", "table"}));
  bounds->add_option("--out", out_path, "write the report to a file");

  auto* verify = app.add_subcommand("verify", "Run a named invariant suite");
  verify->add_option("suite", suite,
                     "pfaffian-square|join-mult|reversal-formula|jacobi|interlace|moments")
      ->required();
  verify->add_option("-n", n, "order (suite-dependent default)");
  verify->add_option("--samples", samples, "sample count (suite-dependent default)");
  verify->add_option("--seed", seed, "RNG seed (0 = auto, printed)");
  verify->add_option("--budget", budget, "search budget (reserved)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (app.got_subcommand(enumerate))
      return cmd_enumerate(dets, charpolys, n, workers, expect, format, out_path);
    if (app.got_subcommand(construct))
      return cmd_construct(name, n, k, p, verify_flag, out_path);
    if (app.got_subcommand(stats))
      return cmd_stats(max_n, n ? n : 6, samples, exact, seed, workers, expect, format, out_path);
    if (app.got_subcommand(bounds)) return cmd_bounds(n, format, out_path);
    if (app.got_subcommand(verify)) return cmd_verify(suite, n, samples, seed);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInvariant;
  }
  return kExitUsage;
}
