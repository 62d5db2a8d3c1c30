#include "seidel/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

#include "kernels.hpp"
#include "seidel/linalg.hpp"
#include "seidel/records.hpp"

namespace seidel {

using json = nlohmann::ordered_json;

namespace {

int resolve_workers(int workers) {
  if (workers > 0) return workers;
  unsigned hc = std::thread::hardware_concurrency();
  return hc ? int(hc) : 1;
}

void run_sharded(int shards, int workers, const std::function<void(int)>& body) {
  int nthreads = std::min(shards, resolve_workers(workers));
  if (nthreads <= 1) {
    for (int s = 0; s < shards; ++s) body(s);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(nthreads);
  for (int t = 0; t < nthreads; ++t)
    pool.emplace_back([&] {
      for (;;) {
        int s = next.fetch_add(1);
        if (s >= shards) break;
        body(s);
      }
    });
  for (auto& th : pool) th.join();
}

// Dense +-1 matrix of the representative with free bits v (row 0 all +1).
void dense_from_rep(int n, std::uint64_t v, std::int64_t* a) {
  for (int i = 0; i < n; ++i) a[std::size_t(i) * n + i] = 0;
  for (int j = 1; j < n; ++j) {
    a[j] = 1;
    a[std::size_t(j) * n] = -1;
  }
  int f = 0;
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++f) {
      std::int64_t s = (v >> f) & 1 ? 1 : -1;
      a[std::size_t(i) * n + j] = s;
      a[std::size_t(j) * n + i] = -s;
    }
}

long long ll_isqrt(long long v) {
  return isqrt(Int(v)).convert_to<long long>();
}

struct ShardPlan {
  int free_bits;   // bits beyond the fixed all-+1 first row
  int shard_bits;  // high bits used as the shard id
  int shards;
  int low_bits;
};

ShardPlan plan_shards(int n) {
  ShardPlan p;
  p.free_bits = pair_count(n - 1);
  p.shard_bits = std::min(6, p.free_bits);
  p.shards = 1 << p.shard_bits;
  p.low_bits = p.free_bits - p.shard_bits;
  return p;
}

const char* coverage_name(Coverage c) {
  return c == Coverage::exhaustive ? "exhaustive" : "certificates-only";
}

json record_json(const SeidelMatrix& s) {
  json j;
  j["n"] = s.order();
  j["bits"] = bits_hex(s);
  return j;
}

}  // namespace

std::string Provenance::label() const {
  switch (kind) {
    case Kind::enumeration:
      return "enumeration";
    case Kind::hill_climb:
      return "hill-climb";
    case Kind::construction:
      return detail;
  }
  return "";
}

std::vector<long long> DetSet::values() const {
  std::vector<long long> v;
  v.reserve(entries.size());
  for (const auto& e : entries) v.push_back(e.sqrt_det);
  return v;
}

bool DetSet::contains(long long v) const {
  return std::binary_search(entries.begin(), entries.end(), v,
                            [](auto&& a, auto&& b) {
                              if constexpr (std::is_same_v<std::decay_t<decltype(a)>, long long>)
                                return a < b.sqrt_det;
                              else
                                return a.sqrt_det < b;
                            });
}

std::vector<Gap> gap_report(const std::vector<long long>& sorted_values) {
  std::vector<Gap> gaps;
  for (std::size_t i = 1; i < sorted_values.size(); ++i) {
    long long prev = sorted_values[i - 1], cur = sorted_values[i];
    if (cur - prev > 2) gaps.push_back({prev + 2, cur - 2});
  }
  return gaps;
}

std::vector<Gap> gap_report(const DetSet& d) { return gap_report(d.values()); }

SeidelMatrix representative_matrix(int n, std::uint64_t v) {
  SeidelMatrix s(n);
  for (int j = 1; j < n; ++j) s.set_entry(0, j, 1);
  int f = 0;
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++f)
      s.set_entry(i, j, (v >> f) & 1 ? 1 : -1);
  return s;
}

std::string SearchReport::to_json(bool with_duration) const {
  json j;
  j["n"] = n;
  j["coverage"] = coverage_name(coverage);
  if (has_charpolys) {
    json arr = json::array();
    for (const auto& p : charpolys) {
      json row = json::array();
      for (int k = 0; k <= p.degree(); ++k) row.push_back(p.coeff(k).convert_to<long long>());
      arr.push_back(std::move(row));
    }
    j["charpolys"] = std::move(arr);
  } else {
    j["sqrt_dets"] = dets.values();
    json garr = json::array();
    for (const auto& g : gaps) garr.push_back({g.lo, g.hi});
    j["gaps"] = std::move(garr);
    json certs;
    for (const auto& e : dets.entries)
      certs[std::to_string(e.sqrt_det)] = record_json(e.certificate);
    j["certificates"] = std::move(certs);
  }
  j["visited"] = visited;
  j["seed"] = seed;
  if (with_duration) j["duration_ms"] = duration_ms;
  return j.dump();
}

std::string SearchReport::to_csv() const {
  std::string out;
  if (has_charpolys) {
    out = "charpoly,provenance\n";
    for (const auto& p : charpolys) out += p.to_string() + ",enumeration\n";
    return out;
  }
  out = "sqrt_det,provenance\n";
  for (const auto& e : dets.entries)
    out += std::to_string(e.sqrt_det) + "," + e.prov.label() + "\n";
  return out;
}

SearchReport enumerate_dets(int n, int workers) {
  if (n > 8) throw std::invalid_argument("exhaustive enumeration capped at n=8");
  if (n < 2 || n % 2) throw std::invalid_argument("det enumeration needs even n in {2,4,6,8}");
  auto t0 = std::chrono::steady_clock::now();

  ShardPlan plan = plan_shards(n);
  std::vector<std::map<long long, std::uint64_t>> shard_best(plan.shards);
  run_sharded(plan.shards, workers, [&](int s) {
    std::vector<std::int64_t> a(std::size_t(n) * n);
    auto& best = shard_best[s];
    std::uint64_t base = std::uint64_t(s) << plan.low_bits;
    std::uint64_t count = std::uint64_t(1) << plan.low_bits;
    for (std::uint64_t i = 0; i < count; ++i) {
      std::uint64_t v = base | (i ^ (i >> 1));  // Gray order within the shard
      dense_from_rep(n, v, a.data());
      long long det = kernels::bareiss_det(a.data(), n);
      auto [it, inserted] = best.try_emplace(det, v);
      if (!inserted && v < it->second) it->second = v;
    }
  });

  std::map<long long, std::uint64_t> merged;
  for (const auto& best : shard_best)
    for (auto [det, v] : best) {
      auto [it, inserted] = merged.try_emplace(det, v);
      if (!inserted && v < it->second) it->second = v;
    }

  SearchReport rep;
  rep.n = n;
  rep.coverage = Coverage::exhaustive;
  rep.dets.n = n;
  rep.dets.coverage = Coverage::exhaustive;
  for (auto [det, v] : merged) {
    DetSetEntry e;
    e.sqrt_det = ll_isqrt(det);
    e.prov.kind = Provenance::Kind::enumeration;
    e.certificate = representative_matrix(n, v);
    rep.dets.entries.push_back(std::move(e));
  }
  rep.gaps = gap_report(rep.dets);
  rep.visited = std::uint64_t(1) << plan.free_bits;
  rep.duration_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
  return rep;
}

SearchReport enumerate_charpolys_report(int n, int workers) {
  if (n > 8) throw std::invalid_argument("exhaustive enumeration capped at n=8");
  if (n < 1) throw std::invalid_argument("char poly enumeration needs n >= 1");
  auto t0 = std::chrono::steady_clock::now();

  ShardPlan plan = plan_shards(n);
  std::vector<std::set<std::vector<std::int64_t>>> shard_polys(plan.shards);
  run_sharded(plan.shards, workers, [&](int s) {
    std::vector<std::int64_t> a(std::size_t(n) * n);
    std::vector<std::int64_t> coeffs;
    auto& polys = shard_polys[s];
    std::uint64_t base = std::uint64_t(s) << plan.low_bits;
    std::uint64_t count = std::uint64_t(1) << plan.low_bits;
    for (std::uint64_t i = 0; i < count; ++i) {
      std::uint64_t v = base | (i ^ (i >> 1));
      dense_from_rep(n, v, a.data());
      kernels::berkowitz_charpoly(a.data(), n, coeffs);
      polys.insert(coeffs);
    }
  });

  std::set<std::vector<std::int64_t>> merged;
  for (auto& polys : shard_polys) merged.merge(polys);

  SearchReport rep;
  rep.n = n;
  rep.coverage = Coverage::exhaustive;
  rep.has_charpolys = true;
  for (const auto& c : merged)
    rep.charpolys.push_back(IntPolynomial(std::vector<Int>(c.begin(), c.end())));
  rep.visited = std::uint64_t(1) << plan.free_bits;
  rep.duration_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
  return rep;
}

std::vector<IntPolynomial> enumerate_charpolys(int n, int workers) {
  return enumerate_charpolys_report(n, workers).charpolys;
}

std::pair<std::pair<int, int>, Rational> best_reversal_factor(const SeidelMatrix& s) {
  RationalMatrix inv = inverse(s);
  int n = s.order();
  std::pair<int, int> best{-1, -1};
  Rational best_factor = -1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Rational& t = s.entry(i, j) > 0 ? inv.at(i, j) : inv.at(j, i);
      Rational factor = (1 + 2 * t) * (1 + 2 * t);
      if (factor > best_factor) {
        best_factor = factor;
        best = {i, j};
      }
    }
  return {best, best_factor};
}

namespace {

SeidelMatrix random_matrix(int n, std::mt19937_64& rng) {
  SeidelMatrix s(n);
  std::uint64_t word = 0;
  int left = 0;
  for (int idx = 0; idx < pair_count(n); ++idx) {
    if (left == 0) {
      word = rng();
      left = 64;
    }
    if (word & 1) s.flip_pair(idx);
    word >>= 1;
    --left;
  }
  return s;
}

}  // namespace

std::pair<SeidelMatrix, Int> hill_climb_max(int n, std::uint64_t budget, std::uint64_t seed) {
  if (n < 2 || n % 2) throw std::invalid_argument("hill climb needs even order");
  if (budget < 1) throw std::invalid_argument("hill climb needs a positive budget");
  std::mt19937_64 rng(seed);
  SeidelMatrix best(n);
  Int best_det = -1;
  std::uint64_t used = 0;
  // Each restart climbs all the way to a local maximum (ascent strictly
  // increases det, so climbs terminate); the budget counts moves + restarts.
  while (used < budget) {
    SeidelMatrix cur = random_matrix(n, rng);
    Int cur_det = determinant(cur);
    ++used;
    for (;;) {
      auto [pair, factor] = best_reversal_factor(cur);
      if (!(factor > 1)) break;
      cur = reverse_arc(cur, pair.first, pair.second);
      cur_det = determinant(cur);
      ++used;
    }
    if (cur_det > best_det) {
      best = cur;
      best_det = cur_det;
    }
  }
  return {best, best_det};
}

namespace {

const DetSet& cached_exhaustive(int n) {
  static std::mutex mu;
  static std::map<int, DetSet> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, enumerate_dets(n).dets).first;
  return it->second;
}

const DetSetEntry* cached_entry(int n, long long v) {
  const DetSet& d = cached_exhaustive(n);
  for (const auto& e : d.entries)
    if (e.sqrt_det == v) return &e;
  return nullptr;
}

}  // namespace

std::optional<MembershipCertificate> find_membership(int n, long long k, std::uint64_t budget,
                                                     std::uint64_t seed) {
  if (n < 2 || n % 2) throw std::invalid_argument("membership search needs even order");
  if (k < 1 || k % 2 == 0) throw std::invalid_argument("sqrt target must be odd and positive");

  // Bordered transitive construction covers k <= (n-2)^2/2 + 1 directly.
  if (n >= 4 && k <= (long long)(n - 2) * (n - 2) / 2 + 1) {
    auto [matrix, cert] = target_determinant(n - 2, k);
    MembershipCertificate m;
    m.matrix = std::move(matrix);
    m.method = "target-det";
    m.cert = std::move(cert);
    return m;
  }

  // Join products of the cached exhaustive sets.
  for (int m1 = 2; m1 <= 8 && m1 < n; m1 += 2) {
    int m2 = n - m1;
    if (m2 < m1 || m2 > 8) continue;
    for (long long d = 1; d * d <= k; d += 2) {
      if (k % d) continue;
      for (auto [da, db] : {std::pair{d, k / d}, std::pair{k / d, d}}) {
        const DetSetEntry* e1 = cached_entry(m1, da);
        const DetSetEntry* e2 = cached_entry(m2, db);
        if (!e1 || !e2) continue;
        MembershipCertificate m;
        m.matrix = join(e1->certificate, e2->certificate);
        m.method = "join";
        m.cert = certify_join(e1->certificate, e2->certificate);
        return m;
      }
    }
  }

  // Inside the exhaustive range the cached set answers definitively; walks
  // could never find anything the enumeration missed.
  if (n <= 8) {
    const DetSetEntry* e = cached_entry(n, k);
    if (!e) return std::nullopt;
    MembershipCertificate m;
    m.matrix = e->certificate;
    m.method = "enumeration";
    m.cert.claims_det = true;
    m.cert.claimed_sqrt_det = k;
    m.cert.n = n;
    return m;
  }

  // Containment: an order n-2 witness joined with R_2 keeps its determinant.
  {
    auto rec = find_membership(n - 2, k, budget, seed);
    if (rec) {
      MembershipCertificate m;
      m.matrix = join(rec->matrix, transitive(2));
      m.method = "join";
      m.cert = certify_join(rec->matrix, transitive(2));
      return m;
    }
  }

  // Seeded reversal walks toward det = k^2.
  std::mt19937_64 rng(seed);
  Int target = Int(k) * k;
  SeidelMatrix cur = random_matrix(n, rng);
  Int cur_det = determinant(cur);
  auto dist = [&](const Int& d) { return d > target ? Int(d - target) : Int(target - d); };
  for (std::uint64_t step = 0; step < budget; ++step) {
    if (cur_det == target) {
      MembershipCertificate m;
      m.matrix = cur;
      m.method = "walk";
      m.cert.claims_det = true;
      m.cert.claimed_sqrt_det = k;
      m.cert.n = n;
      return m;
    }
    RationalMatrix inv = inverse(cur);
    Int best_dist = dist(cur_det);
    std::pair<int, int> best{-1, -1};
    Int best_det = cur_det;
    for (int i = 0; i < cur.order(); ++i)
      for (int j = i + 1; j < cur.order(); ++j) {
        const Rational& t = cur.entry(i, j) > 0 ? inv.at(i, j) : inv.at(j, i);
        Rational det_new = (1 + 2 * t) * (1 + 2 * t) * Rational(cur_det);
        Int d = numerator(det_new);
        Int dd = dist(d);
        if (dd < best_dist || (dd == best_dist && best.first >= 0 && d > best_det)) {
          best_dist = dd;
          best = {i, j};
          best_det = d;
        }
      }
    if (best.first < 0) {
      cur = random_matrix(n, rng);
      cur_det = determinant(cur);
    } else {
      cur = reverse_arc(cur, best.first, best.second);
      cur_det = best_det;
    }
  }
  return std::nullopt;
}

MonteCarloStats monte_carlo_stats(int n, std::uint64_t samples, std::uint64_t seed,
                                  int workers) {
  if (n < 2 || n % 2) throw std::invalid_argument("sampling needs even order");
  if (samples < 1) throw std::invalid_argument("need at least one sample");

  const int kShards = 64;
  std::uint64_t state = seed;
  std::array<std::uint64_t, kShards> shard_seed;
  for (auto& s : shard_seed) s = splitmix64(state);

  std::array<Int, kShards> sum_det, sum_det_sq;
  run_sharded(kShards, workers, [&](int s) {
    std::uint64_t count = samples / kShards + (std::uint64_t(s) < samples % kShards ? 1 : 0);
    std::mt19937_64 rng(shard_seed[s]);
    std::vector<std::int64_t> a(std::size_t(n) * n, 0);
    Int sd = 0, sq = 0;
    for (std::uint64_t it = 0; it < count; ++it) {
      SeidelMatrix m = random_matrix(n, rng);
      if (n <= 14) {
        auto dense = m.dense();
        for (std::size_t c = 0; c < dense.size(); ++c) a[c] = dense[c];
        long long det = kernels::bareiss_det(a.data(), n);
        sd += det;
        sq += Int(det) * det;
      } else {
        Int det = determinant(m);
        sd += det;
        sq += det * det;
      }
    }
    sum_det[s] = std::move(sd);
    sum_det_sq[s] = std::move(sq);
  });

  Int total_det = 0, total_sq = 0;
  for (int s = 0; s < kShards; ++s) {
    total_det += sum_det[s];
    total_sq += sum_det_sq[s];
  }
  MonteCarloStats stats;
  stats.n = n;
  stats.samples = samples;
  stats.seed = seed;
  stats.mean_det = Rational(total_det, Int(samples));
  stats.mean_det_sq = Rational(total_sq, Int(samples));
  return stats;
}

std::pair<Rational, Rational> exact_moments(int n, int workers) {
  if (n > 8) throw std::invalid_argument("exact moments need exhaustive range n <= 8");
  if (n < 2 || n % 2) throw std::invalid_argument("exact moments need even n in {2,4,6,8}");

  ShardPlan plan = plan_shards(n);
  std::vector<Int> shard_det(plan.shards), shard_sq(plan.shards);
  run_sharded(plan.shards, workers, [&](int s) {
    std::vector<std::int64_t> a(std::size_t(n) * n);
    Int sd = 0, sq = 0;
    std::uint64_t base = std::uint64_t(s) << plan.low_bits;
    std::uint64_t count = std::uint64_t(1) << plan.low_bits;
    for (std::uint64_t i = 0; i < count; ++i) {
      std::uint64_t v = base | (i ^ (i >> 1));
      dense_from_rep(n, v, a.data());
      long long det = kernels::bareiss_det(a.data(), n);
      sd += det;
      sq += Int(det) * det;
    }
    shard_det[s] = std::move(sd);
    shard_sq[s] = std::move(sq);
  });

  Int total_det = 0, total_sq = 0;
  for (int s = 0; s < plan.shards; ++s) {
    total_det += shard_det[s];
    total_sq += shard_sq[s];
  }
  Int count = Int(1) << plan.free_bits;
  return {Rational(total_det, count), Rational(total_sq, count)};
}

}  // namespace seidel
