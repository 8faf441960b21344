#include "gabidulin/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <set>

#include "gabidulin/constructions.hpp"
#include "gabidulin/random.hpp"

namespace gabidulin {

const std::vector<BenchField>& reference_fields() {
  static const std::vector<BenchField> fields = {{4, 5, 2},   {6, 7, 3},   {8, 11, 2}, {10, 11, 2},
                                                 {12, 13, 2}, {14, 17, 3}, {16, 17, 3}};
  return fields;
}

const BenchField& field_for_length(int n) {
  for (const auto& f : reference_fields())
    if (f.n == n) return f;
  throw std::invalid_argument("no benchmark field for length " + std::to_string(n));
}

int smallest_primitive_root(int p) {
  for (int g = 2; g < p; ++g) {
    int order = 1;
    for (long x = g % p; x != 1; x = x * g % p) ++order;
    if (order == p - 1) return g;
  }
  throw std::invalid_argument("no primitive root");
}

std::vector<std::pair<int, int>> reference_sizes() {
  std::vector<std::pair<int, int>> out;
  for (const auto& f : reference_fields())
    for (int k = 2; k <= f.n; k += 2) out.emplace_back(f.n, k);
  return out;
}

namespace {

Element<Rational> binary_element(const Tower<Rational>& t, Rng& rng) {
  std::vector<Rational> c;
  for (std::size_t i = 0; i < t.dim(1); ++i) c.emplace_back(static_cast<long>(rng() % 2));
  return t.from_flat(1, c);
}

struct TowerCache {
  std::map<int, Automorphism<Rational>::Ptr> theta;
  Automorphism<Rational>::Ptr get(int p) {
    auto it = theta.find(p);
    if (it != theta.end()) return it->second;
    auto t = cyclotomic_tower(p);
    auto th = power_automorphism<Rational>(t, smallest_primitive_root(p));
    theta[p] = th;
    return th;
  }
};

TowerCache& cache() {
  static TowerCache c;
  return c;
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t h = v.size() / 2;
  return v.size() % 2 ? v[h] : 0.5 * (v[h - 1] + v[h]);
}

}  // namespace

BenchInstance make_bench_instance(int n, int k, std::uint64_t seed) {
  const BenchField& bf = field_for_length(n);
  BenchInstance inst;
  inst.theta = cache().get(bf.p);
  inst.k = k;
  const Tower<Rational>& t = inst.theta->tower();
  for (int i = 0; i < n; ++i) inst.support.push_back(t.gen(1).pow(i));
  Rng rng(seed);
  std::vector<Element<Rational>> c;
  for (int i = 0; i < k; ++i) c.push_back(binary_element(t, rng));
  inst.f = SkewPoly<Rational>(inst.theta.get(), c);
  GabidulinCode<Rational> code(inst.theta, inst.support, k);
  inst.y = encode(code, inst.f);
  const int tt = (n - k) / 2;
  if (tt > 0) {
    std::vector<Element<Rational>> e;
    for (;;) {
      std::vector<Element<Rational>> basis;
      for (int i = 0; i < tt; ++i) basis.push_back(binary_element(t, rng));
      e.assign(n, t.zero(1));
      for (int j = 0; j < n; ++j)
        for (int i = 0; i < tt; ++i) {
          long s = static_cast<long>(rng() % 3) - 1;
          if (s) e[j] += t.integer(s, 0) * basis[i];
        }
      if (k_rank(e) == tt) break;
    }
    for (int j = 0; j < n; ++j) inst.y[j] += e[j];
  }
  return inst;
}

std::vector<double> round_sizes(const WbTrace<Rational>& trace) {
  std::vector<double> out;
  for (const auto& st : trace.states)
    out.push_back(std::max({size_of(st.N0), size_of(st.W0), size_of(st.N1), size_of(st.W1)}));
  return out;
}

std::vector<BenchRow> run_bench(const BenchConfig& config) {
  std::vector<BenchRow> rows;
  std::set<std::pair<std::string, int>> timed_out;  // (mode, k) pairs that already timed out
  std::vector<std::string> modes;
  if (config.direct) modes.push_back("direct");
  if (config.residue) modes.push_back("residue");
  if (config.repeats <= 0) return rows;
  for (auto [n, k] : config.sizes) {
    for (const std::string& mode : modes) {
      BenchRow row{n, k, mode};
      if (timed_out.count({mode, k})) {
        row.timeout = true;
        rows.push_back(row);
        continue;
      }
      const BenchField& bf = field_for_length(n);
      std::vector<double> ms;
      const auto cell_start = std::chrono::steady_clock::now();
      for (int r = 0; r < config.repeats; ++r) {
        const double spent = std::chrono::duration<double>(std::chrono::steady_clock::now() - cell_start).count();
        if (spent > config.timeout_s) {
          row.timeout = true;
          break;
        }
        const std::uint64_t seed = config.seed * 1000003u + static_cast<std::uint64_t>(n) * 1009u + k * 31u + r;
        BenchInstance inst = make_bench_instance(n, k, seed);
        GabidulinCode<Rational> code(inst.theta, inst.support, inst.k);
        std::optional<SkewPoly<Rational>> got;
        const auto t0 = std::chrono::steady_clock::now();
        if (mode == "direct") {
          auto res = decode(code, inst.y, config.direct_method);
          if (res) got = res->f;
        } else {
          auto ctx = make_residue_context(inst.theta, bf.prime);
          ResidueJob job;
          job.method = config.residue_method;
          try {
            got = residue_decode_and_lift(code, inst.y, ctx, Lifter::alphabet({0, 1}, bf.prime), job);
          } catch (const ReductionError&) {
            got.reset();
          }
        }
        const auto t1 = std::chrono::steady_clock::now();
        ms.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
        if (!got || *got != inst.f) row.all_recovered = false;
        if (mode == "direct" && r == 0) {
          WbTrace<Rational> trace;
          WbOptions<Rational> opt;
          opt.variant = variant_of(config.direct_method);
          opt.trace = &trace;
          if (config.direct_method != DecodeMethod::gauss) {
            reconstruct_wb(code, inst.y, opt);
            auto sizes = round_sizes(trace);
            row.max_size_bits = sizes.empty() ? 0.0 : *std::max_element(sizes.begin(), sizes.end());
          }
        }
      }
      row.completed = static_cast<int>(ms.size());
      if (!ms.empty()) row.median_ms = median(ms);
      if (row.timeout) timed_out.insert({mode, k});
      rows.push_back(row);
    }
  }
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::string out = "n,k,mode,median_ms,max_size_bits\n";
  char buf[128];
  for (const auto& r : rows) {
    std::string med = r.timeout ? "timeout" : (std::snprintf(buf, sizeof buf, "%.3f", r.median_ms), buf);
    std::string size = r.max_size_bits < 0 ? "" : (std::snprintf(buf, sizeof buf, "%.1f", r.max_size_bits), buf);
    out += std::to_string(r.n) + "," + std::to_string(r.k) + "," + r.mode + "," + med + "," + size + "\n";
  }
  return out;
}

std::string bench_table(const std::vector<BenchRow>& rows) {
  std::string out;
  char buf[64];
  for (const std::string mode : {"direct", "residue"}) {
    std::set<int> ns, ks;
    std::map<std::pair<int, int>, const BenchRow*> cell;
    for (const auto& r : rows)
      if (r.mode == mode) {
        ns.insert(r.n);
        ks.insert(r.k);
        cell[{r.n, r.k}] = &r;
      }
    if (ns.empty()) continue;
    out += mode == "direct" ? "median decode time over the number field (ms)\n"
                            : "median decode time through the residue field (ms)\n";
    std::snprintf(buf, sizeof buf, "%6s", "n\\k");
    out += buf;
    for (int k : ks) {
      std::snprintf(buf, sizeof buf, " %10d", k);
      out += buf;
    }
    out += "\n";
    for (int n : ns) {
      std::snprintf(buf, sizeof buf, "%6d", n);
      out += buf;
      for (int k : ks) {
        auto it = cell.find({n, k});
        if (it == cell.end())
          std::snprintf(buf, sizeof buf, " %10s", "");
        else if (it->second->timeout)
          std::snprintf(buf, sizeof buf, " %10s", "timeout");
        else
          std::snprintf(buf, sizeof buf, " %10.2f", it->second->median_ms);
        out += buf;
      }
      out += "\n";
    }
    out += "\n";
  }
  return out;
}

}  // namespace gabidulin
