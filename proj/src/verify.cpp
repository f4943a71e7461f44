#include "superlie/verify.hpp"

#include <atomic>
#include <functional>
#include <future>
#include <random>
#include <set>
#include <thread>

#include "superlie/cyclic.hpp"
#include "superlie/errors.hpp"
#include "superlie/specialization.hpp"
#include "superlie/superlie.hpp"

namespace superlie {

namespace {

using Task = std::function<std::vector<CheckReport>()>;

std::string first_p_discrepancy(const SymFunc& a, const SymFunc& b) {
  SymFunc pa = to_p(a), pb = to_p(b);
  std::set<Partition> keys;
  for (const auto& [k, c] : pa.terms()) keys.insert(k);
  for (const auto& [k, c] : pb.terms()) keys.insert(k);
  for (const auto& k : keys) {
    QTPoly ca = pa.coeff(k), cb = pb.coeff(k);
    if (!(ca == cb)) return "p_" + compact_index(k) + ": " + ca.to_string() + " vs " + cb.to_string();
  }
  return "";
}

CheckReport compare_functions(std::string name, nlohmann::ordered_json params, const SymFunc& lhs,
                              const SymFunc& rhs) {
  CheckReport r;
  r.check = std::move(name);
  r.parameters = std::move(params);
  r.lhs = to_p(lhs).to_string();
  r.rhs = to_p(rhs).to_string();
  r.first_discrepancy = first_p_discrepancy(lhs, rhs);
  r.passed = r.first_discrepancy.empty();
  return r;
}

CheckReport compare_values(std::string name, nlohmann::ordered_json params, const std::string& lhs,
                           const std::string& rhs) {
  CheckReport r;
  r.check = std::move(name);
  r.parameters = std::move(params);
  r.lhs = lhs;
  r.rhs = rhs;
  r.passed = lhs == rhs;
  if (!r.passed) r.first_discrepancy = lhs + " vs " + rhs;
  return r;
}

Task single(std::function<CheckReport()> fn) {
  return [fn = std::move(fn)] { return std::vector<CheckReport>{fn()}; };
}

// (n, m) with 1 <= n + m <= max_total, n ascending within each total.
std::vector<std::pair<int, int>> bidegrees(int max_total) {
  std::vector<std::pair<int, int>> out;
  for (int total = 1; total <= max_total; ++total)
    for (int m = 0; m <= total; ++m) out.emplace_back(total - m, m);
  return out;
}

void brandt_tasks(const VerifyBounds& b, std::vector<Task>& tasks) {
  for (auto [n, m] : bidegrees(b.max_total)) {
    tasks.push_back([n, m] {
      nlohmann::ordered_json params{{"n", n}, {"m", m}};
      SymFunc ch = super_brandt_char(n, m);
      std::vector<CheckReport> out{compare_functions("brandt-diagonal", params, diagonal(super_bi_brandt_char(n, m)), ch)};
      SchurExpansion s = schur_expand(ch);
      CheckReport pos;
      pos.check = "positivity";
      pos.parameters = params;
      pos.lhs = p_to_s(ch).to_string();
      pos.rhs = "nonnegative integer Schur coefficients";
      pos.passed = s.nonnegative_integral;
      if (!pos.passed)
        for (const auto& [lambda, c] : s.coeffs) {
          bool ok = true;
          for (const auto& [e, v] : c.terms()) ok = ok && v >= 0 && v.get_den() == 1;
          if (!ok) {
            pos.first_discrepancy = "s_" + compact_index(lambda) + ": " + c.to_string();
            break;
          }
        }
      out.push_back(pos);
      return out;
    });
  }
}

void petrogradsky_tasks(const VerifyBounds& b, std::vector<Task>& tasks) {
  const int t = b.max_total;
  tasks.push_back([t] {
    auto series = petrogradsky_series(t, t);
    std::vector<CheckReport> out;
    for (auto [n, m] : bidegrees(t)) {
      BiSymFunc lhs = series.at({n, m}), rhs = super_bi_brandt_char(n, m);
      CheckReport r;
      r.check = "petrogradsky";
      r.parameters = {{"n", n}, {"m", m}};
      r.lhs = lhs.to_string();
      r.rhs = rhs.to_string();
      r.passed = lhs == rhs;
      if (!r.passed) r.first_discrepancy = "series coefficient " + r.lhs + " vs " + r.rhs;
      out.push_back(r);
    }
    return out;
  });
}

void witt_tasks(const VerifyBounds& b, std::vector<Task>& tasks) {
  for (auto [n, m] : bidegrees(std::min(b.max_total, 6)))
    for (int dim = 1; dim <= 3; ++dim)
      tasks.push_back(single([n, m, dim] {
        MultiPoly poly = bi_expand_truncated(super_bi_brandt_char(n, m), dim, dim);
        std::vector<Rat> ones(static_cast<std::size_t>(2 * dim), Rat(1));
        return compare_values("witt-specialization", {{"n", n}, {"m", m}, {"N", dim}},
                              super_witt_dim(n, m, dim).get_str(), to_string(poly.evaluate(ones)));
      }));
  for (auto [n, m] : bidegrees(std::min(b.max_total, 4)))
    for (int dim = 1; dim <= 2; ++dim)
      tasks.push_back(single([n, m, dim] {
        return compare_values("witt-brute-force", {{"n", n}, {"m", m}, {"N", dim}},
                              super_witt_dim(n, m, dim).get_str(), std::to_string(brute_force_lie_dim(n, m, dim, dim)));
      }));
}

void thrall_tasks(const VerifyBounds& b, std::vector<Task>& tasks) {
  for (auto [n, m] : bidegrees(std::min(b.max_total, 5))) tasks.push_back(single([n, m] { return thrall_sum_check(n, m); }));
}

CheckReport induce_oracle_report(const CyclicClassFunction& chi, nlohmann::ordered_json params) {
  SymFunc formula = induce_frobenius(chi);
  ClassFunctionSn oracle = induce_oracle(chi);
  return compare_functions("induced-character", std::move(params), formula, frobenius_characteristic(oracle));
}

void klyachko_tasks(const VerifyBounds& b, std::vector<Task>& tasks) {
  for (int n = 1; n <= b.max_total; ++n)
    tasks.push_back(single([n] {
      return compare_functions("klyachko", {{"n", n}}, induce_frobenius(chi_power(n, 1)), super_brandt_char(n, 0));
    }));
  for (auto [n, m] : bidegrees(std::min(b.max_total + 2, 10)))
    tasks.push_back(single([n, m] {
      CyclicClassFunction formula = chi_cyc(n, m), oracle = chi_cyc_oracle(n, m);
      std::string lhs, rhs;
      for (int k = 1; k <= n + m; ++k) {
        lhs += (k > 1 ? "," : "") + formula.at(k).to_string();
        rhs += (k > 1 ? "," : "") + oracle.at(k).to_string();
      }
      return compare_values("chi-cyc", {{"n", n}, {"m", m}}, lhs, rhs);
    }));
  for (int r = 1; r <= std::min(b.max_total, 6); ++r) {
    for (int k0 = 0; k0 < r; ++k0)
      tasks.push_back(single([r, k0] { return induce_oracle_report(chi_power(r, k0), {{"r", r}, {"k", k0}}); }));
    for (int m = 0; m <= r; ++m)
      tasks.push_back(single([r, m] {
        const long e = m % 2 == 1 ? 1 : m / 2 + 1;
        return induce_oracle_report(pointwise_product(chi_cyc(r - m, m), chi_power(r, e)),
                                    {{"r", r}, {"n", r - m}, {"m", m}});
      }));
  }
}

void super_klyachko_tasks(const VerifyBounds& b, std::vector<Task>& tasks) {
  for (auto [n, m] : bidegrees(b.max_total))
    tasks.push_back(single([n, m] {
      return compare_functions("super-klyachko", {{"n", n}, {"m", m}}, super_klyachko_char(n, m), super_brandt_char(n, m));
    }));
}

void hook_tasks(const VerifyBounds& b, std::vector<Task>& tasks) {
  for (int n = 1; n <= b.max_n; ++n)
    for (const auto& lambda : partitions_of(n))
      tasks.push_back([lambda] { return std::vector<CheckReport>{hook_formula_check(lambda), classical_hook_check(lambda)}; });
}

void qps_tasks(const VerifyBounds& b, std::vector<Task>& tasks) {
  for (int n = 1; n <= std::min(b.max_n, 5); ++n)
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (n - 1)); ++bits) {
      Subset d(bits << 1);
      int cap = b.q_cap;
      tasks.push_back(single([n, d, cap] { return qps_check(n, d, cap); }));
    }
}

void sps_tasks(const VerifyBounds& b, std::vector<Task>& tasks) {
  const int cap = b.q_cap;
  for (int n = 1; n <= std::min(b.max_n, 6); ++n)
    for (const auto& lambda : partitions_of(n)) tasks.push_back(single([lambda, cap] { return s_ps_check(lambda, cap); }));
  for (int n = 1; n <= std::min(b.max_n, 5); ++n)
    for (const auto& lambda : partitions_of(n))
      tasks.push_back(single([lambda, cap] { return qt_hook_consistency_check(lambda, cap); }));
}

void cauchy_tasks(const VerifyBounds& b, std::vector<Task>& tasks) {
  for (int n = 1; n <= std::min(b.max_n, 5); ++n) tasks.push_back(single([n] { return super_cauchy_check(n, 2, 2); }));
}

void reu_tasks(const VerifyBounds& b, std::vector<Task>& tasks) {
  for (int n = 1; n <= b.max_n; ++n)
    for (const auto& lambda : partitions_of(n))
      tasks.push_back([lambda, n] {
        std::vector<CheckReport> out;
        for (long d : divisors(n)) out.push_back(pi_root_check(lambda, static_cast<int>(d)));
        return out;
      });
  // Filter definition of Omega against the root-of-unity average, fixed seed.
  tasks.push_back([] {
    std::mt19937 rng(20240611);
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::vector<CheckReport> out;
    for (int trial = 0; trial < 100; ++trial) {
      const int r = 1 + trial % 12;
      const int s = std::uniform_int_distribution<int>(0, r - 1)(rng);
      QTPoly f;
      for (int a = 0; a <= 3 * r; ++a)
        for (int t = 0; t <= 3; ++t)
          if (int c = coeff(rng); c != 0) f.add_term(a, t, c);
      QTPoly filtered = omega_extract(f, r, s);
      QTPoly averaged = omega_root_average(f, r, s);
      QTPoly all_residues;
      for (int res = 0; res < r; ++res) all_residues += omega_extract(f, r, res);
      QTPoly at_one;
      for (const auto& [e, c] : f.terms()) at_one.add_term(0, e.second, c);
      CheckReport rep = compare_values("omega", {{"trial", trial}, {"r", r}, {"s", s}}, filtered.to_string(),
                                       averaged.to_string());
      if (rep.passed && !(all_residues == at_one)) {
        rep.passed = false;
        rep.first_discrepancy = "residue classes sum to " + all_residues.to_string() + ", q = 1 gives " + at_one.to_string();
      }
      out.push_back(rep);
    }
    return out;
  });
}

void kw_tasks(const VerifyBounds& b, std::vector<Task>& tasks) {
  for (auto [n, m] : bidegrees(b.max_total)) tasks.push_back(single([n, m] { return kw_check(n, m); }));
}

void symmetry_tasks(const VerifyBounds& b, std::vector<Task>& tasks) {
  for (int n = 1; n <= std::min(b.max_n, 7); ++n)
    for (const auto& lambda : partitions_of(n)) tasks.push_back(single([lambda] { return sym1_check(lambda); }));
  for (int total = 1; total <= std::min(b.max_total, 7); ++total)
    for (const auto& lambda : partitions_of(total))
      tasks.push_back([lambda, total] {
        std::vector<CheckReport> out;
        for (int m = 0; m <= total; ++m) out.push_back(sym2_check(lambda, m));
        return out;
      });
  for (int total = 2; total <= std::min(b.max_total, 8); total += 2)
    for (const auto& lambda : partitions_of(total))
      tasks.push_back([lambda, total] {
        std::vector<CheckReport> out;
        for (int m = 1; m < total; m += 2) out.push_back(sym3_check(lambda, m));
        return out;
      });
}

void degree_two_tasks(const VerifyBounds& b, std::vector<Task>& tasks) {
  for (int d = 1; d <= b.max_degree; ++d) tasks.push_back([d] { return degree_two_checks(d); });
}

using Builder = void (*)(const VerifyBounds&, std::vector<Task>&);

const std::vector<std::pair<std::string, Builder>>& builders() {
  static const std::vector<std::pair<std::string, Builder>> table = {
      {"brandt-diagonal", brandt_tasks}, {"petrogradsky", petrogradsky_tasks},
      {"witt-oracle", witt_tasks},       {"thrall", thrall_tasks},
      {"klyachko", klyachko_tasks},      {"super-klyachko", super_klyachko_tasks},
      {"hook", hook_tasks},              {"qps", qps_tasks},
      {"sps", sps_tasks},                {"cauchy", cauchy_tasks},
      {"reu", reu_tasks},                {"kw", kw_tasks},
      {"symmetry", symmetry_tasks},      {"degree-two", degree_two_tasks},
  };
  return table;
}

}  // namespace

VerifyBounds profile_bounds(const std::string& profile) {
  if (profile == "full") return {};
  if (profile == "quick") return {6, 6, 3, 10};
  throw DomainError("unknown profile '" + profile + "' (expected quick or full)");
}

void validate_bounds(const VerifyBounds& b) {
  auto check = [](int v, int lo, int hi, const char* name) {
    if (v < lo || v > hi)
      throw DomainError(std::string(name) + " must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  };
  check(b.max_n, 1, kMaxVerifySize, "--max-n");
  check(b.max_total, 1, kMaxVerifySize, "--max-total");
  check(b.max_degree, 1, kMaxVerifyDegree, "--max-degree");
  check(b.q_cap, 0, kMaxVerifyQCap, "--qcap");
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, fn] : builders()) v.push_back(name);
    return v;
  }();
  return names;
}

std::vector<CheckReport> run_suite(const std::string& suite, const VerifyBounds& bounds, unsigned threads) {
  validate_bounds(bounds);
  std::vector<Task> tasks;
  bool found = false;
  for (const auto& [name, build] : builders())
    if (suite == "all" || suite == name) {
      build(bounds, tasks);
      found = true;
    }
  if (!found) throw DomainError("unknown suite '" + suite + "'");

  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(tasks.size()));
  std::vector<std::vector<CheckReport>> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) results[i] = tasks[i]();
  };
  std::vector<std::future<void>> pool;
  for (unsigned i = 1; i < threads; ++i) pool.push_back(std::async(std::launch::async, worker));
  worker();
  for (auto& f : pool) f.get();

  std::vector<CheckReport> out;
  for (auto& batch : results)
    for (auto& r : batch) out.push_back(std::move(r));
  return out;
}

}  // namespace superlie
