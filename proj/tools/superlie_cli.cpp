// superlie: compute characters of super Lie modules and verify identities.
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "superlie/cache.hpp"
#include "superlie/errors.hpp"
#include "superlie/specialization.hpp"
#include "superlie/superlie.hpp"
#include "superlie/tableau.hpp"
#include "superlie/verify.hpp"

using nlohmann::ordered_json;
using namespace superlie;

namespace {

enum Exit { kPass = 0, kFail = 1, kUsage = 2, kDomain = 3, kResource = 4, kInternal = 5 };

struct RunReport {
  std::string command;
  ordered_json parameters = ordered_json::object();
  std::string status = "pass";
  ordered_json payload = ordered_json::object();
  long elapsed_ms = 0;

  ordered_json to_json() const {
    return {{"command", command}, {"parameters", parameters}, {"status", status}, {"payload", payload},
            {"elapsed_ms", elapsed_ms}};
  }
};

std::string scalar_text(const ordered_json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

std::string inline_params(const ordered_json& params) {
  std::string s;
  for (const auto& [k, v] : params.items()) s += (s.empty() ? "" : " ") + k + "=" + scalar_text(v);
  return s;
}

void print_text(const RunReport& r, std::ostream& out) {
  std::vector<std::pair<std::string, std::string>> rows{
      {"command", r.command}, {"status", r.status}, {"parameters", inline_params(r.parameters)}};
  const ordered_json* checks = nullptr;
  for (const auto& [k, v] : r.payload.items()) {
    if (k == "checks") {
      checks = &v;
      continue;
    }
    rows.emplace_back(k, v.is_object() ? inline_params(v) : scalar_text(v));
  }
  rows.emplace_back("elapsed_ms", std::to_string(r.elapsed_ms));
  std::size_t width = 0;
  for (const auto& [k, v] : rows) width = std::max(width, k.size());
  for (const auto& [k, v] : rows) out << k << std::string(width - k.size() + 2, ' ') << v << "\n";
  if (checks)
    for (const auto& c : *checks) {
      out << (c["status"] == "pass" ? "  PASS " : "  FAIL ") << c["check"].get<std::string>() << " "
          << inline_params(c["parameters"]);
      if (c["status"] != "pass") out << "  [" << c["first_discrepancy"].get<std::string>() << "]";
      out << "\n";
    }
}

std::string read_matrix_arg(const std::string& arg) {
  auto first = arg.find_first_not_of(" \t\n");
  if (first != std::string::npos && arg[first] == '[') return arg;
  std::ifstream in(arg);
  if (!in) throw ParseError("cannot read matrix file '" + arg + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct Options {
  std::string format = "json";
  bool no_timing = false;
  // char
  std::string kind;
  int n = -1, m = -1;
  std::string matrix;
  // dim
  long dim = -1;
  bool oracle = false;
  // count
  std::string shape;
  int modulus = 1, residue = 0, neg = 0;
  bool gf = false;
  std::uint64_t budget = kDefaultEnumerationBudget;
  // verify
  std::string suite, profile = "full";
  int max_n = -1, max_total = -1, max_degree = -1, qcap = -1;
  unsigned threads = 0;
  // cache
  int cache_n = 8;
};

void run_char(const Options& o, RunReport& r) {
  r.parameters["kind"] = o.kind;
  if (o.kind == "higher") {
    if (o.matrix.empty()) throw ParseError("char higher needs --matrix");
    SupportMatrix a = SupportMatrix::parse_json(read_matrix_arg(o.matrix));
    r.parameters["matrix"] = a.to_json_string();
    BiSymFunc bi = super_lie_module_char(a);
    SymFunc diag = diagonal(bi);
    auto [bn, bm] = a.bidegree();
    r.payload = {{"bidegree", {bn, bm}}, {"p", to_p(diag).to_string()}, {"s", p_to_s(diag).to_string()},
                 {"bi_p", bi.to_string()}, {"bi_s", bi_schur_string(bi)}};
    return;
  }
  if (o.n < 0 || o.m < 0) throw ParseError("char " + o.kind + " needs n and m");
  r.parameters["n"] = o.n;
  r.parameters["m"] = o.m;
  if (o.kind == "lie") {
    SymFunc ch = super_brandt_char(o.n, o.m);
    r.payload = {{"p", to_p(ch).to_string()},
                 {"s", p_to_s(ch).to_string()},
                 {"schur_nonnegative_integral", schur_expand(ch).nonnegative_integral}};
  } else {
    BiSymFunc bi = super_bi_brandt_char(o.n, o.m);
    r.payload = {{"p", bi.to_string()}, {"s", bi_schur_string(bi)}, {"diagonal_s", p_to_s(diagonal(bi)).to_string()}};
  }
}

void run_dim(const Options& o, RunReport& r) {
  r.parameters = {{"n", o.n}, {"m", o.m}, {"N", o.dim}, {"oracle", o.oracle}};
  BigInt d = super_witt_dim(o.n, o.m, o.dim);
  r.payload["dim"] = d.get_str();
  if (!o.oracle) return;
  if (o.dim > kBruteForceMaxDim || o.n + o.m > kBruteForceMaxDegree)
    throw ResourceError("--oracle caps: n + m <= " + std::to_string(kBruteForceMaxDegree) +
                        ", N <= " + std::to_string(kBruteForceMaxDim));
  long brute = brute_force_lie_dim(o.n, o.m, static_cast<int>(o.dim), static_cast<int>(o.dim));
  r.payload["oracle"] = std::to_string(brute);
  r.payload["match"] = d == brute;
  if (d != brute) {
    r.status = "fail";
    r.payload["first_discrepancy"] = "formula " + d.get_str() + " vs bracket rank " + std::to_string(brute);
  }
}

void run_count(const Options& o, RunReport& r) {
  Partition lambda = Partition::parse(o.shape);
  r.parameters["lambda"] = lambda.to_string();
  if (o.gf) {
    r.parameters["gf"] = true;
    r.payload["generating_function"] = maj_neg_generating_poly(lambda, o.budget).to_string();
    return;
  }
  if (o.modulus < 1) throw DomainError("--mod must be positive");
  r.parameters["mod"] = o.modulus;
  r.parameters["res"] = o.residue;
  r.parameters["neg"] = o.neg;
  r.payload["count"] = count_super_tableaux(lambda, o.modulus, o.residue, o.neg, o.budget).get_str();
}

void run_verify(const Options& o, RunReport& r) {
  VerifyBounds b = profile_bounds(o.profile);
  if (o.max_n >= 0) b.max_n = o.max_n;
  if (o.max_total >= 0) b.max_total = o.max_total;
  if (o.max_degree >= 0) b.max_degree = o.max_degree;
  if (o.qcap >= 0) b.q_cap = o.qcap;
  r.parameters = {{"suite", o.suite},       {"profile", o.profile},      {"max_n", b.max_n},
                  {"max_total", b.max_total}, {"max_degree", b.max_degree}, {"qcap", b.q_cap}};
  auto reports = run_suite(o.suite, b, o.threads);
  ordered_json checks = ordered_json::array();
  std::size_t failed = 0;
  for (const auto& c : reports) {
    checks.push_back(c.to_json());
    if (!c.passed && failed++ == 0)
      r.payload["first_discrepancy"] = c.check + " " + inline_params(c.parameters) + ": " + c.first_discrepancy;
  }
  r.payload["total"] = reports.size();
  r.payload["failed"] = failed;
  r.payload["checks"] = std::move(checks);
  if (failed) r.status = "fail";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Characters of free Lie superalgebras and exact identity checks"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--no-timing", o.no_timing, "Report elapsed_ms as 0 so output is byte-stable");

  auto* ch = app.add_subcommand("char", "Character of L~_{n,m} (lie), its two-alphabet form (bilie), or L~_A (higher)");
  ch->add_option("kind", o.kind)->required()->check(CLI::IsMember({"lie", "bilie", "higher"}));
  ch->add_option("n", o.n);
  ch->add_option("m", o.m);
  ch->add_option("--matrix", o.matrix, "JSON triples [[i,j,a],...] or a file containing them");

  auto* dim = app.add_subcommand("dim", "Dimension of L~_{n,m} with dim V0 = dim V1 = N");
  dim->add_option("n", o.n)->required();
  dim->add_option("m", o.m)->required();
  dim->add_option("N", o.dim)->required();
  dim->add_flag("--oracle", o.oracle, "Also compute the rank of all bracketings");

  auto* count = app.add_subcommand("count", "Count standard super tableaux by maj residue and negatives");
  count->add_option("lambda", o.shape, "Shape such as \"(2,1)\"")->required();
  count->add_option("--mod", o.modulus);
  count->add_option("--res", o.residue);
  count->add_option("--neg", o.neg);
  count->add_flag("--gf", o.gf, "Print sum q^maj t^negg instead");
  count->add_option("--budget", o.budget, "Maximum number of (T, S) pairs to enumerate");

  auto* verify = app.add_subcommand("verify", "Run an identity sweep");
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  verify->add_option("suite", o.suite)->required()->check(CLI::IsMember(suites));
  verify->add_option("--profile", o.profile)->check(CLI::IsMember({"quick", "full"}));
  verify->add_option("--max-n", o.max_n);
  verify->add_option("--max-total", o.max_total);
  verify->add_option("--max-degree", o.max_degree);
  verify->add_option("--qcap", o.qcap);
  verify->add_option("--threads", o.threads, "Worker threads (0: hardware concurrency)");

  auto* cache = app.add_subcommand("cache", "Manage the character table cache");
  cache->require_subcommand(1);
  auto* warm = cache->add_subcommand("warm", "Precompute and store S_n character tables");
  warm->add_option("--n", o.cache_n);
  auto* clear = cache->add_subcommand("clear", "Delete the cache file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  RunReport r;
  int code = kPass;
  const auto start = std::chrono::steady_clock::now();
  try {
    if (!clear->parsed()) {
      std::string warning;
      load_cache(warning);
      if (!warning.empty()) std::cerr << "warning: " << warning << "\n";
    }
    if (ch->parsed()) {
      r.command = "char " + o.kind;
      run_char(o, r);
    } else if (dim->parsed()) {
      r.command = "dim";
      run_dim(o, r);
    } else if (count->parsed()) {
      r.command = "count";
      run_count(o, r);
    } else if (verify->parsed()) {
      r.command = "verify " + o.suite;
      run_verify(o, r);
    } else if (warm->parsed()) {
      r.command = "cache warm";
      r.parameters["n"] = o.cache_n;
      CacheInfo info = warm_cache(o.cache_n);
      r.payload = {{"path", info.path.string()}, {"max_n", info.max_n}, {"rows", info.rows}, {"digest", info.digest}};
    } else {
      r.command = "cache clear";
      r.payload = {{"path", cache_file().string()}, {"removed", clear_cache()}};
    }
    if (r.status == "fail") code = kFail;
  } catch (const ParseError& e) {
    r.status = "error";
    r.payload = {{"error", "usage"}, {"message", e.what()}};
    code = kUsage;
  } catch (const DomainError& e) {
    r.status = "error";
    r.payload = {{"error", "domain"}, {"message", e.what()}};
    code = kDomain;
  } catch (const ResourceError& e) {
    r.status = "error";
    r.payload = {{"error", "resource"}, {"message", e.what()}};
    code = kResource;
  } catch (const std::exception& e) {
    r.status = "error";
    r.payload = {{"error", "internal"}, {"message", e.what()}};
    code = kInternal;
  }
  if (!o.no_timing)
    r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  if (r.status == "error") std::cerr << "error: " << r.payload["message"].get<std::string>() << "\n";

  if (o.format == "json")
    std::cout << r.to_json().dump(2) << "\n";
  else
    print_text(r, std::cout);
  return code;
}
