// meanomega: sieve d(n)/omega(n) checkpoints, exact S_k sums, Euler-product
// constants, lemma verification reports, and main-term comparisons.
//
// Exit codes: 0 ok, 1 usage, 2 verification failure, 3 I/O.

#include <cmath>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "meanomega/bucket_cache.hpp"
#include "meanomega/factor.hpp"
#include "meanomega/format.hpp"
#include "meanomega/local_series.hpp"
#include "meanomega/verify.hpp"

using json = nlohmann::json;
using namespace meanomega;

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kVerifyFail = 2, kIo = 3 };

struct GlobalOpts {
  std::string format = "csv";
  unsigned threads = 0;  // 0 = machine parallelism
  bool quiet = false;
};

void info(const GlobalOpts& g, const std::string& msg) {
  if (!g.quiet) std::cerr << msg << '\n';
}

// accepts plain integers and scientific shorthand like 1e6
std::uint64_t parse_scaled(const std::string& s) {
  try {
    if (s.find_first_of("eE.") == std::string::npos) {
      std::size_t pos = 0;
      auto v = std::stoull(s, &pos);
      if (pos != s.size()) throw std::invalid_argument(s);
      return v;
    }
    double d = std::stod(s);
    if (!(d >= 1) || d > 1e19 || d != std::floor(d))
      throw std::invalid_argument(s);
    return std::uint64_t(d);
  } catch (const std::exception&) {
    throw CLI::ValidationError("not a nonnegative integer: " + s);
  }
}

std::vector<std::uint64_t> parse_checkpoints(const std::string& csv) {
  std::vector<std::uint64_t> out;
  std::size_t start = 0;
  while (start <= csv.size()) {
    std::size_t comma = csv.find(',', start);
    std::string tok = csv.substr(start, comma == std::string::npos
                                            ? std::string::npos
                                            : comma - start);
    if (!tok.empty()) out.push_back(parse_scaled(tok));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (out.empty()) throw CLI::ValidationError("empty checkpoint list");
  return out;
}

/* --- emitters: one canonical value path for both formats --- */

void emit_table(const GlobalOpts& g, const std::vector<std::string>& columns,
                const std::vector<json>& rows) {
  if (g.format == "json") {
    json doc = json::array();
    for (const auto& r : rows) doc.push_back(r);
    std::cout << doc.dump(2) << '\n';
    return;
  }
  for (std::size_t i = 0; i < columns.size(); ++i)
    std::cout << (i ? "," : "") << columns[i];
  std::cout << '\n';
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      const auto& v = r.at(columns[i]);
      std::cout << (i ? "," : "");
      if (v.is_string())
        std::cout << v.get<std::string>();
      else if (v.is_number_float())
        std::cout << format_double(v.get<double>());
      else
        std::cout << v.dump();
    }
    std::cout << '\n';
  }
}

json lemma_report_json(const LemmaReport& r) {
  json j;
  j["lemma"] = r.lemma_id;
  json m = json::array(), b = json::array();
  for (double v : r.measured) m.push_back(canon(v));
  for (double v : r.bound) b.push_back(canon(v));
  j["measured"] = m;
  j["bound"] = b;
  j["pass"] = r.pass;
  j["detail"] = r.detail;
  return j;
}

void emit_lemma_report(const GlobalOpts& g, const LemmaReport& r) {
  if (g.format == "json") {
    std::cout << lemma_report_json(r).dump(2) << '\n';
    return;
  }
  std::cout << "lemma,pass,measured,bound,detail\n";
  std::cout << r.lemma_id << ',' << (r.pass ? "PASS" : "FAIL") << ",\"";
  for (std::size_t i = 0; i < r.measured.size(); ++i)
    std::cout << (i ? ";" : "") << format_double(canon(r.measured[i]));
  std::cout << "\",\"";
  for (std::size_t i = 0; i < r.bound.size(); ++i)
    std::cout << (i ? ";" : "") << format_double(canon(r.bound[i]));
  std::cout << "\",\"" << r.detail << "\"\n";
}

/* --- subcommands --- */

int cmd_sieve(const GlobalOpts& g, const std::string& checkpoints_csv,
              std::uint64_t x_max, std::uint64_t segment_size,
              const std::string& out_path) {
  auto checkpoints = parse_checkpoints(checkpoints_csv);
  if (x_max == 0) x_max = checkpoints.back();
  auto buckets = accumulate_buckets(x_max, checkpoints, segment_size, g.threads);
  write_bucket_cache(out_path, buckets);
  info(g, "wrote " + std::to_string(buckets.size()) + " checkpoints to " + out_path);
  return kOk;
}

int cmd_sum(const GlobalOpts& g, const std::string& cache_path, unsigned k) {
  auto buckets = read_bucket_cache(cache_path);
  std::vector<json> rows;
  for (const auto& b : buckets) {
    auto [exact, flt] = exact_mean_sum(b, k);
    json r;
    r["x"] = b.x;
    r["S_num"] = num_string(exact);
    r["S_den"] = den_string(exact);
    r["S"] = canon(flt);
    rows.push_back(std::move(r));
  }
  emit_table(g, {"x", "S_num", "S_den", "S"}, rows);
  return kOk;
}

int cmd_constant(const GlobalOpts& g, unsigned k, const std::string& variant_s,
                 const std::string& method, std::uint64_t prime_limit,
                 std::uint64_t p0, unsigned order) {
  Variant variant = parse_variant(variant_s);
  EulerConstantResult res;
  if (method == "direct")
    res = euler_constant_direct(k, variant, prime_limit);
  else if (method == "series")
    res = euler_constant_series(k, variant, p0, order);
  else
    throw CLI::ValidationError("unknown method: " + method);
  json r;
  r["k"] = res.k;
  r["variant"] = variant_name(res.variant);
  r["method"] = method;
  r["prime_limit"] = res.prime_limit;
  r["series_order"] = res.series_order;
  r["value"] = canon(res.value);
  r["tail_estimate"] = canon(res.tail_estimate);
  emit_table(g, {"k", "variant", "method", "prime_limit", "series_order",
                 "value", "tail_estimate"},
             {r});
  return kOk;
}

int cmd_verify(const GlobalOpts& g, unsigned lemma, unsigned k, std::uint64_t x,
               double z, const std::string& checkpoints_csv,
               std::uint64_t segment_size) {
  std::vector<std::uint64_t> checkpoints;
  if (!checkpoints_csv.empty()) {
    checkpoints = parse_checkpoints(checkpoints_csv);
  } else {
    // default ladder: powers of ten from 1e4 to x
    for (std::uint64_t c = 10'000; c <= x; c *= 10) checkpoints.push_back(c);
    if (checkpoints.empty() || checkpoints.back() != x) checkpoints.push_back(x);
  }
  LemmaReport report;
  switch (lemma) {
    case 1: report = lemma1_check(k, x); break;
    case 2: report = lemma2_check(k, checkpoints); break;
    case 3: report = lemma3_check(k, x); break;
    case 4: report = lemma4_check(k, x); break;
    case 6: report = tauz_mean_check(z, checkpoints, segment_size, g.threads); break;
    default:
      throw CLI::ValidationError("lemma must be one of 1,2,3,4,6");
  }
  emit_lemma_report(g, report);
  return report.pass ? kOk : kVerifyFail;
}

int cmd_compare(const GlobalOpts& g, const std::string& cache_path, unsigned k,
                const std::string& variant_s, const std::string& method,
                std::uint64_t prime_limit, std::uint64_t p0, unsigned order,
                bool discrepancy, bool strict) {
  auto buckets = read_bucket_cache(cache_path);
  Variant variant = parse_variant(variant_s);
  EulerConstantResult constant =
      method == "direct" ? euler_constant_direct(k, variant, prime_limit)
                         : euler_constant_series(k, variant, p0, order);
  auto rows = compare_series(k, buckets, constant);
  std::vector<json> out;
  for (const auto& r : rows) {
    json j;
    j["x"] = r.x;
    j["S"] = canon(r.S);
    j["M"] = canon(r.M);
    j["ratio"] = canon(r.ratio);
    j["e_norm"] = canon(r.e_norm);
    out.push_back(std::move(j));
  }
  emit_table(g, {"x", "S", "M", "ratio", "e_norm"}, out);
  if (discrepancy) {
    auto verdict = discrepancy_check(k, buckets);
    if (g.format == "json")
      std::cout << lemma_report_json(verdict).dump(2) << '\n';
    else
      std::cout << verdict.detail.substr(0, verdict.detail.find(" (")) << '\n';
  }
  if (strict) {
    bool ok = std::abs(rows.back().ratio - 1) < std::abs(rows.front().ratio - 1);
    for (const auto& r : rows)
      if (!std::isfinite(r.e_norm)) ok = false;
    if (!ok) {
      info(g, "strict trend assertion failed");
      return kVerifyFail;
    }
  }
  return kOk;
}

int cmd_tauz(const GlobalOpts& g, double z, const std::string& checkpoints_csv,
             std::uint64_t segment_size) {
  auto checkpoints = parse_checkpoints(checkpoints_csv);
  auto sums = tauz_prefix_sums(z, checkpoints, segment_size, g.threads);
  double gam = gamma_real(z);
  std::vector<json> rows;
  for (std::size_t i = 0; i < checkpoints.size(); ++i) {
    double x = double(checkpoints[i]), lx = std::log(x);
    double main = x * std::pow(lx, z - 1) / gam;
    json r;
    r["x"] = checkpoints[i];
    r["sum"] = canon(sums[i]);
    r["main"] = canon(main);
    r["e_norm"] = canon((sums[i] - main) / (x * std::pow(lx, z - 2)));
    rows.push_back(std::move(r));
  }
  emit_table(g, {"x", "sum", "main", "e_norm"}, rows);
  return kOk;
}

int cmd_gk(const GlobalOpts& g, unsigned k, unsigned alpha_max) {
  // g_k(p^a) does not depend on p; one row per exponent
  std::vector<json> rows;
  for (unsigned a = 0; a <= alpha_max; ++a) {
    Rational v = gk_pp_exact(k, a);
    json r;
    r["alpha"] = a;
    r["g_num"] = num_string(v);
    r["g_den"] = den_string(v);
    r["g"] = canon(v.get_d());
    rows.push_back(std::move(r));
  }
  emit_table(g, {"alpha", "g_num", "g_den", "g"}, rows);
  return kOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"divisor-ratio mean value toolkit"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--threads", g.threads, "worker threads (0 = auto)");
  app.add_flag("--quiet", g.quiet, "suppress informational messages");

  // sieve
  auto* sieve = app.add_subcommand("sieve", "sieve checkpoints into a bucket cache");
  std::string sieve_checkpoints, sieve_out;
  std::uint64_t sieve_xmax = 0, sieve_segment = kDefaultSegmentSize;
  sieve->add_option("--checkpoints", sieve_checkpoints, "comma list, e.g. 1e4,1e5,1e6")
      ->required();
  sieve->add_option("--x-max", sieve_xmax, "sieve ceiling (default: last checkpoint)");
  sieve->add_option("--segment-size", sieve_segment, "slots per segment");
  sieve->add_option("--out", sieve_out, "cache file path")->required();

  // sum
  auto* sum = app.add_subcommand("sum", "exact S_k at cached checkpoints");
  std::string sum_cache;
  unsigned sum_k = 2;
  sum->add_option("--cache", sum_cache, "bucket cache path")->required();
  sum->add_option("--k", sum_k, "denominator base k >= 2");

  // constant
  auto* constant = app.add_subcommand("constant", "Euler-product constant C_k");
  unsigned const_k = 2, const_order = 60;
  std::string const_variant = "thm3", const_method = "series";
  constant->add_option("--k", const_k, "k >= 2");
  constant->add_option("--variant", const_variant, "thm3|thm1");
  constant->add_option("--method", const_method, "direct|series");
  std::string const_plimit_s = "1e7", const_p0_s = "100";
  constant->add_option("--prime-limit", const_plimit_s, "direct-product prime bound");
  constant->add_option("--p0", const_p0_s, "series small-prime bound");
  constant->add_option("--order", const_order, "series truncation order M");

  // verify
  auto* verify = app.add_subcommand("verify", "lemma verification report");
  unsigned verify_lemma = 0, verify_k = 2;
  std::string verify_x_s = "1e6", verify_checkpoints;
  double verify_z = 1.0;
  std::uint64_t verify_segment = kDefaultSegmentSize;
  verify->add_option("--lemma", verify_lemma, "1|2|3|4|6")->required();
  verify->add_option("--k", verify_k, "k >= 2");
  verify->add_option("--x", verify_x_s, "prime sum bound / ladder top");
  verify->add_option("--z", verify_z, "tau_z parameter (lemma 6)");
  verify->add_option("--checkpoints", verify_checkpoints, "explicit ladder");
  verify->add_option("--segment-size", verify_segment, "sieve segment size");

  // compare
  auto* compare = app.add_subcommand("compare", "S_k vs main term at checkpoints");
  std::string cmp_cache, cmp_variant = "thm3", cmp_method = "series";
  unsigned cmp_k = 2, cmp_order = 60;
  std::string cmp_plimit_s = "1e7", cmp_p0_s = "100";
  bool cmp_discrepancy = false, cmp_strict = false;
  compare->add_option("--cache", cmp_cache, "bucket cache path")->required();
  compare->add_option("--k", cmp_k, "k >= 2");
  compare->add_option("--variant", cmp_variant, "thm3|thm1");
  compare->add_option("--method", cmp_method, "constant method direct|series");
  compare->add_option("--prime-limit", cmp_plimit_s, "direct-product prime bound");
  compare->add_option("--p0", cmp_p0_s, "series small-prime bound");
  compare->add_option("--order", cmp_order, "series truncation order M");
  compare->add_flag("--discrepancy", cmp_discrepancy, "append variant verdict");
  compare->add_flag("--strict", cmp_strict, "exit 2 when the ratio trend fails");

  // tauz
  auto* tauz = app.add_subcommand("tauz", "generalized divisor mean values");
  double tauz_z = 1.0;
  std::string tauz_checkpoints = "1e4,1e5,1e6";
  std::uint64_t tauz_segment = kDefaultSegmentSize;
  tauz->add_option("--z", tauz_z, "tau_z parameter in (0,2]");
  tauz->add_option("--checkpoints", tauz_checkpoints, "comma list");
  tauz->add_option("--segment-size", tauz_segment, "sieve segment size");

  // gk
  auto* gk = app.add_subcommand("gk", "convolution cofactor values g_k(p^alpha)");
  unsigned gk_k = 2, gk_alpha = 8;
  gk->add_option("--k", gk_k, "k >= 2");
  gk->add_option("--alpha-max", gk_alpha, "largest exponent");

  // --format/--threads/--quiet may trail the subcommand
  for (CLI::App* sc : {sieve, sum, constant, verify, compare, tauz, gk})
    sc->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  if (const char* env = std::getenv("MEANOMEGA_THREADS")) {
    try {
      g.threads = unsigned(std::stoul(env));
    } catch (const std::exception&) {
      std::cerr << "bad MEANOMEGA_THREADS value: " << env << '\n';
      return kUsage;
    }
  }

  try {
    if (sieve->parsed())
      return cmd_sieve(g, sieve_checkpoints, sieve_xmax, sieve_segment, sieve_out);
    if (sum->parsed()) return cmd_sum(g, sum_cache, sum_k);
    if (constant->parsed())
      return cmd_constant(g, const_k, const_variant, const_method,
                          parse_scaled(const_plimit_s), parse_scaled(const_p0_s),
                          const_order);
    if (verify->parsed())
      return cmd_verify(g, verify_lemma, verify_k, parse_scaled(verify_x_s),
                        verify_z, verify_checkpoints, verify_segment);
    if (compare->parsed())
      return cmd_compare(g, cmp_cache, cmp_k, cmp_variant, cmp_method,
                         parse_scaled(cmp_plimit_s), parse_scaled(cmp_p0_s),
                         cmp_order, cmp_discrepancy, cmp_strict);
    if (tauz->parsed()) return cmd_tauz(g, tauz_z, tauz_checkpoints, tauz_segment);
    if (gk->parsed()) return cmd_gk(g, gk_k, gk_alpha);
  } catch (const CacheError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  }
  return kUsage;
}
