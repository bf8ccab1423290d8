#include <CLI11.hpp>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>
#include <vector>

#include "qcv/congruence.hpp"
#include "qcv/dissect.hpp"
#include "qcv/mock_theta.hpp"
#include "qcv/oracle.hpp"

namespace {

using qcv::CheckReport;
using qcv::DissectionLemmaId;
using qcv::ExactRing;
using qcv::GeneratingFunctionId;
using qcv::ProgressionCongruence;
using qcv::Series;

// QC_ORDER_CAP caps every requested order (identity checks, scans, expansions)
std::size_t order_cap() {
  static const std::size_t cap = [] {
    if (const char* s = std::getenv("QC_ORDER_CAP")) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(s, &end, 10);
      if (end != s && *end == '\0' && v >= 1) return static_cast<std::size_t>(v);
      std::cerr << "warning: ignoring QC_ORDER_CAP=\"" << s << "\" (want a positive integer)\n";
    }
    return std::numeric_limits<std::size_t>::max();
  }();
  return cap;
}

std::size_t capped(std::size_t n) { return std::min(n, order_cap()); }

void print_report_line(const CheckReport& r) {
  std::ostringstream os;
  os << (r.ok ? "[PASS] " : "[FAIL] ") << r.id;
  if (r.conjectural) os << " (conjectural)";
  os << "  order=" << r.order << " instances=" << r.instances << " (" << std::fixed
     << std::setprecision(1) << r.millis << " ms)  " << r.statement << "  [" << r.verdict()
     << "]";
  std::cout << os.str() << "\n";
}

struct VerifyConfig {
  std::optional<std::size_t> order;
  std::vector<long> primes{3, 5, 7, 11, 13};
  long alpha_max = 2;
  std::string json_path;
  unsigned jobs = 1;
  std::string only;
};

// A job produces one or more reports; jobs are independent and safe to run
// concurrently (series construction is memoized behind a single-flight cache).
struct Job {
  std::string name;
  std::function<std::vector<CheckReport>()> run;
};

std::size_t identity_order(const VerifyConfig& cfg) { return capped(cfg.order.value_or(2000)); }

void add_lemma_jobs(std::vector<Job>& jobs, const VerifyConfig& cfg) {
  const std::size_t N = identity_order(cfg);
  for (DissectionLemmaId id :
       {DissectionLemmaId::f1_pow_neg2(), DissectionLemmaId::f3_over_f1cubed(),
        DissectionLemmaId::f3cubed_over_f1(), DissectionLemmaId::inv_phi_neg_3dis(),
        DissectionLemmaId::inv_psi_3dis(), DissectionLemmaId::inv_f1cubed_3dis()}) {
    jobs.push_back({"lemma." + id.str(), [id, N] {
                      return std::vector<CheckReport>{verify_lemma(id, N)};
                    }});
  }
  for (long p : cfg.primes) {
    if (p < 3 || p % 2 == 0 || !qcv::is_prime(static_cast<unsigned long>(p))) continue;
    const DissectionLemmaId id = DissectionLemmaId::psi_p_dissection(p);
    jobs.push_back({"lemma." + id.str(), [id, N] {
                      return std::vector<CheckReport>{verify_lemma(id, N)};
                    }});
    jobs.push_back({"residue.psi.p" + std::to_string(p), [p] {
                      return std::vector<CheckReport>{
                          residue_claims(qcv::PDissectionFamily::Psi, p)};
                    }});
  }
  for (long p : cfg.primes) {
    if (p < 5 || !qcv::is_prime(static_cast<unsigned long>(p))) continue;
    const DissectionLemmaId id = DissectionLemmaId::f_p_dissection(p);
    jobs.push_back({"lemma." + id.str(), [id, N] {
                      return std::vector<CheckReport>{verify_lemma(id, N)};
                    }});
    jobs.push_back({"residue.f.p" + std::to_string(p), [p] {
                      return std::vector<CheckReport>{
                          residue_claims(qcv::PDissectionFamily::FNeg, p)};
                    }});
  }
}

void add_identity_jobs(std::vector<Job>& jobs, const VerifyConfig& cfg) {
  const std::size_t N = identity_order(cfg);
  for (auto which : {qcv::ChoiKimId::ThirdOrder, qcv::ChoiKimId::SixthPsi,
                     qcv::ChoiKimId::SixthRho}) {
    const char* name = which == qcv::ChoiKimId::ThirdOrder  ? "choikim.third"
                       : which == qcv::ChoiKimId::SixthPsi ? "choikim.sixth-psi"
                                                           : "choikim.sixth-rho";
    jobs.push_back({name, [which, N] {
                      return std::vector<CheckReport>{verify_choi_kim(which, N)};
                    }});
  }
  for (qcv::IntermediateId id : qcv::kAllIntermediates) {
    jobs.push_back({"inter." + qcv::intermediate_name(id), [id, N] {
                      return std::vector<CheckReport>{verify_intermediate(id, N)};
                    }});
  }
  jobs.push_back({"H.mod5", [N] {
                    return std::vector<CheckReport>{qcv::verify_H_mod5(N)};
                  }});
  jobs.push_back({"fact.intermediate-mod", [N] { return qcv::intermediate_mod_facts(N); }});
  for (std::uint64_t m : {2ull, 3ull, 5ull}) {
    jobs.push_back({"frobenius.m" + std::to_string(m), [m, N] {
                      return std::vector<CheckReport>{qcv::frobenius_check(m, N)};
                    }});
  }
  // combinatorial counting oracles vs the series engine
  const std::size_t small = std::min<std::size_t>(40, N - 1);
  for (long t : {2L, 3L, 5L, 7L}) {
    jobs.push_back({"oracle.cross.tcore(" + std::to_string(t) + ")", [t, small] {
                      return std::vector<CheckReport>{
                          cross_validate(GeneratingFunctionId::tcore(t), small)};
                    }});
  }
  jobs.push_back({"oracle.cross.cubic", [n = std::min<std::size_t>(200, N - 1)] {
                    return std::vector<CheckReport>{
                        cross_validate(GeneratingFunctionId::cubic(), n)};
                  }});
  jobs.push_back({"oracle.cross.d", [n = std::min<std::size_t>(50, N - 1)] {
                    return std::vector<CheckReport>{
                        cross_validate(GeneratingFunctionId::d(), n)};
                  }});
}

void add_scan_jobs(std::vector<Job>& jobs, const VerifyConfig& cfg, bool conjectural) {
  std::vector<ProgressionCongruence> claims;
  for (const auto& c : qcv::fixed_claims())
    if (c.prov.conjectural == conjectural) claims.push_back(c);
  if (!conjectural)
    for (auto& c : qcv::theorem_matrix(cfg.primes, cfg.alpha_max)) claims.push_back(c);

  std::vector<qcv::ScanRequest> reqs;
  reqs.reserve(claims.size());
  for (const auto& c : claims) {
    const std::size_t n = cfg.order ? capped(*cfg.order) : capped(default_scan_order(c));
    reqs.push_back({c, n});
  }
  // one series build per (family, modulus) group
  qcv::equalize_scan_orders(reqs);
  for (const auto& r : reqs) {
    jobs.push_back({r.claim.claim_id(), [r] {
                      return std::vector<CheckReport>{qcv::check(r.claim, r.order)};
                    }});
  }
}

int run_verify(const std::string& suite, const VerifyConfig& cfg) {
  std::vector<Job> jobs;
  if (suite == "lemmas" || suite == "all") add_lemma_jobs(jobs, cfg);
  if (suite == "identities" || suite == "all") add_identity_jobs(jobs, cfg);
  if (suite == "theorems" || suite == "all") add_scan_jobs(jobs, cfg, false);
  if (suite == "conjectures" || suite == "all") add_scan_jobs(jobs, cfg, true);

  if (!cfg.only.empty()) {
    std::erase_if(jobs, [&](const Job& j) { return j.name.find(cfg.only) == std::string::npos; });
    if (jobs.empty()) {
      std::cerr << "error: no check matches --only \"" << cfg.only << "\"\n";
      return 1;
    }
  }

  std::vector<std::vector<CheckReport>> results(jobs.size());
  std::vector<std::string> errors(jobs.size());
  std::atomic<std::size_t> next{0};
  std::mutex out_mu;
  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= jobs.size()) break;
      try {
        results[i] = jobs[i].run();
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
      std::lock_guard<std::mutex> lk(out_mu);
      if (!errors[i].empty())
        std::cout << "[ERROR] " << jobs[i].name << ": " << errors[i] << "\n";
      else
        for (const auto& r : results[i]) print_report_line(r);
    }
  };
  const unsigned k = std::max(1u, cfg.jobs);
  if (k == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < k; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  std::vector<CheckReport> all;
  std::size_t n_errors = 0;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    if (!errors[i].empty()) ++n_errors;
    for (auto& r : results[i]) all.push_back(std::move(r));
  }
  std::size_t hard_failures = 0, soft_failures = 0;
  for (const auto& r : all) {
    if (r.ok) continue;
    if (r.conjectural)
      ++soft_failures;
    else
      ++hard_failures;
  }

  if (!cfg.json_path.empty()) {
    std::ofstream out(cfg.json_path);
    if (!out) {
      std::cerr << "error: cannot write " << cfg.json_path << "\n";
      return 1;
    }
    out << qcv::reports_to_json(all) << "\n";
  }

  std::cout << all.size() << " checks: " << (all.size() - hard_failures - soft_failures)
            << " passed, " << hard_failures << " failed, " << soft_failures
            << " conjectural failures, " << n_errors << " errors\n";
  if (n_errors > 0 || hard_failures > 0) return 1;
  if (soft_failures > 0) return 2;
  return 0;
}

int run_expand(const std::string& spec, std::size_t order, std::optional<std::uint64_t> mod) {
  const std::size_t N = capped(order);
  ExactRing R;
  Series<ExactRing> s = qcv::zero_series(R, N);
  if (auto id = GeneratingFunctionId::parse(spec)) {
    s = *gf(R, *id, N);
  } else if (spec == "phi") {
    s = *qcv::phi(R, N);
  } else if (spec == "psi") {
    s = *qcv::psi(R, N);
  } else if (spec == "phi_neg") {
    s = *qcv::phi_neg(R, N);
  } else if (spec == "f_neg") {
    s = *qcv::f_neg(R, N);
  } else if (spec == "w") {
    s = *qcv::w_series(R, N);
  } else if (spec == "P") {
    s = *qcv::p_series(R, N);
  } else if (auto m = qcv::parse_mock_theta(spec)) {
    s = *qcv::mock(*m, N);
  } else {
    s = qcv::parse_eta_expr(spec).expand(R, N);
  }

  if (mod) {
    qcv::Series<qcv::ModRing> sm = qcv::reduce_mod(s, *mod);
    for (std::size_t n = 0; n < N; ++n) std::cout << n << "\t" << sm[n] << "\n";
  } else {
    for (std::size_t n = 0; n < N; ++n) std::cout << n << "\t" << s[n].get_str() << "\n";
  }
  return 0;
}

int run_scan(const std::string& family, unsigned long long A, unsigned long long B,
             std::uint64_t m, std::optional<std::size_t> order) {
  auto id = GeneratingFunctionId::parse(family);
  if (!id)
    throw std::invalid_argument(
        "unknown family \"" + family +
        "\" (expected b, c, d, cubic, h_odd, or tcore(t))");
  ProgressionCongruence c(*id, A, B, m, qcv::Provenance{"ad-hoc scan", false, {}, {}, {}});
  const std::size_t N = capped(order.value_or(qcv::default_scan_order(c)));
  CheckReport rep = qcv::check(c, N);
  print_report_line(rep);
  return rep.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qcv: mechanical verification of q-series identities and partition congruences"};
  app.require_subcommand(1);

  // verify
  auto* verify = app.add_subcommand("verify", "run a suite of checks");
  std::string suite;
  VerifyConfig cfg;
  unsigned long long order_in = 0;
  verify->add_option("suite", suite, "which checks to run")
      ->required()
      ->check(CLI::IsMember({"lemmas", "identities", "theorems", "conjectures", "all"}));
  auto* order_opt =
      verify->add_option("--order", order_in, "truncation order / scan depth override")
          ->check(CLI::Range(16ull, 1ull << 40));
  verify->add_option("--primes", cfg.primes, "primes for dissections and theorem instances")
      ->delimiter(',');
  verify->add_option("--alpha-max", cfg.alpha_max, "largest prime-power exponent alpha")
      ->check(CLI::Range(1l, 8l));
  verify->add_option("--json", cfg.json_path, "write a JSON report array to this path");
  verify->add_option("--jobs", cfg.jobs, "number of worker threads")
      ->check(CLI::Range(1u, 256u));
  verify->add_option("--only", cfg.only, "run only checks whose id contains this substring");

  // expand
  auto* expand = app.add_subcommand("expand", "print series coefficients");
  std::string spec;
  unsigned long long expand_order = 32;
  std::uint64_t expand_mod = 0;
  expand->add_option("spec", spec,
                     "series name (b, c, d, cubic, h_odd, tcore(t), phi, psi, phi_neg, f_neg, "
                     "w, P, mock theta names) or an eta-quotient expression like "
                     "\"3*q^2*f3^3/(f1*f2^4)\"")
      ->required();
  expand->add_option("--order", expand_order, "number of coefficients")
      ->check(CLI::Range(1ull, 1ull << 40));
  auto* mod_opt = expand->add_option("--mod", expand_mod, "reduce coefficients modulo m")
                      ->check(CLI::Range(2ull, 1ull << 32));

  // scan
  auto* scan = app.add_subcommand("scan", "scan coeff(A n + B) == 0 (mod m) for a family");
  std::string scan_family;
  unsigned long long scan_a = 0, scan_b = 0;
  std::uint64_t scan_m = 0;
  unsigned long long scan_order = 0;
  scan->add_option("family", scan_family, "series family (b, c, d, cubic, h_odd, tcore(t))")
      ->required();
  scan->add_option("A", scan_a, "progression step")->required();
  scan->add_option("B", scan_b, "progression offset")->required();
  scan->add_option("m", scan_m, "modulus")->required()->check(CLI::Range(2ull, 1ull << 32));
  auto* scan_order_opt =
      scan->add_option("--order", scan_order, "scan depth")->check(CLI::Range(16ull, 1ull << 40));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) {
      if (order_opt->count() > 0) cfg.order = static_cast<std::size_t>(order_in);
      return run_verify(suite, cfg);
    }
    if (*expand) {
      std::optional<std::uint64_t> mod;
      if (mod_opt->count() > 0) mod = expand_mod;
      return run_expand(spec, static_cast<std::size_t>(expand_order), mod);
    }
    if (*scan) {
      std::optional<std::size_t> order;
      if (scan_order_opt->count() > 0) order = static_cast<std::size_t>(scan_order);
      return run_scan(scan_family, scan_a, scan_b, scan_m, order);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
