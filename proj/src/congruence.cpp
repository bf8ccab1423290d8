#include "qcv/congruence.hpp"

#include <algorithm>
#include <map>

#include "qcv/check.hpp"
#include "qcv/dissect.hpp"

namespace qcv {

std::string theorem_family_name(TheoremFamily f) {
  switch (f) {
    case TheoremFamily::BMod2:
      return "b.mod2";
    case TheoremFamily::DMod2:
      return "d.mod2";
    case TheoremFamily::DMod3:
      return "d.mod3";
    case TheoremFamily::DMod9:
      return "d.mod9";
  }
  return "?";
}

std::string ProgressionCongruence::describe() const {
  std::string s = family.str() + "(" + std::to_string(step) + "n";
  if (offset > 0) s += "+" + std::to_string(offset);
  s += ") == 0 (mod " + std::to_string(modulus) + ")";
  if (raw_offset != offset)
    s += " [stated offset " + std::to_string(raw_offset) + ", same class mod " +
         std::to_string(step) + "]";
  return s;
}

std::string ProgressionCongruence::claim_id() const {
  return "cong." + family.str() + ".A" + std::to_string(step) + ".B" + std::to_string(offset) +
         ".m" + std::to_string(modulus);
}

namespace {

unsigned long long ipow(unsigned long long b, unsigned long e) {
  unsigned long long r = 1;
  for (unsigned long i = 0; i < e; ++i) {
    if (r > (1ull << 52) / b)
      throw std::invalid_argument("instance: p^{2 alpha} too large for a feasible scan");
    r *= b;
  }
  return r;
}

}  // namespace

ProgressionCongruence instance(TheoremFamily f, long p, long alpha, long j) {
  const bool needs5 = f != TheoremFamily::DMod2;
  if (p < (needs5 ? 5 : 3) || !is_prime(static_cast<unsigned long>(p)))
    throw std::invalid_argument("instance: p must be a prime >= " + std::string(needs5 ? "5" : "3"));
  if (f == TheoremFamily::DMod2 && p % 2 == 0)
    throw std::invalid_argument("instance: p must be odd");
  if (alpha < 1) throw std::invalid_argument("instance: need alpha >= 1");
  if (j < 1 || j >= p) throw std::invalid_argument("instance: need 1 <= j <= p-1");

  const auto pp = static_cast<unsigned long long>(p);
  const unsigned long long p_odd = ipow(pp, 2 * alpha - 1);  // p^{2a-1}
  const unsigned long long p_even = p_odd * pp;              // p^{2a}
  const auto jj = static_cast<unsigned long long>(j);

  unsigned long long A = 0, B = 0, num = 0, den = 1;
  std::uint64_t m = 2;
  GeneratingFunctionId fam = GeneratingFunctionId::b();
  switch (f) {
    case TheoremFamily::BMod2:
      fam = GeneratingFunctionId::b();
      A = p_even;
      num = (3 * jj + pp) * p_odd - 1;
      den = 3;
      m = 2;
      break;
    case TheoremFamily::DMod2:
      fam = GeneratingFunctionId::d();
      A = 2 * p_even;
      num = (8 * jj + pp) * p_odd - 1;
      den = 4;
      m = 2;
      break;
    case TheoremFamily::DMod3:
      fam = GeneratingFunctionId::d();
      A = 6 * p_even;
      num = (24 * jj + pp) * p_odd - 1;
      den = 4;
      m = 3;
      break;
    case TheoremFamily::DMod9:
      fam = GeneratingFunctionId::d();
      A = 6 * p_even;
      num = (24 * jj + 9 * pp) * p_odd - 1;
      den = 4;
      m = 9;
      break;
  }
  if (num % den != 0)
    throw std::invalid_argument("instance: offset formula is not integral for p=" +
                                std::to_string(p) + ", alpha=" + std::to_string(alpha) +
                                ", j=" + std::to_string(j));
  B = num / den;

  Provenance pv;
  pv.label = theorem_family_name(f) + " instance";
  pv.p = p;
  pv.alpha = alpha;
  pv.j = j;
  return {fam, A, B, m, std::move(pv)};
}

std::vector<ProgressionCongruence> fixed_claims() {
  const GeneratingFunctionId b = GeneratingFunctionId::b();
  const GeneratingFunctionId c = GeneratingFunctionId::c();
  const GeneratingFunctionId d = GeneratingFunctionId::d();
  auto proved = [](const char* label) { return Provenance{label, false, {}, {}, {}}; };
  auto conj = [](const char* label) { return Provenance{label, true, {}, {}, {}}; };

  std::vector<ProgressionCongruence> v;
  v.emplace_back(c, 27, 24, 9, proved("fixed congruence"));

  v.emplace_back(c, 45, 9, 5, proved("fixed congruence"));
  v.emplace_back(c, 45, 18, 5, proved("fixed congruence"));
  v.emplace_back(c, 45, 9, 15, proved("fixed congruence, mod 15 strengthening"));
  v.emplace_back(c, 45, 18, 15, proved("fixed congruence, mod 15 strengthening"));

  v.emplace_back(d, 45, 17, 5, proved("fixed congruence"));
  v.emplace_back(d, 45, 35, 5, proved("fixed congruence"));
  v.emplace_back(d, 45, 17, 15, proved("fixed congruence, mod 15 strengthening"));
  v.emplace_back(d, 45, 35, 15, proved("fixed congruence, mod 15 strengthening"));

  v.emplace_back(b, 8, 6, 4, proved("fixed congruence"));
  v.emplace_back(c, 3, 0, 3, proved("fixed congruence"));
  v.emplace_back(d, 3, 2, 3, proved("fixed congruence"));

  v.emplace_back(c, 45, 21, 5, conj("conjectured congruence"));
  v.emplace_back(c, 63, 30, 7, conj("conjectured congruence"));
  v.emplace_back(c, 63, 48, 7, conj("conjectured congruence"));
  v.emplace_back(c, 63, 57, 7, conj("conjectured congruence"));
  v.emplace_back(d, 45, 41, 5, conj("conjectured congruence"));
  v.emplace_back(d, 63, 32, 7, conj("conjectured congruence"));
  v.emplace_back(d, 63, 50, 7, conj("conjectured congruence"));
  v.emplace_back(d, 63, 59, 7, conj("conjectured congruence"));
  return v;
}

std::vector<ProgressionCongruence> theorem_matrix(const std::vector<long>& primes,
                                                  long alpha_max) {
  std::vector<ProgressionCongruence> v;
  for (TheoremFamily f : kAllTheoremFamilies) {
    const long p_min = f == TheoremFamily::DMod2 ? 3 : 5;
    for (long p : primes) {
      if (p < p_min || !is_prime(static_cast<unsigned long>(p))) continue;
      for (long a = 1; a <= alpha_max; ++a)
        for (long j = 1; j <= p - 1; ++j) v.push_back(instance(f, p, a, j));
    }
  }
  return v;
}

std::size_t default_scan_order(const ProgressionCongruence& c) {
  // aim for 64 progression instances, but keep routine scans below 500k
  // coefficients; always deep enough for at least 10 raw instances
  std::size_t n = std::max<std::size_t>(static_cast<std::size_t>(c.step) * 64, 50000);
  n = std::min<std::size_t>(n, 500000);
  return std::max(n, order_for_instances(c, 10));
}

std::size_t order_for_instances(const ProgressionCongruence& c, std::size_t instances) {
  return static_cast<std::size_t>(c.raw_offset + c.step * instances + 1);
}

CheckReport check(const ProgressionCongruence& c, std::size_t N) {
  Stopwatch sw;
  CheckReport rep;
  rep.id = c.claim_id();
  rep.statement = c.describe();
  rep.conjectural = c.prov.conjectural;
  rep.order = N;

  ModRing ring(c.modulus);
  SeriesPtr<ModRing> s = gf(ring, c.family, N);
  std::size_t count = 0;
  for (unsigned long long n = 0, idx = c.offset; idx < N; ++n, idx += c.step) {
    ++count;
    if (!ring.is_zero((*s)[static_cast<std::size_t>(idx)])) {
      rep.ok = false;
      rep.counterexample = {n, "coefficient at " + std::to_string(idx) + " is " +
                                   ring.str((*s)[static_cast<std::size_t>(idx)])};
      break;
    }
  }
  rep.instances = count;
  rep.millis = sw.millis();
  return rep;
}

void equalize_scan_orders(std::vector<ScanRequest>& reqs) {
  std::map<std::pair<std::string, std::uint64_t>, std::size_t> group_max;
  for (const auto& r : reqs) {
    auto key = std::make_pair(r.claim.family.str(), r.claim.modulus);
    group_max[key] = std::max(group_max[key], r.order);
  }
  for (auto& r : reqs)
    r.order = group_max[{r.claim.family.str(), r.claim.modulus}];
}

namespace {

Series<ModRing> eq_mod(const ModRing& ring, std::initializer_list<std::pair<long, long>> f,
                       long pre, std::size_t sh, std::size_t N) {
  Series<ModRing> s = EtaQuotient(f).expand(ring, N);
  if (sh > 0) s = shift(s, sh);
  if (pre != 1) s = scale(s, pre);
  return s;
}

}  // namespace

std::vector<CheckReport> intermediate_mod_facts(std::size_t N) {
  std::vector<CheckReport> out;
  const GeneratingFunctionId b = GeneratingFunctionId::b();
  const GeneratingFunctionId c = GeneratingFunctionId::c();
  const GeneratingFunctionId d = GeneratingFunctionId::d();

  {
    Stopwatch sw;
    ModRing r2(2);
    out.push_back(check_equal("fact.b-f8.mod2", "sum b(n) q^n == f8 (mod 2)",
                              *gf(r2, b, N), *eta(r2, 8, N), N, sw));
  }
  {
    Stopwatch sw;
    ModRing r2(2);
    out.push_back(check_equal("fact.d-even-psi.mod2", "sum d(2n) q^n == psi(q) (mod 2)",
                              extract_progression(*gf(r2, d, 2 * N), 2, 0), *psi(r2, N), N,
                              sw));
  }
  {
    Stopwatch sw;
    ModRing r3(3);
    out.push_back(check_equal("fact.d6n-f1.mod3", "sum d(6n) q^n == f1 (mod 3)",
                              extract_progression(*gf(r3, d, 6 * N), 6, 0), *eta(r3, 1, N), N,
                              sw));
  }
  {
    Stopwatch sw;
    ModRing r9(9);
    out.push_back(check_equal("fact.d6n2-3f9.mod9", "sum d(6n+2) q^n == 3 f9 (mod 9)",
                              extract_progression(*gf(r9, d, 6 * N + 2), 6, 2),
                              scale(*eta(r9, 9, N), 3), N, sw));
  }
  {
    Stopwatch sw;
    ModRing r5(5);
    Series<ModRing> lhs = mul(extract_progression(*gf(r5, c, 9 * N), 9, 0),
                              eq_mod(r5, {{5, 2}, {10, 1}}, 1, 0, N));
    Series<ModRing> rhs = eq_mod(r5, {{1, 1}, {30, 3}}, 3, 3, N);
    out.push_back(check_equal("fact.c9n.mod5",
                              "sum c(9n) q^n f5^2 f10 == 3 q^3 f1 f30^3 (mod 5)", lhs, rhs, N,
                              sw));
  }
  {
    Stopwatch sw;
    ModRing r9(9);
    Series<ModRing> lhs = mul(extract_progression(*gf(r9, c, 9 * N + 6), 9, 6),
                              eq_mod(r9, {{1, 1}, {3, 8}, {6, 6}}, 1, 0, N));
    Series<ModRing> rhs = add(eq_mod(r9, {{2, 2}, {3, 24}}, 3, 0, N),
                              eq_mod(r9, {{2, 2}, {6, 24}}, 3, 3, N));
    out.push_back(check_equal(
        "fact.c9n6.mod9",
        "sum c(9n+6) q^n f1 f3^8 f6^6 == 3 f2^2 f3^24 + 3 q^3 f2^2 f6^24 (mod 9)", lhs, rhs, N,
        sw));
  }
  {
    Stopwatch sw;
    ModRing r5(5);
    Series<ModRing> lhs = mul(extract_progression(*gf(r5, d, 9 * N + 8), 9, 8),
                              eq_mod(r5, {{5, 1}, {10, 2}}, 1, 0, N));
    Series<ModRing> rhs = eq_mod(r5, {{2, 1}, {15, 3}}, 3, 0, N);
    out.push_back(check_equal("fact.d9n8.mod5",
                              "sum d(9n+8) q^n f5 f10^2 == 3 f2 f15^3 (mod 5)", lhs, rhs, N,
                              sw));
  }
  return out;
}

CheckReport frobenius_check(std::uint64_t m, std::size_t N) {
  Stopwatch sw;
  if (!is_prime(m)) throw std::invalid_argument("frobenius_check: modulus must be prime");
  ModRing ring(m);
  return check_equal("frobenius.m" + std::to_string(m),
                     "f1^" + std::to_string(m) + " == f" + std::to_string(m) + " (mod " +
                         std::to_string(m) + ")",
                     EtaQuotient{{1, static_cast<long>(m)}}.expand(ring, N),
                     *eta(ring, static_cast<long>(m), N), N, sw);
}

}  // namespace qcv
