#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qcv/qfactory.hpp"
#include "qcv/report.hpp"

namespace qcv {

// The four infinite congruence families, named by what they assert:
//   BMod2: b(p^{2a} n + ((3j+p) p^{2a-1} - 1)/3)        == 0 (mod 2), p >= 5
//   DMod2: d(2 p^{2a} n + ((8j+p) p^{2a-1} - 1)/4)      == 0 (mod 2), odd p >= 3
//   DMod3: d(6 p^{2a} n + ((24j+p) p^{2a-1} - 1)/4)     == 0 (mod 3), p >= 5
//   DMod9: d(6 p^{2a} n + ((24j+9p) p^{2a-1} - 1)/4)    == 0 (mod 9), p >= 5
// with a >= 1 and 1 <= j <= p-1 throughout.
enum class TheoremFamily { BMod2, DMod2, DMod3, DMod9 };

inline constexpr TheoremFamily kAllTheoremFamilies[] = {
    TheoremFamily::BMod2, TheoremFamily::DMod2, TheoremFamily::DMod3, TheoremFamily::DMod9};

std::string theorem_family_name(TheoremFamily f);

struct Provenance {
  std::string label;
  bool conjectural = false;
  std::optional<long> p, alpha, j;
};

// Claim: coeff(A n + B) == 0 (mod m) for all n >= 0.  Offsets are normalized
// to B < A; since the congruences hold for entire residue classes mod A, the
// normalized claim subsumes the raw one (raw_offset keeps the stated value).
struct ProgressionCongruence {
  GeneratingFunctionId family;
  unsigned long long step;        // A
  unsigned long long offset;      // B, normalized: offset < step
  unsigned long long raw_offset;  // B as derived from the theorem
  std::uint64_t modulus;
  Provenance prov;

  ProgressionCongruence(GeneratingFunctionId fam, unsigned long long A, unsigned long long B,
                        std::uint64_t m, Provenance pv = {})
      : family(fam), step(A), offset(B % (A ? A : 1)), raw_offset(B), modulus(m),
        prov(std::move(pv)) {
    if (A == 0) throw std::invalid_argument("ProgressionCongruence: step must be positive");
    if (m < 2) throw std::invalid_argument("ProgressionCongruence: modulus must be >= 2");
  }

  std::string describe() const;  // "c(27n+24) == 0 (mod 9)"
  std::string claim_id() const;  // "cong.c.A27.B24.m9"
};

// One theorem instance; validates the prime, range of j, and that the offset
// formula lands on an integer.
ProgressionCongruence instance(TheoremFamily f, long p, long alpha, long j);

// Every concrete progression congruence asserted with a fixed (A, B, m),
// including the eight conjectural ones (flagged in provenance).
std::vector<ProgressionCongruence> fixed_claims();

std::vector<ProgressionCongruence> theorem_matrix(const std::vector<long>& primes,
                                                  long alpha_max);

std::size_t default_scan_order(const ProgressionCongruence& c);

// smallest order that yields at least `instances` scanned terms of the RAW
// progression (the normalized scan then covers at least as many)
std::size_t order_for_instances(const ProgressionCongruence& c, std::size_t instances);

// Scan the progression in Z/m to order N.
CheckReport check(const ProgressionCongruence& c, std::size_t N);

// Lift each (family, modulus) group's order to the group maximum so the
// memoized generating function is built once per group.
struct ScanRequest {
  ProgressionCongruence claim;
  std::size_t order;
};
void equalize_scan_orders(std::vector<ScanRequest>& reqs);

// Single-variable congruence facts feeding the theorems:
//   sum b(n) q^n        == f8              (mod 2)
//   sum d(2n) q^n       == psi(q)          (mod 2)
//   sum d(6n) q^n       == f1              (mod 3)
//   sum d(6n+2) q^n     == 3 f9            (mod 9)
//   sum c(9n) q^n  f5^2 f10 == 3 q^3 f1 f30^3   (mod 5)
//   sum c(9n+6) q^n f1 f3^8 f6^6 == 3 f2^2 f3^24 + 3 q^3 f2^2 f6^24 (mod 9)
//   sum d(9n+8) q^n f5 f10^2 == 3 f2 f15^3  (mod 5)
std::vector<CheckReport> intermediate_mod_facts(std::size_t N);

// Frobenius-type reduction f1^m == f_m (mod m) for prime m
CheckReport frobenius_check(std::uint64_t m, std::size_t N);

}  // namespace qcv
