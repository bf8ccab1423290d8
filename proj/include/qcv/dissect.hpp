#pragma once

#include <string>
#include <vector>

#include "qcv/qfactory.hpp"
#include "qcv/report.hpp"

namespace qcv {

bool is_prime(unsigned long n);

// Dissection lemmas, verified as exact series identities to a chosen order.
struct DissectionLemmaId {
  enum class Kind {
    F1PowNeg2,      // 2-dissection of 1/f1^2
    F3OverF1Cubed,  // 2-dissection of f3/f1^3
    F3CubedOverF1,  // 2-dissection of f3^3/f1
    InvPhiNeg3,     // 3-dissection of 1/phi(-q)
    InvPsi3,        // 3-dissection of 1/psi(q)
    InvF1Cubed3,    // 3-dissection of 1/f1^3
    PsiP,           // p-dissection of psi(q), odd prime p
    FP,             // p-dissection of f(-q), prime p >= 5
  };

  Kind kind;
  long p = 0;  // only for PsiP / FP

  static DissectionLemmaId f1_pow_neg2() { return {Kind::F1PowNeg2, 0}; }
  static DissectionLemmaId f3_over_f1cubed() { return {Kind::F3OverF1Cubed, 0}; }
  static DissectionLemmaId f3cubed_over_f1() { return {Kind::F3CubedOverF1, 0}; }
  static DissectionLemmaId inv_phi_neg_3dis() { return {Kind::InvPhiNeg3, 0}; }
  static DissectionLemmaId inv_psi_3dis() { return {Kind::InvPsi3, 0}; }
  static DissectionLemmaId inv_f1cubed_3dis() { return {Kind::InvF1Cubed3, 0}; }
  static DissectionLemmaId psi_p_dissection(long p);
  static DissectionLemmaId f_p_dissection(long p);

  std::string str() const;
};

CheckReport verify_lemma(const DissectionLemmaId& id, std::size_t N);

// Arithmetic side conditions of the p-dissections: the q-powers produced by
// the theta terms avoid, mod p, the residue of the distinguished term.
enum class PDissectionFamily { Psi, FNeg };
CheckReport residue_claims(PDissectionFamily family, long p);

// Intermediate single-variable expansions used on the way to the congruence
// theorems, each verified exactly: the extracted progression of a generating
// function equals a printed eta-quotient combination.
enum class IntermediateId { C3n, C9n6, C9n, D3n2, D6n, D6n2, D9n8H };

inline constexpr IntermediateId kAllIntermediates[] = {
    IntermediateId::C3n, IntermediateId::C9n6, IntermediateId::C9n,  IntermediateId::D3n2,
    IntermediateId::D6n, IntermediateId::D6n2, IntermediateId::D9n8H,
};

std::string intermediate_name(IntermediateId id);

// Both sides are compared to order N; the generating function side is built
// to order A*N + B first.
CheckReport verify_intermediate(IntermediateId id, std::size_t N);

// H is the bracket with sum d(9n+8) q^n = f2 * H.  Checks, mod 5:
//   (H - 3 f3^15/(f1^5 f2^10)) * f1^5 f3 f4^10 f6^10 / (f2^4 f12^6) == 0
//   H == 3 f15^3 / (f5 f10^2)
CheckReport verify_H_mod5(std::size_t N);

// the H bracket itself (q^0..q^4 groups of eta quotients)
template <class R>
Series<R> h_bracket(const R& ring, std::size_t N) {
  auto eq = [&](std::initializer_list<std::pair<long, long>> f, long pre, std::size_t sh) {
    Series<R> s = EtaQuotient(f).expand(ring, N);
    if (sh > 0) s = shift(s, sh);
    return scale(s, pre);
  };
  Series<R> h = eq({{3, 9}, {4, 1}, {6, 9}, {1, -3}, {2, -13}, {12, -3}}, 9, 0);
  h = add(h, eq({{3, 3}, {4, 2}, {6, 18}, {1, -1}, {2, -16}, {12, -6}}, 9, 0));
  h = add(h, eq({{3, 6}, {6, 9}, {1, -2}, {2, -13}}, 27, 1));
  h = add(h, eq({{4, 1}, {6, 18}, {2, -16}, {12, -3}}, -18, 1));
  h = add(h, eq({{3, 9}, {12, 6}, {1, -3}, {2, -10}, {4, -2}}, 36, 2));
  h = add(h, eq({{3, 3}, {6, 9}, {12, 3}, {1, -1}, {2, -13}, {4, -1}}, 72, 2));
  h = add(h, eq({{1, 1}, {6, 18}, {2, -16}, {3, -3}}, 108, 2));
  h = add(h, eq({{6, 9}, {12, 6}, {2, -13}, {4, -2}}, -72, 3));
  h = add(h, eq({{3, 3}, {12, 12}, {1, -1}, {2, -10}, {4, -4}}, 144, 4));
  return h;
}

}  // namespace qcv
