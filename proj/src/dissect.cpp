#include "qcv/dissect.hpp"

#include <set>

#include "qcv/check.hpp"

namespace qcv {

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

DissectionLemmaId DissectionLemmaId::psi_p_dissection(long p) {
  if (p < 3 || p % 2 == 0 || !is_prime(static_cast<unsigned long>(p)))
    throw std::invalid_argument("psi_p_dissection: need an odd prime");
  return {Kind::PsiP, p};
}

DissectionLemmaId DissectionLemmaId::f_p_dissection(long p) {
  if (p < 5 || !is_prime(static_cast<unsigned long>(p)))
    throw std::invalid_argument("f_p_dissection: need a prime >= 5");
  return {Kind::FP, p};
}

std::string DissectionLemmaId::str() const {
  switch (kind) {
    case Kind::F1PowNeg2:
      return "2dis.inv-f1sq";
    case Kind::F3OverF1Cubed:
      return "2dis.f3-over-f1cubed";
    case Kind::F3CubedOverF1:
      return "2dis.f3cubed-over-f1";
    case Kind::InvPhiNeg3:
      return "3dis.inv-phi-neg";
    case Kind::InvPsi3:
      return "3dis.inv-psi";
    case Kind::InvF1Cubed3:
      return "3dis.inv-f1cubed";
    case Kind::PsiP:
      return "pdis.psi.p" + std::to_string(p);
    case Kind::FP:
      return "pdis.f.p" + std::to_string(p);
  }
  return "?";
}

namespace {

using E = ExactRing;

Series<E> eq_term(const E& ring, std::initializer_list<std::pair<long, long>> f, long pre,
                  std::size_t sh, std::size_t N) {
  Series<E> s = EtaQuotient(f).expand(ring, N);
  if (sh > 0) s = shift(s, sh);
  if (pre != 1) s = scale(s, pre);
  return s;
}

Series<E> psi_p_rhs(const E& ring, long p, std::size_t N) {
  // psi(q) = q^{(p^2-1)/8} psi(q^{p^2})
  //        + sum_{k=0}^{(p-3)/2} q^{(k^2+k)/2} f(q^{(p^2+(2k+1)p)/2}, q^{(p^2-(2k+1)p)/2})
  const long long pp = static_cast<long long>(p) * p;
  Series<E> rhs = shift(
      at_power([](const E& rr, std::size_t nn) { return psi(rr, nn); }, ring,
               static_cast<std::size_t>(pp), N),
      static_cast<std::size_t>((pp - 1) / 8));
  for (long long k = 0; k <= (p - 3) / 2; ++k) {
    const long long a = (pp + (2 * k + 1) * p) / 2;
    const long long b = (pp - (2 * k + 1) * p) / 2;
    const long long sh = (k * k + k) / 2;
    if (sh >= static_cast<long long>(N)) continue;
    rhs = add(rhs, shift(theta_f(ring, ThetaSpec(1, a, 1, b), N),
                         static_cast<std::size_t>(sh)));
  }
  return rhs;
}

// the distinguished index (+-p - 1)/6: (p-1)/6 when p = 1 mod 6, else (-p-1)/6
long long f_p_distinguished(long p) { return p % 6 == 1 ? (p - 1) / 6 : -(p + 1) / 6; }

Series<E> f_p_rhs(const E& ring, long p, std::size_t N) {
  // f(-q) = (-1)^{kd} q^{(p^2-1)/24} f(-q^{p^2})
  //       + sum_{k=-(p-1)/2, k != kd}^{(p-1)/2}
  //           (-1)^k q^{(3k^2+k)/2} f(-q^{(3p^2+(6k+1)p)/2}, -q^{(3p^2-(6k+1)p)/2})
  const long long pp = static_cast<long long>(p) * p;
  const long long kd = f_p_distinguished(p);
  Series<E> lead = shift(
      at_power([](const E& rr, std::size_t nn) { return f_neg(rr, nn); }, ring,
               static_cast<std::size_t>(pp), N),
      static_cast<std::size_t>((pp - 1) / 24));
  Series<E> rhs = (kd % 2 != 0) ? negate(lead) : lead;
  for (long long k = -(p - 1) / 2; k <= (p - 1) / 2; ++k) {
    if (k == kd) continue;
    const long long a = (3 * pp + (6 * k + 1) * p) / 2;
    const long long b = (3 * pp - (6 * k + 1) * p) / 2;
    const long long sh = (3 * k * k + k) / 2;
    if (sh >= static_cast<long long>(N)) continue;
    Series<E> term =
        shift(theta_f(ring, ThetaSpec(-1, a, -1, b), N), static_cast<std::size_t>(sh));
    rhs = (k % 2 != 0) ? sub(rhs, term) : add(rhs, term);
  }
  return rhs;
}

}  // namespace

CheckReport verify_lemma(const DissectionLemmaId& id, std::size_t N) {
  Stopwatch sw;
  E ring;
  using Kind = DissectionLemmaId::Kind;
  Series<E> lhs = zero_series(ring, N), rhs = zero_series(ring, N);
  std::string stmt;

  auto wq3 = [&] {
    return at_power([](const E& rr, std::size_t nn) { return w_series(rr, nn); }, ring, 3, N);
  };

  switch (id.kind) {
    case Kind::F1PowNeg2:
      stmt = "1/f1^2 == f8^5/(f2^5 f16^2) + 2q f4^2 f16^2/(f2^5 f8)";
      lhs = EtaQuotient{{1, -2}}.expand(ring, N);
      rhs = add(eq_term(ring, {{8, 5}, {2, -5}, {16, -2}}, 1, 0, N),
                eq_term(ring, {{4, 2}, {16, 2}, {2, -5}, {8, -1}}, 2, 1, N));
      break;
    case Kind::F3OverF1Cubed:
      stmt = "f3/f1^3 == f4^6 f6^3/(f2^9 f12^2) + 3q f4^2 f6 f12^2/f2^7";
      lhs = EtaQuotient{{3, 1}, {1, -3}}.expand(ring, N);
      rhs = add(eq_term(ring, {{4, 6}, {6, 3}, {2, -9}, {12, -2}}, 1, 0, N),
                eq_term(ring, {{4, 2}, {6, 1}, {12, 2}, {2, -7}}, 3, 1, N));
      break;
    case Kind::F3CubedOverF1:
      stmt = "f3^3/f1 == f4^3 f6^2/(f2^2 f12) + q f12^3/f4";
      lhs = EtaQuotient{{3, 3}, {1, -1}}.expand(ring, N);
      rhs = add(eq_term(ring, {{4, 3}, {6, 2}, {2, -2}, {12, -1}}, 1, 0, N),
                eq_term(ring, {{12, 3}, {4, -1}}, 1, 1, N));
      break;
    case Kind::InvPhiNeg3: {
      stmt = "1/phi(-q) == phi^3(-q^9)/phi^4(-q^3) (1 + 2q w(q^3) + 4q^2 w^2(q^3))";
      lhs = invert(*phi_neg(ring, N));
      auto pn = [](const E& rr, std::size_t nn) { return phi_neg(rr, nn); };
      Series<E> p9 = at_power(pn, ring, 9, N);
      Series<E> p3 = at_power(pn, ring, 3, N);
      Series<E> w3 = wq3();
      Series<E> bracket = add(one_series(ring, N), scale(shift(w3, 1), 2));
      bracket = add(bracket, scale(shift(mul(w3, w3), 2), 4));
      rhs = mul(div(pow(p9, 3), pow(p3, 4)), bracket);
      break;
    }
    case Kind::InvPsi3: {
      stmt = "1/psi(q) == psi^3(q^9)/psi^4(q^3) (1/w^2(q^3) - q/w(q^3) + q^2)";
      lhs = invert(*psi(ring, N));
      auto ps = [](const E& rr, std::size_t nn) { return psi(rr, nn); };
      Series<E> p9 = at_power(ps, ring, 9, N);
      Series<E> p3 = at_power(ps, ring, 3, N);
      Series<E> iw = invert(wq3());
      Series<E> bracket = sub(mul(iw, iw), shift(iw, 1));
      bracket = add(bracket, shift(one_series(ring, N), 2));
      rhs = mul(div(pow(p9, 3), pow(p3, 4)), bracket);
      break;
    }
    case Kind::InvF1Cubed3: {
      stmt = "1/f1^3 == f9^3/f3^12 (P^2(q^3) + 3q P(q^3) f9^3 + 9q^2 f9^6)";
      lhs = EtaQuotient{{1, -3}}.expand(ring, N);
      Series<E> p3 = at_power([](const E& rr, std::size_t nn) { return p_series(rr, nn); },
                              ring, 3, N);
      SeriesPtr<E> f9 = eta(ring, 9, N);
      Series<E> f9c = pow(*f9, 3);
      Series<E> bracket = mul(p3, p3);
      bracket = add(bracket, scale(shift(mul(p3, f9c), 1), 3));
      bracket = add(bracket, scale(shift(mul(f9c, f9c), 2), 9));
      rhs = mul(EtaQuotient{{9, 3}, {3, -12}}.expand(ring, N), bracket);
      break;
    }
    case Kind::PsiP:
      stmt = "p-dissection of psi(q), p = " + std::to_string(id.p);
      lhs = *psi(ring, N);
      rhs = psi_p_rhs(ring, id.p, N);
      break;
    case Kind::FP:
      stmt = "p-dissection of f(-q), p = " + std::to_string(id.p);
      lhs = *f_neg(ring, N);
      rhs = f_p_rhs(ring, id.p, N);
      break;
  }
  return check_equal("lemma." + id.str(), std::move(stmt), lhs, rhs, N, sw);
}

CheckReport residue_claims(PDissectionFamily family, long p) {
  Stopwatch sw;
  CheckReport rep;
  std::set<long long> produced;
  long long distinguished = 0;
  std::size_t instances = 0;
  if (family == PDissectionFamily::Psi) {
    DissectionLemmaId::psi_p_dissection(p);  // validates p
    rep.id = "residue.psi.p" + std::to_string(p);
    rep.statement = "(k^2+k)/2 mod p avoids (p^2-1)/8 mod p for 0 <= k <= (p-3)/2";
    distinguished = ((static_cast<long long>(p) * p - 1) / 8) % p;
    for (long long k = 0; k <= (p - 3) / 2; ++k, ++instances)
      produced.insert(((k * k + k) / 2) % p);
  } else {
    DissectionLemmaId::f_p_dissection(p);
    rep.id = "residue.f.p" + std::to_string(p);
    rep.statement = "(3k^2+k)/2 mod p avoids (p^2-1)/24 mod p for |k| <= (p-1)/2, k != kd";
    distinguished = ((static_cast<long long>(p) * p - 1) / 24) % p;
    const long long kd = f_p_distinguished(p);
    for (long long k = -(p - 1) / 2; k <= (p - 1) / 2; ++k) {
      if (k == kd) continue;
      long long r = ((3 * k * k + k) / 2) % p;
      produced.insert(r);
      ++instances;
    }
  }
  rep.order = static_cast<std::size_t>(p);
  rep.instances = instances;
  if (produced.count(distinguished)) {
    rep.ok = false;
    rep.counterexample = {static_cast<unsigned long long>(distinguished),
                          "residue class collides"};
  }
  rep.millis = sw.millis();
  return rep;
}

std::string intermediate_name(IntermediateId id) {
  switch (id) {
    case IntermediateId::C3n:
      return "c3n";
    case IntermediateId::C9n6:
      return "c9n6";
    case IntermediateId::C9n:
      return "c9n";
    case IntermediateId::D3n2:
      return "d3n2";
    case IntermediateId::D6n:
      return "d6n";
    case IntermediateId::D6n2:
      return "d6n2";
    case IntermediateId::D9n8H:
      return "d9n8";
  }
  return "?";
}

CheckReport verify_intermediate(IntermediateId id, std::size_t N) {
  Stopwatch sw;
  E ring;
  const GeneratingFunctionId c = GeneratingFunctionId::c();
  const GeneratingFunctionId d = GeneratingFunctionId::d();
  Series<E> lhs = zero_series(ring, N), rhs = zero_series(ring, N);
  std::string stmt;

  switch (id) {
    case IntermediateId::C3n: {
      stmt = "sum c(3n) q^n == 3q phi^3(-q^3) psi^3(q^3) / (f1^3 phi(-q) psi(q))";
      lhs = extract_progression(*gf(ring, c, 3 * N), 3, 0);
      Series<E> phi3 = at_power([](const E& rr, std::size_t nn) { return phi_neg(rr, nn); },
                                ring, 3, N);
      Series<E> psi3 = at_power([](const E& rr, std::size_t nn) { return psi(rr, nn); },
                                ring, 3, N);
      Series<E> num = mul(pow(phi3, 3), pow(psi3, 3));
      Series<E> den = mul(mul(EtaQuotient{{1, 3}}.expand(ring, N), *phi_neg(ring, N)),
                          *psi(ring, N));
      rhs = scale(shift(div(num, den), 1), 3);
      break;
    }
    case IntermediateId::C9n6:
      stmt = "sum c(9n+6) q^n == 12 f2^2 f3^21/(f1^16 f6^6) + 135q f3^12 f6^3/(f1^13 f2) "
             "+ 72q^2 f3^3 f6^12/(f1^10 f2^4) + 192q^3 f6^21/(f1^7 f2^7 f3^6)";
      lhs = extract_progression(*gf(ring, c, 9 * N + 6), 9, 6);
      rhs = eq_term(ring, {{2, 2}, {3, 21}, {1, -16}, {6, -6}}, 12, 0, N);
      rhs = add(rhs, eq_term(ring, {{3, 12}, {6, 3}, {1, -13}, {2, -1}}, 135, 1, N));
      rhs = add(rhs, eq_term(ring, {{3, 3}, {6, 12}, {1, -10}, {2, -4}}, 72, 2, N));
      rhs = add(rhs, eq_term(ring, {{6, 21}, {1, -7}, {2, -7}, {3, -6}}, 192, 3, N));
      break;
    case IntermediateId::C9n:
      stmt = "sum c(9n) q^n == 45q f2 f3^18/(f1^15 f6^3) + 90q^2 f3^9 f6^6/(f1^12 f2^2) "
             "+ 288q^3 f6^15/(f1^9 f2^5)";
      lhs = extract_progression(*gf(ring, c, 9 * N), 9, 0);
      rhs = eq_term(ring, {{2, 1}, {3, 18}, {1, -15}, {6, -3}}, 45, 1, N);
      rhs = add(rhs, eq_term(ring, {{3, 9}, {6, 6}, {1, -12}, {2, -2}}, 90, 2, N));
      rhs = add(rhs, eq_term(ring, {{6, 15}, {1, -9}, {2, -5}}, 288, 3, N));
      break;
    case IntermediateId::D3n2:
      stmt = "sum d(3n+2) q^n == 3 f3^3 f6^3/(f1 f2^4)";
      lhs = extract_progression(*gf(ring, d, 3 * N + 2), 3, 2);
      rhs = eq_term(ring, {{3, 3}, {6, 3}, {1, -1}, {2, -4}}, 3, 0, N);
      break;
    case IntermediateId::D6n:
      stmt = "sum d(6n) q^n == f2^9 f3^3/(f1^8 f6^3) + 3q f2 f6^5/(f1^4 f3)";
      lhs = extract_progression(*gf(ring, d, 6 * N), 6, 0);
      rhs = add(eq_term(ring, {{2, 9}, {3, 3}, {1, -8}, {6, -3}}, 1, 0, N),
                eq_term(ring, {{2, 1}, {6, 5}, {1, -4}, {3, -1}}, 3, 1, N));
      break;
    case IntermediateId::D6n2:
      stmt = "sum d(6n+2) q^n == 3 f2^3 f3^5/(f1^6 f6)";
      lhs = extract_progression(*gf(ring, d, 6 * N + 2), 6, 2);
      rhs = eq_term(ring, {{2, 3}, {3, 5}, {1, -6}, {6, -1}}, 3, 0, N);
      break;
    case IntermediateId::D9n8H:
      stmt = "sum d(9n+8) q^n == f2 * H";
      lhs = extract_progression(*gf(ring, d, 9 * N + 8), 9, 8);
      rhs = mul(*eta(ring, 2, N), h_bracket(ring, N));
      break;
  }
  return check_equal("inter." + intermediate_name(id), std::move(stmt), lhs, rhs, N, sw);
}

CheckReport verify_H_mod5(std::size_t N) {
  Stopwatch sw;
  ModRing ring(5);
  Series<ModRing> h = h_bracket(ring, N);

  // cleared form of H == 3 f3^15/(f1^5 f2^10) (mod 5)
  Series<ModRing> diff =
      sub(h, scale(EtaQuotient{{3, 15}, {1, -5}, {2, -10}}.expand(ring, N), 3));
  Series<ModRing> cleared =
      mul(diff, EtaQuotient{{1, 5}, {3, 1}, {4, 10}, {6, 10}, {2, -4}, {12, -6}}.expand(ring, N));

  CheckReport rep;
  rep.id = "H.mod5";
  rep.statement = "(H - 3 f3^15/(f1^5 f2^10)) f1^5 f3 f4^10 f6^10/(f2^4 f12^6) == 0 "
                  "and H == 3 f15^3/(f5 f10^2) (mod 5)";
  rep.order = N;
  rep.instances = 2 * N;
  for (std::size_t n = 0; n < N; ++n) {
    if (!ring.is_zero(cleared[n])) {
      rep.ok = false;
      rep.counterexample = {n, "cleared form residue " + ring.str(cleared[n])};
      break;
    }
  }
  if (rep.ok) {
    Series<ModRing> compact =
        scale(EtaQuotient{{15, 3}, {5, -1}, {10, -2}}.expand(ring, N), 3);
    if (auto n = first_mismatch(h, compact, N)) {
      rep.ok = false;
      rep.counterexample = {static_cast<unsigned long long>(*n),
                            ring.str(h[*n]) + " != " + ring.str(compact[*n])};
    }
  }
  rep.millis = sw.millis();
  return rep;
}

}  // namespace qcv
