#include "qcv/mock_theta.hpp"

#include "qcv/check.hpp"

namespace qcv {

std::string mock_theta_name(MockThetaId id) {
  switch (id) {
    case MockThetaId::Upsilon:
      return "upsilon";
    case MockThetaId::Upsilon3:
      return "upsilon3";
    case MockThetaId::Psi6:
      return "Psi6";
    case MockThetaId::PsiMinus6:
      return "PsiMinus6";
    case MockThetaId::Rho6:
      return "rho6";
    case MockThetaId::Lambda6:
      return "lambda6";
  }
  return "?";
}

std::optional<MockThetaId> parse_mock_theta(const std::string& name) {
  for (MockThetaId id : kAllMockThetas)
    if (mock_theta_name(id) == name) return id;
  return std::nullopt;
}

unsigned long long mock_first_term(MockThetaId id) {
  return id == MockThetaId::PsiMinus6 ? 1 : 0;
}

unsigned long long mock_term_valuation(MockThetaId id, unsigned long long n) {
  switch (id) {
    case MockThetaId::Upsilon:
      return n * (n + 1);
    case MockThetaId::Upsilon3:
      return n;
    case MockThetaId::Psi6:
      return (n + 1) * (n + 1);
    case MockThetaId::PsiMinus6:
      return n;  // defined for n >= 1
    case MockThetaId::Rho6:
      return n * (n + 1) / 2;
    case MockThetaId::Lambda6:
      return n;
  }
  return 0;
}

namespace {

using V = mpz_class;

int term_sign(MockThetaId id, unsigned long long n) {
  switch (id) {
    case MockThetaId::Psi6:
    case MockThetaId::Lambda6:
      return n % 2 == 0 ? 1 : -1;
    default:
      return 1;
  }
}

// Summand definitions (q-Pochhammer symbols):
//   upsilon:   q^{n(n+1)}            / (-q; q^2)_{n+1}
//   upsilon3:  q^n (-q; q^2)_n
//   Psi6:      (-1)^n q^{(n+1)^2} (q; q^2)_n / (-q; q)_{2n+1}
//   PsiMinus6: q^n (-q; q)_{2n-2} / (q; q^2)_n            (n >= 1)
//   rho6:      q^{n(n+1)/2} (-q; q)_n / (q; q^2)_{n+1}
//   lambda6:   (-1)^n q^n (q; q^2)_n / (-q; q)_n
Series<ExactRing> build_mock(MockThetaId id, std::size_t N) {
  ExactRing ring;
  std::vector<V> acc(N);
  std::vector<V> r(N);  // Pochhammer ratio of the current term, valuation 0
  if (N == 0) return Series<ExactRing>::from_coeffs(ring, std::move(acc));
  r[0] = 1;

  auto mulb = [&](int s, unsigned long long e) {
    if (e < N) detail::mul_binomial_inplace(ring, r, s, static_cast<std::size_t>(e));
  };
  auto divb = [&](int s, unsigned long long e) {
    if (e < N) detail::div_binomial_inplace(ring, r, s, static_cast<std::size_t>(e));
  };
  // acc += sign * q^v * r; false once v leaves the window
  auto add_term = [&](unsigned long long n) {
    const unsigned long long v = mock_term_valuation(id, n);
    if (v >= N) return false;
    const int sign = term_sign(id, n);
    const std::size_t off = static_cast<std::size_t>(v);
    if (sign > 0)
      for (std::size_t i = 0; i + off < N; ++i) acc[i + off] += r[i];
    else
      for (std::size_t i = 0; i + off < N; ++i) acc[i + off] -= r[i];
    return true;
  };

  switch (id) {
    case MockThetaId::Upsilon:
      divb(1, 1);  // r_0 = 1/(1+q)
      for (unsigned long long n = 0;; ++n) {
        if (n > 0) divb(1, 2 * n + 1);
        if (!add_term(n)) break;
      }
      break;
    case MockThetaId::Upsilon3:
      for (unsigned long long n = 0;; ++n) {
        if (n > 0) mulb(1, 2 * n - 1);
        if (!add_term(n)) break;
      }
      break;
    case MockThetaId::Psi6:
      divb(1, 1);  // r_0 = 1/(1+q)
      for (unsigned long long n = 0;; ++n) {
        if (n > 0) {
          mulb(-1, 2 * n - 1);
          divb(1, 2 * n);
          divb(1, 2 * n + 1);
        }
        if (!add_term(n)) break;
      }
      break;
    case MockThetaId::PsiMinus6:
      divb(-1, 1);  // r_1 = 1/(1-q)
      for (unsigned long long n = 1;; ++n) {
        if (n > 1) {
          mulb(1, 2 * n - 3);
          mulb(1, 2 * n - 2);
          divb(-1, 2 * n - 1);
        }
        if (!add_term(n)) break;
      }
      break;
    case MockThetaId::Rho6:
      divb(-1, 1);  // r_0 = 1/(1-q)
      for (unsigned long long n = 0;; ++n) {
        if (n > 0) {
          mulb(1, n);
          divb(-1, 2 * n + 1);
        }
        if (!add_term(n)) break;
      }
      break;
    case MockThetaId::Lambda6:
      for (unsigned long long n = 0;; ++n) {
        if (n > 0) {
          mulb(-1, 2 * n - 1);
          divb(1, n);
        }
        if (!add_term(n)) break;
      }
      break;
  }
  return Series<ExactRing>::from_coeffs(ring, std::move(acc));
}

}  // namespace

Series<ExactRing> mock_term(MockThetaId id, unsigned long long n, std::size_t N) {
  ExactRing ring;
  if (n < mock_first_term(id)) throw std::invalid_argument("mock_term: index below first term");
  const unsigned long long v = mock_term_valuation(id, n);
  const std::size_t nn = static_cast<std::size_t>(n);
  Series<ExactRing> t = one_series(ring, N);
  switch (id) {
    case MockThetaId::Upsilon:
      t = invert(pochhammer_n(ring, -1, 1, 2, nn + 1, N));
      break;
    case MockThetaId::Upsilon3:
      t = pochhammer_n(ring, -1, 1, 2, nn, N);
      break;
    case MockThetaId::Psi6:
      t = div(pochhammer_n(ring, 1, 1, 2, nn, N), pochhammer_n(ring, -1, 1, 1, 2 * nn + 1, N));
      break;
    case MockThetaId::PsiMinus6:
      t = div(pochhammer_n(ring, -1, 1, 1, 2 * nn - 2, N), pochhammer_n(ring, 1, 1, 2, nn, N));
      break;
    case MockThetaId::Rho6:
      t = div(pochhammer_n(ring, -1, 1, 1, nn, N), pochhammer_n(ring, 1, 1, 2, nn + 1, N));
      break;
    case MockThetaId::Lambda6:
      t = div(pochhammer_n(ring, 1, 1, 2, nn, N), pochhammer_n(ring, -1, 1, 1, nn, N));
      break;
  }
  if (v >= N) return zero_series(ring, N);
  t = shift(t, static_cast<std::size_t>(v));
  if (term_sign(id, n) < 0) t = negate(t);
  return t;
}

SeriesPtr<ExactRing> mock(MockThetaId id, std::size_t N) {
  ExactRing ring;
  return series_cache<ExactRing>().get_or_build("mock:" + mock_theta_name(id), ring, N,
                                                [&] { return build_mock(id, N); });
}

CheckReport verify_choi_kim(ChoiKimId which, std::size_t N) {
  Stopwatch sw;
  ExactRing ring;
  std::string id, stmt;
  Series<ExactRing> lhs = zero_series(ring, N), rhs = zero_series(ring, N);
  switch (which) {
    case ChoiKimId::ThirdOrder:
      id = "choikim.third";
      stmt = "upsilon(q) + upsilon3(q) == 2 sum b(n) q^n";
      lhs = add(*mock(MockThetaId::Upsilon, N), *mock(MockThetaId::Upsilon3, N));
      rhs = scale(*gf(ring, GeneratingFunctionId::b(), N), 2);
      break;
    case ChoiKimId::SixthPsi:
      id = "choikim.sixth-psi";
      stmt = "Psi6(q) + 2 PsiMinus6(q) == 3 sum c(n) q^n";
      lhs = add(*mock(MockThetaId::Psi6, N), scale(*mock(MockThetaId::PsiMinus6, N), 2));
      rhs = scale(*gf(ring, GeneratingFunctionId::c(), N), 3);
      break;
    case ChoiKimId::SixthRho:
      id = "choikim.sixth-rho";
      stmt = "2 rho6(q) + lambda6(q) == 3 sum d(n) q^n";
      lhs = add(scale(*mock(MockThetaId::Rho6, N), 2), *mock(MockThetaId::Lambda6, N));
      rhs = scale(*gf(ring, GeneratingFunctionId::d(), N), 3);
      break;
  }
  return check_equal(std::move(id), std::move(stmt), lhs, rhs, N, sw);
}

std::vector<CheckReport> verify_choi_kim_all(std::size_t N) {
  return {verify_choi_kim(ChoiKimId::ThirdOrder, N), verify_choi_kim(ChoiKimId::SixthPsi, N),
          verify_choi_kim(ChoiKimId::SixthRho, N)};
}

}  // namespace qcv
