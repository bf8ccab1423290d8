#include <doctest.h>

#include <stdexcept>
#include <thread>
#include <vector>

#include "qcv/qfactory.hpp"

namespace {

using qcv::ExactRing;
using qcv::ModRing;
using qcv::Series;
using ES = Series<ExactRing>;

ES make_series(const std::vector<long>& v) {
  std::vector<mpz_class> c;
  c.reserve(v.size());
  for (long x : v) c.emplace_back(x);
  return ES::from_coeffs(ExactRing{}, std::move(c));
}

void check_prefix(const ES& got, const std::vector<long>& want) {
  REQUIRE(got.order() >= want.size());
  for (std::size_t n = 0; n < want.size(); ++n) {
    CAPTURE(n);
    CHECK(got[n] == mpz_class(want[n]));
  }
}

// brute force: prod_{k=1}^{N-1} (1 - q^{m k}) by naive convolution in int64
std::vector<long long> brute_eta(long m, std::size_t N) {
  std::vector<long long> c(N, 0);
  c[0] = 1;
  for (std::size_t k = 1; k < N; ++k) {
    const std::size_t e = m * k;
    if (e >= N) break;
    std::vector<long long> next(c);
    for (std::size_t n = e; n < N; ++n) next[n] -= c[n - e];
    c = std::move(next);
  }
  return c;
}

}  // namespace

TEST_SUITE("qfactory") {

TEST_CASE("eta series matches the brute-force product and the pentagonal pattern") {
  ExactRing R;
  ES f1 = qcv::eta_series(R, 1, 13);
  check_prefix(f1, {1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1});
  ES f2 = qcv::eta_series(R, 2, 15);
  check_prefix(f2, {1, 0, -1, 0, -1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1});

  for (long m : {1L, 2L, 3L}) {
    CAPTURE(m);
    auto brute = brute_eta(m, 120);
    ES got = qcv::eta_series(R, m, 120);
    for (std::size_t n = 0; n < 120; ++n) {
      CAPTURE(n);
      CHECK(got[n] == mpz_class(static_cast<long>(brute[n])));
    }
  }
  CHECK(qcv::eta_series(R, 1, 400).support() != nullptr);  // pentagonal support is sparse
  CHECK_THROWS_AS(qcv::eta_series(R, 0, 10), std::invalid_argument);
}

TEST_CASE("f1 * f2 expansion") {
  ExactRing R;
  ES prod = qcv::mul(qcv::eta_series(R, 1, 7), qcv::eta_series(R, 2, 7));
  CHECK(prod == make_series({1, -1, -2, 1, 0, 2, 1}));
}

TEST_CASE("pochhammer products")  {
  ExactRing R;
  CHECK(qcv::pochhammer_inf(R, 1, 1, 1, 200) == qcv::eta_series(R, 1, 200));

  // Euler: (-q; q)_inf == f2 / f1
  ES lhs = qcv::pochhammer_inf(R, -1, 1, 1, 300);
  ES rhs = qcv::div(qcv::eta_series(R, 2, 300), qcv::eta_series(R, 1, 300));
  CHECK(lhs == rhs);

  // (-1; q)_inf has the extra constant factor 2
  CHECK(qcv::pochhammer_inf(R, -1, 0, 1, 50) ==
        qcv::scale(qcv::pochhammer_inf(R, -1, 1, 1, 50), 2));
  CHECK_THROWS_AS(qcv::pochhammer_inf(R, 1, 0, 1, 10), std::invalid_argument);

  // finite products: (q; q)_3 literal, and saturation once count * b >= N
  ES expect = qcv::mul_binomial(
      qcv::mul_binomial(qcv::mul_binomial(qcv::one_series(R, 30), -1, 1), -1, 2), -1, 3);
  CHECK(qcv::pochhammer_n(R, 1, 1, 1, 3, 30) == expect);
  CHECK(qcv::pochhammer_n(R, 1, 1, 1, 1000, 40) == qcv::pochhammer_inf(R, 1, 1, 1, 40));
}

TEST_CASE("classical theta series: frozen prefixes, dual construction validates") {
  ExactRing R;
  auto ph = qcv::phi(R, 26);
  for (std::size_t n = 0; n < 26; ++n) {
    long want = n == 0 ? 1 : (n == 1 || n == 4 || n == 9 || n == 16 || n == 25) ? 2 : 0;
    CAPTURE(n);
    CHECK((*ph)[n] == mpz_class(want));
  }
  auto ps = qcv::psi(R, 22);
  for (std::size_t n = 0; n < 22; ++n) {
    long want = (n == 0 || n == 1 || n == 3 || n == 6 || n == 10 || n == 15 || n == 21) ? 1 : 0;
    CAPTURE(n);
    CHECK((*ps)[n] == mpz_class(want));
  }
  auto pn = qcv::phi_neg(R, 26);
  for (std::size_t n = 0; n < 26; ++n) {
    long want = 0;
    if (n == 0) want = 1;
    if (n == 1 || n == 9 || n == 25) want = -2;
    if (n == 4 || n == 16) want = 2;
    CAPTURE(n);
    CHECK((*pn)[n] == mpz_class(want));
  }
  CHECK(*qcv::f_neg(R, 80) == qcv::eta_series(R, 1, 80));

  CHECK_THROWS_AS(qcv::ThetaSpec(2, 1, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(qcv::ThetaSpec(1, 0, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(qcv::ThetaSpec(1, -1, 1, 3), std::invalid_argument);
}

TEST_CASE("Jacobi triple product spot checks") {
  ExactRing R;
  const std::size_t N = 300;

  // phi(q) = (-q; q^2)_inf^2 (q^2; q^2)_inf
  ES a = qcv::pochhammer_inf(R, -1, 1, 2, N);
  CHECK(*qcv::phi(R, N) == qcv::mul(qcv::mul(a, a), qcv::eta_series(R, 2, N)));

  // psi(q) = (-q; q^4)_inf (-q^3; q^4)_inf (q^4; q^4)_inf
  ES b = qcv::mul(qcv::pochhammer_inf(R, -1, 1, 4, N), qcv::pochhammer_inf(R, -1, 3, 4, N));
  CHECK(*qcv::psi(R, N) == qcv::mul(b, qcv::eta_series(R, 4, N)));

  // f(-q) = (q; q^3)_inf (q^2; q^3)_inf (q^3; q^3)_inf
  ES c = qcv::mul(qcv::pochhammer_inf(R, 1, 1, 3, N), qcv::pochhammer_inf(R, 1, 2, 3, N));
  CHECK(*qcv::f_neg(R, N) == qcv::mul(c, qcv::eta_series(R, 3, N)));
}

TEST_CASE("eta quotients: cancellation, factor order independence") {
  ExactRing R;
  qcv::EtaQuotient trivial{{1, 2}, {1, -2}};
  CHECK(trivial.factors().empty());
  CHECK(trivial.expand(R, 20) == qcv::one_series(R, 20));

  qcv::EtaQuotient one_shot{{3, 3}, {1, -1}, {2, -4}};
  qcv::EtaQuotient built;
  built.mul_factor(2, -4).mul_factor(3, 2).mul_factor(1, -1).mul_factor(3, 1);
  CHECK(one_shot.factors() == built.factors());
  CHECK(one_shot.expand(R, 150) == built.expand(R, 150));

  // against a manual assembly in a different operation order
  ES manual = qcv::div(qcv::pow(qcv::eta_series(R, 3, 150), 3), qcv::eta_series(R, 1, 150));
  manual = qcv::div(manual, qcv::pow(qcv::eta_series(R, 2, 150), 4));
  CHECK(one_shot.expand(R, 150) == manual);

  CHECK(one_shot.str() == "f3^3/(f1*f2^4)");
  CHECK(qcv::EtaQuotient{{1, -2}}.str() == "1/f1^2");
  CHECK_THROWS_AS((qcv::EtaQuotient{{0, 1}}), std::invalid_argument);
}

TEST_CASE("eta expression grammar") {
  ExactRing R;
  qcv::EtaExpr e = qcv::parse_eta_expr("3*q^2*f3^3/(f1*f2^4)");
  CHECK(e.prefactor == 3);
  CHECK(e.q_shift == 2);
  qcv::EtaQuotient want{{3, 3}, {1, -1}, {2, -4}};
  CHECK(e.quotient.factors() == want.factors());

  // matches a hand-assembled series
  ES direct = qcv::scale(qcv::shift(want.expand(R, 60), 2), 3);
  CHECK(e.expand(R, 60) == direct);

  // division by a q power cancels against a later multiplication
  qcv::EtaExpr f = qcv::parse_eta_expr(" q^3 / q * f1 ");
  CHECK(f.q_shift == 2);
  CHECK(f.prefactor == 1);

  CHECK(qcv::parse_eta_expr("4/-2*f1").prefactor == -2);
  CHECK(qcv::parse_eta_expr("f4^3/f2^2").quotient.str() == "f4^3/f2^2");

  CHECK_THROWS_AS(qcv::parse_eta_expr("f1/q"), std::invalid_argument);   // pole at q = 0
  CHECK_THROWS_AS(qcv::parse_eta_expr("2/3*f1"), std::invalid_argument); // nonintegral
  CHECK_THROWS_AS(qcv::parse_eta_expr("q^"), std::invalid_argument);
  CHECK_THROWS_AS(qcv::parse_eta_expr("f0"), std::invalid_argument);
  CHECK_THROWS_AS(qcv::parse_eta_expr("f1)"), std::invalid_argument);    // trailing input
  CHECK_THROWS_AS(qcv::parse_eta_expr(""), std::invalid_argument);
  CHECK_THROWS_AS(qcv::parse_eta_expr("0*f1"), std::invalid_argument);
  CHECK_THROWS_AS(qcv::parse_eta_expr("q^-1"), std::invalid_argument);
}

TEST_CASE("generating functions: frozen prefixes") {
  ExactRing R;
  using Id = qcv::GeneratingFunctionId;
  check_prefix(*qcv::gf(R, Id::d(), 7), {1, 1, 3, 1, 6, 3, 11});
  check_prefix(*qcv::gf(R, Id::tcore(3), 6), {1, 1, 2, 0, 2, 1});
  check_prefix(*qcv::gf(R, Id::tcore(2), 7), {1, 1, 0, 1, 0, 0, 1});
  check_prefix(*qcv::gf(R, Id::cubic(), 6), {1, 1, 3, 4, 9, 12});
  check_prefix(*qcv::gf(R, Id::c(), 6), {0, 1, 1, 3, 4, 9});
  check_prefix(*qcv::gf(R, Id::b(), 9), {1, 0, 2, 0, 2, 0, 4, 0, 5});
  check_prefix(*qcv::gf(R, Id::h_odd(), 5), {1, 2, 2, 4, 5});
}

TEST_CASE("generating function ids parse and round trip") {
  using Id = qcv::GeneratingFunctionId;
  for (const char* name : {"b", "c", "d", "cubic", "h_odd", "tcore(2)", "tcore(7)"}) {
    CAPTURE(name);
    auto id = Id::parse(name);
    REQUIRE(id.has_value());
    CHECK(id->str() == name);
  }
  CHECK(!Id::parse("tcore(1)").has_value());
  CHECK(!Id::parse("tcore(x)").has_value());
  CHECK(!Id::parse("bogus").has_value());
  CHECK_THROWS_AS(Id::tcore(1), std::invalid_argument);
}

TEST_CASE("P and w auxiliary series") {
  ExactRing R;
  auto P = qcv::p_series(R, 200);  // dual-checked against the Lambert form internally
  check_prefix(ES(*P), {1, 5, -7, 0});

  auto w = qcv::w_series(R, 300);
  ES lhs = qcv::mul(*w, qcv::mul(qcv::eta_series(R, 2, 300),
                                 qcv::pow(qcv::eta_series(R, 3, 300), 3)));
  ES rhs = qcv::mul(qcv::eta_series(R, 1, 300), qcv::pow(qcv::eta_series(R, 6, 300), 3));
  CHECK(lhs == rhs);
}

TEST_CASE("at_power substitutes into a memoized builder") {
  ExactRing R;
  ES direct = qcv::substitute_power(*qcv::psi(R, 14), 3, 40);
  ES via = qcv::at_power([](const ExactRing& rr, std::size_t nn) { return qcv::psi(rr, nn); },
                         R, 3, 40);
  CHECK(via == direct);
  CHECK(via.order() == 40);
  CHECK(qcv::ceil_div(40, 3) == 14);
  CHECK(qcv::ceil_div(39, 3) == 13);
}

TEST_CASE("series cache: shared results and single-flight exceptions") {
  ExactRing R;
  using Id = qcv::GeneratingFunctionId;
  std::vector<qcv::SeriesPtr<ExactRing>> got(8);
  std::vector<std::thread> threads;
  for (int i = 0; i < 8; ++i)
    threads.emplace_back([&, i] { got[i] = qcv::gf(R, Id::d(), 151); });
  for (auto& t : threads) t.join();
  for (int i = 1; i < 8; ++i) CHECK(got[i].get() == got[0].get());

  auto& cache = qcv::series_cache<ExactRing>();
  auto boom = [&]() -> qcv::Series<ExactRing> { throw std::runtime_error("boom"); };
  CHECK_THROWS_AS(cache.get_or_build("test:boom", R, 10, boom), std::runtime_error);
  // the failure is cached: later callers see the same exception, not a rebuild
  auto benign = [&] { return qcv::one_series(R, 10); };
  CHECK_THROWS_AS(cache.get_or_build("test:boom", R, 10, benign), std::runtime_error);
}

}  // TEST_SUITE
