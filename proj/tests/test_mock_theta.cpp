#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "qcv/mock_theta.hpp"

namespace {

using qcv::ExactRing;
using qcv::MockThetaId;
using ES = qcv::Series<ExactRing>;

void check_prefix(const ES& got, const std::vector<long>& want) {
  REQUIRE(got.order() >= want.size());
  for (std::size_t n = 0; n < want.size(); ++n) {
    CAPTURE(n);
    CHECK(got[n] == mpz_class(want[n]));
  }
}

}  // namespace

TEST_SUITE("mocktheta") {

TEST_CASE("frozen expansions of all six mock theta functions") {
  check_prefix(*qcv::mock(MockThetaId::Upsilon, 8), {1, -1, 2, -2, 2});
  check_prefix(*qcv::mock(MockThetaId::Upsilon3, 8), {1, 1, 2, 2, 2});
  check_prefix(*qcv::mock(MockThetaId::Psi6, 8), {0, 1, -1, 1, -2});
  check_prefix(*qcv::mock(MockThetaId::PsiMinus6, 8), {0, 1, 2, 4, 7});
  check_prefix(*qcv::mock(MockThetaId::Rho6, 8), {1, 2, 3, 4});
  check_prefix(*qcv::mock(MockThetaId::Lambda6, 8), {1, -1, 3, -5});
}

TEST_CASE("incremental construction equals the literal sum of term series") {
  const std::size_t N = 60;
  for (MockThetaId id : qcv::kAllMockThetas) {
    CAPTURE(qcv::mock_theta_name(id));
    ES sum = qcv::zero_series(ExactRing{}, N);
    for (unsigned long long n = qcv::mock_first_term(id);; ++n) {
      if (qcv::mock_term_valuation(id, n) >= N) break;
      sum = qcv::add(sum, qcv::mock_term(id, n, N));
    }
    CHECK(sum == *qcv::mock(id, N));
  }
}

TEST_CASE("term valuations and leading signs follow the definitions") {
  const std::size_t N = 90;
  for (MockThetaId id : qcv::kAllMockThetas) {
    CAPTURE(qcv::mock_theta_name(id));
    for (unsigned long long n = qcv::mock_first_term(id); n < 8; ++n) {
      const unsigned long long v = qcv::mock_term_valuation(id, n);
      if (v >= N) break;
      CAPTURE(n);
      ES t = qcv::mock_term(id, n, N);
      REQUIRE(t.valuation().has_value());
      CHECK(*t.valuation() == v);
      const bool negative = (id == MockThetaId::Psi6 || id == MockThetaId::Lambda6) && n % 2 == 1;
      CHECK(t[static_cast<std::size_t>(v)] == mpz_class(negative ? -1 : 1));
    }
  }
  // alternating-sign families really alternate in the assembled series
  CHECK((*qcv::mock(MockThetaId::Psi6, 3))[1] == 1);
  CHECK((*qcv::mock(MockThetaId::Psi6, 5))[4] == -2);
}

TEST_CASE("names round trip and the PsiMinus6 sum starts at n = 1") {
  for (MockThetaId id : qcv::kAllMockThetas) {
    auto back = qcv::parse_mock_theta(qcv::mock_theta_name(id));
    REQUIRE(back.has_value());
    CHECK(*back == id);
  }
  CHECK(!qcv::parse_mock_theta("nope").has_value());
  CHECK(qcv::mock_first_term(MockThetaId::PsiMinus6) == 1);
  CHECK(qcv::mock_first_term(MockThetaId::Upsilon) == 0);
  CHECK_THROWS_AS(qcv::mock_term(MockThetaId::PsiMinus6, 0, 10), std::invalid_argument);
}

TEST_CASE("the three mock theta identities hold to order 200") {
  auto reports = qcv::verify_choi_kim_all(200);
  REQUIRE(reports.size() == 3);
  for (const auto& rep : reports) {
    CAPTURE(rep.id);
    CHECK(rep.ok);
    CHECK(rep.instances == 200);
    CHECK(!rep.counterexample.has_value());
    CHECK(rep.verdict() == "verified-to-order");
  }
  CHECK(reports[0].id == "choikim.third");
  CHECK(reports[1].id == "choikim.sixth-psi");
  CHECK(reports[2].id == "choikim.sixth-rho");
}

}  // TEST_SUITE
