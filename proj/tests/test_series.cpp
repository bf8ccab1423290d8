#include <doctest.h>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "qcv/series.hpp"

namespace {

using qcv::ExactRing;
using qcv::ModRing;
using qcv::Series;
using ES = Series<ExactRing>;

constexpr unsigned kSeed = 20260819u;  // fixed seed: failures are reproducible

ES make_series(const std::vector<long>& v) {
  std::vector<mpz_class> c;
  c.reserve(v.size());
  for (long x : v) c.emplace_back(x);
  return ES::from_coeffs(ExactRing{}, std::move(c));
}

// brute-force dense polynomial product over int64, truncated
std::vector<long long> poly_mul(const std::vector<long long>& a, const std::vector<long long>& b,
                                std::size_t n_out) {
  std::vector<long long> out(n_out, 0);
  for (std::size_t i = 0; i < a.size() && i < n_out; ++i)
    for (std::size_t j = 0; j < b.size() && i + j < n_out; ++j) out[i + j] += a[i] * b[j];
  return out;
}

std::vector<long long> random_dense(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> d(-9, 9);
  std::vector<long long> v(n);
  for (auto& x : v) {
    int t = d(rng);
    x = t == 0 ? 1 : t;  // all entries nonzero, so no sparse support attaches
  }
  return v;
}

std::vector<long long> random_sparse(std::mt19937& rng, std::size_t n, std::size_t nnz) {
  std::uniform_int_distribution<std::size_t> pos(0, n - 1);
  std::uniform_int_distribution<int> d(1, 9);
  std::uniform_int_distribution<int> sgn(0, 1);
  std::vector<long long> v(n, 0);
  for (std::size_t i = 0; i < nnz; ++i) v[pos(rng)] = (sgn(rng) ? 1 : -1) * d(rng);
  return v;
}

ES to_series(const std::vector<long long>& v) {
  std::vector<mpz_class> c;
  c.reserve(v.size());
  for (long long x : v) c.emplace_back(static_cast<long>(x));
  return ES::from_coeffs(ExactRing{}, std::move(c));
}

Series<ModRing> to_mod_series(const ModRing& ring, const std::vector<long long>& v) {
  std::vector<std::uint64_t> c(v.size());
  const long long m = static_cast<long long>(ring.modulus());
  for (std::size_t i = 0; i < v.size(); ++i)
    c[i] = static_cast<std::uint64_t>(((v[i] % m) + m) % m);
  return Series<ModRing>::from_coeffs(ring, std::move(c));
}

void check_matches(const ES& got, const std::vector<long long>& want) {
  REQUIRE(got.order() == want.size());
  for (std::size_t n = 0; n < want.size(); ++n) {
    CAPTURE(n);
    CHECK(got[n] == mpz_class(static_cast<long>(want[n])));
  }
}

}  // namespace

TEST_SUITE("series") {

TEST_CASE("construction, valuation, and sparse support detection") {
  ExactRing R;
  ES z(R, 8);
  CHECK(z.is_zero());
  CHECK(!z.valuation().has_value());
  CHECK(z.order() == 8);

  ES a = make_series({0, 0, 5, 0, -1});
  CHECK(!a.is_zero());
  CHECK(a.valuation() == std::size_t{2});
  CHECK(a.coeff(2) == 5);
  CHECK_THROWS_AS((void)a.coeff(5), std::out_of_range);

  // support is attached iff the nonzero count is at most 4 sqrt(order)
  const std::size_t order = 100;
  const std::size_t limit = qcv::sparse_term_limit(order);  // 40
  REQUIRE(limit == 40);
  std::vector<long> just_sparse(order, 0), just_dense(order, 0);
  for (std::size_t i = 0; i < limit; ++i) just_sparse[i] = 1;
  for (std::size_t i = 0; i < limit + 1; ++i) just_dense[i] = 1;
  CHECK(make_series(just_sparse).support() != nullptr);
  CHECK(make_series(just_dense).support() == nullptr);

  const auto* sup = a.support();
  REQUIRE(sup != nullptr);
  REQUIRE(sup->terms.size() == 2);
  CHECK(sup->terms[0].first == 2);
  CHECK(sup->terms[1].first == 4);
}

TEST_CASE("add/sub/negate/scale with the min-order rule") {
  ES a = make_series({1, 2, 3, 4, 5});
  ES b = make_series({10, 20, 30});
  ES s = qcv::add(a, b);
  CHECK(s.order() == 3);
  check_matches(s, {11, 22, 33});
  check_matches(qcv::sub(a, b), {-9, -18, -27});
  check_matches(qcv::negate(b), {-10, -20, -30});
  check_matches(qcv::scale(b, -2), {-20, -40, -60});
}

TEST_CASE("multiplication agrees with a brute-force polynomial oracle") {
  std::mt19937 rng(kSeed);
  CAPTURE(kSeed);
  for (int round = 0; round < 60; ++round) {
    CAPTURE(round);
    const std::size_t na = 40 + round % 41, nb = 30 + (round * 7) % 51;
    // cycle through sparse*sparse, sparse*dense, dense*sparse, dense*dense
    const bool a_sparse = round % 2 == 0, b_sparse = (round / 2) % 2 == 0;
    auto av = a_sparse ? random_sparse(rng, na, 5) : random_dense(rng, na);
    auto bv = b_sparse ? random_sparse(rng, nb, 5) : random_dense(rng, nb);
    ES a = to_series(av), b = to_series(bv);
    REQUIRE((a.support() != nullptr) == a_sparse);
    REQUIRE((b.support() != nullptr) == b_sparse);
    check_matches(qcv::mul(a, b), poly_mul(av, bv, std::min(na, nb)));

    // same product in Z/97
    ModRing M(97);
    auto pm = poly_mul(av, bv, std::min(na, nb));
    CHECK(qcv::mul(to_mod_series(M, av), to_mod_series(M, bv)) == to_mod_series(M, pm));
  }
}

TEST_CASE("valuation-aware multiplication extends the known window") {
  std::mt19937 rng(kSeed + 1);
  auto av = random_dense(rng, 40);
  auto bv = random_dense(rng, 50);
  av[0] = av[1] = 0;           // a = q^2 * (unit series)
  bv[0] = bv[1] = bv[2] = 0;   // b = q^3 * (unit series)
  ES a = to_series(av), b = to_series(bv);
  ES p = qcv::mul(a, b, 2, 3);
  CHECK(p.order() == 43);  // min(40 + 3, 50 + 2)
  check_matches(p, poly_mul(av, bv, 43));
  CHECK_THROWS_AS(qcv::mul(a, b, 3, 3), std::invalid_argument);
}

TEST_CASE("division and inversion round-trip") {
  std::mt19937 rng(kSeed + 2);
  for (int round = 0; round < 40; ++round) {
    CAPTURE(round);
    const std::size_t n = 30 + round;
    auto av = random_dense(rng, n);
    auto bv = (round % 2 == 0) ? random_dense(rng, n) : random_sparse(rng, n, 6);
    bv[0] = (round % 4 < 2) ? 1 : -1;
    ES a = to_series(av), b = to_series(bv);
    CHECK(qcv::mul(qcv::div(a, b), b) == a);
    CHECK(qcv::mul(qcv::invert(b), b) == qcv::one_series(ExactRing{}, n));

    // in Z/32 any odd constant term is a unit
    ModRing M(32);
    auto bm = to_mod_series(M, bv);
    auto am = to_mod_series(M, av);
    CHECK(qcv::mul(qcv::div(am, bm), bm) == am);
  }

  ES bad = make_series({2, 1, 1});
  CHECK_THROWS_AS(qcv::div(make_series({1, 0, 0}), bad), std::domain_error);
  ModRing M(32);
  CHECK_THROWS_AS(qcv::invert(to_mod_series(M, {6, 1, 1})), std::domain_error);
}

TEST_CASE("pow: repeated squaring and negative exponents") {
  ES one_minus_q = make_series({1, -1, 0, 0});
  check_matches(qcv::pow(one_minus_q, 3), {1, -3, 3, -1});
  check_matches(qcv::pow(one_minus_q, 0), {1, 0, 0, 0});

  std::mt19937 rng(kSeed + 3);
  auto uv = random_dense(rng, 25);
  uv[0] = 1;
  ES u = to_series(uv);
  ES lhs = qcv::pow(u, 5);
  ES rhs = qcv::mul(qcv::mul(qcv::mul(qcv::mul(u, u), u), u), u);
  CHECK(lhs == rhs);
  CHECK(qcv::mul(qcv::pow(u, -3), qcv::pow(u, 3)) == qcv::one_series(ExactRing{}, 25));
}

TEST_CASE("shift, truncate, extract_progression, substitute_power") {
  ES a = make_series({1, 2, 3, 4, 5, 6, 7, 8, 9, 10});

  ES sh = qcv::shift(a, 3);
  CHECK(sh.order() == 10);
  check_matches(sh, {0, 0, 0, 1, 2, 3, 4, 5, 6, 7});

  ES tr = qcv::truncate(a, 4);
  check_matches(tr, {1, 2, 3, 4});
  CHECK_THROWS_AS(qcv::truncate(a, 11), std::invalid_argument);

  ES ex = qcv::extract_progression(a, 3, 2);
  CHECK(ex.order() == 3);  // ceil((10 - 2) / 3)
  check_matches(ex, {3, 6, 9});
  CHECK_THROWS_AS(qcv::extract_progression(a, 3, 3), std::invalid_argument);
  CHECK_THROWS_AS(qcv::extract_progression(a, 0, 0), std::invalid_argument);

  ES su = qcv::substitute_power(make_series({1, 2, 3}), 3);
  CHECK(su.order() == 9);
  check_matches(su, {1, 0, 0, 2, 0, 0, 3, 0, 0});
  ES su_cap = qcv::substitute_power(make_series({1, 2, 3}), 3, 7);
  CHECK(su_cap.order() == 7);
  check_matches(su_cap, {1, 0, 0, 2, 0, 0, 3});
  CHECK_THROWS_AS(qcv::substitute_power(a, 0), std::invalid_argument);

  // round trip: picking out multiples of k from a(q^k) recovers a
  CHECK(qcv::extract_progression(su, 3, 0) == make_series({1, 2, 3}));
}

TEST_CASE("dissecting into progressions and reassembling is the identity") {
  std::mt19937 rng(kSeed + 4);
  const std::size_t N = 60;
  auto av = random_dense(rng, N);
  ES a = to_series(av);
  for (std::size_t A : {2, 3, 5, 7}) {
    CAPTURE(A);
    ES sum = qcv::zero_series(ExactRing{}, N * 2);
    for (std::size_t B = 0; B < A; ++B) {
      ES piece = qcv::shift(qcv::substitute_power(qcv::extract_progression(a, A, B), A), B);
      sum = qcv::add(sum, piece);
    }
    const std::size_t window = std::min(sum.order(), N);
    CHECK(qcv::truncate(sum, window) == qcv::truncate(a, window));
  }
}

TEST_CASE("binomial multiply/divide are exact inverses and match real products") {
  std::mt19937 rng(kSeed + 5);
  auto av = random_dense(rng, 50);
  ES a = to_series(av);
  for (int s : {1, -1}) {
    for (std::size_t e : {1u, 2u, 7u, 49u, 60u}) {
      CAPTURE(s);
      CAPTURE(e);
      CHECK(qcv::div_binomial(qcv::mul_binomial(a, s, e), s, e) == a);
      CHECK(qcv::mul_binomial(qcv::div_binomial(a, s, e), s, e) == a);
      // compare against an explicit series product with 1 + s q^e
      std::vector<long> bv(50, 0);
      bv[0] = 1;
      if (e < 50) bv[e] = s;
      CHECK(qcv::mul_binomial(a, s, e) == qcv::mul(a, make_series(bv)));
    }
  }
  CHECK_THROWS_AS(qcv::mul_binomial(a, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(qcv::mul_binomial(a, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(qcv::div_binomial(a, 0, 1), std::invalid_argument);
}

TEST_CASE("reduce_mod is a ring homomorphism") {
  std::mt19937 rng(kSeed + 6);
  std::uniform_int_distribution<long> d(-50, 50);
  const std::size_t N = 50;
  std::vector<long> av(N), bv(N);
  for (auto& x : av) x = d(rng);
  for (auto& x : bv) x = d(rng);
  ES a = make_series(av), b = make_series(bv);
  for (std::uint64_t m : {2ull, 3ull, 5ull, 9ull, 16ull, 4294967296ull}) {
    CAPTURE(m);
    CHECK(qcv::reduce_mod(qcv::mul(a, b), m) ==
          qcv::mul(qcv::reduce_mod(a, m), qcv::reduce_mod(b, m)));
    CHECK(qcv::reduce_mod(qcv::add(a, b), m) ==
          qcv::add(qcv::reduce_mod(a, m), qcv::reduce_mod(b, m)));
  }
  CHECK(qcv::reduce_mod(qcv::scale(a, 3), 3).is_zero());
  // floor reduction: -1 becomes m - 1
  CHECK(qcv::reduce_mod(make_series({-1}), 7)[0] == 6);
}

TEST_CASE("modular ring basics") {
  CHECK_THROWS_AS(ModRing(1), std::invalid_argument);
  CHECK_NOTHROW(ModRing(2));
  CHECK_NOTHROW(ModRing(std::uint64_t(1) << 32));
  CHECK_THROWS_AS(ModRing((std::uint64_t(1) << 32) + 1), std::invalid_argument);

  ModRing m5(5);
  CHECK(m5.from_long(-7) == 3);
  ModRing m30(30);
  CHECK(m30.is_unit(7));
  CHECK(!m30.is_unit(6));
  CHECK_THROWS_AS(m30.unit_inverse(6), std::domain_error);

  std::mt19937 rng(kSeed + 7);
  ModRing big(std::uint64_t(1) << 20);
  std::uniform_int_distribution<std::uint64_t> d(0, big.modulus() - 1);
  for (int i = 0; i < 200; ++i) {
    std::uint64_t a = d(rng) | 1;  // odd, hence a unit mod 2^20
    CHECK(big.mul(a, big.unit_inverse(a)) == 1);
  }
}

TEST_CASE("first_mismatch finds the earliest difference") {
  ES a = make_series({1, 2, 3, 4});
  ES b = make_series({1, 2, 7, 4});
  CHECK(qcv::first_mismatch(a, b, 2) == std::nullopt);
  CHECK(qcv::first_mismatch(a, b, 4) == std::size_t{2});
  CHECK(qcv::first_mismatch(a, a, 4) == std::nullopt);
  CHECK_THROWS_AS(qcv::first_mismatch(a, b, 5), std::invalid_argument);
}

TEST_CASE("operations on different rings are rejected") {
  ModRing m5(5), m7(7);
  Series<ModRing> a(m5, 4), b(m7, 4);
  CHECK_THROWS_AS(qcv::add(a, b), std::invalid_argument);
  CHECK_THROWS_AS(qcv::mul(a, b), std::invalid_argument);
  CHECK(!(a == b));
}

}  // TEST_SUITE
