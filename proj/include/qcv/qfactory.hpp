#pragma once

#include <functional>
#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>

#include "qcv/series.hpp"

namespace qcv {

template <class R>
using SeriesPtr = std::shared_ptr<const Series<R>>;

// Named builders (eta, theta duals, generating functions, mock thetas) are
// memoized by (id, ring, order).  The congruence scans hit f1..f16 and the
// same generating functions over and over; building each once per (ring, N)
// keeps the deep scans affordable.  Building is single-flight: concurrent
// requests for the same key wait on one shared future.
template <class R>
class SeriesCache {
 public:
  SeriesPtr<R> get_or_build(const std::string& id, const R& ring, std::size_t n,
                            const std::function<Series<R>()>& build) {
    const Key key{id, ring.cache_key(), n};
    std::promise<SeriesPtr<R>> prom;
    std::shared_future<SeriesPtr<R>> fut;
    bool is_builder = false;
    {
      std::lock_guard<std::mutex> lk(mu_);
      auto it = map_.find(key);
      if (it == map_.end()) {
        fut = prom.get_future().share();
        map_.emplace(key, fut);
        is_builder = true;
      } else {
        fut = it->second;
      }
    }
    if (is_builder) {
      try {
        prom.set_value(std::make_shared<const Series<R>>(build()));
      } catch (...) {
        prom.set_exception(std::current_exception());
      }
    }
    return fut.get();
  }

 private:
  using Key = std::tuple<std::string, std::uint64_t, std::size_t>;
  std::mutex mu_;
  std::map<Key, std::shared_future<SeriesPtr<R>>> map_;
};

template <class R>
SeriesCache<R>& series_cache() {
  static SeriesCache<R> cache;
  return cache;
}

// (x; q^b)_infinity-style products built factor by factor.
// pochhammer_inf(ring, sign, a, b, N) = prod_{j>=0, a+jb<N} (1 - sign q^{a+jb})
template <class R>
Series<R> pochhammer_inf(const R& ring, int sign, std::size_t a, std::size_t b, std::size_t N) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("pochhammer_inf: sign must be +-1");
  if (b == 0) throw std::invalid_argument("pochhammer_inf: step must be positive");
  if (a == 0 && sign == 1)
    throw std::invalid_argument("pochhammer_inf: first factor vanishes (1 - q^0)");
  std::vector<typename R::Value> c(N);
  if (N > 0) c[0] = ring.one();
  for (std::size_t e = a; e < N; e += b) {
    if (e == 0) {
      // the j = 0 factor of (-1; q^b)_inf is the constant 2
      for (auto& v : c) ring.add_assign(v, v);
      continue;
    }
    detail::mul_binomial_inplace(ring, c, -sign, e);
  }
  return Series<R>::from_coeffs(ring, std::move(c));
}

// first `count` factors of the same product, truncated to order N
template <class R>
Series<R> pochhammer_n(const R& ring, int sign, std::size_t a, std::size_t b, std::size_t count,
                       std::size_t N) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("pochhammer_n: sign must be +-1");
  if (b == 0) throw std::invalid_argument("pochhammer_n: step must be positive");
  std::vector<typename R::Value> c(N);
  if (N > 0) c[0] = ring.one();
  for (std::size_t j = 0; j < count; ++j) {
    const std::size_t e = a + j * b;
    if (e >= N) break;  // remaining factors are 1 mod q^N
    if (e == 0) {
      if (sign == 1) throw std::invalid_argument("pochhammer_n: factor vanishes (1 - q^0)");
      for (auto& v : c) ring.add_assign(v, v);
      continue;
    }
    detail::mul_binomial_inplace(ring, c, -sign, e);
  }
  return Series<R>::from_coeffs(ring, std::move(c));
}

// f_k = (q^k; q^k)_infinity via the pentagonal number theorem; the support is
// attached directly, no multiplication needed.
template <class R>
Series<R> eta_series(const R& ring, long k, std::size_t N) {
  if (k <= 0) throw std::invalid_argument("eta: scale must be positive");
  std::vector<typename R::Value> c(N);
  const typename R::Value plus = ring.one();
  const typename R::Value minus = ring.from_long(-1);
  for (long long j = 0;; ++j) {
    const long long g_pos = j * (3 * j + 1) / 2;       // exponent for +j
    const long long g_neg = j * (3 * j - 1) / 2;       // exponent for -j
    const long long e_pos = k * g_pos, e_neg = k * g_neg;
    const bool in_pos = e_pos < static_cast<long long>(N);
    const bool in_neg = e_neg < static_cast<long long>(N);
    if (!in_pos && !in_neg) break;
    const typename R::Value& s = (j % 2 == 0) ? plus : minus;
    if (in_pos) ring.add_assign(c[static_cast<std::size_t>(e_pos)], s);
    if (j > 0 && in_neg) ring.add_assign(c[static_cast<std::size_t>(e_neg)], s);
  }
  return Series<R>::from_coeffs(ring, std::move(c));
}

template <class R>
SeriesPtr<R> eta(const R& ring, long k, std::size_t N) {
  return series_cache<R>().get_or_build("eta:" + std::to_string(k), ring, N,
                                        [&] { return eta_series(ring, k, N); });
}

// Ramanujan theta function f(a, b) with a = sign_a q^alpha, b = sign_b q^beta:
// f(a, b) = sum_{n in Z} a^{n(n+1)/2} b^{n(n-1)/2}.
struct ThetaSpec {
  int sign_a;
  long long alpha;
  int sign_b;
  long long beta;

  ThetaSpec(int sa, long long al, int sb, long long be)
      : sign_a(sa), alpha(al), sign_b(sb), beta(be) {
    if ((sa != 1 && sa != -1) || (sb != 1 && sb != -1))
      throw std::invalid_argument("ThetaSpec: signs must be +-1");
    if (al < 0 || be < 0 || al + be <= 0)
      throw std::invalid_argument("ThetaSpec: need alpha, beta >= 0 and alpha + beta > 0");
  }

  std::string str() const;
};

template <class R>
Series<R> theta_f(const R& ring, const ThetaSpec& spec, std::size_t N) {
  std::vector<typename R::Value> c(N);
  auto tri = [](long long n) { return n * (n + 1) / 2; };  // valid for negative n too
  auto add_term = [&](long long n) -> bool {
    const long long ta = tri(n);        // exponent on a
    const long long tb = tri(n - 1);    // exponent on b
    const long long e = spec.alpha * ta + spec.beta * tb;
    if (e >= static_cast<long long>(N)) return false;
    int s = 1;
    if (spec.sign_a == -1 && (ta & 1)) s = -s;
    if (spec.sign_b == -1 && (tb & 1)) s = -s;
    ring.add_assign(c[static_cast<std::size_t>(e)], ring.from_long(s));
    return true;
  };
  for (long long n = 0;; ++n)
    if (!add_term(n)) break;  // exponent is nondecreasing for n >= 0
  for (long long n = -1;; --n)
    if (!add_term(n)) break;  // and for n <= -1 going down
  return Series<R>::from_coeffs(ring, std::move(c));
}

class EtaQuotient {
 public:
  EtaQuotient() = default;
  EtaQuotient(std::initializer_list<std::pair<long, long>> factors) {
    for (const auto& [k, e] : factors) mul_factor(k, e);
  }

  EtaQuotient& mul_factor(long k, long e) {
    if (k <= 0) throw std::invalid_argument("EtaQuotient: scale must be positive");
    long& cur = factors_[k];
    cur += e;
    if (cur == 0) factors_.erase(k);
    return *this;
  }

  const std::map<long, long>& factors() const { return factors_; }
  std::string str() const;

  // Expand factor by factor against sparse eta series: O(sum |e_k| * N * s).
  // Every eta factor has constant term 1, so any quotient of them is a valid
  // power series; divisions cannot fail.
  template <class R>
  Series<R> expand(const R& ring, std::size_t N) const {
    Series<R> r = one_series(ring, N);
    for (const auto& [k, e] : factors_) {
      if (e <= 0) continue;
      SeriesPtr<R> fk = eta(ring, k, N);
      for (long i = 0; i < e; ++i) r = mul(r, *fk);
    }
    for (const auto& [k, e] : factors_) {
      if (e >= 0) continue;
      SeriesPtr<R> fk = eta(ring, k, N);
      for (long i = 0; i < -e; ++i) r = div(r, *fk);
    }
    return r;
  }

 private:
  std::map<long, long> factors_;
};

// Integer prefactor and q-power on top of an eta quotient; the shape produced
// by the CLI expression grammar, e.g. "3*q^2*f3^3/(f1*f2^4)".
struct EtaExpr {
  long long prefactor = 1;
  std::size_t q_shift = 0;
  EtaQuotient quotient;

  template <class R>
  Series<R> expand(const R& ring, std::size_t N) const {
    Series<R> s = quotient.expand(ring, N);
    if (q_shift > 0) s = shift(s, q_shift);
    if (prefactor != 1) s = scale(s, static_cast<long>(prefactor));
    return s;
  }

  std::string str() const;
};

// grammar: expr := term (('*'|'/') term)*
//          term := INT | q['^'INT] | f<k>['^'INT] | '(' expr ')'
EtaExpr parse_eta_expr(const std::string& text);

std::size_t ceil_div(std::size_t a, std::size_t b);

// f(q^k) truncated to order N, where `build` produces f to any requested order
template <class R, class Builder>
Series<R> at_power(Builder&& build, const R& ring, std::size_t k, std::size_t N) {
  if (k == 0) throw std::invalid_argument("at_power: exponent must be positive");
  SeriesPtr<R> inner = build(ring, ceil_div(N, k));
  return substitute_power(*inner, k, N);
}

// --- classical theta series, each constructed two independent ways ---
// phi(q) = f(q, q)     = sum q^{n^2}        = f2^5 / (f1^2 f4^2)
// psi(q) = f(q, q^3)   = sum q^{n(n+1)/2}   = f2^2 / f1
// phi(-q)              = f1^2 / f2
// f(-q)  = f(-q, -q^2) = f1
// A disagreement between the two constructions is an engine bug, so it throws
// instead of producing a report.

namespace detail {

template <class R>
Series<R> dual_checked(const char* name, Series<R> primary, const Series<R>& alternate,
                       std::size_t N) {
  if (auto n = first_mismatch(primary, alternate, N)) {
    throw std::logic_error(std::string(name) +
                           ": dual representations disagree at q^" + std::to_string(*n) +
                           " (" + primary.ring().str(primary[*n]) + " vs " +
                           alternate.ring().str(alternate[*n]) + ")");
  }
  return primary;
}

}  // namespace detail

template <class R>
SeriesPtr<R> phi(const R& ring, std::size_t N) {
  return series_cache<R>().get_or_build("phi", ring, N, [&] {
    return detail::dual_checked("phi", theta_f(ring, ThetaSpec(1, 1, 1, 1), N),
                                EtaQuotient{{2, 5}, {1, -2}, {4, -2}}.expand(ring, N), N);
  });
}

template <class R>
SeriesPtr<R> psi(const R& ring, std::size_t N) {
  return series_cache<R>().get_or_build("psi", ring, N, [&] {
    return detail::dual_checked("psi", theta_f(ring, ThetaSpec(1, 1, 1, 3), N),
                                EtaQuotient{{2, 2}, {1, -1}}.expand(ring, N), N);
  });
}

template <class R>
SeriesPtr<R> phi_neg(const R& ring, std::size_t N) {
  return series_cache<R>().get_or_build("phi_neg", ring, N, [&] {
    return detail::dual_checked("phi_neg", theta_f(ring, ThetaSpec(-1, 1, -1, 1), N),
                                EtaQuotient{{1, 2}, {2, -1}}.expand(ring, N), N);
  });
}

template <class R>
SeriesPtr<R> f_neg(const R& ring, std::size_t N) {
  return series_cache<R>().get_or_build("f_neg", ring, N, [&] {
    return detail::dual_checked("f_neg", theta_f(ring, ThetaSpec(-1, 1, -1, 2), N),
                                eta_series(ring, 1, N), N);
  });
}

// w(q) = f1 f6^3 / (f2 f3^3); a unit series used by the 3-dissections
template <class R>
SeriesPtr<R> w_series(const R& ring, std::size_t N) {
  return series_cache<R>().get_or_build("w", ring, N, [&] {
    return EtaQuotient{{1, 1}, {6, 3}, {2, -1}, {3, -3}}.expand(ring, N);
  });
}

// P(q) = f1 (phi^3(-q^3)/phi(-q) + 4 q psi^3(q^3)/psi(q)); checked against its
// Lambert-series form f1 (1 + 6 sum (q^{3n+1}/(1-q^{3n+1}) - q^{3n+2}/(1-q^{3n+2})))
template <class R>
SeriesPtr<R> p_series(const R& ring, std::size_t N) {
  return series_cache<R>().get_or_build("P", ring, N, [&] {
    SeriesPtr<R> f1 = eta(ring, 1, N);

    Series<R> phi3 = at_power([](const R& rr, std::size_t nn) { return phi_neg(rr, nn); },
                              ring, 3, N);
    Series<R> psi3 = at_power([](const R& rr, std::size_t nn) { return psi(rr, nn); },
                              ring, 3, N);
    Series<R> term_a = div(pow(phi3, 3), *phi_neg(ring, N));
    Series<R> term_b = scale(shift(div(pow(psi3, 3), *psi(ring, N)), 1), 4);
    Series<R> theta_form = mul(*f1, add(term_a, term_b));

    std::vector<typename R::Value> lam(N);
    for (std::size_t base = 1; base < N; ++base) {
      const int chi = base % 3 == 1 ? 1 : (base % 3 == 2 ? -1 : 0);
      if (chi == 0) continue;
      const typename R::Value t = ring.from_long(chi);
      for (std::size_t e = base; e < N; e += base) ring.add_assign(lam[e], t);
    }
    Series<R> bracket = Series<R>::from_coeffs(ring, std::move(lam));
    bracket = add(scale(bracket, 6), one_series(ring, N));
    Series<R> lambert_form = mul(*f1, bracket);

    return detail::dual_checked("P", std::move(theta_form), lambert_form, N);
  });
}

// --- partition-family generating functions ---
struct GeneratingFunctionId {
  enum class Kind { TCore, Cubic, B, C, D, HOdd };

  Kind kind = Kind::Cubic;
  long t = 0;  // only for TCore

  static GeneratingFunctionId tcore(long t) {
    if (t < 2) throw std::invalid_argument("tcore: need t >= 2");
    return {Kind::TCore, t};
  }
  static GeneratingFunctionId cubic() { return {Kind::Cubic, 0}; }
  static GeneratingFunctionId b() { return {Kind::B, 0}; }
  static GeneratingFunctionId c() { return {Kind::C, 0}; }
  static GeneratingFunctionId d() { return {Kind::D, 0}; }
  static GeneratingFunctionId h_odd() { return {Kind::HOdd, 0}; }

  bool operator==(const GeneratingFunctionId&) const = default;

  std::string str() const;
  static std::optional<GeneratingFunctionId> parse(const std::string& name);
};

// gf(tcore(t)) = f_t^t / f1            (t-core partitions)
// gf(cubic)    = 1 / (f1 f2)           (cubic partitions a(n))
// gf(b)        = f4^3 / f2^2
// gf(c)        = q f6^3 / (f1 f2)      (coefficient of q^n is c(n))
// gf(d)        = f3^3 / (f1 f2)
// gf(h_odd)    = f2^3 / f1^2           (overpartition-style h(2n+1) carrier)
template <class R>
SeriesPtr<R> gf(const R& ring, const GeneratingFunctionId& id, std::size_t N) {
  using Kind = GeneratingFunctionId::Kind;
  return series_cache<R>().get_or_build("gf:" + id.str(), ring, N, [&]() -> Series<R> {
    switch (id.kind) {
      case Kind::TCore:
        return EtaQuotient{{id.t, id.t}, {1, -1}}.expand(ring, N);
      case Kind::Cubic:
        return EtaQuotient{{1, -1}, {2, -1}}.expand(ring, N);
      case Kind::B:
        return EtaQuotient{{4, 3}, {2, -2}}.expand(ring, N);
      case Kind::C:
        return shift(EtaQuotient{{6, 3}, {1, -1}, {2, -1}}.expand(ring, N), 1);
      case Kind::D:
        return EtaQuotient{{3, 3}, {1, -1}, {2, -1}}.expand(ring, N);
      case Kind::HOdd:
        return EtaQuotient{{2, 3}, {1, -2}}.expand(ring, N);
    }
    throw std::logic_error("gf: unknown id");
  });
}

}  // namespace qcv
