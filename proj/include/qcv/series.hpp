#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qcv/ring.hpp"

namespace qcv {

// Truncated formal power series: a series of order N stores coefficients of
// q^0 .. q^{N-1}; everything from q^N on is unknown, not zero.  Series are
// immutable once constructed.  When a series has few nonzero terms a sparse
// view of its support is attached so products and divisions can run in
// O(N * #terms) instead of O(N^2).

template <class R>
struct SparseSupport {
  // (exponent, coefficient), ascending exponents, coefficients nonzero
  std::vector<std::pair<std::size_t, typename R::Value>> terms;
};

inline std::size_t sparse_term_limit(std::size_t order) {
  return static_cast<std::size_t>(4.0 * std::sqrt(static_cast<double>(order)));
}

template <class R>
class Series {
 public:
  using Value = typename R::Value;

  Series(R ring, std::size_t order) : ring_(std::move(ring)), c_(order) { detect_support(); }

  static Series constant(R ring, long v, std::size_t order) {
    std::vector<Value> c(order);
    if (order > 0) c[0] = ring.from_long(v);
    return from_coeffs(std::move(ring), std::move(c));
  }

  static Series from_coeffs(R ring, std::vector<Value> c) {
    Series s(Private{}, std::move(ring), std::move(c));
    s.detect_support();
    return s;
  }

  const R& ring() const { return ring_; }
  std::size_t order() const { return c_.size(); }

  const Value& operator[](std::size_t n) const { return c_[n]; }
  const Value& coeff(std::size_t n) const {
    if (n >= c_.size())
      throw std::out_of_range("Series::coeff: index " + std::to_string(n) +
                              " >= order " + std::to_string(c_.size()));
    return c_[n];
  }
  const std::vector<Value>& coeffs() const { return c_; }

  bool is_zero() const {
    for (const Value& v : c_)
      if (!ring_.is_zero(v)) return false;
    return true;
  }

  // index of the first nonzero coefficient, if any
  std::optional<std::size_t> valuation() const {
    for (std::size_t n = 0; n < c_.size(); ++n)
      if (!ring_.is_zero(c_[n])) return n;
    return std::nullopt;
  }

  const SparseSupport<R>* support() const { return support_ ? &*support_ : nullptr; }

  bool operator==(const Series& o) const {
    if (!(ring_ == o.ring_) || c_.size() != o.c_.size()) return false;
    for (std::size_t n = 0; n < c_.size(); ++n)
      if (!ring_.equal(c_[n], o.c_[n])) return false;
    return true;
  }

 private:
  struct Private {};
  Series(Private, R ring, std::vector<Value> c) : ring_(std::move(ring)), c_(std::move(c)) {}

  void detect_support() {
    support_.reset();
    const std::size_t limit = sparse_term_limit(c_.size());
    std::vector<std::pair<std::size_t, Value>> terms;
    for (std::size_t n = 0; n < c_.size(); ++n) {
      if (ring_.is_zero(c_[n])) continue;
      if (terms.size() >= limit) return;  // too dense, keep no support
      terms.emplace_back(n, c_[n]);
    }
    support_ = SparseSupport<R>{std::move(terms)};
  }

  R ring_;
  std::vector<Value> c_;
  std::optional<SparseSupport<R>> support_;
};

template <class R>
void require_same_ring(const Series<R>& a, const Series<R>& b, const char* op) {
  if (!(a.ring() == b.ring()))
    throw std::invalid_argument(std::string(op) + ": operands live in different rings (" +
                                a.ring().name() + " vs " + b.ring().name() + ")");
}

template <class R>
Series<R> zero_series(const R& ring, std::size_t order) {
  return Series<R>(ring, order);
}

template <class R>
Series<R> one_series(const R& ring, std::size_t order) {
  return Series<R>::constant(ring, 1, order);
}

template <class R>
Series<R> add(const Series<R>& a, const Series<R>& b) {
  require_same_ring(a, b, "add");
  const R& ring = a.ring();
  const std::size_t n_out = std::min(a.order(), b.order());
  std::vector<typename R::Value> out(a.coeffs().begin(), a.coeffs().begin() + n_out);
  for (std::size_t n = 0; n < n_out; ++n) ring.add_assign(out[n], b[n]);
  return Series<R>::from_coeffs(ring, std::move(out));
}

template <class R>
Series<R> sub(const Series<R>& a, const Series<R>& b) {
  require_same_ring(a, b, "sub");
  const R& ring = a.ring();
  const std::size_t n_out = std::min(a.order(), b.order());
  std::vector<typename R::Value> out(a.coeffs().begin(), a.coeffs().begin() + n_out);
  for (std::size_t n = 0; n < n_out; ++n) ring.sub_assign(out[n], b[n]);
  return Series<R>::from_coeffs(ring, std::move(out));
}

template <class R>
Series<R> negate(const Series<R>& a) {
  const R& ring = a.ring();
  std::vector<typename R::Value> out(a.order());
  for (std::size_t n = 0; n < a.order(); ++n) out[n] = ring.neg(a[n]);
  return Series<R>::from_coeffs(ring, std::move(out));
}

template <class R>
Series<R> scale(const Series<R>& a, long k) {
  const R& ring = a.ring();
  const typename R::Value f = ring.from_long(k);
  std::vector<typename R::Value> out(a.order());
  for (std::size_t n = 0; n < a.order(); ++n) out[n] = ring.mul(f, a[n]);
  return Series<R>::from_coeffs(ring, std::move(out));
}

namespace detail {

// out[e+j] += c * b[j] for j < len, with fast paths for c = +-1
template <class R>
void accumulate_scaled_run(const R& ring, std::vector<typename R::Value>& out, std::size_t e,
                           const Series<R>& b, std::size_t len, const typename R::Value& c) {
  if (ring.is_one(c)) {
    for (std::size_t j = 0; j < len; ++j) ring.add_assign(out[e + j], b[j]);
  } else if (ring.is_minus_one(c)) {
    for (std::size_t j = 0; j < len; ++j) ring.sub_assign(out[e + j], b[j]);
  } else {
    for (std::size_t j = 0; j < len; ++j) ring.addmul_value(out[e + j], c, b[j]);
  }
}

}  // namespace detail

template <class R>
Series<R> mul(const Series<R>& a, const Series<R>& b) {
  require_same_ring(a, b, "mul");
  const R& ring = a.ring();
  const std::size_t n_out = std::min(a.order(), b.order());
  std::vector<typename R::Value> out(n_out);  // value-initialized to zero

  const SparseSupport<R>* sa = a.support();
  const SparseSupport<R>* sb = b.support();
  if (sa && sb) {
    for (const auto& [ea, ca] : sa->terms) {
      if (ea >= n_out) break;
      for (const auto& [eb, cb] : sb->terms) {
        const std::size_t e = ea + eb;
        if (e >= n_out) break;
        ring.addmul_value(out[e], ca, cb);
      }
    }
  } else if (sa || sb) {
    const Series<R>& dense = sa ? b : a;
    for (const auto& [e, c] : (sa ? sa : sb)->terms) {
      if (e >= n_out) break;
      detail::accumulate_scaled_run(ring, out, e, dense, n_out - e, c);
    }
  } else {
    for (std::size_t i = 0; i < n_out; ++i) {
      if (ring.is_zero(a[i])) continue;
      detail::accumulate_scaled_run(ring, out, i, b, n_out - i, a[i]);
    }
  }
  return Series<R>::from_coeffs(ring, std::move(out));
}

// Product using known valuations: when a = q^va * A and b = q^vb * B with A, B
// full-order series, the product of the truncations is still exact out to
// min(order(a) + vb, order(b) + va).
template <class R>
Series<R> mul(const Series<R>& a, const Series<R>& b, std::size_t va, std::size_t vb) {
  require_same_ring(a, b, "mul");
  const R& ring = a.ring();
  if ((a.valuation().value_or(a.order()) < va) || (b.valuation().value_or(b.order()) < vb))
    throw std::invalid_argument("mul: stated valuation exceeds actual");
  const std::size_t n_out = std::min(a.order() + vb, b.order() + va);
  std::vector<typename R::Value> out(n_out);  // value-initialized to zero
  for (std::size_t i = va; i < a.order(); ++i) {
    if (ring.is_zero(a[i])) continue;
    const std::size_t j_hi = std::min(b.order(), n_out > i ? n_out - i : 0);
    for (std::size_t j = vb; j < j_hi; ++j) ring.addmul_value(out[i + j], a[i], b[j]);
  }
  return Series<R>::from_coeffs(ring, std::move(out));
}

// Quotient a/b where b has a unit constant term.  Uses the standard
// recurrence b0 * x_n = a_n - sum_{k>=1} b_k x_{n-k}; runs in O(N * #terms)
// when b carries sparse support.
template <class R>
Series<R> div(const Series<R>& a, const Series<R>& b) {
  require_same_ring(a, b, "div");
  const R& ring = a.ring();
  const std::size_t n_out = std::min(a.order(), b.order());
  if (n_out == 0) return Series<R>(ring, 0);
  if (!ring.is_unit(b[0]))
    throw std::domain_error("div: divisor constant term is not a unit (" + ring.str(b[0]) + ")");
  const typename R::Value inv0 = ring.unit_inverse(b[0]);
  const bool inv_is_one = ring.is_one(inv0);

  std::vector<typename R::Value> out(n_out);  // value-initialized to zero

  const SparseSupport<R>* sb = b.support();
  for (std::size_t n = 0; n < n_out; ++n) {
    typename R::Acc s = ring.acc_zero();
    if (sb) {
      for (const auto& [e, c] : sb->terms) {
        if (e == 0) continue;
        if (e > n) break;
        ring.acc_addmul(s, c, out[n - e]);
      }
    } else {
      for (std::size_t e = 1; e <= n; ++e) {
        if (ring.is_zero(b[e])) continue;
        ring.acc_addmul(s, b[e], out[n - e]);
      }
    }
    typename R::Value r = ring.sub(a[n], ring.acc_value(std::move(s)));
    out[n] = inv_is_one ? std::move(r) : ring.mul(inv0, r);
  }
  return Series<R>::from_coeffs(ring, std::move(out));
}

template <class R>
Series<R> invert(const Series<R>& a) {
  return div(one_series(a.ring(), a.order()), a);
}

template <class R>
Series<R> pow(const Series<R>& a, long e) {
  const R& ring = a.ring();
  if (e < 0) return pow(invert(a), -e);
  Series<R> acc = one_series(ring, a.order());
  if (e == 0) return acc;
  Series<R> base = a;
  unsigned long k = static_cast<unsigned long>(e);
  while (true) {
    if (k & 1) acc = mul(acc, base);
    k >>= 1;
    if (k == 0) break;
    base = mul(base, base);
  }
  return acc;
}

// q^k * a, same order (top k coefficients fall off the truncation)
template <class R>
Series<R> shift(const Series<R>& a, std::size_t k) {
  const R& ring = a.ring();
  const std::size_t n_out = a.order();
  std::vector<typename R::Value> out(n_out);  // value-initialized to zero
  for (std::size_t n = k; n < n_out; ++n) out[n] = a[n - k];
  return Series<R>::from_coeffs(ring, std::move(out));
}

template <class R>
Series<R> truncate(const Series<R>& a, std::size_t new_order) {
  if (new_order > a.order())
    throw std::invalid_argument("truncate: requested order exceeds known order");
  std::vector<typename R::Value> out(a.coeffs().begin(), a.coeffs().begin() + new_order);
  return Series<R>::from_coeffs(a.ring(), std::move(out));
}

// sum_n coeff(A n + B) q^n
template <class R>
Series<R> extract_progression(const Series<R>& a, std::size_t A, std::size_t B) {
  if (A == 0) throw std::invalid_argument("extract_progression: step must be positive");
  if (B >= A) throw std::invalid_argument("extract_progression: offset must satisfy B < A");
  const std::size_t N = a.order();
  const std::size_t n_out = N > B ? (N - B + A - 1) / A : 0;
  std::vector<typename R::Value> out(n_out);
  for (std::size_t n = 0; n < n_out; ++n) out[n] = a[A * n + B];
  return Series<R>::from_coeffs(a.ring(), std::move(out));
}

// a(q^k), order k * order(a) unless capped
template <class R>
Series<R> substitute_power(const Series<R>& a, std::size_t k,
                           std::size_t cap = std::numeric_limits<std::size_t>::max()) {
  if (k == 0) throw std::invalid_argument("substitute_power: exponent must be positive");
  const R& ring = a.ring();
  std::size_t n_out = a.order();
  if (n_out > cap / k)
    n_out = cap;  // avoid overflow of a.order() * k
  else
    n_out = std::min(a.order() * k, cap);
  std::vector<typename R::Value> out(n_out);  // value-initialized to zero
  for (std::size_t n = 0; n * k < n_out; ++n) out[n * k] = a[n];
  return Series<R>::from_coeffs(ring, std::move(out));
}

inline Series<ModRing> reduce_mod(const Series<ExactRing>& a, std::uint64_t m) {
  ModRing ring(m);
  std::vector<ModRing::Value> out(a.order());
  for (std::size_t n = 0; n < a.order(); ++n)
    out[n] = mpz_fdiv_ui(a[n].get_mpz_t(), static_cast<unsigned long>(m));
  return Series<ModRing>::from_coeffs(ring, std::move(out));
}

// In-place binomial helpers on raw coefficient vectors: multiply or divide by
// (1 + s q^e) in one O(N) pass.  These are the workhorses for Pochhammer
// products and mock theta term recurrences.
namespace detail {

template <class R>
void mul_binomial_inplace(const R& ring, std::vector<typename R::Value>& c, int s,
                          std::size_t e) {
  if (s != 1 && s != -1) throw std::invalid_argument("mul_binomial: sign must be +-1");
  if (e == 0) throw std::invalid_argument("mul_binomial: exponent must be positive");
  if (c.size() <= e) return;
  if (s == 1) {
    for (std::size_t n = c.size() - 1; n >= e; --n) {
      ring.add_assign(c[n], c[n - e]);
      if (n == e) break;
    }
  } else {
    for (std::size_t n = c.size() - 1; n >= e; --n) {
      ring.sub_assign(c[n], c[n - e]);
      if (n == e) break;
    }
  }
}

template <class R>
void div_binomial_inplace(const R& ring, std::vector<typename R::Value>& c, int s,
                          std::size_t e) {
  if (s != 1 && s != -1) throw std::invalid_argument("div_binomial: sign must be +-1");
  if (e == 0) throw std::invalid_argument("div_binomial: exponent must be positive");
  for (std::size_t n = e; n < c.size(); ++n) {
    if (s == 1)
      ring.sub_assign(c[n], c[n - e]);
    else
      ring.add_assign(c[n], c[n - e]);
  }
}

}  // namespace detail

template <class R>
Series<R> mul_binomial(const Series<R>& a, int s, std::size_t e) {
  std::vector<typename R::Value> c(a.coeffs());
  detail::mul_binomial_inplace(a.ring(), c, s, e);
  return Series<R>::from_coeffs(a.ring(), std::move(c));
}

template <class R>
Series<R> div_binomial(const Series<R>& a, int s, std::size_t e) {
  std::vector<typename R::Value> c(a.coeffs());
  detail::div_binomial_inplace(a.ring(), c, s, e);
  return Series<R>::from_coeffs(a.ring(), std::move(c));
}

// first index < upto where a and b differ; both series must know that far
template <class R>
std::optional<std::size_t> first_mismatch(const Series<R>& a, const Series<R>& b,
                                          std::size_t upto) {
  require_same_ring(a, b, "first_mismatch");
  if (a.order() < upto || b.order() < upto)
    throw std::invalid_argument("first_mismatch: series not known to requested order");
  for (std::size_t n = 0; n < upto; ++n)
    if (!a.ring().equal(a[n], b[n])) return n;
  return std::nullopt;
}

template <class R>
Series<R> operator+(const Series<R>& a, const Series<R>& b) {
  return add(a, b);
}
template <class R>
Series<R> operator-(const Series<R>& a, const Series<R>& b) {
  return sub(a, b);
}
template <class R>
Series<R> operator-(const Series<R>& a) {
  return negate(a);
}
template <class R>
Series<R> operator*(const Series<R>& a, const Series<R>& b) {
  return mul(a, b);
}
template <class R>
Series<R> operator*(long k, const Series<R>& a) {
  return scale(a, k);
}

}  // namespace qcv
