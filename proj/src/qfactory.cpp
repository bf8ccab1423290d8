#include "qcv/qfactory.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

namespace qcv {

std::size_t ceil_div(std::size_t a, std::size_t b) { return b == 0 ? 0 : (a + b - 1) / b; }

std::string ThetaSpec::str() const {
  auto part = [](int s, long long e) {
    std::string t = s < 0 ? "-q" : "q";
    if (e != 1) t += "^" + std::to_string(e);
    return t;
  };
  return "f(" + part(sign_a, alpha) + ", " + part(sign_b, beta) + ")";
}

std::string EtaQuotient::str() const {
  auto factor = [](long k, long e) {
    std::string t = "f" + std::to_string(k);
    if (e != 1) t += "^" + std::to_string(e);
    return t;
  };
  std::string num, den;
  std::size_t den_count = 0;
  for (const auto& [k, e] : factors_) {
    if (e > 0) {
      if (!num.empty()) num += "*";
      num += factor(k, e);
    } else {
      if (!den.empty()) den += "*";
      den += factor(k, -e);
      ++den_count;
    }
  }
  if (num.empty()) num = "1";
  if (den.empty()) return num;
  if (den_count > 1) den = "(" + den + ")";
  return num + "/" + den;
}

std::string EtaExpr::str() const {
  std::string s;
  if (prefactor != 1) s += std::to_string(prefactor) + "*";
  if (q_shift == 1)
    s += "q*";
  else if (q_shift > 1)
    s += "q^" + std::to_string(q_shift) + "*";
  s += quotient.str();
  return s;
}

std::string GeneratingFunctionId::str() const {
  switch (kind) {
    case Kind::TCore:
      return "tcore(" + std::to_string(t) + ")";
    case Kind::Cubic:
      return "cubic";
    case Kind::B:
      return "b";
    case Kind::C:
      return "c";
    case Kind::D:
      return "d";
    case Kind::HOdd:
      return "h_odd";
  }
  return "?";
}

std::optional<GeneratingFunctionId> GeneratingFunctionId::parse(const std::string& name) {
  if (name == "cubic") return cubic();
  if (name == "b") return b();
  if (name == "c") return c();
  if (name == "d") return d();
  if (name == "h_odd") return h_odd();
  if (name.rfind("tcore(", 0) == 0 && name.back() == ')') {
    const std::string inner = name.substr(6, name.size() - 7);
    if (inner.empty() || inner.find_first_not_of("0123456789") != std::string::npos)
      return std::nullopt;
    long t = std::stol(inner);
    if (t < 2) return std::nullopt;
    return tcore(t);
  }
  return std::nullopt;
}

namespace {

// recursive-descent parser for the CLI eta-quotient grammar
struct EtaParser {
  const std::string& s;
  std::size_t pos = 0;

  explicit EtaParser(const std::string& text) : s(text) {}

  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument("parse error at position " + std::to_string(pos) + ": " + msg +
                                " in \"" + s + "\"");
  }

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  long long integer() {
    skip_ws();
    bool neg = false;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) neg = s[pos++] == '-';
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
      fail("expected integer");
    long long v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + (s[pos] - '0');
      if (v > (1ll << 40)) fail("integer too large");
      ++pos;
    }
    return neg ? -v : v;
  }

  long long exponent_opt() { return eat('^') ? integer() : 1; }

  // accumulated value: prefactor num/den, signed q shift, eta factors
  struct Val {
    long long num = 1, den = 1;
    long long shift = 0;
    EtaQuotient eq;

    void combine(const Val& o, bool divide) {
      if (divide) {
        num *= o.den;
        den *= o.num;
      } else {
        num *= o.num;
        den *= o.den;
      }
      shift += divide ? -o.shift : o.shift;
      for (const auto& [k, e] : o.eq.factors()) eq.mul_factor(k, divide ? -e : e);
    }
  };

  Val term() {
    skip_ws();
    if (pos >= s.size()) fail("unexpected end of input");
    const char c = s[pos];
    Val v;
    if (c == '(') {
      ++pos;
      v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (c == 'q') {
      ++pos;
      const long long e = exponent_opt();
      if (e < 0) fail("negative power of q");
      v.shift = e;
      return v;
    }
    if (c == 'f') {
      ++pos;
      skip_ws();
      if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
        fail("expected eta scale after 'f'");
      const long long k = integer();
      const long long e = exponent_opt();
      if (k <= 0) fail("eta scale must be positive");
      v.eq.mul_factor(static_cast<long>(k), static_cast<long>(e));
      return v;
    }
    if (c == '-' || c == '+' || std::isdigit(static_cast<unsigned char>(c))) {
      const long long n = integer();
      if (n == 0) fail("zero prefactor");
      v.num = n;
      return v;
    }
    fail("expected term");
  }

  Val expr() {
    Val v = term();
    while (true) {
      if (eat('*')) {
        v.combine(term(), false);
      } else if (eat('/')) {
        v.combine(term(), true);
      } else {
        break;
      }
    }
    return v;
  }
};

}  // namespace

EtaExpr parse_eta_expr(const std::string& text) {
  EtaParser p(text);
  EtaParser::Val v = p.expr();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  if (v.shift < 0)
    throw std::invalid_argument("expression has a pole at q = 0 (net negative power of q)");
  if (v.den == 0 || v.num % v.den != 0)
    throw std::invalid_argument("prefactor " + std::to_string(v.num) + "/" +
                                std::to_string(v.den) + " is not an integer");
  EtaExpr out;
  out.prefactor = v.num / v.den;
  out.q_shift = static_cast<std::size_t>(v.shift);
  out.quotient = v.eq;
  return out;
}

}  // namespace qcv
