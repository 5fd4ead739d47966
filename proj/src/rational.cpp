#include "zhat/rational.hpp"

#include "zhat/errors.hpp"

#include <cctype>

namespace zhat {

Rational makeRational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string toString(const Rational& r) { return r.get_str(); }
std::string toString(const Integer& z) { return z.get_str(); }

namespace {

bool validIntegerText(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Integer parseInteger(std::string_view text) {
  if (!validIntegerText(text)) {
    throw FormatError("not an integer: '" + std::string(text) + "'");
  }
  std::string s(text);
  if (s[0] == '+') s.erase(0, 1);
  return Integer(s, 10);
}

Rational parseRational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parseInteger(text));
  const Integer num = parseInteger(text.substr(0, slash));
  const std::string_view denText = text.substr(slash + 1);
  if (!denText.empty() && (denText[0] == '-' || denText[0] == '+')) {
    throw FormatError("denominator must be unsigned: '" + std::string(text) + "'");
  }
  const Integer den = parseInteger(denText);
  if (den == 0) throw FormatError("zero denominator: '" + std::string(text) + "'");
  return makeRational(num, den);
}

bool isInteger(const Rational& r) { return r.get_den() == 1; }

Integer floorOf(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Integer ceilOf(const Rational& r) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Integer floorSqrt(const Rational& r) {
  if (r < 0) throw std::domain_error("floorSqrt of a negative rational");
  // floor(sqrt(r)) == isqrt(floor(r))
  Integer f = floorOf(r);
  Integer s;
  mpz_sqrt(s.get_mpz_t(), f.get_mpz_t());
  return s;
}

long dyadicExponent(const Rational& r) {
  Integer den = r.get_den();
  const auto twos = static_cast<long>(mpz_scan1(den.get_mpz_t(), 0));
  mpz_tdiv_q_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(twos));
  return den == 1 ? twos : -1;
}

Integer gcdOf(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer lcmOf(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

Integer absOf(const Integer& z) { return z < 0 ? Integer(-z) : z; }

}  // namespace zhat
