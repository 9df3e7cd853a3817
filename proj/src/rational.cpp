#include "relpoly/rational.hpp"

#include <cctype>
#include <limits>

#include "relpoly/error.hpp"

namespace relpoly {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

[[noreturn]] void bad(std::string_view text) {
  throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(text) + "'");
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Rational q;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash);
    auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad(text);
    Integer d(std::string(den), 10);
    if (d == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
    q = Rational(Integer(std::string(num), 10), d);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto whole = body.substr(0, dot);
    auto frac = body.substr(dot + 1);
    if (whole.empty()) whole = "0";
    if (!all_digits(whole) || (!frac.empty() && !all_digits(frac))) bad(text);
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    Integer digits(std::string(whole) + std::string(frac), 10);
    q = Rational(digits, scale);
  } else {
    if (!all_digits(body)) bad(text);
    q = Rational(Integer(std::string(body), 10));
  }
  q.canonicalize();
  if (negative) q = -q;
  return q;
}

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

bool is_integer(const Rational& q) { return mpz_divisible_p(q.get_num_mpz_t(), q.get_den_mpz_t()) != 0; }

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

std::int64_t to_int64(const Integer& z) {
  if (z > std::numeric_limits<long>::max() || z < std::numeric_limits<long>::min())
    throw Error(ErrorCode::InvalidArgument, "integer " + z.get_str() + " out of 64-bit range");
  return z.get_si();
}

std::int64_t to_int64_exact(const Rational& q) {
  if (!is_integer(q))
    throw Error(ErrorCode::InvalidArgument, "expected an integer, got " + q.get_str());
  return to_int64(q.get_num());
}

}  // namespace relpoly
