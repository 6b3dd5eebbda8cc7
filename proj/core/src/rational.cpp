#include "selberg/rational.hpp"

#include <cctype>

#include "selberg/error.hpp"

namespace selberg {

namespace {

bool valid_integer(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

std::string trimmed(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string s = trimmed(text);
  const auto slash = s.find('/');
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den) || den.front() == '-' || den.front() == '+') {
    fail(ErrorKind::parse, "malformed rational '" + s + "'");
  }
  Integer p(num.front() == '+' ? num.substr(1) : num, 10);
  Integer q(den, 10);
  if (q == 0) fail(ErrorKind::parse, "zero denominator in '" + s + "'");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational ratio(const Integer& num, const Integer& den) {
  if (den == 0) fail(ErrorKind::singular, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational ratio(long num, long den) { return ratio(Integer(num), Integer(den)); }

double to_double(const Rational& value) { return value.get_d(); }

bool exact_sqrt(const Rational& value, Rational& root) {
  if (sgn(value) < 0) return false;
  if (!mpz_perfect_square_p(value.get_num().get_mpz_t()) ||
      !mpz_perfect_square_p(value.get_den().get_mpz_t())) {
    return false;
  }
  Integer p = sqrt(value.get_num());
  Integer q = sqrt(value.get_den());
  root = ratio(p, q);
  return true;
}

}  // namespace selberg
