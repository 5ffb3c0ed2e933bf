#include "galring/arith/rational.hpp"

#include <cctype>

#include "galring/error.hpp"

namespace galring {

namespace {

bool is_integer_text(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

BigInt parse_integer(std::string_view s) {
  if (!is_integer_text(s)) fail(ErrorKind::Parse, "not an integer: '" + std::string(s) + "'");
  if (s.front() == '+') s.remove_prefix(1);
  return BigInt(std::string(s), 10);
}

}  // namespace

BigRational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return BigRational(parse_integer(text));
  BigInt num = parse_integer(text.substr(0, slash));
  BigInt den = parse_integer(text.substr(slash + 1));
  if (den == 0) fail(ErrorKind::DivisionByZero, "zero denominator in '" + std::string(text) + "'");
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const BigRational& value) { return value.get_str(10); }
std::string to_string(const BigInt& value) { return value.get_str(10); }

BigRational pow(const BigRational& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) fail(ErrorKind::DivisionByZero, "negative power of zero");
    return pow(BigRational(1) / base, -exponent);
  }
  BigRational result(1);
  mpz_pow_ui(result.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(result.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return result;
}

}  // namespace galring
