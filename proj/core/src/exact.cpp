#include "severi/exact.hpp"

#include "severi/errors.hpp"

namespace severi {

ExactInt binom(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  ExactInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

ExactInt multinom(std::int64_t n, std::int64_t a, std::int64_t b) {
  if (n < 0 || a < 0 || b < 0 || a + b > n) return 0;
  return binom(n, a) * binom(n - a, b);
}

std::string to_string(const ExactInt& value) { return value.get_str(); }

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

ExactInt parse_exact(const std::string& text) {
  std::size_t start = (!text.empty() && text[0] == '-') ? 1 : 0;
  if (start == text.size()) throw ParseError("expected an integer, got '" + text + "'");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') throw ParseError("expected an integer, got '" + text + "'");
  }
  return ExactInt(text, 10);
}

bool is_integer(const Rational& value) { return value.get_den() == 1; }

ExactInt require_integer(const Rational& value, const std::string& what) {
  if (!is_integer(value)) {
    throw ConsistencyError(what + " is not an integer", {{what, to_string(value)}});
  }
  return value.get_num();
}

}  // namespace severi
