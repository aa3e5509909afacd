#include "calg2/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace calg2 {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  bool seen_digit = false, seen_slash = false, digit_after_slash = false;
  for (; i < s.size(); ++i) {
    if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      seen_digit = true;
      if (seen_slash) digit_after_slash = true;
    } else if (s[i] == '/' && seen_digit && !seen_slash) {
      seen_slash = true;
    } else {
      throw std::invalid_argument("malformed rational '" + s + "'");
    }
  }
  if (!seen_digit || (seen_slash && !digit_after_slash))
    throw std::invalid_argument("malformed rational '" + s + "'");
  if (s[0] == '+') s.erase(0, 1);
  Rational q;
  q.set_str(s, 10);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace calg2
