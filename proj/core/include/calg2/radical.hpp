#pragma once

#include <map>
#include <string>

#include "calg2/rational.hpp"

namespace calg2 {

// Element of Q(sqrt 2, sqrt 3, ...): a finite sum of q * sqrt(m) over
// squarefree m >= 1. Closed under +, -, *; has an exact sign.
class Radical {
 public:
  using Terms = std::map<unsigned long, Rational>;

  Radical() = default;
  Radical(const Rational& q);  // NOLINT: implicit promotion is intended
  Radical(long n) : Radical(Rational(n)) {}  // NOLINT

  // sqrt(d) for any d >= 0, with square factors pulled out.
  static Radical sqrt_of(unsigned long d);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  Rational rational_part() const;
  int sign() const;

  Radical operator-() const;
  Radical& operator+=(const Radical& o);
  Radical& operator-=(const Radical& o);
  Radical& operator*=(const Radical& o);
  friend Radical operator+(Radical a, const Radical& b) { return a += b; }
  friend Radical operator-(Radical a, const Radical& b) { return a -= b; }
  friend Radical operator*(Radical a, const Radical& b) { return a *= b; }
  friend bool operator==(const Radical& a, const Radical& b) { return a.terms_ == b.terms_; }

  // Renders as a sum like "2+3/2*s3-s70".
  std::string to_string() const;

 private:
  void add_term(unsigned long m, const Rational& q);
  Terms terms_;
};

inline bool is_zero(const Radical& r) { return r.is_zero(); }
inline int sign(const Radical& r) { return r.sign(); }

}  // namespace calg2
