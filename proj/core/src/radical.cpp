#include "calg2/radical.hpp"

#include <numeric>
#include <stdexcept>

namespace calg2 {

namespace {

unsigned long smallest_prime_factor(unsigned long m) {
  for (unsigned long p = 2; p * p <= m; ++p)
    if (m % p == 0) return p;
  return m;
}

}  // namespace

Radical::Radical(const Rational& q) {
  if (!calg2::is_zero(q)) terms_.emplace(1, q);
}

Radical Radical::sqrt_of(unsigned long d) {
  if (d == 0) return {};
  unsigned long outside = 1, inside = 1, rest = d;
  while (rest > 1) {
    unsigned long p = smallest_prime_factor(rest);
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) outside *= p;
    if (e % 2) inside *= p;
  }
  Radical r;
  r.terms_.emplace(inside, Rational(outside));
  return r;
}

bool Radical::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
}

Rational Radical::rational_part() const {
  auto it = terms_.find(1);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Radical::add_term(unsigned long m, const Rational& q) {
  auto [it, inserted] = terms_.emplace(m, q);
  if (!inserted) {
    it->second += q;
    if (calg2::is_zero(it->second)) terms_.erase(it);
  } else if (calg2::is_zero(q)) {
    terms_.erase(it);
  }
}

Radical Radical::operator-() const {
  Radical r = *this;
  for (auto& [m, q] : r.terms_) q = -q;
  return r;
}

Radical& Radical::operator+=(const Radical& o) {
  for (const auto& [m, q] : o.terms_) add_term(m, q);
  return *this;
}

Radical& Radical::operator-=(const Radical& o) {
  for (const auto& [m, q] : o.terms_) add_term(m, -q);
  return *this;
}

Radical& Radical::operator*=(const Radical& o) {
  Radical r;
  for (const auto& [m, q] : terms_) {
    for (const auto& [n, p] : o.terms_) {
      // sqrt(m) sqrt(n) = g sqrt(mn/g^2), g = gcd(m, n)
      unsigned long g = std::gcd(m, n);
      Rational c = q * p * Rational(g);
      r.add_term((m / g) * (n / g), c);
    }
  }
  *this = std::move(r);
  return *this;
}

int Radical::sign() const {
  if (terms_.empty()) return 0;
  if (is_rational()) return sgn(terms_.begin()->second);
  // Split x = u + v sqrt(p) on a prime p dividing some radicand; u, v avoid p.
  unsigned long p = 0;
  for (const auto& [m, q] : terms_)
    if (m > 1) {
      p = smallest_prime_factor(m);
      break;
    }
  Radical u, v;
  for (const auto& [m, q] : terms_) {
    if (m % p == 0)
      v.add_term(m / p, q);
    else
      u.add_term(m, q);
  }
  int su = u.sign(), sv = v.sign();
  if (su == 0) return sv;
  if (sv == 0 || su == sv) return su;
  // Opposite signs: compare u^2 with p v^2.
  Radical diff = u * u - Radical(Rational(static_cast<long>(p))) * v * v;
  return su * diff.sign();
}

std::string Radical::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, q] : terms_) {
    Rational a = abs(q);
    if (sgn(q) < 0)
      out += "-";
    else if (!first)
      out += "+";
    first = false;
    if (m == 1) {
      out += calg2::to_string(a);
    } else {
      if (a != 1) out += calg2::to_string(a) + "*";
      out += "s" + std::to_string(m);
    }
  }
  return out;
}

}  // namespace calg2
