#include "calg2/notation.hpp"

#include <cctype>

namespace calg2 {

std::string normalize_text(std::string_view text) {
  std::string out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (std::isspace(c)) continue;
    // U+2212 MINUS SIGN
    if (c == 0xE2 && i + 2 < text.size() && static_cast<unsigned char>(text[i + 1]) == 0x88 &&
        static_cast<unsigned char>(text[i + 2]) == 0x92) {
      out += '-';
      i += 2;
      continue;
    }
    out += static_cast<char>(c);
  }
  return out;
}

namespace {

class Parser {
 public:
  Parser(std::string text, int dim, int degree) : s_(std::move(text)), dim_(dim), degree_(degree) {}

  RadicalForm parse_all() {
    if (s_.empty()) throw ParseError("empty expression", 0);
    if (s_ == "0") return RadicalForm(dim_, degree_);
    RadicalForm f = expr();
    if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  static bool is_digit(char c) { return c >= '0' && c <= '9'; }

  RadicalForm expr() {
    RadicalForm f(dim_, degree_);
    bool first = true;
    while (true) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        if (peek() == '-') sign = -1;
        ++pos_;
      } else if (!first) {
        break;
      }
      RadicalForm t = term();
      f += sign > 0 ? t : -t;
      first = false;
      if (peek() != '+' && peek() != '-') break;
    }
    return f;
  }

  std::string digits() {
    std::size_t start = pos_;
    while (is_digit(peek())) ++pos_;
    if (start == pos_) fail("expected digits");
    return s_.substr(start, pos_ - start);
  }

  RadicalForm term() {
    Radical coef(1);
    while (true) {
      char c = peek();
      if (c == '(') {
        ++pos_;
        RadicalForm inner = expr();
        if (peek() != ')') fail("expected ')'");
        ++pos_;
        return coef * inner;
      }
      if (c == 's') {
        ++pos_;
        std::string d = digits();
        unsigned long v = std::stoul(d);
        if (v == 0) fail("square root of zero");
        coef *= Radical::sqrt_of(v);
        expect_coefficient_end();
        continue;
      }
      if (is_digit(c)) {
        std::size_t start = pos_;
        std::string d = digits();
        if (peek() == '/') {
          ++pos_;
          std::string den = digits();
          if (mpz_class(den) == 0) fail("zero denominator");
          Rational q{mpz_class(d), mpz_class(den)};
          q.canonicalize();
          coef *= Radical(q);
          expect_coefficient_end();
          continue;
        }
        if (peek() == '*' || peek() == '(') {
          coef *= Radical(Rational(mpz_class(d)));
          expect_coefficient_end();
          continue;
        }
        return coef * indices(d, start);
      }
      fail(at_end() ? "unexpected end of expression" : "unexpected character '" + std::string(1, c) + "'");
    }
  }

  void expect_coefficient_end() {
    if (peek() == '*') {
      ++pos_;
      return;
    }
    if (peek() == '(') return;
    fail("coefficient must be followed by '*' or '('");
  }

  RadicalForm indices(const std::string& d, std::size_t start) {
    if (degree_ == 0 && d == "1") {
      RadicalForm unit(dim_, 0);
      unit.add_term(MultiIndex(), Radical(1));
      return unit;
    }
    if (static_cast<int>(d.size()) != degree_)
      throw ParseError("index tuple '" + d + "' has length " + std::to_string(d.size()) + ", expected " +
                           std::to_string(degree_),
                       start);
    std::vector<int> idx;
    for (char c : d) {
      int v = c - '0';
      if (v < 1 || v > dim_)
        throw ParseError("index " + std::string(1, c) + " out of range 1.." + std::to_string(dim_), start);
      idx.push_back(v);
    }
    auto [sign, m] = MultiIndex::from_sequence(idx);
    if (sign == 0) throw ParseError("repeated index in '" + d + "'", start);
    RadicalForm f(dim_, degree_);
    f.add_term(m, Radical(sign));
    return f;
  }

  std::string s_;
  std::size_t pos_ = 0;
  int dim_;
  int degree_;
};

template <class S>
std::string print_generic(const BasicForm<S>& a) {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  auto emit = [&](const Rational& q, const std::string& radical, const std::string& idx) {
    Rational mag = abs(q);
    if (sgn(q) < 0)
      out += "-";
    else if (!first)
      out += "+";
    first = false;
    if (mag != 1) out += to_string(mag) + "*";
    if (!radical.empty()) out += radical + "*";
    out += idx;
  };
  for (const auto& [m, c] : a.terms()) {
    std::string idx = m.degree() == 0 ? "1" : m.digits();
    if constexpr (std::is_same_v<S, Rational>) {
      emit(c, "", idx);
    } else {
      for (const auto& [rad, q] : c.terms()) emit(q, rad == 1 ? "" : "s" + std::to_string(rad), idx);
    }
  }
  return out;
}

}  // namespace

RadicalForm parse_radical_form(std::string_view text, int dim, int degree) {
  if (dim < 0 || dim > kMaxDim) throw std::invalid_argument("dimension out of range");
  if (degree < 0 || degree > dim) throw std::invalid_argument("degree out of range");
  return Parser(normalize_text(text), dim, degree).parse_all();
}

Form parse_form(std::string_view text, int dim, int degree) {
  RadicalForm r = parse_radical_form(text, dim, degree);
  Form f(dim, degree);
  for (const auto& [m, c] : r.terms()) {
    if (!c.is_rational()) throw ParseError("irrational coefficient where a rational form is required", 0);
    f.add_term(m, c.rational_part());
  }
  return f;
}

std::vector<Form> parse_salamon(std::string_view text, int dim) {
  std::string s = normalize_text(text);
  if (!s.empty() && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  if (dim < 0) dim = static_cast<int>(parts.size());
  if (static_cast<int>(parts.size()) != dim)
    throw ParseError("expected " + std::to_string(dim) + " entries, found " + std::to_string(parts.size()), 0);
  if (dim > kMaxDim) throw ParseError("dimension above 9 is not supported", 0);
  std::vector<Form> out;
  std::size_t offset = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    try {
      out.push_back(parse_form(parts[i], dim, 2));
    } catch (const ParseError& e) {
      throw ParseError("entry " + std::to_string(i + 1) + ": " + e.message(), offset + e.position());
    }
    offset += parts[i].size() + 1;
  }
  return out;
}

std::vector<RadicalForm> parse_coframe(std::string_view text, int dim) {
  std::vector<RadicalForm> out;
  std::string cur;
  auto flush = [&] {
    std::string t = normalize_text(cur);
    if (!t.empty()) out.push_back(parse_radical_form(t, dim, 1));
    cur.clear();
  };
  for (char c : text) {
    if (c == ';' || c == '\n') {
      flush();
    } else {
      cur += c;
    }
  }
  flush();
  if (static_cast<int>(out.size()) != dim)
    throw ParseError("coframe needs " + std::to_string(dim) + " one-forms, found " + std::to_string(out.size()), 0);
  return out;
}

std::string print_form(const Form& a) { return print_generic(a); }
std::string print_form(const RadicalForm& a) { return print_generic(a); }

std::string print_salamon(const std::vector<Form>& d_one) {
  std::string out;
  for (std::size_t i = 0; i < d_one.size(); ++i) {
    if (i) out += ",";
    out += print_form(d_one[i]);
  }
  return out;
}

}  // namespace calg2
