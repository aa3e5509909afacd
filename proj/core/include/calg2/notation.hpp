#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "calg2/exterior.hpp"
#include "calg2/radical.hpp"

namespace calg2 {

using RadicalForm = BasicForm<Radical>;

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at offset " + std::to_string(position) + ")"), message_(what), position_(position) {}
  std::size_t position() const { return position_; }
  const std::string& message() const { return message_; }

 private:
  std::string message_;
  std::size_t position_;
};

// Expression grammar shared by structure constants, forms and coframes:
//   expr   := "0" | ["+"|"-"] term (("+"|"-") term)*
//   term   := (atom "*")* (atom "*"? "(" expr ")" | indices)
//   atom   := integer ["/" integer] | "s" integer        (s3 = sqrt 3)
//   indices:= digits 1..9, e.g. "42" = e^4 ^ e^2 = -e^24
// A digit run is a coefficient when followed by "*", "/" or "(".
// In degree 0 the token "1" is the unit scalar.
RadicalForm parse_radical_form(std::string_view text, int dim, int degree);
Form parse_form(std::string_view text, int dim, int degree);

// Comma-separated de^1..de^n; dim < 0 takes the entry count.
std::vector<Form> parse_salamon(std::string_view text, int dim = -1);

// Splits on ';' or newlines, skipping blanks.
std::vector<RadicalForm> parse_coframe(std::string_view text, int dim);

// Canonical rendering: lexicographic terms, unit coefficients elided.
std::string print_form(const Form& a);
std::string print_form(const RadicalForm& a);
std::string print_salamon(const std::vector<Form>& d_one);

// Whitespace removed, typographic minus mapped to '-'.
std::string normalize_text(std::string_view text);

}  // namespace calg2
