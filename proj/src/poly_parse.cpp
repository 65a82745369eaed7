#include <cctype>
#include <sstream>

#include "frobdeg/poly.hpp"

namespace frobdeg {

namespace {

// Recursive-descent parser for the polynomial grammar:
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := ('+'|'-')* primary ('^' INT)*
//   primary:= INT | var | 'u' | '(' expr ')'
// '/' requires a constant divisor; 'u' requires an extension field.
class Parser {
 public:
  Parser(const std::string& text, const Field& f, char var)
      : text_(text), field_(f), var_(var) {}

  Poly parse() {
    Poly p = expr();
    skip_ws();
    if (pos_ != text_.size()) error("unexpected trailing input");
    return p;
  }

 private:
  [[noreturn]] void error(const std::string& msg) const {
    std::ostringstream out;
    out << "syntax error at position " << pos_ << ": " << msg;
    fail(ErrorKind::invalid_input, out.str());
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace((unsigned char)text_[pos_])) ++pos_;
  }

  bool peek_is(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool consume(char c) {
    if (!peek_is(c)) return false;
    ++pos_;
    return true;
  }

  mpz_class integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit((unsigned char)text_[pos_])) ++pos_;
    if (pos_ == start) error("expected an integer");
    return mpz_class(text_.substr(start, pos_ - start));
  }

  Poly expr() {
    Poly acc = term();
    for (;;) {
      if (consume('+'))
        acc = acc + term();
      else if (consume('-'))
        acc = acc - term();
      else
        return acc;
    }
  }

  Poly term() {
    Poly acc = factor();
    for (;;) {
      if (consume('*')) {
        acc = acc * factor();
      } else if (consume('/')) {
        Poly div = factor();
        if (div.degree() > 0) error("divisor must be a constant");
        if (div.is_zero()) fail(ErrorKind::division_by_zero, "division by zero coefficient");
        acc = acc.scaled(div.coeff(0).inverse());
      } else {
        return acc;
      }
    }
  }

  Poly factor() {
    bool negate = false;
    for (;;) {
      if (consume('-'))
        negate = !negate;
      else if (consume('+'))
        ;
      else
        break;
    }
    Poly base = primary();
    while (consume('^')) {
      mpz_class e = integer();
      if (e < 0 || e > 4096) error("exponent out of range");
      base = power(base, e.get_ui());
    }
    return negate ? -base : base;
  }

  Poly power(const Poly& base, unsigned long e) {
    Poly acc = Poly::constant(field_, field_.one());
    Poly b = base;
    while (e) {
      if (e & 1) acc = acc * b;
      b = b * b;
      e >>= 1;
    }
    return acc;
  }

  Poly primary() {
    skip_ws();
    if (pos_ >= text_.size()) error("unexpected end of input");
    const char c = text_[pos_];
    if (std::isdigit((unsigned char)c)) {
      return Poly::constant(field_, field_.from_mpz(integer()));
    }
    if (c == var_) {
      ++pos_;
      return Poly::monomial(field_, 1);
    }
    if (c == 'u') {
      if (field_.kind() != FieldKind::extension_field)
        fail(ErrorKind::invalid_input,
             "generator u is only available over extension fields");
      ++pos_;
      return Poly::constant(field_, field_.generator());
    }
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (!consume(')')) error("missing closing parenthesis");
      return inner;
    }
    error(std::string("unexpected character '") + c + "'");
  }

  const std::string& text_;
  const Field& field_;
  char var_;
  std::size_t pos_ = 0;
};

// True when an extension coefficient needs parentheses inside a product,
// i.e. when its rendering contains more than one monomial in u.
bool compound_coefficient(const FieldElement& c) {
  if (c.field().kind() != FieldKind::extension_field) return false;
  int nonzero = 0;
  for (auto r : c.residues())
    if (r != 0) ++nonzero;
  return nonzero > 1;
}

}  // namespace

Poly parse_poly(const std::string& text, const Field& f, char var) {
  return Parser(text, f, var).parse();
}

std::vector<Poly> parse_poly_list(const std::string& text, const Field& f) {
  std::vector<Poly> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string piece =
        comma == std::string::npos ? text.substr(start) : text.substr(start, comma - start);
    out.push_back(parse_poly(piece, f));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string format_poly(const Poly& f) {
  if (f.is_zero()) return "0";
  const Field& k = f.field();
  const bool over_q = k.kind() == FieldKind::rationals;
  std::ostringstream out;
  bool first = true;
  for (int i = f.degree(); i >= 0; --i) {
    FieldElement c = f.coeff(i);
    if (c.is_zero()) continue;
    bool negative = false;
    if (over_q && c.rational() < 0) {
      negative = true;
      c = -c;
    }
    if (first)
      out << (negative ? "-" : "");
    else
      out << (negative ? " - " : " + ");
    first = false;
    const bool unit = c.is_one();
    if (i == 0) {
      out << c.str();
    } else {
      if (!unit) {
        if (compound_coefficient(c))
          out << "(" << c.str() << ")*";
        else
          out << c.str() << "*";
      }
      out << "t";
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

std::string Poly::str() const { return format_poly(*this); }

}  // namespace frobdeg
