#pragma once

#include <initializer_list>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "frobdeg/field.hpp"

namespace frobdeg {

// Degree of the zero polynomial; orders below every integer degree.
inline constexpr int kNegInf = std::numeric_limits<int>::min();

inline std::string degree_str(int d) { return d == kNegInf ? "-inf" : std::to_string(d); }

// Dense univariate polynomial over a Field. Coefficients are stored in
// ascending degree with no trailing zeros; the zero polynomial has an empty
// coefficient list and degree kNegInf. Immutable value type.
class Poly {
 public:
  explicit Poly(const Field& f) : field_(&f) {}
  Poly(const Field& f, std::vector<FieldElement> coeffs);

  static Poly constant(const Field& f, const FieldElement& c);
  static Poly monomial(const Field& f, int degree);  // t^degree
  // Test/CLI convenience: ascending integer coefficients.
  static Poly from_integers(const Field& f, std::initializer_list<long long> coeffs);

  const Field& field() const { return *field_; }
  const std::vector<FieldElement>& coeffs() const { return c_; }
  int degree() const { return c_.empty() ? kNegInf : (int)c_.size() - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
  // Membership in the nonnegative cone: zero or monic.
  bool in_nonneg_cone() const { return is_zero() || is_monic(); }
  bool is_one() const { return degree() == 0 && c_[0].is_one(); }

  FieldElement coeff(int i) const;     // zero outside the stored range
  const FieldElement& leading() const;  // throws on the zero polynomial

  Poly operator+(const Poly& g) const;
  Poly operator-(const Poly& g) const;
  Poly operator*(const Poly& g) const;
  Poly operator-() const;
  Poly scaled(const FieldElement& k) const;
  Poly shifted(int m) const;  // multiply by t^m, m >= 0

  // Exact division with remainder: *this = q*g + r, deg r < deg g.
  std::pair<Poly, Poly> divmod(const Poly& g) const;
  // Exact quotient; throws verification_failed if the remainder is nonzero.
  Poly exact_div(const Poly& g) const;

  FieldElement evaluate(const FieldElement& x) const;
  Poly monic_scaled() const;  // scaled so the leading coefficient is 1

  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  // Coordinate vector of length d+1, descending layout: index 0 holds the
  // t^d coefficient. Requires deg <= d.
  std::vector<FieldElement> to_vector(int d) const;
  static Poly from_vector(const Field& f, const std::vector<FieldElement>& v);

  std::string str() const;

 private:
  void trim();

  const Field* field_;
  std::vector<FieldElement> c_;
};

// Monic greatest common divisor; gcd(f, 0) is the monic scaling of f.
Poly gcd(const Poly& f, const Poly& g);

// d = s*f + t*g with d the monic gcd.
struct ExtGcd {
  Poly d, s, t;
};
ExtGcd ext_gcd(const Poly& f, const Poly& g);

// Iterated two-term extended Euclid over a family: d = sum cofactor_i * A_i.
struct BezoutResult {
  Poly d;
  std::vector<Poly> cofactors;
};
BezoutResult bezout(const std::vector<Poly>& a);

// Coefficient-wise embedding of a prime-field polynomial into an extension
// of the same characteristic.
Poly embed_poly(const Poly& f, const Field& target);

// Text grammar: variable `var` (default t), `^` powers, optional `*`,
// integer or a/b coefficients, parenthesized subexpressions, generator `u`
// for extension coefficients, whitespace ignored. Throws invalid_input with
// the offending position on syntax errors.
Poly parse_poly(const std::string& text, const Field& f, char var = 't');
std::vector<Poly> parse_poly_list(const std::string& text, const Field& f);
std::string format_poly(const Poly& f);

}  // namespace frobdeg
