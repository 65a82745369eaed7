#include "frobdeg/poly.hpp"

#include <algorithm>

namespace frobdeg {

Poly::Poly(const Field& f, std::vector<FieldElement> coeffs)
    : field_(&f), c_(std::move(coeffs)) {
  for (const auto& c : c_)
    if (!c.field().same(f)) fail(ErrorKind::field_mismatch, "coefficient field mismatch");
  trim();
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(const Field& f, const FieldElement& c) {
  return Poly(f, {c});
}

Poly Poly::monomial(const Field& f, int degree) {
  if (degree < 0) fail(ErrorKind::invalid_input, "monomial degree must be nonnegative");
  std::vector<FieldElement> c((std::size_t)degree + 1, f.zero());
  c.back() = f.one();
  return Poly(f, std::move(c));
}

Poly Poly::from_integers(const Field& f, std::initializer_list<long long> coeffs) {
  std::vector<FieldElement> c;
  c.reserve(coeffs.size());
  for (long long v : coeffs) c.push_back(f.from_integer(v));
  return Poly(f, std::move(c));
}

FieldElement Poly::coeff(int i) const {
  if (i < 0 || i >= (int)c_.size()) return field_->zero();
  return c_[(std::size_t)i];
}

const FieldElement& Poly::leading() const {
  if (c_.empty()) fail(ErrorKind::invalid_input, "leading coefficient of zero");
  return c_.back();
}

Poly Poly::operator+(const Poly& g) const {
  if (!field_->same(g.field())) fail(ErrorKind::field_mismatch, "poly field mismatch");
  std::vector<FieldElement> out(std::max(c_.size(), g.c_.size()), field_->zero());
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i < c_.size() && i < g.c_.size())
      out[i] = c_[i] + g.c_[i];
    else if (i < c_.size())
      out[i] = c_[i];
    else
      out[i] = g.c_[i];
  }
  return Poly(*field_, std::move(out));
}

Poly Poly::operator-(const Poly& g) const { return *this + (-g); }

Poly Poly::operator-() const {
  std::vector<FieldElement> out;
  out.reserve(c_.size());
  for (const auto& c : c_) out.push_back(-c);
  return Poly(*field_, std::move(out));
}

Poly Poly::operator*(const Poly& g) const {
  if (!field_->same(g.field())) fail(ErrorKind::field_mismatch, "poly field mismatch");
  if (is_zero() || g.is_zero()) return Poly(*field_);
  std::vector<FieldElement> out(c_.size() + g.c_.size() - 1, field_->zero());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < g.c_.size(); ++j)
      out[i + j] = out[i + j] + c_[i] * g.c_[j];
  }
  return Poly(*field_, std::move(out));
}

Poly Poly::scaled(const FieldElement& k) const {
  std::vector<FieldElement> out;
  out.reserve(c_.size());
  for (const auto& c : c_) out.push_back(c * k);
  return Poly(*field_, std::move(out));
}

Poly Poly::shifted(int m) const {
  if (m < 0) fail(ErrorKind::invalid_input, "negative shift");
  if (is_zero()) return *this;
  std::vector<FieldElement> out((std::size_t)m, field_->zero());
  out.insert(out.end(), c_.begin(), c_.end());
  return Poly(*field_, std::move(out));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& g) const {
  if (!field_->same(g.field())) fail(ErrorKind::field_mismatch, "poly field mismatch");
  if (g.is_zero()) fail(ErrorKind::division_by_zero, "polynomial division by zero");
  if (degree() < g.degree()) return {Poly(*field_), *this};
  const FieldElement lead_inv = g.leading().inverse();
  std::vector<FieldElement> rem = c_;
  std::vector<FieldElement> quo((std::size_t)(degree() - g.degree()) + 1, field_->zero());
  for (int k = degree() - g.degree(); k >= 0; --k) {
    const std::size_t top = (std::size_t)(k + g.degree());
    if (rem[top].is_zero()) continue;
    const FieldElement factor = rem[top] * lead_inv;
    quo[(std::size_t)k] = factor;
    for (int i = 0; i <= g.degree(); ++i)
      rem[(std::size_t)(k + i)] = rem[(std::size_t)(k + i)] - factor * g.c_[(std::size_t)i];
  }
  return {Poly(*field_, std::move(quo)), Poly(*field_, std::move(rem))};
}

Poly Poly::exact_div(const Poly& g) const {
  auto [q, r] = divmod(g);
  if (!r.is_zero()) fail(ErrorKind::verification_failed, "division expected to be exact");
  return q;
}

FieldElement Poly::evaluate(const FieldElement& x) const {
  FieldElement acc = field_->zero();
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

Poly Poly::monic_scaled() const {
  if (is_zero()) return *this;
  return scaled(leading().inverse());
}

bool operator==(const Poly& a, const Poly& b) {
  if (!a.field().same(b.field())) fail(ErrorKind::field_mismatch, "poly field mismatch");
  if (a.c_.size() != b.c_.size()) return false;
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    if (a.c_[i] != b.c_[i]) return false;
  return true;
}

std::vector<FieldElement> Poly::to_vector(int d) const {
  if (degree() > d)
    fail(ErrorKind::degree_overflow,
         "degree " + degree_str(degree()) + " does not fit in dimension " + std::to_string(d));
  std::vector<FieldElement> v((std::size_t)d + 1, field_->zero());
  for (int i = 0; i < (int)c_.size(); ++i) v[(std::size_t)(d - i)] = c_[(std::size_t)i];
  return v;
}

Poly Poly::from_vector(const Field& f, const std::vector<FieldElement>& v) {
  std::vector<FieldElement> c(v.rbegin(), v.rend());
  return Poly(f, std::move(c));
}

Poly gcd(const Poly& f, const Poly& g) {
  if (f.is_zero() && g.is_zero()) fail(ErrorKind::undefined_gcd, "gcd(0, 0) is undefined");
  Poly a = f, b = g;
  while (!b.is_zero()) {
    Poly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic_scaled();
}

ExtGcd ext_gcd(const Poly& f, const Poly& g) {
  const Field& k = f.field();
  if (f.is_zero() && g.is_zero()) fail(ErrorKind::undefined_gcd, "gcd(0, 0) is undefined");
  Poly r0 = f, r1 = g;
  Poly s0 = Poly::constant(k, k.one()), s1 = Poly(k);
  Poly t0 = Poly(k), t1 = Poly::constant(k, k.one());
  while (!r1.is_zero()) {
    auto [q, r2] = r0.divmod(r1);
    Poly s2 = s0 - q * s1;
    Poly t2 = t0 - q * t1;
    r0 = std::move(r1); r1 = std::move(r2);
    s0 = std::move(s1); s1 = std::move(s2);
    t0 = std::move(t1); t1 = std::move(t2);
  }
  const FieldElement lead_inv = r0.leading().inverse();
  return {r0.scaled(lead_inv), s0.scaled(lead_inv), t0.scaled(lead_inv)};
}

BezoutResult bezout(const std::vector<Poly>& a) {
  if (a.size() < 2) fail(ErrorKind::invalid_input, "bezout needs at least two polynomials");
  bool all_zero = std::all_of(a.begin(), a.end(), [](const Poly& p) { return p.is_zero(); });
  if (all_zero) fail(ErrorKind::undefined_gcd, "gcd of all-zero family");
  const Field& k = a[0].field();
  Poly d = a[0];
  std::vector<Poly> cof;
  cof.push_back(Poly::constant(k, k.one()));
  if (!d.is_zero()) {
    const FieldElement lead_inv = d.leading().inverse();
    d = d.scaled(lead_inv);
    cof[0] = cof[0].scaled(lead_inv);
  }
  for (std::size_t i = 1; i < a.size(); ++i) {
    if (!d.is_zero() && a[i].divmod(d).second.is_zero()) {
      // Already divides: gcd unchanged, zero cofactor.
      cof.push_back(Poly(k));
      continue;
    }
    ExtGcd e = ext_gcd(d, a[i]);
    for (auto& c : cof) c = c * e.s;
    cof.push_back(e.t);
    d = e.d;
  }
  return {d, std::move(cof)};
}

Poly embed_poly(const Poly& f, const Field& target) {
  std::vector<FieldElement> c;
  c.reserve(f.coeffs().size());
  for (const auto& x : f.coeffs()) c.push_back(target.embed(x));
  return Poly(target, std::move(c));
}

}  // namespace frobdeg
