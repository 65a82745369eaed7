#include "frobdeg/field.hpp"

#include <algorithm>
#include <sstream>

namespace frobdeg {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 add_mod(u64 a, u64 b, u64 p) {
  u64 s = a + b;
  if (s >= p || s < a) s -= p;
  return s;
}

u64 sub_mod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + (p - b); }

u64 mul_mod(u64 a, u64 b, u64 p) { return (u64)((u128)a * b % p); }

// Inverse mod prime p via extended Euclid.
u64 inv_mod(u64 a, u64 p) {
  if (a == 0) fail(ErrorKind::division_by_zero, "inverse of zero residue");
  long long t = 0, new_t = 1;
  long long r = (long long)p, new_r = (long long)a;
  while (new_r != 0) {
    long long q = r / new_r;
    long long tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += (long long)p;
  return (u64)t;
}

// --- F_p[u] helpers on raw coefficient vectors (ascending, trimmed) ---

void trim(std::vector<u64>& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int raw_deg(const std::vector<u64>& f) { return (int)f.size() - 1; }

u64 raw_eval(const std::vector<u64>& f, u64 x, u64 p) {
  u64 acc = 0;
  for (std::size_t i = f.size(); i-- > 0;) acc = add_mod(mul_mod(acc, x, p), f[i], p);
  return acc;
}

std::vector<u64> raw_mul(const std::vector<u64>& a, const std::vector<u64>& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  std::vector<u64> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = add_mod(out[i + j], mul_mod(a[i], b[j], p), p);
  }
  trim(out);
  return out;
}

// Remainder of a by monic-or-not b (b nonzero).
std::vector<u64> raw_mod(std::vector<u64> a, const std::vector<u64>& b, u64 p) {
  const u64 lead_inv = inv_mod(b.back(), p);
  while ((int)a.size() >= (int)b.size() && !a.empty()) {
    const u64 factor = mul_mod(a.back(), lead_inv, p);
    const std::size_t shift = a.size() - b.size();
    if (factor != 0)
      for (std::size_t i = 0; i < b.size(); ++i)
        a[shift + i] = sub_mod(a[shift + i], mul_mod(factor, b[i], p), p);
    a.pop_back();
    trim(a);
  }
  return a;
}

// Inverse of a modulo the field modulus m (both over F_p, a nonzero mod m).
std::vector<u64> raw_inv_mod(const std::vector<u64>& a, const std::vector<u64>& m, u64 p) {
  // Extended Euclid keeping only the cofactor of a.
  std::vector<u64> r0 = m, r1 = a;
  std::vector<u64> t0, t1 = {1};
  while (!r1.empty()) {
    // Division step: r0 = q*r1 + r2, t2 = t0 - q*t1.
    std::vector<u64> q;
    {
      std::vector<u64> rem = r0;
      const u64 lead_inv = inv_mod(r1.back(), p);
      q.assign(rem.size() >= r1.size() ? rem.size() - r1.size() + 1 : 0, 0);
      while ((int)rem.size() >= (int)r1.size() && !rem.empty()) {
        const u64 factor = mul_mod(rem.back(), lead_inv, p);
        const std::size_t shift = rem.size() - r1.size();
        q[shift] = factor;
        if (factor != 0)
          for (std::size_t i = 0; i < r1.size(); ++i)
            rem[shift + i] = sub_mod(rem[shift + i], mul_mod(factor, r1[i], p), p);
        rem.pop_back();
        trim(rem);
      }
      r0.swap(r1);
      r1 = rem;
      trim(q);
    }
    std::vector<u64> qt = raw_mul(q, t1, p);
    std::vector<u64> t2(std::max(t0.size(), qt.size()), 0);
    for (std::size_t i = 0; i < t2.size(); ++i) {
      u64 x = i < t0.size() ? t0[i] : 0;
      u64 y = i < qt.size() ? qt[i] : 0;
      t2[i] = sub_mod(x, y, p);
    }
    trim(t2);
    t0.swap(t1);
    t1 = t2;
  }
  if (raw_deg(r0) != 0) fail(ErrorKind::division_by_zero, "element not invertible");
  // Scale cofactor so that t0 * a = 1.
  const u64 scale = inv_mod(r0[0], p);
  for (auto& c : t0) c = mul_mod(c, scale, p);
  return raw_mod(std::move(t0), m, p);
}

bool raw_irreducible(const std::vector<u64>& f, u64 p) {
  const int k = raw_deg(f);
  if (k < 1) return false;
  if (k == 1) return true;
  for (u64 x = 0; x < p; ++x)
    if (raw_eval(f, x, p) == 0) return false;
  // No roots: trial-divide by monic factors of degree 2 .. k/2.
  for (int e = 2; 2 * e <= k; ++e) {
    std::vector<u64> div(e + 1, 0);
    div[e] = 1;
    u64 total = 1;
    for (int i = 0; i < e; ++i) total *= p;  // desk scale
    for (u64 idx = 0; idx < total; ++idx) {
      u64 v = idx;
      for (int i = 0; i < e; ++i) {
        div[i] = v % p;
        v /= p;
      }
      if (raw_mod(f, div, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (u64 d : {2ull, 3ull, 5ull, 7ull}) {
    if (n == d) return true;
    if (n % d == 0) return false;
  }
  for (u64 d = 11; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> find_irreducible(std::uint64_t p, unsigned k) {
  if (!is_prime_u64(p)) fail(ErrorKind::invalid_input, "characteristic must be prime");
  if (k < 2) fail(ErrorKind::invalid_input, "extension degree must be at least 2");
  // Enumerate monic candidates in lexicographic order of the descending
  // coefficient sequence: the t^{k-1} coefficient is the most significant.
  std::vector<u64> cand(k + 1, 0);
  cand[k] = 1;
  for (;;) {
    if (raw_irreducible(cand, p)) return cand;
    // Odometer increment, least significant digit is the constant term.
    std::size_t i = 0;
    while (i < k && cand[i] == p - 1) cand[i++] = 0;
    if (i == k) fail(ErrorKind::invalid_input, "no irreducible found");  // unreachable
    ++cand[i];
  }
}

// --- Field ---

Field Field::rationals() { return Field(FieldKind::rationals, 0, 1, {}); }

Field Field::prime(std::uint64_t p) {
  if (!is_prime_u64(p)) fail(ErrorKind::invalid_input, "field order must be prime");
  return Field(FieldKind::prime_field, p, 1, {});
}

Field Field::extension(std::uint64_t p, unsigned degree) {
  return extension(p, find_irreducible(p, degree));
}

Field Field::extension(std::uint64_t p, const std::vector<std::uint64_t>& modulus) {
  if (!is_prime_u64(p)) fail(ErrorKind::invalid_input, "characteristic must be prime");
  std::vector<u64> m = modulus;
  for (auto& c : m) c %= p;
  trim(m);
  const int k = raw_deg(m);
  if (k < 2) fail(ErrorKind::invalid_input, "modulus must have degree >= 2");
  if (m.back() != 1) fail(ErrorKind::invalid_input, "modulus must be monic");
  if (!raw_irreducible(m, p)) fail(ErrorKind::invalid_input, "modulus is reducible");
  return Field(FieldKind::extension_field, p, (unsigned)k, std::move(m));
}

mpz_class Field::cardinality() const {
  if (!is_finite()) fail(ErrorKind::invalid_input, "rationals have no finite cardinality");
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), (unsigned long)p_, k_);
  return r;
}

std::uint64_t Field::size_u64() const {
  const mpz_class q = cardinality();
  if (!q.fits_ulong_p()) fail(ErrorKind::capacity_exceeded, "field too large to enumerate");
  return (u64)q.get_ui();
}

FieldElement Field::zero() const {
  FieldElement e;
  e.field_ = this;
  if (is_finite()) e.res_.assign(k_, 0);
  return e;
}

FieldElement Field::one() const { return from_integer(1); }

FieldElement Field::from_integer(long long v) const {
  FieldElement e = zero();
  switch (kind_) {
    case FieldKind::rationals:
      e.rat_ = mpq_class((long)v);  // exact; long long fits on LP64
      break;
    default: {
      long long r = v % (long long)p_;
      if (r < 0) r += (long long)p_;
      e.res_[0] = (u64)r;
      break;
    }
  }
  return e;
}

FieldElement Field::from_mpz(const mpz_class& v) const {
  FieldElement e = zero();
  if (kind_ == FieldKind::rationals) {
    e.rat_ = mpq_class(v);
  } else {
    mpz_class r = v % mpz_class((unsigned long)p_);
    if (r < 0) r += mpz_class((unsigned long)p_);
    e.res_[0] = (u64)r.get_ui();
  }
  return e;
}

FieldElement Field::from_rational(const mpq_class& v) const {
  if (kind_ != FieldKind::rationals)
    fail(ErrorKind::field_mismatch, "rational literal over a finite field");
  FieldElement e = zero();
  e.rat_ = v;
  e.rat_.canonicalize();
  return e;
}

FieldElement Field::from_residues(std::vector<std::uint64_t> c) const {
  if (!is_finite()) fail(ErrorKind::field_mismatch, "residues over the rationals");
  for (auto& x : c) x %= p_;
  c.resize(k_, 0);
  FieldElement e = zero();
  e.res_ = std::move(c);
  return e;
}

FieldElement Field::generator() const {
  if (kind_ != FieldKind::extension_field)
    fail(ErrorKind::invalid_input, "generator requires an extension field");
  FieldElement e = zero();
  e.res_[1] = 1;
  return e;
}

FieldElement Field::element_at(std::uint64_t index) const {
  if (!is_finite()) fail(ErrorKind::invalid_input, "cannot enumerate the rationals");
  FieldElement e = zero();
  for (unsigned i = 0; i < k_; ++i) {
    e.res_[i] = index % p_;
    index /= p_;
  }
  if (index != 0) fail(ErrorKind::invalid_input, "element index out of range");
  return e;
}

std::uint64_t Field::index_of(const FieldElement& x) const {
  if (!same(x.field())) fail(ErrorKind::field_mismatch, "index_of: wrong field");
  u64 idx = 0;
  for (unsigned i = k_; i-- > 0;) idx = idx * p_ + x.res_[i];
  return idx;
}

FieldElement Field::random_element(Rng& rng, std::uint64_t bound) const {
  if (is_finite()) return element_at(rng.below(size_u64()));
  if (bound == 0) bound = 1;
  const u64 span = 2 * bound + 1;
  const long long v = (long long)rng.below(span) - (long long)bound;
  return from_integer(v);
}

FieldElement Field::embed(const FieldElement& x) const {
  const Field& src = x.field();
  if (src.kind() == FieldKind::rationals || kind_ == FieldKind::rationals)
    fail(ErrorKind::field_mismatch, "embedding requires finite fields");
  if (src.characteristic() != p_)
    fail(ErrorKind::field_mismatch, "embedding across characteristics");
  if (src.kind() != FieldKind::prime_field)
    fail(ErrorKind::field_mismatch, "embedding source must be a prime field");
  FieldElement e = zero();
  e.res_[0] = x.res_[0];
  return e;
}

bool Field::same(const Field& other) const {
  return kind_ == other.kind_ && p_ == other.p_ && k_ == other.k_ &&
         modulus_ == other.modulus_;
}

std::string Field::spec_string() const {
  switch (kind_) {
    case FieldKind::rationals:
      return "Q";
    case FieldKind::prime_field:
      return "F" + std::to_string(p_);
    case FieldKind::extension_field:
      return "F" + std::to_string(p_) + "^" + std::to_string(k_);
  }
  return "?";
}

// --- FieldElement ---

const Field& FieldElement::field() const {
  if (!field_) fail(ErrorKind::invalid_input, "use of a detached field element");
  return *field_;
}

void FieldElement::check_same(const FieldElement& a, const FieldElement& b) {
  if (!a.field().same(b.field()))
    fail(ErrorKind::field_mismatch, "operands live over different fields");
}

bool FieldElement::is_zero() const {
  if (field().kind() == FieldKind::rationals) return rat_ == 0;
  return std::all_of(res_.begin(), res_.end(), [](u64 c) { return c == 0; });
}

bool FieldElement::is_one() const {
  if (field().kind() == FieldKind::rationals) return rat_ == 1;
  if (res_[0] != 1) return false;
  return std::all_of(res_.begin() + 1, res_.end(), [](u64 c) { return c == 0; });
}

const mpq_class& FieldElement::rational() const {
  if (field().kind() != FieldKind::rationals)
    fail(ErrorKind::field_mismatch, "rational() on a finite-field element");
  return rat_;
}

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  const Field& f = field();
  if (f.kind() == FieldKind::rationals) {
    r.rat_ = -rat_;
  } else {
    for (auto& c : r.res_) c = c == 0 ? 0 : f.characteristic() - c;
  }
  return r;
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  FieldElement::check_same(a, b);
  FieldElement r = a;
  const Field& f = a.field();
  if (f.kind() == FieldKind::rationals) {
    r.rat_ += b.rat_;
  } else {
    for (std::size_t i = 0; i < r.res_.size(); ++i)
      r.res_[i] = add_mod(r.res_[i], b.res_[i], f.characteristic());
  }
  return r;
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  FieldElement::check_same(a, b);
  FieldElement r = a;
  const Field& f = a.field();
  if (f.kind() == FieldKind::rationals) {
    r.rat_ -= b.rat_;
  } else {
    for (std::size_t i = 0; i < r.res_.size(); ++i)
      r.res_[i] = sub_mod(r.res_[i], b.res_[i], f.characteristic());
  }
  return r;
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  FieldElement::check_same(a, b);
  const Field& f = a.field();
  FieldElement r = a;
  switch (f.kind()) {
    case FieldKind::rationals:
      r.rat_ *= b.rat_;
      break;
    case FieldKind::prime_field:
      r.res_[0] = mul_mod(a.res_[0], b.res_[0], f.characteristic());
      break;
    case FieldKind::extension_field: {
      std::vector<u64> prod = raw_mul(a.res_, b.res_, f.characteristic());
      prod = raw_mod(std::move(prod), f.modulus(), f.characteristic());
      prod.resize(f.extension_degree(), 0);
      r.res_ = std::move(prod);
      break;
    }
  }
  return r;
}

FieldElement FieldElement::inverse() const {
  const Field& f = field();
  if (is_zero()) fail(ErrorKind::division_by_zero, "inverse of zero");
  FieldElement r = *this;
  switch (f.kind()) {
    case FieldKind::rationals:
      r.rat_ = 1 / rat_;
      break;
    case FieldKind::prime_field:
      r.res_[0] = inv_mod(res_[0], f.characteristic());
      break;
    case FieldKind::extension_field: {
      std::vector<u64> v = res_;
      trim(v);
      v = raw_inv_mod(v, f.modulus(), f.characteristic());
      v.resize(f.extension_degree(), 0);
      r.res_ = std::move(v);
      break;
    }
  }
  return r;
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  return a * b.inverse();
}

FieldElement FieldElement::pow(std::uint64_t e) const {
  FieldElement base = *this;
  FieldElement acc = field().one();
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  FieldElement::check_same(a, b);
  if (a.field().kind() == FieldKind::rationals) return a.rat_ == b.rat_;
  return a.res_ == b.res_;
}

bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

std::string FieldElement::str() const {
  const Field& f = field();
  switch (f.kind()) {
    case FieldKind::rationals:
      return rat_.get_str();
    case FieldKind::prime_field:
      return std::to_string(res_[0]);
    case FieldKind::extension_field: {
      if (is_zero()) return "0";
      std::ostringstream out;
      bool first = true;
      for (unsigned i = f.extension_degree(); i-- > 0;) {
        if (res_[i] == 0) continue;
        if (!first) out << "+";
        first = false;
        if (i == 0) {
          out << res_[i];
        } else {
          if (res_[i] != 1) out << res_[i] << "*";
          out << "u";
          if (i > 1) out << "^" << i;
        }
      }
      return out.str();
    }
  }
  return "?";
}

}  // namespace frobdeg
