#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "frobdeg/errors.hpp"
#include "frobdeg/rng.hpp"

namespace frobdeg {

enum class FieldKind { rationals, prime_field, extension_field };

class FieldElement;

// Descriptor of a coefficient field: Q, F_p, or F_{p^k} = F_p[u]/(modulus).
// Immutable after construction. Elements and polynomials keep a plain pointer
// back to their field, so a Field must outlive everything built over it.
class Field {
 public:
  static Field rationals();
  static Field prime(std::uint64_t p);
  // Modulus chosen by find_irreducible(p, degree).
  static Field extension(std::uint64_t p, unsigned degree);
  // Explicit modulus: monic irreducible over F_p, ascending coefficients,
  // length degree+1. Checked at construction.
  static Field extension(std::uint64_t p, const std::vector<std::uint64_t>& modulus);

  FieldKind kind() const { return kind_; }
  std::uint64_t characteristic() const { return p_; }  // 0 for Q
  bool is_finite() const { return kind_ != FieldKind::rationals; }
  unsigned extension_degree() const { return k_; }
  mpz_class cardinality() const;  // finite fields only
  // Cardinality as u64; throws capacity_exceeded when it does not fit.
  std::uint64_t size_u64() const;
  const std::vector<std::uint64_t>& modulus() const { return modulus_; }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_integer(long long v) const;
  FieldElement from_mpz(const mpz_class& v) const;
  FieldElement from_rational(const mpq_class& v) const;          // Q only
  FieldElement from_residues(std::vector<std::uint64_t> c) const;  // finite
  FieldElement generator() const;  // extension field: the class of u

  // Finite fields are enumerable: elements are indexed 0 .. q-1, prime fields
  // by residue, extensions by base-p digits with the constant term least
  // significant.
  FieldElement element_at(std::uint64_t index) const;
  std::uint64_t index_of(const FieldElement& x) const;

  // Uniform over a finite field; over Q a uniform integer in [-bound, bound].
  FieldElement random_element(Rng& rng, std::uint64_t bound = 16) const;

  // Constant embedding F_p -> this field (ring homomorphism).
  FieldElement embed(const FieldElement& x) const;

  // Structural compatibility: same kind, characteristic and modulus.
  bool same(const Field& other) const;
  std::string spec_string() const;  // "Q", "F5", "F5^2"

 private:
  Field(FieldKind kind, std::uint64_t p, unsigned k, std::vector<std::uint64_t> modulus)
      : kind_(kind), p_(p), k_(k), modulus_(std::move(modulus)) {}

  FieldKind kind_;
  std::uint64_t p_ = 0;  // characteristic, 0 for Q
  unsigned k_ = 1;       // extension degree, 1 unless extension_field
  std::vector<std::uint64_t> modulus_;  // extension only, monic, ascending
};

// Exact element of Q, F_p or F_{p^k}. Value semantics; binary operations
// require both operands to live over the same (structurally equal) field.
class FieldElement {
 public:
  FieldElement() = default;  // detached zero-like placeholder for containers

  const Field& field() const;
  bool is_zero() const;
  bool is_one() const;

  FieldElement operator-() const;
  FieldElement inverse() const;  // throws division_by_zero on 0
  FieldElement pow(std::uint64_t e) const;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  friend bool operator==(const FieldElement& a, const FieldElement& b);
  friend bool operator!=(const FieldElement& a, const FieldElement& b);

  // Rationals only.
  const mpq_class& rational() const;
  // Finite fields: residue(s) mod p, ascending powers of u (length k).
  const std::vector<std::uint64_t>& residues() const { return res_; }

  std::string str() const;  // "5/6", "3", "2*u+1"

 private:
  friend class Field;
  static void check_same(const FieldElement& a, const FieldElement& b);

  const Field* field_ = nullptr;
  mpq_class rat_;                    // rationals
  std::vector<std::uint64_t> res_;   // finite: length k, ascending
};

// Smallest monic irreducible of degree k over F_p, ascending coefficients;
// "smallest" in lexicographic order of the descending coefficient sequence
// with coefficients ordered 0 < 1 < ... < p-1. Deterministic. Requires k >= 2.
std::vector<std::uint64_t> find_irreducible(std::uint64_t p, unsigned k);

// Deterministic trial-division primality test.
bool is_prime_u64(std::uint64_t n);

}  // namespace frobdeg
