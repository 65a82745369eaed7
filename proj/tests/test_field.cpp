#include <doctest.h>

#include "frobdeg/field.hpp"
#include "support.hpp"

using namespace frobdeg;

TEST_CASE("rational arithmetic is exact") {
  const Field q = Field::rationals();
  const FieldElement half = q.from_rational(mpq_class(1, 2));
  const FieldElement third = q.from_rational(mpq_class(1, 3));
  CHECK((half + third).rational() == mpq_class(5, 6));
  CHECK((half * third).rational() == mpq_class(1, 6));
  CHECK((half - half).is_zero());
  CHECK(half.inverse().rational() == 2);
  // Canonical form: lowest terms, positive denominator.
  const FieldElement v = q.from_rational(mpq_class(-4, -6));
  CHECK(v.rational().get_num() == 2);
  CHECK(v.rational().get_den() == 3);
}

TEST_CASE("prime field arithmetic") {
  const Field f5 = Field::prime(5);
  CHECK((f5.from_integer(3) * f5.from_integer(4)) == f5.from_integer(2));
  CHECK(f5.from_integer(2).inverse() == f5.from_integer(3));
  CHECK(f5.from_integer(-1) == f5.from_integer(4));
  CHECK_THROWS_AS((void)f5.zero().inverse(), FrobError);
}

TEST_CASE("field construction rejects bad parameters") {
  CHECK_THROWS_AS((void)Field::prime(4), FrobError);
  CHECK_THROWS_AS((void)Field::prime(1), FrobError);
  // u^2 + 1 = (u+2)(u+3) over F_5, so it is not a valid modulus.
  CHECK_THROWS_AS((void)Field::extension(5, {1, 0, 1}), FrobError);
  CHECK_THROWS_AS((void)Field::extension(5, {2, 0, 2}), FrobError);
}

TEST_CASE("descriptor mismatch is rejected") {
  const Field f5 = Field::prime(5);
  const Field f7 = Field::prime(7);
  CHECK_THROWS_AS((void)(f5.one() + f7.one()), FrobError);
  // Structurally equal descriptors interoperate.
  const Field f5b = Field::prime(5);
  CHECK(f5.one() + f5b.from_integer(4) == f5.zero());
}

TEST_CASE("find_irreducible picks the smallest candidate") {
  CHECK(find_irreducible(5, 2) == std::vector<std::uint64_t>{2, 0, 1});  // u^2 + 2
  CHECK(find_irreducible(2, 2) == std::vector<std::uint64_t>{1, 1, 1});  // u^2 + u + 1
  CHECK(find_irreducible(3, 2) == std::vector<std::uint64_t>{1, 0, 1});  // u^2 + 1
}

TEST_CASE("find_irreducible output has no roots and no small factors") {
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
    for (unsigned k : {2u, 3u, 4u}) {
      const std::vector<std::uint64_t> m = find_irreducible(p, k);
      CHECK(m.size() == k + 1);
      CHECK(m.back() == 1);
      // The extension constructor re-runs the exhaustive root/divisor check.
      CHECK_NOTHROW((void)Field::extension(p, m));
    }
  }
}

TEST_CASE("extension field arithmetic and Fermat") {
  const Field f25 = Field::extension(5, 2);
  const FieldElement u = f25.generator();
  CHECK(u * u == f25.from_integer(-2));  // u^2 = -2 mod (u^2 + 2)
  for (std::uint64_t i = 1; i < 25; ++i) {
    const FieldElement x = f25.element_at(i);
    CHECK(x * x.inverse() == f25.one());
    CHECK(x.pow(24) == f25.one());
  }
  const Field f8 = Field::extension(2, 3);
  for (std::uint64_t i = 1; i < 8; ++i) CHECK(f8.element_at(i).pow(7) == f8.one());
}

TEST_CASE("embedding is a ring homomorphism") {
  const Field f5 = Field::prime(5);
  const Field f25 = Field::extension(5, 2);
  CHECK(f25.embed(f5.from_integer(3)).residues() == std::vector<std::uint64_t>{3, 0});
  CHECK(f25.embed(f5.zero()).is_zero());
  CHECK(f25.embed(f5.from_integer(2)) * f25.embed(f5.from_integer(3)) ==
        f25.embed(f5.from_integer(1)));
  for (std::uint64_t i = 0; i < 5; ++i)
    for (std::uint64_t j = 0; j < 5; ++j) {
      const FieldElement x = f5.element_at(i), y = f5.element_at(j);
      CHECK(f25.embed(x + y) == f25.embed(x) + f25.embed(y));
      CHECK(f25.embed(x * y) == f25.embed(x) * f25.embed(y));
      if (i != j) CHECK(f25.embed(x) != f25.embed(y));
    }
  const Field q = Field::rationals();
  CHECK_THROWS_AS((void)f25.embed(q.one()), FrobError);
  const Field f7 = Field::prime(7);
  CHECK_THROWS_AS((void)f25.embed(f7.one()), FrobError);
}

TEST_CASE("random_element is deterministic and bounded") {
  const Field f5 = Field::prime(5);
  Rng a(123), b(123);
  for (int i = 0; i < 50; ++i) CHECK(f5.random_element(a) == f5.random_element(b));

  const Field q = Field::rationals();
  Rng r(7);
  for (int i = 0; i < 200; ++i) {
    const FieldElement x = q.random_element(r, 10);
    CHECK(x.rational().get_den() == 1);
    CHECK(abs(x.rational().get_num()) <= 10);
  }
}

TEST_CASE("field axioms hold on random triples") {
  const Field q = Field::rationals();
  const Field f7 = Field::prime(7);
  const Field f25 = Field::extension(5, 2);
  for (const Field* f : {&q, &f7, &f25}) {
    Rng rng(99);
    for (int i = 0; i < 300; ++i) {
      const FieldElement a = f->random_element(rng, 20);
      const FieldElement b = f->random_element(rng, 20);
      const FieldElement c = f->random_element(rng, 20);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK(a * (b + c) == a * b + a * c);
      if (!a.is_zero()) CHECK(a * a.inverse() == f->one());
    }
  }
}

TEST_CASE("cardinality and enumeration") {
  const Field f25 = Field::extension(5, 2);
  CHECK(f25.cardinality() == 25);
  CHECK(f25.size_u64() == 25);
  for (std::uint64_t i = 0; i < 25; ++i) CHECK(f25.index_of(f25.element_at(i)) == i);
  const Field q = Field::rationals();
  CHECK_THROWS_AS((void)q.cardinality(), FrobError);
}
