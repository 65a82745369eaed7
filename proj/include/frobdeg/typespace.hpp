#pragma once

#include <optional>
#include <string>
#include <vector>

#include "frobdeg/linalg.hpp"
#include "frobdeg/poly.hpp"

namespace frobdeg {

// Degree pattern of a cone solution for a degree-d target: entries[j] = d - a_j
// for a unique distinguished index j, and every other entry is kNegInf or an
// integer strictly below d - a_i.
struct TypeTuple {
  std::vector<int> entries;
  int d = 0;
  int j = 0;

  // Indices with positive entry / zero entry.
  std::vector<int> r_set() const;
  std::vector<int> s_set() const;
  // Number of free coefficient variables: sum of max(entry, 0).
  int ind() const;

  bool operator==(const TypeTuple& o) const { return entries == o.entries && d == o.d && j == o.j; }
  std::string str() const;  // "(2,-inf)"
};

// Streams the members of T_d in lexicographic (j, entries) order without
// materializing the whole set; entry values order as -inf < 0 < 1 < ...
class TypeEnumerator {
 public:
  TypeEnumerator(int d, std::vector<int> degrees);
  std::optional<TypeTuple> next();

 private:
  bool seed_j();  // position odometer at the first tuple for current j_

  int d_;
  std::vector<int> degrees_;
  int j_ = 0;
  bool exhausted_ = false;
  // Odometer over slots != j_: option index 0 encodes -inf, m encodes m-1.
  std::vector<int> option_;
  std::vector<int> option_count_;
};

std::vector<TypeTuple> enumerate_types(int d, const std::vector<int>& degrees);
// |T_d| = sum over j with a_j <= d of prod_{i != j} (max(d - a_i, 0) + 1).
mpz_class count_types(int d, const std::vector<int>& degrees);

// The affine piece of a type: target vectors representable with degrees
// exactly T form column_space(a) + b inside k^{d+1}.
struct AffinePiece {
  TypeTuple type;
  Matrix a;                       // (d+1) x max(ind, 1)
  std::vector<FieldElement> b;    // length d+1, first entry 1
};

// (d+1) x (e+1) matrix whose column j holds the coordinate vector of
// a_i * t^(e-j), j = 0..e.
Matrix build_mi(const Poly& a_i, int e_i, int d);

AffinePiece build_piece(const TypeTuple& t, const std::vector<Poly>& a, int d);

}  // namespace frobdeg
