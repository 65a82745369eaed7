#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "frobdeg/typespace.hpp"

namespace frobdeg {

enum class SolveMethod { rank_criterion, oracle_fallback, closed_form_dim2, degenerate };
const char* to_string(SolveMethod m);

// Result of a Frobenius-degree computation: the degree g itself (kNegInf when
// every monic target is representable), the bounds that framed the scan, and
// an optional certified counter-example.
struct FrobeniusReport {
  int g = kNegInf;
  int lower_bound = kNegInf;
  int upper_bound = kNegInf;
  SolveMethod method = SolveMethod::rank_criterion;
  std::vector<int> probed_degrees;
  std::optional<Poly> counterexample;
  std::string note;  // set for degenerate returns
};

// A tuple (x_1, ..., x_n) of zero-or-monic polynomials with sum x_i A_i = F.
struct SolutionWitness {
  std::vector<Poly> x;
};

struct SolverConfig {
  std::uint64_t permute_cap = 5040;         // orderings tried per upper-bound subset
  std::uint64_t capacity_cap = 1ull << 24;  // budget for the brute-force fallback
};

// Recursive upper bound g+, minimized over (n-1)-subsets and (when the
// factorial stays within permute_cap) over their orderings. n = 2 collapses
// to deg A + deg B.
int upper_bound(const std::vector<Poly>& a, std::uint64_t permute_cap = 5040);

// Largest d with sum_i max(d - a_i, 0) <= d.
int lower_bound(const std::vector<int>& degrees);

// Whether every monic polynomial of degree d is representable, decided by the
// rank criterion: true iff some type T in T_d has rank A_T = d. Types with
// ind(T) < d are skipped without building matrices. Throws field_too_small
// when |T_d| >= |k| and characteristic_too_small when 0 < char <= n.
bool is_full(int d, const std::vector<Poly>& a);

// Descending scan from the upper bound; the first non-full degree is g.
// Falls back to the brute-force oracle when the field is too small for the
// rank criterion. Degenerate inputs (some A_i = 1, or 0 < char <= n) return
// g = kNegInf with a note instead of erroring.
FrobeniusReport frobenius_degree(const std::vector<Poly>& a, const SolverConfig& cfg = {});

// Closed form for two polynomials: g = deg A + deg B with counter-example
// AB - A - B. Requires characteristic zero or odd.
FrobeniusReport frobenius_dim2(const Poly& a, const Poly& b);

// Constructive witness for deg F > deg A + deg B: x A + y B = F with
// deg x = deg B and deg y = deg F - deg B.
SolutionWitness dim2_solution(const Poly& a, const Poly& b, const Poly& f);

// Decides representability of a monic target by scanning the affine pieces of
// T_{deg F}; returns the witness reconstructed from the first consistent
// piece, with free coefficients fixed to zero.
std::optional<SolutionWitness> solve_for(const Poly& f, const std::vector<Poly>& a);

// Positive characteristic p <= n: builds a witness for F whose components all
// have degree >= m, following the cancellation construction (cofactor
// products summing to zero in blocks of size divisible by p).
SolutionWitness charp_unbounded(const std::vector<Poly>& a, const Poly& f, int m);

struct Dim2Denumerant {
  int c;       // count - 2(deg F - deg A - deg B), in {0, 1, 2}
  int chi_ab;  // consistent types (f-a, c) with c < deg A
  int chi_ba;
};

struct TypeDenumerant {
  std::vector<TypeTuple> types;  // consistent types, enumeration order
  std::size_t count = 0;
  std::optional<Dim2Denumerant> dim2;  // n = 2 and deg F > deg A + deg B
};

TypeDenumerant type_denumerant(const Poly& f, const std::vector<Poly>& a);

// The product family: scaled_i = P / A_i for pairwise coprime A_i, whose
// Frobenius degree is exactly sum deg A_i, certified by P - sum scaled_i.
struct ProductFamily {
  std::vector<Poly> scaled;
  int expected_degree;
  Poly counterexample;
};
ProductFamily product_family(const std::vector<Poly>& a);

// Counter-example D*G + (D-1)*A_n for a family whose head has gcd D of
// positive degree, showing the recursive upper bound is attained.
Poly stacked_family(const std::vector<Poly>& head, const Poly& last, const Poly& g_counter);

// Shared validation: same field, every member monic; returns the degrees.
std::vector<int> validate_family(const std::vector<Poly>& a, bool require_nonconstant);

}  // namespace frobdeg
