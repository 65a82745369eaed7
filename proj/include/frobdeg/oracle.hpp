#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "frobdeg/solver.hpp"

namespace frobdeg {

struct OracleConfig {
  // Budget on enumerated combinations / stored vectors.
  std::uint64_t capacity_cap = 1ull << 24;
};

// Exhaustive census of the monic degree-d targets reachable as cone
// combinations of the family, over a finite field.
class DegreeCensus {
 public:
  int d = 0;
  std::uint64_t total = 0;            // q^d = |M_d|
  std::uint64_t reachable_count = 0;  // |F_d|
  std::optional<Poly> missing_example;  // first unreachable monic, if any

  // Membership test for a monic polynomial of degree d over the same field.
  bool contains(const Poly& f) const;

 private:
  friend DegreeCensus enumerate_reachable(int, const std::vector<Poly>&, const OracleConfig&);
  const Field* field_ = nullptr;
  std::uint64_t q_ = 0;
  std::vector<bool> bits_;  // indexed by the packed trailing coefficients
};

// Builds F_d as the union of the affine pieces of T_d, evaluated pointwise
// over the finite field; records the first missing monic vector.
DegreeCensus enumerate_reachable(int d, const std::vector<Poly>& a,
                                 const OracleConfig& cfg = {});

// Exhaustive search over all cone tuples with deg x_i <= deg F - deg A_i,
// independent of the type machinery; returns the first witness in
// lexicographic (degree pattern, coefficient) order.
std::optional<SolutionWitness> brute_solve(const Poly& f, const std::vector<Poly>& a,
                                           const OracleConfig& cfg = {});

// Largest d <= d_max whose census has a missing vector; the missing vector is
// reported as the counter-example.
FrobeniusReport brute_g(const std::vector<Poly>& a, int d_max, const OracleConfig& cfg = {});

}  // namespace frobdeg
