#pragma once

#include "frobdeg/rng.hpp"
#include "frobdeg/solver.hpp"

namespace frobdeg {

// Hyperplane certificate for one type: the affine piece of T lies inside
// {w : normal . w = rhs}, with normal orthogonal to the piece's column space,
// independent of e = (1,0,...,0), first coordinate 0 and first nonzero
// coordinate scaled to 1.
struct PlaneCert {
  TypeTuple type;
  std::vector<FieldElement> normal;
  std::vector<FieldElement> offset;  // B_T
  FieldElement rhs;                  // normal . B_T
};

// Requires rank(A_T) < d, which holds for every type at d = g.
PlaneCert normal_vector(const AffinePiece& piece);

// Keeps the certificates whose plane differs from the reference plane: the
// stacked system {e.w = 1, n_U.w = rhs_U, n_T.w = rhs_T} must have augmented
// rank 3. The reference certificate itself is dropped.
std::vector<PlaneCert> dedup_planes(const std::vector<PlaneCert>& certs, const PlaneCert& u_cert);

// Explicit monic counter-example of degree d = g(A_1,...,A_n): a point of M_d
// outside every plane, found on the line through a generic point of the first
// plane and a point off it. The result is re-verified against solve_for
// before it is returned. Deterministic for a fixed seed.
Poly counter_example(const std::vector<Poly>& a, int d, Rng& rng);

}  // namespace frobdeg
