#include "frobdeg/certify.hpp"

#include <algorithm>
#include <memory>

#include "frobdeg/linalg.hpp"

namespace frobdeg {

namespace {

std::vector<FieldElement> unit_e(const Field& f, std::size_t dim) {
  std::vector<FieldElement> e(dim, f.zero());
  e[0] = f.one();
  return e;
}

// Solves a 2 x (d+1) affine system once, then produces solutions for
// arbitrary free-coordinate assignments.
class PlaneSampler {
 public:
  PlaneSampler(const std::vector<FieldElement>& normal, const FieldElement& rhs) {
    const Field& f = rhs.field();
    const std::size_t dim = normal.size();
    Matrix m(f, 2, dim + 1);
    m.at(0, 0) = f.one();
    m.at(0, dim) = f.one();  // e . w = 1
    for (std::size_t c = 0; c < dim; ++c) m.at(1, c) = normal[c];
    m.at(1, dim) = rhs;
    rref_ = std::make_unique<Matrix>(m);
    // Reduce: eliminate row 1's leading entries against row 0 and normalize.
    Matrix& r = *rref_;
    // Row 0 is already (1, 0, ..., 0 | 1) since normal[0] = 0 by construction;
    // row 1 only needs scaling by its first nonzero coordinate.
    std::size_t piv = 1;
    while (piv < dim && r.at(1, piv).is_zero()) ++piv;
    if (piv == dim) fail(ErrorKind::verification_failed, "degenerate plane certificate");
    pivot1_ = piv;
    const FieldElement inv = r.at(1, piv).inverse();
    for (std::size_t c = piv; c <= dim; ++c) r.at(1, c) = r.at(1, c) * inv;
    for (std::size_t c = 0; c < dim; ++c)
      if (c != 0 && c != piv) free_cols_.push_back(c);
  }

  const std::vector<std::size_t>& free_cols() const { return free_cols_; }

  std::vector<FieldElement> at(const std::vector<FieldElement>& free_values) const {
    const Matrix& r = *rref_;
    const std::size_t dim = r.cols() - 1;
    const Field& f = r.field();
    std::vector<FieldElement> w(dim, f.zero());
    w[0] = f.one();
    FieldElement acc = r.at(1, dim);
    for (std::size_t i = 0; i < free_cols_.size(); ++i) {
      w[free_cols_[i]] = free_values[i];
      acc = acc - r.at(1, free_cols_[i]) * free_values[i];
    }
    w[pivot1_] = acc;
    return w;
  }

 private:
  std::unique_ptr<Matrix> rref_;
  std::size_t pivot1_ = 0;
  std::vector<std::size_t> free_cols_;
};

}  // namespace

PlaneCert normal_vector(const AffinePiece& piece) {
  const Field& f = piece.a.field();
  const std::size_t dim = piece.a.rows();
  const std::vector<std::vector<FieldElement>> basis = nullspace(piece.a.transposed());

  const FieldElement* chosen = nullptr;
  std::vector<FieldElement> n;
  for (const auto& v : basis) {
    bool independent = false;
    for (std::size_t i = 1; i < dim; ++i)
      if (!v[i].is_zero()) {
        independent = true;
        break;
      }
    if (!independent) continue;
    n = v;
    chosen = v.data();
    break;
  }
  if (!chosen)
    fail(ErrorKind::rank_too_high,
         "rank A_T = d for type " + piece.type.str() + "; no usable normal");

  // Canonical form: zero first coordinate, first nonzero coordinate 1.
  n[0] = f.zero();
  std::size_t lead = 1;
  while (lead < dim && n[lead].is_zero()) ++lead;
  const FieldElement inv = n[lead].inverse();
  for (auto& c : n) c = c * inv;

  PlaneCert cert;
  cert.type = piece.type;
  cert.rhs = dot(n, piece.b);
  cert.normal = std::move(n);
  cert.offset = piece.b;
  return cert;
}

std::vector<PlaneCert> dedup_planes(const std::vector<PlaneCert>& certs, const PlaneCert& u_cert) {
  const Field& f = u_cert.rhs.field();
  const std::vector<FieldElement> e = unit_e(f, u_cert.normal.size());
  std::vector<PlaneCert> kept;
  for (const auto& cert : certs) {
    const std::size_t r = augmented_rank({{e, f.one()},
                                          {u_cert.normal, u_cert.rhs},
                                          {cert.normal, cert.rhs}});
    if (r == 3) kept.push_back(cert);
  }
  return kept;
}

Poly counter_example(const std::vector<Poly>& a, int d, Rng& rng) {
  const std::vector<int> degrees = validate_family(a, /*require_nonconstant=*/true);
  const Field& f = a[0].field();
  if (d < 0) fail(ErrorKind::invalid_input, "degree must be nonnegative");
  const std::uint64_t p = f.characteristic();
  if (p != 0 && p <= a.size())
    fail(ErrorKind::characteristic_too_small, "certification needs char 0 or > n");
  if (f.is_finite() && count_types(d, degrees) >= f.cardinality())
    fail(ErrorKind::field_too_small, "|T_d| >= |k|; certification needs a larger field");

  const auto verified = [&](Poly g) {
    if (solve_for(g, a))
      fail(ErrorKind::verification_failed, "constructed counter-example is representable");
    return g;
  };

  // Below the smallest family degree nothing is representable at all.
  if (d < *std::min_element(degrees.begin(), degrees.end()))
    return verified(Poly::monomial(f, d));

  std::vector<PlaneCert> certs;
  {
    TypeEnumerator en(d, degrees);
    while (auto t = en.next()) certs.push_back(normal_vector(build_piece(*t, a, d)));
  }
  const PlaneCert& u_cert = certs.front();
  const std::vector<PlaneCert> kept = dedup_planes(certs, u_cert);
  const std::size_t dim = (std::size_t)d + 1;

  // A generic point u of the reference plane: resample its free coordinates
  // until u misses every kept plane. Over Q the sampling bound doubles on
  // each rejection round.
  const PlaneSampler sampler(u_cert.normal, u_cert.rhs);
  std::vector<FieldElement> u;
  std::uint64_t bound = 4;
  for (std::uint64_t attempt = 0;; ++attempt) {
    if (attempt > 100000)
      fail(ErrorKind::verification_failed, "plane sampling failed to terminate");
    std::vector<FieldElement> free_values;
    free_values.reserve(sampler.free_cols().size());
    for (std::size_t i = 0; i < sampler.free_cols().size(); ++i)
      free_values.push_back(f.random_element(rng, bound));
    u = sampler.at(free_values);
    bool clear = true;
    for (const auto& cert : kept) {
      if ((dot(cert.normal, u) - cert.rhs).is_zero()) {
        clear = false;
        break;
      }
    }
    if (clear) break;
    bound *= 2;
  }

  // A point v of M_d off the reference plane: same constraints with shifted
  // right-hand side, free coordinates zero.
  std::vector<FieldElement> v;
  {
    Matrix m(f, 2, dim);
    m.at(0, 0) = f.one();
    for (std::size_t c = 0; c < dim; ++c) m.at(1, c) = u_cert.normal[c];
    const auto sol = solve(m, {f.one(), u_cert.rhs + f.one()});
    if (!sol) fail(ErrorKind::verification_failed, "off-plane point does not exist");
    v = *sol;
  }

  // Line parameters where the line through u and v meets a kept plane; beta
  // must avoid them all, and 0 (the reference plane itself).
  std::vector<FieldElement> gamma;
  gamma.push_back(f.zero());
  for (const auto& cert : kept) {
    const FieldElement denom = dot(cert.normal, v) - dot(cert.normal, u);
    if (denom.is_zero()) continue;  // line parallel to this plane: no hit
    gamma.push_back((cert.rhs - dot(cert.normal, u)) / denom);
  }
  const auto in_gamma = [&](const FieldElement& x) {
    return std::any_of(gamma.begin(), gamma.end(), [&](const FieldElement& g) { return g == x; });
  };

  FieldElement beta = f.zero();
  bound = 4;
  for (std::uint64_t attempt = 0;; ++attempt) {
    if (attempt > 100000)
      fail(ErrorKind::verification_failed, "line-parameter sampling failed to terminate");
    beta = f.random_element(rng, bound);
    if (!beta.is_zero() && !in_gamma(beta)) break;
    bound *= 2;
  }

  std::vector<FieldElement> w(dim, f.zero());
  const FieldElement one_minus = f.one() - beta;
  for (std::size_t i = 0; i < dim; ++i) w[i] = one_minus * u[i] + beta * v[i];
  if (!w[0].is_one())
    fail(ErrorKind::verification_failed, "line left the monic slice");
  for (const auto& cert : kept)
    if ((dot(cert.normal, w) - cert.rhs).is_zero())
      fail(ErrorKind::verification_failed, "constructed point landed on a kept plane");

  return verified(Poly::from_vector(f, w));
}

}  // namespace frobdeg
