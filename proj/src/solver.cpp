#include "frobdeg/solver.hpp"

#include <algorithm>
#include <numeric>

#include "frobdeg/oracle.hpp"

namespace frobdeg {

const char* to_string(SolveMethod m) {
  switch (m) {
    case SolveMethod::rank_criterion: return "rank_criterion";
    case SolveMethod::oracle_fallback: return "oracle_fallback";
    case SolveMethod::closed_form_dim2: return "closed_form_dim2";
    case SolveMethod::degenerate: return "degenerate";
  }
  return "?";
}

std::vector<int> validate_family(const std::vector<Poly>& a, bool require_nonconstant) {
  if (a.size() < 2) fail(ErrorKind::invalid_input, "need at least two polynomials");
  const Field& f = a[0].field();
  std::vector<int> degrees;
  degrees.reserve(a.size());
  for (const auto& p : a) {
    if (!p.field().same(f)) fail(ErrorKind::field_mismatch, "family spans several fields");
    if (!p.is_monic()) fail(ErrorKind::invalid_input, "family members must be monic");
    if (require_nonconstant && p.degree() < 1)
      fail(ErrorKind::constant_input, "family members must be nonconstant");
    degrees.push_back(p.degree());
  }
  return degrees;
}

namespace {

Poly family_gcd(const std::vector<Poly>& a) {
  Poly d = a[0];
  for (std::size_t i = 1; i < a.size(); ++i) d = gcd(d, a[i]);
  return d;
}

void check_characteristic(const Field& f, std::size_t n) {
  const std::uint64_t p = f.characteristic();
  if (p != 0 && p <= n)
    fail(ErrorKind::characteristic_too_small,
         "characteristic " + std::to_string(p) + " <= n = " + std::to_string(n));
}

// Remark-style recursive bound for an ordered list of at least two monic
// nonconstant coprime polynomials.
int ordered_upper_bound(const std::vector<Poly>& list) {
  if (list.size() == 2) return list[0].degree() + list[1].degree();
  std::vector<Poly> head(list.begin(), list.end() - 1);
  const Poly d = family_gcd(head);
  if (d.degree() == 0) return ordered_upper_bound(head);
  for (auto& h : head) h = h.exact_div(d);
  return std::max(list.back().degree(), ordered_upper_bound(head)) + d.degree();
}

std::uint64_t factorial_capped(std::size_t n, std::uint64_t cap) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) {
    f *= i;
    if (f > cap) return cap + 1;
  }
  return f;
}

}  // namespace

int upper_bound(const std::vector<Poly>& a, std::uint64_t permute_cap) {
  validate_family(a, /*require_nonconstant=*/true);
  if (!family_gcd(a).is_one()) fail(ErrorKind::not_coprime, "family is not coprime");
  if (a.size() == 2) return a[0].degree() + a[1].degree();

  int best = 0;
  bool have = false;
  for (std::size_t drop = 0; drop < a.size(); ++drop) {
    std::vector<Poly> subset;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (i != drop) subset.push_back(a[i]);
    if (factorial_capped(subset.size(), permute_cap) <= permute_cap) {
      std::vector<std::size_t> order(subset.size());
      std::iota(order.begin(), order.end(), 0);
      do {
        std::vector<Poly> perm;
        for (std::size_t i : order) perm.push_back(subset[i]);
        const int u = ordered_upper_bound(perm);
        if (!have || u < best) best = u, have = true;
      } while (std::next_permutation(order.begin(), order.end()));
    } else {
      const int u = ordered_upper_bound(subset);
      if (!have || u < best) best = u, have = true;
    }
  }
  return best;
}

int lower_bound(const std::vector<int>& degrees) {
  if (degrees.size() < 2) fail(ErrorKind::invalid_input, "need at least two degrees");
  int limit = 0;
  for (int a : degrees) {
    if (a < 1) fail(ErrorKind::invalid_input, "degrees must be at least 1");
    limit += a;
  }
  int best = 0;
  for (int d = 0; d <= limit; ++d) {
    long long s = 0;
    for (int a : degrees) s += std::max(d - a, 0);
    if (s <= d) best = d;
  }
  return best;
}

bool is_full(int d, const std::vector<Poly>& a) {
  const std::vector<int> degrees = validate_family(a, /*require_nonconstant=*/true);
  const Field& f = a[0].field();
  check_characteristic(f, a.size());
  if (d < *std::min_element(degrees.begin(), degrees.end())) return false;
  if (f.is_finite() && count_types(d, degrees) >= f.cardinality())
    fail(ErrorKind::field_too_small,
         "|T_" + std::to_string(d) + "| >= |k|; the rank criterion does not apply");

  TypeEnumerator en(d, degrees);
  while (auto t = en.next()) {
    if (t->ind() < d) continue;  // rank <= ind < d, skip without building
    const AffinePiece piece = build_piece(*t, a, d);
    if ((int)rank(piece.a) == d) return true;
  }
  return false;
}

FrobeniusReport frobenius_degree(const std::vector<Poly>& a, const SolverConfig& cfg) {
  validate_family(a, /*require_nonconstant=*/false);
  const Field& f = a[0].field();

  for (const auto& p : a) {
    if (p.is_one()) {
      FrobeniusReport r;
      r.method = SolveMethod::degenerate;
      r.note = "a family member equals 1, so every monic target is representable";
      return r;
    }
    if (p.degree() < 1) fail(ErrorKind::constant_input, "constant non-unit member");
  }
  if (!family_gcd(a).is_one()) fail(ErrorKind::not_coprime, "family is not coprime");

  const std::uint64_t p = f.characteristic();
  if (p != 0 && p <= a.size()) {
    FrobeniusReport r;
    r.method = SolveMethod::degenerate;
    r.note = "characteristic " + std::to_string(p) +
             " <= n: every monic target is representable";
    return r;
  }

  std::vector<int> degrees;
  for (const auto& q : a) degrees.push_back(q.degree());
  FrobeniusReport r;
  r.upper_bound = upper_bound(a, cfg.permute_cap);
  r.lower_bound = lower_bound(degrees);
  r.method = SolveMethod::rank_criterion;

  for (int d = r.upper_bound; d >= r.lower_bound; --d) {
    r.probed_degrees.push_back(d);
    bool full;
    try {
      full = is_full(d, a);
    } catch (const FrobError& e) {
      if (e.kind() != ErrorKind::field_too_small) throw;
      // Small finite field: hand the remaining degrees to the oracle.
      FrobeniusReport o = brute_g(a, d, OracleConfig{cfg.capacity_cap});
      o.upper_bound = r.upper_bound;
      o.lower_bound = r.lower_bound;
      o.probed_degrees.insert(o.probed_degrees.begin(), r.probed_degrees.begin(),
                              r.probed_degrees.end() - 1);
      return o;
    }
    if (!full) {
      r.g = d;
      return r;
    }
  }
  fail(ErrorKind::verification_failed, "scan passed the lower bound; this cannot happen");
}

FrobeniusReport frobenius_dim2(const Poly& a, const Poly& b) {
  validate_family({a, b}, /*require_nonconstant=*/true);
  if (!gcd(a, b).is_one()) fail(ErrorKind::not_coprime, "inputs are not coprime");
  if (a.field().characteristic() == 2)
    fail(ErrorKind::characteristic_too_small, "closed form needs characteristic 0 or odd");

  FrobeniusReport r;
  r.method = SolveMethod::closed_form_dim2;
  r.g = a.degree() + b.degree();
  r.lower_bound = r.g;
  r.upper_bound = r.g;
  Poly counter = a * b - a - b;
  if (!counter.is_monic() || counter.degree() != r.g)
    fail(ErrorKind::verification_failed, "AB - A - B is not monic of the right degree");
  if (solve_for(counter, {a, b}))
    fail(ErrorKind::verification_failed, "closed-form counter-example is representable");
  r.counterexample = std::move(counter);
  return r;
}

SolutionWitness dim2_solution(const Poly& a, const Poly& b, const Poly& f) {
  validate_family({a, b}, /*require_nonconstant=*/true);
  if (!gcd(a, b).is_one()) fail(ErrorKind::not_coprime, "inputs are not coprime");
  if (!f.is_monic()) fail(ErrorKind::invalid_input, "target must be monic");
  if (f.degree() <= a.degree() + b.degree())
    fail(ErrorKind::degree_too_small, "need deg F > deg A + deg B");

  const ExtGcd e = ext_gcd(a, b);
  if (!e.d.is_one()) fail(ErrorKind::not_coprime, "inputs are not coprime");
  // Particular solution scaled to F, x-part reduced mod B, then shifted into
  // the cone: x = x0 + B, y = y0 - A.
  const Poly x0 = (f * e.s).divmod(b).second;
  const Poly y0 = (f - x0 * a).exact_div(b);
  const Poly x = x0 + b;
  const Poly y = y0 - a;
  if (!(x * a + y * b == f) || !x.in_nonneg_cone() || !y.in_nonneg_cone() ||
      x.degree() != b.degree() || y.degree() != f.degree() - b.degree())
    fail(ErrorKind::verification_failed, "dim-2 witness construction broke its contract");
  return {{x, y}};
}

std::optional<SolutionWitness> solve_for(const Poly& f, const std::vector<Poly>& a) {
  const std::vector<int> degrees = validate_family(a, /*require_nonconstant=*/true);
  const Field& k = a[0].field();
  if (!f.field().same(k)) fail(ErrorKind::field_mismatch, "target over a different field");
  if (!f.is_monic()) fail(ErrorKind::invalid_input, "target must be monic");
  check_characteristic(k, a.size());

  const int d = f.degree();
  const std::vector<FieldElement> target = f.to_vector(d);

  TypeEnumerator en(d, degrees);
  while (auto t = en.next()) {
    const AffinePiece piece = build_piece(*t, a, d);
    std::vector<FieldElement> rhs(target.size(), k.zero());
    for (std::size_t i = 0; i < rhs.size(); ++i) rhs[i] = target[i] - piece.b[i];
    const auto xi = solve(piece.a, rhs);
    if (!xi) continue;

    // Reconstruct the witness: blocks of xi hold the trailing coefficients of
    // each x_i with positive degree, highest power first.
    SolutionWitness w;
    w.x.reserve(a.size());
    std::size_t offset = 0;
    for (int i = 0; i < (int)a.size(); ++i) {
      const int e = t->entries[(std::size_t)i];
      if (e == kNegInf) {
        w.x.push_back(Poly(k));
      } else if (e == 0) {
        w.x.push_back(Poly::constant(k, k.one()));
      } else {
        std::vector<FieldElement> coeffs((std::size_t)e + 1, k.zero());
        coeffs.back() = k.one();
        for (int m = 0; m < e; ++m)
          coeffs[(std::size_t)(e - 1 - m)] = (*xi)[offset + (std::size_t)m];
        offset += (std::size_t)e;
        w.x.push_back(Poly(k, std::move(coeffs)));
      }
    }

    Poly sum(k);
    for (std::size_t i = 0; i < a.size(); ++i) sum = sum + w.x[i] * a[i];
    if (!(sum == f))
      fail(ErrorKind::verification_failed, "reconstructed witness does not reproduce the target");
    return w;
  }
  return std::nullopt;
}

SolutionWitness charp_unbounded(const std::vector<Poly>& a, const Poly& f, int m) {
  validate_family(a, /*require_nonconstant=*/false);
  const Field& k = a[0].field();
  const std::uint64_t p = k.characteristic();
  const int n = (int)a.size();
  if (p == 0 || p > (std::uint64_t)n)
    fail(ErrorKind::characteristic_mismatch,
         "construction needs 0 < char <= n, got char " + std::to_string(p));
  if (!f.is_monic()) fail(ErrorKind::invalid_input, "target must be monic");
  if (m < 1) fail(ErrorKind::invalid_input, "minimum degree must be positive");
  if (!family_gcd(a).is_one()) fail(ErrorKind::not_coprime, "family is not coprime");

  const int pa = (int)(p * (std::uint64_t)(n / (int)p));  // largest multiple of p <= n
  const int b = n - pa;

  // Bezout cofactors scaled to the target: sum g_i A_i = F.
  BezoutResult bz = bezout(a);
  std::vector<Poly> g;
  g.reserve(a.size());
  for (const auto& c : bz.cofactors) g.push_back(c * f);

  // Block cofactor products: within each index block the products
  // prod(block)/A_i sum against A_i to |block| * prod = 0 mod p.
  const auto block_cofactors = [&](int lo, int hi) {
    Poly prod = Poly::constant(k, k.one());
    for (int i = lo; i < hi; ++i) prod = prod * a[(std::size_t)i];
    std::vector<Poly> out;
    for (int i = lo; i < hi; ++i) out.push_back(prod.exact_div(a[(std::size_t)i]));
    return out;
  };

  int max_g = kNegInf;
  for (const auto& gi : g) max_g = std::max(max_g, gi.degree());

  std::vector<Poly> x;
  if (b == 0) {
    const std::vector<Poly> z = block_cofactors(0, n);
    int shift = m;
    for (int i = 0; i < n; ++i)
      while (g[(std::size_t)i].degree() >= shift + z[(std::size_t)i].degree()) ++shift;
    for (int i = 0; i < n; ++i)
      x.push_back(z[(std::size_t)i].shifted(shift) + g[(std::size_t)i]);
  } else {
    // R = [0, pa), S = [n-p, n); both blocks have size divisible by p and
    // cover all indices.
    const int s_lo = n - (int)p;
    const std::vector<Poly> y = block_cofactors(0, pa);
    const std::vector<Poly> z = block_cofactors(s_lo, n);
    int m_shift = m;
    for (int i = s_lo; i < n; ++i)
      while (g[(std::size_t)i].degree() >= m_shift + z[(std::size_t)(i - s_lo)].degree())
        ++m_shift;
    int max_z = 0;
    for (const auto& zi : z) max_z = std::max(max_z, zi.degree());
    int l = std::max({m_shift + max_z, max_g, m}) + 1;
    for (int i = 0; i < n; ++i) {
      Poly xi = g[(std::size_t)i];
      if (i < pa) xi = xi + y[(std::size_t)i].shifted(l);
      if (i >= s_lo) xi = xi + z[(std::size_t)(i - s_lo)].shifted(m_shift);
      x.push_back(std::move(xi));
    }
  }

  Poly sum(k);
  for (std::size_t i = 0; i < a.size(); ++i) sum = sum + x[i] * a[i];
  bool ok = sum == f;
  for (const auto& xi : x) ok = ok && xi.is_monic() && xi.degree() >= m;
  if (!ok) fail(ErrorKind::verification_failed, "positive-characteristic witness is invalid");
  return {std::move(x)};
}

TypeDenumerant type_denumerant(const Poly& f, const std::vector<Poly>& a) {
  const std::vector<int> degrees = validate_family(a, /*require_nonconstant=*/true);
  const Field& k = a[0].field();
  if (!f.field().same(k)) fail(ErrorKind::field_mismatch, "target over a different field");
  if (!f.is_monic()) fail(ErrorKind::invalid_input, "target must be monic");
  check_characteristic(k, a.size());

  const int d = f.degree();
  const std::vector<FieldElement> target = f.to_vector(d);

  TypeDenumerant out;
  TypeEnumerator en(d, degrees);
  while (auto t = en.next()) {
    const AffinePiece piece = build_piece(*t, a, d);
    std::vector<FieldElement> rhs(target.size(), k.zero());
    for (std::size_t i = 0; i < rhs.size(); ++i) rhs[i] = target[i] - piece.b[i];
    if (solve(piece.a, rhs)) out.types.push_back(*t);
  }
  out.count = out.types.size();

  if (a.size() == 2 && d > degrees[0] + degrees[1]) {
    const int fa = degrees[0], fb = degrees[1];
    Dim2Denumerant extra{};
    extra.c = (int)out.count - 2 * (d - fa - fb);
    for (const auto& t : out.types) {
      if (t.j == 0 && (t.entries[1] == kNegInf || t.entries[1] < fa)) ++extra.chi_ab;
      if (t.j == 1 && (t.entries[0] == kNegInf || t.entries[0] < fb)) ++extra.chi_ba;
    }
    if (extra.c != extra.chi_ab + extra.chi_ba || extra.c < 0 || extra.c > 2)
      fail(ErrorKind::verification_failed, "type-denumerant decomposition is inconsistent");
    out.dim2 = extra;
  }
  return out;
}

ProductFamily product_family(const std::vector<Poly>& a) {
  validate_family(a, /*require_nonconstant=*/true);
  const Field& k = a[0].field();
  check_characteristic(k, a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (!gcd(a[i], a[j]).is_one())
        fail(ErrorKind::not_pairwise_coprime, "members " + std::to_string(i) + " and " +
                                                  std::to_string(j) + " share a factor");

  Poly prod = Poly::constant(k, k.one());
  int total = 0;
  for (const auto& p : a) {
    prod = prod * p;
    total += p.degree();
  }
  ProductFamily out{{}, total, Poly(k)};
  Poly sum(k);
  for (const auto& p : a) {
    Poly scaled = prod.exact_div(p);
    sum = sum + scaled;
    out.scaled.push_back(std::move(scaled));
  }
  out.counterexample = prod - sum;
  if (!out.counterexample.is_monic() || out.counterexample.degree() != total)
    fail(ErrorKind::verification_failed, "product-family counter-example malformed");
  return out;
}

Poly stacked_family(const std::vector<Poly>& head, const Poly& last, const Poly& g_counter) {
  validate_family(head, /*require_nonconstant=*/true);
  const Field& k = head[0].field();
  if (!last.field().same(k) || !g_counter.field().same(k))
    fail(ErrorKind::field_mismatch, "family spans several fields");
  if (!last.is_monic() || last.degree() < 1)
    fail(ErrorKind::invalid_input, "last member must be monic and nonconstant");
  check_characteristic(k, head.size() + 1);

  const Poly d = family_gcd(head);
  if (d.degree() < 1)
    fail(ErrorKind::invalid_input, "gcd of the leading family must be nonconstant");
  for (const auto& h : head)
    if (h == d) fail(ErrorKind::invalid_input, "gcd must differ from every leading member");
  if (!gcd(d, last).is_one())
    fail(ErrorKind::invalid_input, "gcd of the head must be coprime to the last member");
  if (!g_counter.is_monic()) fail(ErrorKind::invalid_input, "G must be monic");
  if (last.degree() <= g_counter.degree())
    fail(ErrorKind::invalid_input, "need deg A_n > deg G");

  std::vector<Poly> quotients;
  for (const auto& h : head) quotients.push_back(h.exact_div(d));
  if (solve_for(g_counter, quotients))
    fail(ErrorKind::invalid_input, "G is representable over the reduced head family");

  const Poly one = Poly::constant(k, k.one());
  Poly out = d * g_counter + (d - one) * last;
  const int expected = std::max(last.degree(), g_counter.degree()) + d.degree();
  if (!out.is_monic() || out.degree() != expected)
    fail(ErrorKind::verification_failed, "stacked counter-example malformed");
  return out;
}

}  // namespace frobdeg
