#include "frobdeg/oracle.hpp"

#include <algorithm>
#include <functional>

namespace frobdeg {

namespace {

using u64 = std::uint64_t;

// Table-backed arithmetic on element indices 0..q-1, so the enumeration loops
// run on integers instead of FieldElement temporaries. Desk scale: q is capped
// by the table size well before the combination budget matters.
constexpr u64 kMaxTableField = 1024;

struct PackedField {
  const Field* field;
  u64 q;
  std::vector<std::uint16_t> add, mul;
  std::vector<std::uint16_t> neg, inv;  // inv[0] unused

  explicit PackedField(const Field& f) : field(&f) {
    if (!f.is_finite()) fail(ErrorKind::invalid_input, "oracle needs a finite field");
    q = f.size_u64();
    if (q > kMaxTableField)
      fail(ErrorKind::capacity_exceeded, "field too large for the brute-force oracle");
    add.resize(q * q);
    mul.resize(q * q);
    neg.resize(q);
    inv.resize(q);
    std::vector<FieldElement> elems;
    elems.reserve(q);
    for (u64 i = 0; i < q; ++i) elems.push_back(f.element_at(i));
    for (u64 i = 0; i < q; ++i) {
      neg[i] = (std::uint16_t)f.index_of(-elems[i]);
      if (i) inv[i] = (std::uint16_t)f.index_of(elems[i].inverse());
      for (u64 j = 0; j < q; ++j) {
        add[i * q + j] = (std::uint16_t)f.index_of(elems[i] + elems[j]);
        mul[i * q + j] = (std::uint16_t)f.index_of(elems[i] * elems[j]);
      }
    }
  }

  std::uint16_t plus(std::uint16_t a, std::uint16_t b) const { return add[(u64)a * q + b]; }
  std::uint16_t times(std::uint16_t a, std::uint16_t b) const { return mul[(u64)a * q + b]; }
  std::uint16_t minus(std::uint16_t a, std::uint16_t b) const { return plus(a, neg[b]); }
};

// Polynomial as element indices, ascending, trimmed.
using IdPoly = std::vector<std::uint16_t>;

IdPoly pack(const PackedField& pf, const Poly& p) {
  IdPoly out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back((std::uint16_t)pf.field->index_of(c));
  return out;
}

Poly unpack(const PackedField& pf, const IdPoly& p) {
  std::vector<FieldElement> c;
  c.reserve(p.size());
  for (auto id : p) c.push_back(pf.field->element_at(id));
  return Poly(*pf.field, std::move(c));
}

void id_trim(IdPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

IdPoly id_sub(const PackedField& pf, const IdPoly& a, const IdPoly& b) {
  IdPoly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const std::uint16_t x = i < a.size() ? a[i] : 0;
    const std::uint16_t y = i < b.size() ? b[i] : 0;
    out[i] = pf.minus(x, y);
  }
  id_trim(out);
  return out;
}

// Quotient of a by b when the division is exact and the quotient is monic of
// degree e; nullopt otherwise. b is monic.
std::optional<IdPoly> id_exact_monic_quotient(const PackedField& pf, IdPoly a, const IdPoly& b,
                                              int e) {
  if (e == kNegInf) {
    if (a.empty()) return IdPoly{};
    return std::nullopt;
  }
  if ((int)a.size() != e + (int)b.size()) return std::nullopt;
  IdPoly q((std::size_t)e + 1, 0);
  while ((int)a.size() >= (int)b.size() && !a.empty()) {
    const std::uint16_t factor = a.back();
    const std::size_t shift = a.size() - b.size();
    q[shift] = factor;
    if (factor != 0)
      for (std::size_t i = 0; i < b.size(); ++i)
        a[shift + i] = pf.minus(a[shift + i], pf.times(factor, b[i]));
    a.pop_back();
    id_trim(a);
  }
  if (!a.empty()) return std::nullopt;
  if (q.back() != 1) return std::nullopt;  // quotient must be monic
  return q;
}

void check_oracle_inputs(const Poly* f, const std::vector<Poly>& a) {
  validate_family(a, /*require_nonconstant=*/false);
  const Field& k = a[0].field();
  if (!k.is_finite()) fail(ErrorKind::invalid_input, "oracle needs a finite field");
  if (k.characteristic() <= a.size())
    fail(ErrorKind::characteristic_too_small, "oracle needs characteristic > n");
  if (f) {
    if (!f->field().same(k)) fail(ErrorKind::field_mismatch, "target over a different field");
    if (!f->is_monic()) fail(ErrorKind::invalid_input, "target must be monic");
  }
}

u64 checked_pow(u64 base, int e, u64 cap) {
  u64 r = 1;
  for (int i = 0; i < e; ++i) {
    if (r > cap / base)
      fail(ErrorKind::capacity_exceeded, "enumeration budget exceeded");
    r *= base;
  }
  return r;
}

}  // namespace

bool DegreeCensus::contains(const Poly& f) const {
  if (!f.field().same(*field_)) fail(ErrorKind::field_mismatch, "census over a different field");
  if (!f.is_monic() || f.degree() != d)
    fail(ErrorKind::invalid_input, "census membership needs a monic polynomial of degree d");
  u64 idx = 0;
  for (int i = d - 1; i >= 0; --i) idx = idx * q_ + field_->index_of(f.coeff(i));
  return bits_[idx];
}

DegreeCensus enumerate_reachable(int d, const std::vector<Poly>& a, const OracleConfig& cfg) {
  check_oracle_inputs(nullptr, a);
  if (d < 0) fail(ErrorKind::invalid_input, "census degree must be nonnegative");
  std::vector<int> degrees;
  for (const auto& p : a) {
    if (p.degree() < 1) fail(ErrorKind::invalid_input, "census needs nonconstant members");
    degrees.push_back(p.degree());
  }
  const Field& k = a[0].field();
  const PackedField pf(k);
  const u64 total = checked_pow(pf.q, d, cfg.capacity_cap);

  // Combination budget: every piece contributes q^ind evaluations.
  u64 budget = 0;
  {
    TypeEnumerator en(d, degrees);
    while (auto t = en.next()) {
      const u64 leaves = checked_pow(pf.q, t->ind(), cfg.capacity_cap);
      if (budget > cfg.capacity_cap - leaves)
        fail(ErrorKind::capacity_exceeded, "enumeration budget exceeded");
      budget += leaves;
    }
  }

  DegreeCensus census;
  census.d = d;
  census.total = total;
  census.field_ = &k;
  census.q_ = pf.q;
  census.bits_.assign(total, false);

  // Pack a coordinate vector's trailing d entries, t^{d-1} most significant.
  const auto pack_index = [&](const std::vector<std::uint16_t>& v) {
    u64 idx = 0;
    for (int i = 1; i <= d; ++i) idx = idx * pf.q + v[(std::size_t)i];
    return idx;
  };

  TypeEnumerator en(d, degrees);
  while (auto t = en.next()) {
    const AffinePiece piece = build_piece(*t, a, d);
    const std::size_t nc = piece.a.cols();
    // Piece data as index matrices.
    std::vector<std::vector<std::uint16_t>> col(nc);
    for (std::size_t c = 0; c < nc; ++c) {
      col[c].resize((std::size_t)d + 1);
      for (int r = 0; r <= d; ++r)
        col[c][(std::size_t)r] = (std::uint16_t)k.index_of(piece.a.at((std::size_t)r, c));
    }
    std::vector<std::uint16_t> v((std::size_t)d + 1);
    for (int r = 0; r <= d; ++r) v[(std::size_t)r] = (std::uint16_t)k.index_of(piece.b[(std::size_t)r]);

    if (t->ind() == 0) {
      census.bits_[pack_index(v)] = true;
      continue;
    }
    // Odometer over xi in k^ind starting at zero: each digit change (bump or
    // wrap) adds the digit's column once, because q * column = 0 in
    // characteristic p.
    std::vector<u64> digit(nc, 0);
    const auto add_col = [&](std::size_t c) {
      for (int r = 0; r <= d; ++r)
        v[(std::size_t)r] = pf.plus(v[(std::size_t)r], col[c][(std::size_t)r]);
    };
    for (;;) {
      census.bits_[pack_index(v)] = true;
      std::size_t c = nc;
      bool done = true;
      for (c = nc; c-- > 0;) {
        add_col(c);
        if (++digit[c] < pf.q) {
          done = false;
          break;
        }
        digit[c] = 0;
      }
      if (done) break;
    }
  }

  census.reachable_count = (u64)std::count(census.bits_.begin(), census.bits_.end(), true);
  if (census.reachable_count < census.total) {
    const u64 missing =
        (u64)(std::find(census.bits_.begin(), census.bits_.end(), false) - census.bits_.begin());
    // Decode: digits are the trailing coefficients, t^{d-1} most significant.
    std::vector<FieldElement> coeffs((std::size_t)d + 1, k.zero());
    coeffs[(std::size_t)d] = k.one();
    u64 rest = missing;
    for (int i = 0; i < d; ++i) {
      coeffs[(std::size_t)i] = k.element_at(rest % pf.q);
      rest /= pf.q;
    }
    census.missing_example = Poly(k, std::move(coeffs));
  }
  return census;
}

std::optional<SolutionWitness> brute_solve(const Poly& f, const std::vector<Poly>& a,
                                           const OracleConfig& cfg) {
  check_oracle_inputs(&f, a);
  const Field& k = a[0].field();
  const PackedField pf(k);
  const int n = (int)a.size();
  const int d = f.degree();

  std::vector<IdPoly> pa;
  for (const auto& p : a) pa.push_back(pack(pf, p));
  const IdPoly target = pack(pf, f);

  // Degree patterns: e_i in {-inf} union [0, d - a_i], ordered with -inf
  // first; the last slot is solved by exact division instead of enumerated.
  std::vector<int> max_e(n);
  for (int i = 0; i < n; ++i) max_e[i] = d - a[(std::size_t)i].degree();

  // Enumeration budget over the free slots.
  {
    u64 budget = 0;
    std::vector<int> e(n, -1);  // -1 encodes -inf
    for (;;) {
      u64 leaves = 1;
      bool ok = true;
      for (int i = 0; i + 1 < n && ok; ++i) {
        if (e[i] <= 0) continue;
        for (int t = 0; t < e[i]; ++t) {
          if (leaves > cfg.capacity_cap / pf.q) {
            ok = false;
            break;
          }
          leaves *= pf.q;
        }
      }
      if (!ok || budget > cfg.capacity_cap - leaves)
        fail(ErrorKind::capacity_exceeded, "enumeration budget exceeded");
      budget += leaves;
      int i = n - 1;
      while (i >= 0 && e[i] == max_e[i]) e[i--] = -1;
      if (i < 0) break;
      ++e[i];
    }
  }

  std::vector<int> e(n, -1);
  std::vector<IdPoly> x((std::size_t)n);
  std::optional<SolutionWitness> found;

  // Recursive enumeration of the first n-1 slots; partial holds the running
  // combination sum.
  const auto try_leaf = [&](const IdPoly& partial) {
    IdPoly rem = id_sub(pf, target, partial);
    auto q = id_exact_monic_quotient(pf, std::move(rem), pa[(std::size_t)(n - 1)], e[n - 1]);
    if (!q) return false;
    x[(std::size_t)(n - 1)] = std::move(*q);
    SolutionWitness w;
    for (int i = 0; i < n; ++i) w.x.push_back(unpack(pf, x[(std::size_t)i]));
    Poly sum(k);
    for (int i = 0; i < n; ++i) sum = sum + w.x[(std::size_t)i] * a[(std::size_t)i];
    if (!(sum == f))
      fail(ErrorKind::verification_failed, "brute-force witness does not reproduce the target");
    found = std::move(w);
    return true;
  };

  const std::function<bool(int, const IdPoly&)> enumerate_slot = [&](int slot,
                                                                     const IdPoly& partial) {
    if (slot == n - 1) return try_leaf(partial);
    if (e[slot] == -1) {
      x[(std::size_t)slot].clear();
      return enumerate_slot(slot + 1, partial);
    }
    // Monic x_slot of degree e[slot]; trailing coefficients enumerated in
    // lexicographic order, highest power most significant.
    const int deg = e[slot];
    IdPoly& xs = x[(std::size_t)slot];
    xs.assign((std::size_t)deg + 1, 0);
    xs[(std::size_t)deg] = 1;
    std::vector<u64> digit((std::size_t)deg, 0);
    for (;;) {
      for (int i = 0; i < deg; ++i) xs[(std::size_t)(deg - 1 - i)] = (std::uint16_t)digit[(std::size_t)i];
      // partial + x_slot * A_slot
      const IdPoly& pa_s = pa[(std::size_t)slot];
      IdPoly next(std::max(partial.size(), xs.size() + pa_s.size() - 1), 0);
      std::copy(partial.begin(), partial.end(), next.begin());
      for (std::size_t i = 0; i < xs.size(); ++i) {
        if (xs[i] == 0) continue;
        for (std::size_t j = 0; j < pa_s.size(); ++j)
          next[i + j] = pf.plus(next[i + j], pf.times(xs[i], pa_s[j]));
      }
      id_trim(next);
      if (enumerate_slot(slot + 1, next)) return true;
      std::size_t i = digit.size();
      bool done = true;
      for (i = digit.size(); i-- > 0;) {
        if (++digit[i] < pf.q) {
          done = false;
          break;
        }
        digit[i] = 0;
      }
      if (done || digit.empty()) {
        if (done) break;
      }
    }
    return false;
  };

  for (;;) {
    if (enumerate_slot(0, IdPoly{})) return found;
    int i = n - 1;
    while (i >= 0 && e[i] == max_e[i]) e[i--] = -1;
    if (i < 0) break;
    ++e[i];
  }
  return std::nullopt;
}

FrobeniusReport brute_g(const std::vector<Poly>& a, int d_max, const OracleConfig& cfg) {
  check_oracle_inputs(nullptr, a);
  if (d_max < 0) fail(ErrorKind::invalid_input, "d_max must be nonnegative");

  FrobeniusReport r;
  r.method = SolveMethod::oracle_fallback;
  r.upper_bound = d_max;

  for (const auto& p : a) {
    if (p.is_one()) {
      r.method = SolveMethod::degenerate;
      r.note = "a family member equals 1, so every monic target is representable";
      return r;
    }
  }
  std::vector<int> degrees;
  for (const auto& p : a) degrees.push_back(p.degree());
  r.lower_bound = lower_bound(degrees);

  for (int d = d_max; d >= 0; --d) {
    r.probed_degrees.push_back(d);
    DegreeCensus census = enumerate_reachable(d, a, cfg);
    if (census.missing_example) {
      r.g = d;
      r.counterexample = census.missing_example;
      return r;
    }
  }
  r.g = kNegInf;
  r.note = "no missing target down to degree 0";
  return r;
}

}  // namespace frobdeg
