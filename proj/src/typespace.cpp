#include "frobdeg/typespace.hpp"

#include <sstream>

namespace frobdeg {

namespace {

void check_degrees(int d, const std::vector<int>& degrees) {
  (void)d;
  if (degrees.size() < 2) fail(ErrorKind::invalid_input, "need at least two polynomials");
  for (int a : degrees)
    if (a < 1) fail(ErrorKind::invalid_input, "all degrees must be at least 1");
}

}  // namespace

std::vector<int> TypeTuple::r_set() const {
  std::vector<int> out;
  for (int i = 0; i < (int)entries.size(); ++i)
    if (entries[i] != kNegInf && entries[i] > 0) out.push_back(i);
  return out;
}

std::vector<int> TypeTuple::s_set() const {
  std::vector<int> out;
  for (int i = 0; i < (int)entries.size(); ++i)
    if (entries[i] == 0) out.push_back(i);
  return out;
}

int TypeTuple::ind() const {
  int s = 0;
  for (int e : entries)
    if (e != kNegInf && e > 0) s += e;
  return s;
}

std::string TypeTuple::str() const {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) out << ",";
    out << degree_str(entries[i]);
  }
  out << ")";
  return out.str();
}

TypeEnumerator::TypeEnumerator(int d, std::vector<int> degrees)
    : d_(d), degrees_(std::move(degrees)) {
  check_degrees(d, degrees_);
  const int n = (int)degrees_.size();
  option_.assign(n, 0);
  option_count_.assign(n, 0);
  for (int i = 0; i < n; ++i)
    option_count_[i] = std::max(d_ - degrees_[i], 0) + 1;  // -inf plus 0..d-a_i-1
  j_ = 0;
  while (j_ < n && degrees_[j_] > d_) ++j_;
  exhausted_ = j_ >= n || !seed_j();
}

bool TypeEnumerator::seed_j() {
  const int n = (int)degrees_.size();
  if (j_ >= n) return false;
  for (int i = 0; i < n; ++i) option_[i] = 0;
  return true;
}

std::optional<TypeTuple> TypeEnumerator::next() {
  if (exhausted_) return std::nullopt;
  const int n = (int)degrees_.size();

  TypeTuple t;
  t.d = d_;
  t.j = j_;
  t.entries.assign(n, kNegInf);
  t.entries[j_] = d_ - degrees_[j_];
  for (int i = 0; i < n; ++i) {
    if (i == j_) continue;
    if (option_[i] > 0) t.entries[i] = option_[i] - 1;
  }

  // Advance: odometer over slots != j, last slot fastest, then next valid j.
  int i = n - 1;
  for (; i >= 0; --i) {
    if (i == j_) continue;
    if (option_[i] + 1 < option_count_[i]) {
      ++option_[i];
      break;
    }
    option_[i] = 0;
  }
  if (i < 0) {
    ++j_;
    while (j_ < n && degrees_[j_] > d_) ++j_;
    exhausted_ = j_ >= n || !seed_j();
  }
  return t;
}

std::vector<TypeTuple> enumerate_types(int d, const std::vector<int>& degrees) {
  TypeEnumerator en(d, degrees);
  std::vector<TypeTuple> out;
  while (auto t = en.next()) out.push_back(std::move(*t));
  return out;
}

mpz_class count_types(int d, const std::vector<int>& degrees) {
  check_degrees(d, degrees);
  mpz_class total = 0;
  for (std::size_t j = 0; j < degrees.size(); ++j) {
    if (degrees[j] > d) continue;
    mpz_class prod = 1;
    for (std::size_t i = 0; i < degrees.size(); ++i) {
      if (i == j) continue;
      prod *= std::max(d - degrees[i], 0) + 1;
    }
    total += prod;
  }
  return total;
}

Matrix build_mi(const Poly& a_i, int e_i, int d) {
  if (e_i < 0) fail(ErrorKind::invalid_input, "build_mi: negative degree");
  if (e_i + a_i.degree() > d)
    fail(ErrorKind::degree_overflow, "build_mi: product degree exceeds target");
  const Field& f = a_i.field();
  Matrix m(f, (std::size_t)d + 1, (std::size_t)e_i + 1);
  for (int col = 0; col <= e_i; ++col) {
    const std::vector<FieldElement> v = a_i.shifted(e_i - col).to_vector(d);
    for (int r = 0; r <= d; ++r) m.at((std::size_t)r, (std::size_t)col) = v[(std::size_t)r];
  }
  return m;
}

AffinePiece build_piece(const TypeTuple& t, const std::vector<Poly>& a, int d) {
  const Field& f = a[0].field();
  if ((int)a.size() != (int)t.entries.size() || t.d != d)
    fail(ErrorKind::type_mismatch, "build_piece: type does not match the family");
  if (t.j < 0 || t.j >= (int)a.size() || t.entries[t.j] != d - a[t.j].degree() ||
      t.entries[t.j] < 0)
    fail(ErrorKind::type_mismatch, "build_piece: invalid distinguished index");
  for (int i = 0; i < (int)a.size(); ++i) {
    if (i == t.j) continue;
    const int e = t.entries[i];
    if (e == kNegInf) continue;
    if (e < 0 || e >= d - a[i].degree())
      fail(ErrorKind::type_mismatch, "build_piece: entry out of range");
  }

  const std::vector<int> r = t.r_set();
  const std::vector<int> s = t.s_set();
  std::vector<FieldElement> b((std::size_t)d + 1, f.zero());
  for (int i : s) {
    const std::vector<FieldElement> di = a[(std::size_t)i].to_vector(d);
    for (int k = 0; k <= d; ++k) b[(std::size_t)k] = b[(std::size_t)k] + di[(std::size_t)k];
  }
  if (r.empty()) {
    Matrix zero(f, (std::size_t)d + 1, 1);
    return {t, std::move(zero), std::move(b)};
  }

  std::vector<Matrix> blocks;
  for (int i : r) {
    const int e = t.entries[(std::size_t)i];
    Matrix mi = build_mi(a[(std::size_t)i], e, d);
    // First column of M_i joins B_T; the rest form the block of A_T.
    Matrix bar(f, (std::size_t)d + 1, (std::size_t)e);
    for (int row = 0; row <= d; ++row) {
      b[(std::size_t)row] = b[(std::size_t)row] + mi.at((std::size_t)row, 0);
      for (int col = 1; col <= e; ++col)
        bar.at((std::size_t)row, (std::size_t)(col - 1)) = mi.at((std::size_t)row, (std::size_t)col);
    }
    blocks.push_back(std::move(bar));
  }
  return {t, Matrix::hstack(blocks), std::move(b)};
}

}  // namespace frobdeg
