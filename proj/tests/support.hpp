#pragma once

#include <vector>

#include "frobdeg/poly.hpp"
#include "frobdeg/rng.hpp"

namespace frobdeg::test {

inline Poly random_monic(const Field& f, Rng& rng, int deg, std::uint64_t bound = 6) {
  std::vector<FieldElement> c((std::size_t)deg + 1, f.zero());
  c.back() = f.one();
  for (int i = 0; i < deg; ++i) c[(std::size_t)i] = f.random_element(rng, bound);
  return Poly(f, std::move(c));
}

inline Poly random_poly(const Field& f, Rng& rng, int max_deg, std::uint64_t bound = 6) {
  const int deg = (int)rng.below((std::uint64_t)max_deg + 1);
  std::vector<FieldElement> c((std::size_t)deg + 1, f.zero());
  for (int i = 0; i <= deg; ++i) c[(std::size_t)i] = f.random_element(rng, bound);
  return Poly(f, std::move(c));  // may have lower degree after trimming
}

inline std::vector<Poly> random_coprime_family(const Field& f, Rng& rng,
                                               const std::vector<int>& degrees,
                                               std::uint64_t bound = 6) {
  for (;;) {
    std::vector<Poly> a;
    for (int d : degrees) a.push_back(random_monic(f, rng, d, bound));
    Poly g = a[0];
    for (std::size_t i = 1; i < a.size(); ++i) g = gcd(g, a[i]);
    if (g.is_one()) return a;
  }
}

inline std::vector<Poly> random_pairwise_coprime(const Field& f, Rng& rng,
                                                 const std::vector<int>& degrees,
                                                 std::uint64_t bound = 6) {
  for (;;) {
    std::vector<Poly> a;
    for (int d : degrees) a.push_back(random_monic(f, rng, d, bound));
    bool ok = true;
    for (std::size_t i = 0; i < a.size() && ok; ++i)
      for (std::size_t j = i + 1; j < a.size() && ok; ++j)
        if (!gcd(a[i], a[j]).is_one()) ok = false;
    if (ok) return a;
  }
}

}  // namespace frobdeg::test
