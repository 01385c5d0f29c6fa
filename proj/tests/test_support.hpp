#pragma once

// Seeded generators shared by the property-style tests.

#include <cstdint>
#include <random>
#include <vector>

#include "hnl/polynomial.hpp"
#include "hnl/rational.hpp"

namespace hnl::testing {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  long uniform(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(gen_() % span);
  }

  Rational rational(long max_num = 5, long max_den = 4) {
    const long num = uniform(-max_num, max_num);
    const long den = uniform(1, max_den);
    return make_rational(num, den);
  }

  Rational nonzero_rational(long max_num = 5, long max_den = 4) {
    for (;;) {
      Rational q = rational(max_num, max_den);
      if (q != 0) return q;
    }
  }

  /// Random polynomial with up to `terms` terms of total degree <= max_degree.
  Polynomial polynomial(std::size_t n, int max_degree, int terms = 4, bool allow_negative = false) {
    Polynomial p(n);
    for (int t = 0; t < terms; ++t) {
      Polynomial::Exponents e(n, 0);
      int budget = static_cast<int>(uniform(0, max_degree));
      for (std::size_t v = 0; v < n; ++v) {
        const int take = v + 1 == n ? budget : static_cast<int>(uniform(0, budget));
        e[v] = take;
        budget -= take;
      }
      if (allow_negative) {
        for (auto& x : e) x -= static_cast<int>(uniform(0, 1));
      }
      p += Polynomial::monomial(n, e, rational());
    }
    return p;
  }

  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

inline Polynomial X(int k = 1) { return Polynomial::monomial(1, {k}); }

}  // namespace hnl::testing
