#pragma once

#include "hsk/multipoly.hpp"

#include <random>

namespace hsk::testing {

inline Rational rand_rational(std::mt19937_64& g, int range = 9) {
  std::uniform_int_distribution<int> num(-range, range), den(1, range);
  Rational q(num(g), den(g));
  q.canonicalize();
  return q;
}

inline GaussRat rand_gauss(std::mt19937_64& g, int range = 9) { return {rand_rational(g, range), rand_rational(g, range)}; }

inline GaussRat rand_nonzero_gauss(std::mt19937_64& g) {
  for (;;) {
    GaussRat z = rand_gauss(g);
    if (!z.is_zero()) return z;
  }
}

/// Random polynomial in the first `vars` variables of `ring`, exponents in [lo, hi].
inline Polynomial rand_poly(std::mt19937_64& g, const RingPtr& ring, int vars, int terms, int lo, int hi) {
  std::uniform_int_distribution<int> e(lo, hi);
  std::vector<Term> ts;
  for (int t = 0; t < terms; ++t) {
    Term term;
    for (int v = 0; v < vars; ++v) term.mono.exp[static_cast<std::size_t>(v)] = static_cast<std::int8_t>(e(g));
    term.coeff = rand_gauss(g, 5);
    ts.push_back(term);
  }
  return Polynomial::from_terms(ring, std::move(ts));
}

}  // namespace hsk::testing
