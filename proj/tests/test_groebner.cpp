#include "hsk/groebner.hpp"
#include "random_util.hpp"

#include <doctest.h>

using namespace hsk;
using hsk::testing::rand_gauss;
using hsk::testing::rand_poly;

namespace {
const RingPtr& R3() {
  static const RingPtr r = make_ring({"x", "y", "z"});
  return r;
}
Polynomial P(const std::string& s) { return parse_polynomial(s, R3()); }

// No term of r is divisible by a leading monomial of the basis.
bool fully_reduced(const Polynomial& r, const GroebnerBasis& gb) {
  for (const Term& t : r.terms()) {
    for (const auto& b : gb.generators) {
      if (leading_term(b, gb.order).mono.divides(t.mono)) return false;
    }
  }
  return true;
}
}  // namespace

TEST_CASE("monomial orders") {
  const auto dr = MonomialOrder::degrevlex(*R3());
  const auto lx = MonomialOrder::lex(*R3());
  const Monomial xz2 = leading_term(P("x*z^2"), dr).mono, y3 = leading_term(P("y^3"), dr).mono;
  const Monomial x = leading_term(P("x"), dr).mono, y2 = leading_term(P("y^2"), dr).mono;
  CHECK(dr.greater(xz2, leading_term(P("y^2"), dr).mono));
  CHECK(lx.greater(x, y2));
  CHECK(dr.greater(y2, x));
  CHECK(dr.compare(y3, y3) == 0);
  // degrevlex: x z^2 < y^3? both degree 3; the smallest variable z decides
  CHECK(dr.greater(y3, xz2));
}

TEST_CASE("textbook basis") {
  // <x^2 - y, x^3 - z>: twisted cubic
  const auto lx = MonomialOrder::lex(*R3());
  const GroebnerBasis gb = buchberger({P("x^2-y"), P("x^3-z")}, lx);
  CHECK(gb.reduced);
  CHECK(is_groebner_basis(gb.generators, lx));
  CHECK(normal_form(P("y^3-z^2"), gb.generators, lx).is_zero());
  CHECK_FALSE(normal_form(P("y-z"), gb.generators, lx).is_zero());
  CHECK_FALSE(gb.is_unit());
  CHECK(buchberger({P("x*y-1"), P("x")}, lx).is_unit());
}

TEST_CASE("negative exponents are rejected") {
  CHECK_THROWS(buchberger({P("x^-1 - y")}, MonomialOrder::degrevlex(*R3())));
}

TEST_CASE("budget is enforced") {
  GroebnerOptions opt;
  opt.pair_limit = 1;
  CHECK_THROWS_AS(buchberger({P("x^2*y-z^3"), P("x*y^2-x*z"), P("y^3 - x*z^2 + 1")},
                             MonomialOrder::degrevlex(*R3()), opt),
                  GroebnerBudgetExceeded);
}

TEST_CASE("pre-elimination") {
  const auto dr = MonomialOrder::degrevlex(*R3());
  const std::vector<Polynomial> gens = {P("x - 2*y"), P("y^2 - z"), P("x*z - 4")};
  const Preeliminated pre = preeliminate(gens);
  CHECK_FALSE(pre.rules.empty());
  CHECK(ideal_contains(P("x^2 - 4*z"), gens, dr));
  CHECK(ideal_contains(P("x^2 - 4*z"), gens, dr, MembershipOptions{false, {}}));
  CHECK_FALSE(ideal_contains(P("x - z"), gens, dr));
}

// Membership of random combinations, normal-form linearity and reducedness,
// on a fixed set of random ideals.
TEST_CASE("normal forms, randomized") {
  std::mt19937_64 g(99);
  const auto dr = MonomialOrder::degrevlex(*R3());
  int cases = 0;
  for (int ideal = 0; ideal < 12; ++ideal) {
    std::vector<Polynomial> gens = {rand_poly(g, R3(), 3, 3, 0, 2), rand_poly(g, R3(), 3, 2, 0, 2)};
    const GroebnerBasis gb = buchberger(gens, dr);
    REQUIRE(is_groebner_basis(gb.generators, dr));
    for (int it = 0; it < 90; ++it) {
      const Polynomial f = rand_poly(g, R3(), 3, 3, 0, 3), h = rand_poly(g, R3(), 3, 3, 0, 3);
      const Polynomial comb = rand_poly(g, R3(), 3, 2, 0, 2) * gens[0] + rand_poly(g, R3(), 3, 2, 0, 2) * gens[1];
      REQUIRE(normal_form(comb, gb.generators, dr).is_zero());
      const Polynomial nf = normal_form(f, gb.generators, dr);
      REQUIRE(fully_reduced(nf, gb));
      REQUIRE(normal_form(nf, gb.generators, dr) == nf);
      REQUIRE(normal_form(f + comb, gb.generators, dr) == nf);
      REQUIRE(normal_form(f + h, gb.generators, dr) == nf + normal_form(h, gb.generators, dr));
      ++cases;
    }
  }
  CHECK(cases >= 1000);
}

// Unit ideals: <f, q f + u> with u a nonzero constant. Proper ideals: every
// generator vanishes at a random rational point.
TEST_CASE("unit ideal detection, randomized") {
  std::mt19937_64 g(5);
  const auto dr = MonomialOrder::degrevlex(*R3());
  int cases = 0;
  for (int it = 0; cases < 1000; ++it) {
    const Polynomial f = rand_poly(g, R3(), 3, 3, 0, 2);
    if (f.is_constant()) continue;
    if (it % 2 == 0) {
      GaussRat u = rand_gauss(g);
      if (u.is_zero()) u = 1;
      const Polynomial h = rand_poly(g, R3(), 3, 2, 0, 1) * f + Polynomial(R3(), u);
      REQUIRE(buchberger({f, h}, dr).is_unit());
    } else {
      std::vector<QuadExt> pt = {QuadExt(rand_gauss(g)), QuadExt(rand_gauss(g)), QuadExt(rand_gauss(g))};
      const Polynomial h = rand_poly(g, R3(), 3, 2, 0, 2);
      auto vanish = [&](const Polynomial& p) { return p - Polynomial(R3(), evaluate(p, pt).rational_part()); };
      const GroebnerBasis gb = buchberger({vanish(f), vanish(h)}, dr);
      REQUIRE_FALSE(gb.is_unit());
    }
    ++cases;
  }
  CHECK(cases == 1000);
}
