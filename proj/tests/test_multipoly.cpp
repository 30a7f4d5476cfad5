#include "hsk/multipoly.hpp"
#include "random_util.hpp"

#include <doctest.h>

using namespace hsk;
using hsk::testing::rand_gauss;
using hsk::testing::rand_poly;

namespace {
Polynomial P(const std::string& s) { return parse_polynomial(s, standard_ring()); }
}  // namespace

TEST_CASE("ring and parsing") {
  const auto& R = standard_ring();
  CHECK(R->arity() == 9);
  CHECK(R->index_of("b") == var::b);
  CHECK(R->index_of("q") == -1);
  CHECK(P("(w1+1)^2") == P("w1^2+2*w1+1"));
  CHECK(P("1/2*b*i - b*i/2").is_zero());
  CHECK(P("w1^-1*w1") == P("1"));
  CHECK(to_string(P("2*w1 - 3")) == to_string(P("-3 + w1*2")));
  CHECK_THROWS(P("w1 +"));
  CHECK_THROWS(P("q1"));
  CHECK_THROWS(P("w1/w2"));
}

TEST_CASE("ring mismatch is rejected") {
  const RingPtr other = make_ring({"x", "y"});
  CHECK_THROWS_AS(P("w1") + parse_polynomial("x", other), RingMismatch);
}

TEST_CASE("evaluation at the Z4 weights") {
  // e0 of the (1,1) system at (1,1,1) is n(n-1) = 12; checked in the Hadamard tests,
  // here just the evaluator on a known polynomial
  const std::vector<QuadExt> pt = {QuadExt(GaussRat::i()), QuadExt(GaussRat(0, -1)), 1, 0, 0, 0, 0, 0, 0};
  CHECK(evaluate(P("w1*w2*w3 + w1^2"), pt) == QuadExt(0));
  CHECK(evaluate(P("w1^-1"), pt) == QuadExt(GaussRat(0, -1)));
}

TEST_CASE("coefficient extraction") {
  const Polynomial f = P("b*w1^2 + 3*w1^2 + w2");
  CHECK(f.coefficient_of(var::w1, 2) == P("b + 3"));
  CHECK(f.degree_in(var::w1) == 2);
  CHECK(f.involves(var::w2));
  CHECK_FALSE(f.involves(var::c));
  CHECK(P("(1+i)*w1").conj_coeffs() == P("(1-i)*w1"));
}

// sigma(f + g) = sigma f + sigma g, sigma(f g) = sigma f sigma g, and
// evaluation commutes with substitution (the evaluator is the oracle).
TEST_CASE("substitution homomorphism, randomized") {
  std::mt19937_64 g(7);
  const RingPtr R = make_ring({"x", "y", "z"});
  int cases = 0;
  for (int it = 0; it < 1200; ++it) {
    const bool laurent = it % 3 == 0;
    const Polynomial f = rand_poly(g, R, 3, 4, laurent ? -2 : 0, 3);
    const Polynomial h = rand_poly(g, R, 3, 4, laurent ? -2 : 0, 3);
    std::vector<Polynomial> img;
    for (int v = 0; v < 3; ++v) {
      // negative exponents need single-term images
      img.push_back(laurent ? rand_poly(g, R, 3, 1, -1, 2) : rand_poly(g, R, 3, 2, 0, 2));
      if (img.back().is_zero()) img.back() = Polynomial::variable(R, v);
    }
    REQUIRE(substitute(f + h, img) == substitute(f, img) + substitute(h, img));
    REQUIRE(substitute(f * h, img) == substitute(f, img) * substitute(h, img));
    REQUIRE(substitute(f, identity_images(R)) == f);
    std::vector<QuadExt> pt;
    for (int v = 0; v < 3; ++v) pt.emplace_back(hsk::testing::rand_nonzero_gauss(g));
    std::vector<QuadExt> image_pt;
    bool defined = true;
    for (const auto& p : img) {
      image_pt.push_back(evaluate(p, pt));
      defined = defined && !image_pt.back().is_zero();
    }
    if (defined) REQUIRE(evaluate(substitute(f, img), pt) == evaluate(f, image_pt));
    ++cases;
  }
  CHECK(cases >= 1000);
}

TEST_CASE("ring laws, randomized") {
  std::mt19937_64 g(11);
  const RingPtr R = make_ring({"x", "y"});
  for (int it = 0; it < 300; ++it) {
    const Polynomial a = rand_poly(g, R, 2, 3, -1, 2), b = rand_poly(g, R, 2, 3, -1, 2), c = rand_poly(g, R, 2, 3, 0, 2);
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a - a == Polynomial(R));
    REQUIRE(a.pow(3) == a * a * a);
    REQUIRE(parse_polynomial(to_string(a), R) == a);
    const GaussRat k = rand_gauss(g);
    REQUIRE(k * (a + b) == k * a + k * b);
  }
}
