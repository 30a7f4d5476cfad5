#include "hsk/schemes.hpp"

#include <doctest.h>

#include <sstream>

using namespace hsk;

namespace {
std::vector<long> as_long(const std::vector<Rational>& v) {
  std::vector<long> out;
  for (const auto& q : v) {
    REQUIRE(is_integer(q));
    out.push_back(q.get_num().get_si());
  }
  return out;
}
}  // namespace

TEST_CASE("parameters from (a, c)") {
  const SchemeParameters p = params_from_ac(2, 1);
  CHECK(p.k1 == 12);
  CHECK(p.k2 == 3);
  CHECK(p.b2 == 16);
  CHECK(p.s == -4);
  CHECK(p.r == 0);
  CHECK(p.n == 16);
  CHECK(params_from_ac(1, 3).b2 == 12);
  CHECK(params_from_ac(1, 1).L == -4);
}

TEST_CASE("template validation") {
  CHECK_THROWS_AS(EigenmatrixTemplate(3, 1, 0, -2, 4), SchemeError);
  CHECK_THROWS_AS(EigenmatrixTemplate(2, 0, 0, -2, 4), SchemeError);
  CHECK_THROWS_AS(EigenmatrixTemplate(2, 1, 0, -2, 0), SchemeError);
  CHECK_THROWS_AS(EigenmatrixTemplate(2, 1, Rational(1, 2), -2, 4), SchemeError);
}

TEST_CASE("case split") {
  // (k1,k2,r,s,b^2) = (2,1,-2,0,8): r = -(k2+1), s = 0, b^2 = (k2+1)(k1+k2+1)
  const SongClassification ii = song_case(EigenmatrixTemplate(2, 1, -2, 0, 8));
  CHECK(ii.which == SongCase::ii);
  CHECK(ii.m1 == Rational(1, 2));
  CHECK_FALSE(ii.m1_integral);
  CHECK_THROWS_AS(song_case(EigenmatrixTemplate(2, 1, -2, 0, 6)), SchemeError);
  const SongClassification i = song_case(params_from_ac(1, 3).eigenmatrix());
  CHECK(i.which == SongCase::i);
  CHECK(i.m1 == 2);
  const SongClassification iii = song_case(EigenmatrixTemplate(2, 1, -1, 2, 3));
  CHECK(iii.which == SongCase::iii);
  CHECK(iii.m1 == Rational(8, 3));
  // fractional m1 at (a,c) = (1,2), (1,4), (2,2)
  CHECK(song_case(params_from_ac(1, 2).eigenmatrix()).m1 == Rational(3, 2));
  CHECK(song_case(params_from_ac(1, 4).eigenmatrix()).m1 == Rational(5, 2));
  CHECK(song_case(params_from_ac(2, 2).eigenmatrix()).m1 == Rational(21, 2));
}

TEST_CASE("multiplicities from the template") {
  // oracle: trace(E_k) computed from the adjacency matrices in verify_eigenmatrix
  const auto t = params_from_ac(2, 1).eigenmatrix();
  const auto s = bush_type_from_hadamard(sylvester_hadamard(4)).scheme;
  const EigenmatrixReport ev = verify_eigenmatrix(s, t);
  REQUIRE(ev.passed);
  CHECK(as_long(ev.multiplicities) == std::vector<long>{1, 6, 6, 3});
  CHECK(template_multiplicities(t) == ev.multiplicities);
}

TEST_CASE("Z4 scheme") {
  const AssociationScheme s = z4_scheme();
  CHECK(s.n() == 4);
  CHECK(s.d() == 3);
  CHECK(s.relation(0, 1) == 1);
  CHECK(s.relation(0, 3) == 2);
  CHECK(s.relation(0, 2) == 3);
  const AxiomReport ax = verify_scheme_axioms(s);
  REQUIRE(ax.passed);
  CHECK(ax.transpose_map == std::vector<int>{0, 2, 1, 3});
  CHECK(ax.valencies == std::vector<long>{1, 1, 1, 1});
  CHECK(ax.intersection[1][2][0] == 1);  // A1 A2 = A0
  CHECK(ax.intersection[1][1][3] == 1);  // A1^2 = A3
  const EigenmatrixReport ev = verify_eigenmatrix(s, params_from_ac(1, 1).eigenmatrix());
  REQUIRE(ev.passed);
  CHECK(as_long(ev.multiplicities) == std::vector<long>{1, 1, 1, 1});
}

TEST_CASE("quaternion scheme") {
  const AssociationScheme s = quaternion_scheme();
  CHECK(s.n() == 8);
  REQUIRE(verify_scheme_axioms(s).passed);
  const EigenmatrixReport ev = verify_eigenmatrix(s, params_from_ac(1, 3).eigenmatrix());
  REQUIRE(ev.passed);
  // A1 has eigenvalues +-sqrt3 i on a 4-dimensional space, 3 and -1 on the rest
  CHECK(as_long(ev.multiplicities) == std::vector<long>{1, 2, 2, 3});
  // wrong template fails
  CHECK_FALSE(verify_eigenmatrix(s, params_from_ac(1, 1).eigenmatrix()).passed);
}

TEST_CASE("groups") {
  const Group q = quaternion_group();
  CHECK(q.order() == 8);
  const int i = q.element("i"), j = q.element("j"), k = q.element("k");
  CHECK(q.mul(i, j) == k);
  CHECK(q.mul(j, i) == q.element("-k"));
  CHECK(q.inverse(i) == q.element("-i"));
  CHECK(q.mul(i, i) == q.element("-1"));
  CHECK_THROWS(Group({{0, 1}, {0, 1}}));
  CHECK_THROWS(cayley_scheme(cyclic_group(4), {{1}, {2}, {3, 3}}));
  // {1} alone is not inverse-closed class structure for a 2-class split {1,2},{3}
  CHECK_THROWS(cayley_scheme(cyclic_group(4), {{1, 2}, {3}}));
}

TEST_CASE("Sylvester and Bush type") {
  const Matrix<int> h4 = sylvester_hadamard(4);
  CHECK(is_hadamard(h4));
  CHECK_THROWS(sylvester_hadamard(6));
  const BushTypeResult r = bush_type_from_hadamard(h4);
  CHECK(all_passed(r.checks));
  CHECK(r.K.rows() == 16);
  CHECK(is_hadamard(r.K));
  for (std::size_t x = 0; x < 16; ++x) {
    for (std::size_t y = 0; y < 16; ++y) {
      if (x / 4 == y / 4) CHECK(r.K(x, y) == 1);
    }
  }
  const BushTypeResult r2 = bush_type_from_hadamard(sylvester_hadamard(2));
  CHECK(r2.scheme.n() == 4);
  CHECK(find_isomorphism(r2.scheme, z4_scheme()).has_value());
  Matrix<int> bad = h4;
  bad(1, 1) = 1;
  CHECK_THROWS_AS(bush_type_from_hadamard(bad), SchemeError);
}

TEST_CASE("isomorphism search") {
  const AssociationScheme q = quaternion_scheme();
  std::vector<int> perm = {3, 0, 6, 1, 7, 2, 5, 4};
  std::vector<std::vector<int>> rel(8, std::vector<int>(8));
  for (std::size_t x = 0; x < 8; ++x) {
    for (std::size_t y = 0; y < 8; ++y) {
      rel[static_cast<std::size_t>(perm[x])][static_cast<std::size_t>(perm[y])] = q.relation(x, y);
    }
  }
  const AssociationScheme t(rel, 3);
  const auto found = find_isomorphism(q, t);
  REQUIRE(found.has_value());
  for (std::size_t x = 0; x < 8; ++x) {
    for (std::size_t y = 0; y < 8; ++y) {
      CHECK(t.relation(static_cast<std::size_t>((*found)[x]), static_cast<std::size_t>((*found)[y])) == q.relation(x, y));
    }
  }
  // Klein four-group: all classes symmetric, so no relabeling matches Z4
  const Group klein({{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}});
  CHECK_FALSE(find_isomorphism(z4_scheme(), cayley_scheme(klein, {{1}, {2}, {3}})).has_value());
}

TEST_CASE("scheme files") {
  for (const AssociationScheme& s : {z4_scheme(), quaternion_scheme(), bush_type_from_hadamard(sylvester_hadamard(4)).scheme}) {
    std::stringstream io;
    write_scheme(io, s);
    CHECK(read_scheme(io) == s);
  }
  std::stringstream full;
  write_scheme(full, z4_scheme());
  std::string text = full.str();
  std::istringstream truncated(text.substr(0, text.find('\n', text.find('\n') + 1) + 1));
  try {
    read_scheme(truncated);
    FAIL("truncated file accepted");
  } catch (const ParseError& e) {
    CHECK(e.line() >= 2);
  }
  std::istringstream range("# comment\n2 1\n0 5\n1 0\n");
  CHECK_THROWS_AS(read_scheme(range), ParseError);
  std::istringstream trailing("1 1\n0\n7\n");
  CHECK_THROWS_AS(read_scheme(trailing), ParseError);
}

TEST_CASE("Hadamard seed files") {
  std::istringstream pm("2\n+ +\n+ -\n");
  CHECK(read_hadamard_seed(pm) == sylvester_hadamard(2));
  std::istringstream num("2\n1 1\n1 -1\n");
  CHECK(read_hadamard_seed(num) == sylvester_hadamard(2));
  std::istringstream bad("2\n1 2\n1 -1\n");
  CHECK_THROWS_AS(read_hadamard_seed(bad), ParseError);
  std::istringstream shortf("3\n+ + +\n");
  CHECK_THROWS_AS(read_hadamard_seed(shortf), ParseError);
}
