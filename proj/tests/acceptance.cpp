// Acceptance run: one PASS/FAIL line per criterion; exit status 0 iff all pass.

#include "hsk/groebner.hpp"
#include "hsk/hadamard.hpp"
#include "hsk/identities.hpp"
#include "hsk/torus.hpp"
#include "random_util.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

using namespace hsk;
using hsk::testing::rand_gauss;
using hsk::testing::rand_poly;

namespace {

constexpr double kMatchTol = 1e-8;      // torus points vs exact families
constexpr double kResidualTol = 1e-8;   // accepted |e_k|
constexpr double kDistinctTol = 1e-4;   // |w1 - w2| threshold
constexpr double kCurveTol = 1e-6;      // cluster radius, used for curve membership
constexpr int kGrid = 64;
constexpr double kIdentityBudget = 600;  // seconds
constexpr double kHadamardBudget = 60;
constexpr double kTorusBudget = 300;     // per parameter point
constexpr int kPropertyCases = 1000;

using Clock = std::chrono::steady_clock;
double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Line {
  bool ok = true;
  std::ostringstream msg;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      msg << " [failed: " << what << "]";
    }
  }
};

using W3 = std::array<std::complex<double>, 3>;

double dist(const W3& a, const W3& b) {
  double d = 0;
  for (std::size_t j = 0; j < 3; ++j) d = std::max(d, std::abs(a[j] - b[j]));
  return d;
}

W3 as_complex(const HadamardCandidate& c) { return {to_complex(c.w1), to_complex(c.w2), to_complex(c.w3)}; }

bool has_family(const HadamardCandidate& c, Family f) {
  return std::find(c.families.begin(), c.families.end(), f) != c.families.end();
}

HadamardCandidate triple(const QuadExt& w1, const QuadExt& w2, const QuadExt& w3) {
  HadamardCandidate c;
  c.w1 = w1;
  c.w2 = w2;
  c.w3 = w3;
  c.families = {Family::custom};
  return c;
}

// ------------------------------------------------------------------ 1
Line identities() {
  Line l;
  const auto t0 = Clock::now();
  const IdentityReport rep = verify_identity_suite();
  const double secs = seconds_since(t0);
  std::size_t passed = 0;
  for (const auto& e : rep.entries) {
    passed += e.passed ? 1 : 0;
    if (!e.passed) l.require(false, e.check);
  }
  l.msg << "identity replay: " << passed << "/" << rep.entries.size() << " checks pass in " << secs << " s";
  l.require(rep.entries.size() >= 38, "at least 38 checks");
  l.require(passed == rep.entries.size(), "all checks pass");
  l.require(secs <= kIdentityBudget, "runtime <= 600 s");
  return l;
}

// ------------------------------------------------------------------ 2
Line exact_hadamard() {
  Line l;
  const auto t0 = Clock::now();
  int verified = 0;
  auto check = [&](const AssociationScheme& s, const HadamardCandidate& c, const std::string& what) {
    const bool ok = check_hadamard_matrix(build_W(s, c));
    l.require(ok, what);
    verified += ok ? 1 : 0;
  };
  const AssociationScheme z4 = z4_scheme();
  for (const std::string w : {"i", "(3+4*i)/5"}) {
    const QuadExt u = parse_exact(w);
    check(z4, triple(u, -u, 1), "Z4 with w = " + w);
  }
  const AssociationScheme q8 = quaternion_scheme();
  int de = 0;
  for (const auto& c : enumerate_families(1, 3).candidates) {
    if (has_family(c, Family::d) || has_family(c, Family::e)) {
      ++de;
      check(q8, c, "quaternion " + c.label);
    }
  }
  l.require(de == 8, "eight (d)/(e) triples");
  const AssociationScheme bush = bush_type_from_hadamard(sylvester_hadamard(4)).scheme;
  int fc = 0, fa = 0;
  for (const auto& c : enumerate_families(2, 1).candidates) {
    fc += has_family(c, Family::c) ? 1 : 0;
    fa += has_family(c, Family::a) ? 1 : 0;
    check(bush, c, "Bush " + c.label);
  }
  l.require(fc == 4, "four (c) triples");
  l.require(fa >= 2, "family (a) samples");
  const double secs = seconds_since(t0);
  l.msg << "exact W conj(W)^T = nI: " << verified << " matrices (Z4: 2, quaternion: " << de << ", Bush n=16: " << fc
        << " (c) + " << fa << " (a)) in " << secs << " s";
  l.require(secs <= kHadamardBudget, "runtime <= 60 s");
  return l;
}

// ------------------------------------------------------------------ 3
Line family_algebra() {
  Line l;
  int total = 0, passed = 0;
  std::vector<long> b_radicands;
  for (long a = 1; a <= 4; ++a) {
    for (long c : {1L, 3L}) {
      const HadamardSystem sys = build_system(params_from_ac(a, c).eigenmatrix());
      for (const auto& cd : enumerate_families(a, c).candidates) {
        ++total;
        const bool ok = check_common_zero(sys, cd);
        passed += ok ? 1 : 0;
        l.require(ok, "(" + std::to_string(a) + "," + std::to_string(c) + ") " + cd.label);
        if (has_family(cd, Family::b) && a >= 3) b_radicands.push_back(cd.w1.radicand());
      }
    }
  }
  const bool b34 = std::count(b_radicands.begin(), b_radicands.end(), 3) == 2 &&
                   std::count(b_radicands.begin(), b_radicands.end(), 6) == 2;
  l.msg << "family algebra: " << passed << "/" << total
        << " candidates are exact common zeros, a in 1..4, c in {1,3}; family (b) at a=3,4 over sqrt3, sqrt6";
  l.require(b34, "family (b) at a = 3, 4 in Q(i, sqrt3) and Q(i, sqrt6)");
  return l;
}

// ------------------------------------------------------------------ 4
struct TorusRun {
  TorusSolutionSet set;
  double secs = 0;
};

TorusRun torus(const EigenmatrixTemplate& t) {
  TorusOptions opt;
  opt.grid = kGrid;
  opt.residual_tol = kResidualTol;
  opt.distinct_tol = kDistinctTol;
  const auto t0 = Clock::now();
  TorusRun r{torus_zero_search(build_system(t), opt), 0};
  r.secs = seconds_since(t0);
  return r;
}

// Every isolated point matches exactly one candidate with the given family
// tag, and every such candidate is found.
bool isolated_match(const TorusSolutionSet& set, long a, long c, std::initializer_list<Family> fams) {
  std::vector<W3> want;
  for (const auto& cd : enumerate_families(a, c).candidates) {
    for (Family f : fams) {
      if (has_family(cd, f)) {
        want.push_back(as_complex(cd));
        break;
      }
    }
  }
  if (want.size() != set.isolated.size()) return false;
  for (const auto& w : want) {
    int hits = 0;
    for (const auto& p : set.isolated) hits += dist(p.w, w) < kMatchTol ? 1 : 0;
    if (hits != 1) return false;
  }
  return true;
}

// The curve is family (a): w2 = -w1, w3 = 1 at every recorded sample.
bool curve_is_family_a(const CurveComponent& comp) {
  for (const auto& p : comp.samples) {
    if (std::abs(p.w[1] + p.w[0]) > kCurveTol || std::abs(p.w[2] - 1.0) > kCurveTol) return false;
  }
  return !comp.samples.empty();
}

Line completeness() {
  Line l;
  const TorusRun r13 = torus(params_from_ac(1, 3).eigenmatrix());
  const TorusRun r21 = torus(params_from_ac(2, 1).eigenmatrix());
  const TorusRun r11 = torus(params_from_ac(1, 1).eigenmatrix());
  l.msg << "torus search, grid " << kGrid << ": (1,3) " << r13.set.isolated.size() << " isolated/"
        << r13.set.curves.size() << " curves in " << r13.secs << " s; (2,1) " << r21.set.isolated.size()
        << " isolated/" << r21.set.curves.size() << " curves in " << r21.secs << " s; (1,1) "
        << r11.set.isolated.size() << " isolated/" << r11.set.curves.size() << " curves in " << r11.secs << " s";
  l.require(r13.set.isolated.size() == 8 && r13.set.curves.empty(), "(1,3): 8 isolated, no curve");
  l.require(isolated_match(r13.set, 1, 3, {Family::d, Family::e}), "(1,3) matches (d)/(e) within 1e-8");
  l.require(r21.set.isolated.size() == 4 && r21.set.curves.size() == 1, "(2,1): 4 isolated, 1 curve");
  l.require(isolated_match(r21.set, 2, 1, {Family::c}), "(2,1) matches (c) within 1e-8");
  l.require(r21.set.curves.size() == 1 && curve_is_family_a(r21.set.curves[0]), "(2,1) curve is family (a)");
  bool none_distinct = true;
  for (const auto& p : r11.set.isolated) none_distinct = none_distinct && std::abs(p.w[0] - p.w[1]) <= kDistinctTol;
  l.require(none_distinct, "(1,1): no isolated point with |w1 - w2| > 1e-4");
  l.require(r11.set.curves.size() == 1 && curve_is_family_a(r11.set.curves[0]), "(1,1): one curve, family (a)");
  for (const TorusRun* r : {&r13, &r21, &r11}) l.require(r->secs <= kTorusBudget, "runtime <= 300 s per point");
  return l;
}

// ------------------------------------------------------------------ 5
Line nonexistence() {
  Line l;
  int reports = 0;
  for (long k1 = 2; k1 <= 20; k1 += 2) {
    for (long k2 = 1; k2 <= 5; ++k2) {
      const NonexistenceReport r = nonexistence_check(SongCase::ii, k1, k2);
      ++reports;
      const std::string tag = "(ii) k1=" + std::to_string(k1) + " k2=" + std::to_string(k2);
      l.require(all_passed(r.checks) && !r.hadamard_possible, tag);
      if (r.unit_root_possible) {
        l.require(k1 + k2 == 3 && r.forced_weight == QuadExt(-1) && r.m1 == Rational(1, 2), tag + " forced values");
      }
    }
    const NonexistenceReport r = nonexistence_check(SongCase::iii, k1, 1);
    ++reports;
    Rational m1(Integer((k1 + 2) * k1), Integer(k1 + 1));
    m1.canonicalize();
    const std::string tag = "(iii) k1=" + std::to_string(k1);
    l.require(all_passed(r.checks) && !r.hadamard_possible, tag);
    l.require(r.unit_root_possible && r.forced_weight == QuadExt(-1), tag + " forces w2 = -1");
    l.require(r.m1 == m1 && !is_integer(m1), tag + " m1 = (k1+2)k1/(k1+1) not integral");
  }
  const TorusRun t = torus(EigenmatrixTemplate(2, 1, -2, 0, 8));
  const std::size_t found = t.set.isolated.size() + t.set.curves.size();
  l.msg << "nonexistence: " << reports << " reports for even k1 <= 20 hold; torus at (k1,k2)=(2,1) case (ii): "
        << found << " solutions (" << t.set.dropped_equal_weights << " converged seeds had w1 = w2) in " << t.secs
        << " s";
  l.require(found == 0, "torus search at case (ii) finds nothing");
  return l;
}

// ------------------------------------------------------------------ 6
Line schemes() {
  Line l;
  struct Item {
    std::string name;
    AssociationScheme s;
    long a, c;
    std::vector<long> expected;
  };
  // n = 8: m1 = 2 from the template, so trace identities force (1, 2, 2, 3)
  const std::vector<Item> items = {
      {"Z4", z4_scheme(), 1, 1, {1, 1, 1, 1}},
      {"quaternion", quaternion_scheme(), 1, 3, {1, 2, 2, 3}},
      {"Bush n=16", bush_type_from_hadamard(sylvester_hadamard(4)).scheme, 2, 1, {1, 6, 6, 3}},
  };
  l.msg << "scheme certification:";
  for (const auto& it : items) {
    const EigenmatrixTemplate t = params_from_ac(it.a, it.c).eigenmatrix();
    const AxiomReport ax = verify_scheme_axioms(it.s);
    const EigenmatrixReport ev = verify_eigenmatrix(it.s, t);
    std::vector<long> ms;
    for (const auto& m : ev.multiplicities) ms.push_back(is_integer(m) ? m.get_num().get_si() : -1);
    const std::vector<Rational> formula = template_multiplicities(t);
    l.msg << " " << it.name << " (";
    for (std::size_t k = 0; k < ms.size(); ++k) l.msg << (k ? "," : "") << ms[k];
    l.msg << ")";
    l.require(ax.passed, it.name + " axioms");
    l.require(ev.passed, it.name + " eigenmatrix");
    l.require(ms == it.expected, it.name + " multiplicities");
    l.require(formula == ev.multiplicities, it.name + " traces agree with the template formula");
  }
  l.msg << "; n=8 uses (1,2,2,3) since m1 = 2, as (1,3,3,1) contradicts it";
  return l;
}

// ------------------------------------------------------------------ 7
Line properties() {
  Line l;
  std::mt19937_64 g(1);
  int field = 0, subst = 0, nf = 0, unit = 0;
  for (int it = 0; it < kPropertyCases; ++it) {
    const long m = 2 + it % 5;
    const QuadExt a(rand_gauss(g), rand_gauss(g), m), b(rand_gauss(g), rand_gauss(g), m),
        c(rand_gauss(g), rand_gauss(g), m);
    bool ok = a * (b + c) == a * b + a * c && (a * b) * c == a * (b * c) && a + b == b + a &&
              (a * b).conj() == a.conj() * b.conj();
    if (!a.is_zero()) ok = ok && a * a.inverse() == QuadExt(1);
    field += ok ? 1 : 0;
  }
  const RingPtr R = make_ring({"x", "y", "z"});
  for (int it = 0; it < kPropertyCases; ++it) {
    const Polynomial f = rand_poly(g, R, 3, 4, 0, 3), h = rand_poly(g, R, 3, 3, 0, 3);
    std::vector<Polynomial> img;
    for (int v = 0; v < 3; ++v) img.push_back(rand_poly(g, R, 3, 2, 0, 2));
    std::vector<QuadExt> pt = {QuadExt(rand_gauss(g)), QuadExt(rand_gauss(g)), QuadExt(rand_gauss(g))};
    std::vector<QuadExt> ipt;
    for (const auto& p : img) ipt.push_back(evaluate(p, pt));
    const bool ok = substitute(f * h, img) == substitute(f, img) * substitute(h, img) &&
                    substitute(f + h, img) == substitute(f, img) + substitute(h, img) &&
                    evaluate(substitute(f, img), pt) == evaluate(f, ipt);
    subst += ok ? 1 : 0;
  }
  const auto dr = MonomialOrder::degrevlex(*R);
  for (int ideal = 0; ideal < 10; ++ideal) {
    const std::vector<Polynomial> gens = {rand_poly(g, R, 3, 3, 0, 2), rand_poly(g, R, 3, 2, 0, 2)};
    const GroebnerBasis gb = buchberger(gens, dr);
    for (int it = 0; it < kPropertyCases / 10; ++it) {
      const Polynomial f = rand_poly(g, R, 3, 3, 0, 3);
      const Polynomial comb = rand_poly(g, R, 3, 2, 0, 2) * gens[0] + rand_poly(g, R, 3, 2, 0, 2) * gens[1];
      const Polynomial r = normal_form(f, gb.generators, dr);
      const bool ok = normal_form(comb, gb.generators, dr).is_zero() && normal_form(f + comb, gb.generators, dr) == r &&
                      normal_form(r, gb.generators, dr) == r;
      nf += ok ? 1 : 0;
    }
  }
  for (int it = 0; it < kPropertyCases; ++it) {
    Polynomial f = rand_poly(g, R, 3, 3, 0, 2);
    if (f.is_constant()) f += Polynomial::variable(R, 0);
    bool ok;
    if (it % 2 == 0) {
      const Polynomial h = rand_poly(g, R, 3, 2, 0, 1) * f + Polynomial(R, GaussRat(1 + it % 7));
      ok = buchberger({f, h}, dr).is_unit();
    } else {
      std::vector<QuadExt> pt = {QuadExt(rand_gauss(g)), QuadExt(rand_gauss(g)), QuadExt(rand_gauss(g))};
      const Polynomial h = rand_poly(g, R, 3, 2, 0, 2);
      auto vanish = [&](const Polynomial& p) { return p - Polynomial(R, evaluate(p, pt).rational_part()); };
      ok = !buchberger({vanish(f), vanish(h)}, dr).is_unit();
    }
    unit += ok ? 1 : 0;
  }
  l.msg << "property suites: field axioms " << field << "/" << kPropertyCases << ", substitution " << subst << "/"
        << kPropertyCases << ", normal forms " << nf << "/" << kPropertyCases << ", unit ideals " << unit << "/"
        << kPropertyCases;
  l.require(field == kPropertyCases && subst == kPropertyCases && nf == kPropertyCases && unit == kPropertyCases,
            "zero failures");
  return l;
}

}  // namespace

int main() {
  configure_threads_from_env();
  const std::vector<std::function<Line()>> criteria = {identities,   exact_hadamard, family_algebra, completeness,
                                                       nonexistence, schemes,        properties};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Line l;
    try {
      l = criteria[i]();
    } catch (const std::exception& e) {
      l.ok = false;
      l.msg << "exception: " << e.what();
    }
    failed += l.ok ? 0 : 1;
    std::cout << (l.ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << l.msg.str() << std::endl;
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
