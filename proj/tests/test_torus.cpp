#include "hsk/report_json.hpp"
#include "hsk/torus.hpp"

#include <doctest.h>
#include <omp.h>

#include <random>

using namespace hsk;

namespace {

const double kMatch = 1e-8;

double dist(const std::array<std::complex<double>, 3>& a, const std::array<std::complex<double>, 3>& b) {
  double d = 0;
  for (std::size_t j = 0; j < 3; ++j) d = std::max(d, std::abs(a[j] - b[j]));
  return d;
}

std::array<std::complex<double>, 3> as_complex(const HadamardCandidate& c) {
  return {to_complex(c.w1), to_complex(c.w2), to_complex(c.w3)};
}

}  // namespace

TEST_CASE("compiled system matches exact evaluation") {
  std::mt19937_64 g(3);
  std::uniform_real_distribution<double> ang(0, 6.283185307179586);
  for (const auto& t : {params_from_ac(1, 3).eigenmatrix(), EigenmatrixTemplate(2, 1, -2, 0, 8)}) {
    const HadamardSystem sys = build_system(t);
    const CompiledSystem cs(sys);
    for (int it = 0; it < 50; ++it) {
      // rational points on the circle keep the exact side exact
      const int p = static_cast<int>(g() % 7), q = 1 + static_cast<int>(g() % 5);
      const GaussRat u(Rational(p * p - q * q, p * p + q * q), Rational(2 * p * q, p * p + q * q));
      const std::vector<QuadExt> pt = {QuadExt(u), QuadExt(u.conj()), QuadExt(u * u), 0, 0, 0, 0, t.b(), 0};
      const auto f = cs.values({u.to_complex(), u.conj().to_complex(), (u * u).to_complex()});
      for (std::size_t k = 0; k < 4; ++k) {
        CHECK(std::abs(f[k] - to_complex(evaluate(sys.e[k], pt))) < 1e-10);
      }
      // the derivative in theta agrees with a central difference
      const std::array<double, 3> th = {ang(g), ang(g), ang(g)};
      std::array<std::complex<double>, 4> f0;
      std::array<std::array<std::complex<double>, 3>, 4> df;
      cs.jacobian(th, f0, df);
      const double h = 1e-6;
      for (std::size_t j = 0; j < 3; ++j) {
        auto tp = th, tm = th;
        tp[j] += h;
        tm[j] -= h;
        std::array<std::complex<double>, 4> fp, fm;
        decltype(df) tmp;
        cs.jacobian(tp, fp, tmp);
        cs.jacobian(tm, fm, tmp);
        for (std::size_t k = 0; k < 4; ++k) CHECK(std::abs((fp[k] - fm[k]) / (2 * h) - df[k][j]) < 1e-5);
      }
    }
  }
}

TEST_CASE("serial and parallel seed loops agree") {
  omp_set_num_threads(4);
  TorusOptions opt;
  opt.grid = 24;
  for (const auto& t : {params_from_ac(2, 1).eigenmatrix(), params_from_ac(1, 3).eigenmatrix()}) {
    const CompiledSystem cs(build_system(t));
    const auto a = solve_seeds_serial(cs, opt, TorusMode::automatic);
    const auto b = solve_seeds_parallel(cs, opt, TorusMode::automatic);
    REQUIRE(a.size() == b.size());
    CHECK(a == b);
    CHECK(to_json(classify_seeds(cs, a, opt, TorusMode::automatic)).dump() ==
          to_json(classify_seeds(cs, b, opt, TorusMode::automatic)).dump());
  }
  const CompiledSystem full(build_system(EigenmatrixTemplate(2, 1, -2, 0, 8)));
  CHECK(solve_seeds_serial(full, opt, TorusMode::full) == solve_seeds_parallel(full, opt, TorusMode::full));
}

TEST_CASE("isolated solutions at (1,3) match the exact families") {
  TorusOptions opt;
  opt.grid = 32;
  const TorusSolutionSet set = torus_zero_search(build_system(params_from_ac(1, 3).eigenmatrix()), opt);
  CHECK(set.mode == "branches");
  CHECK(set.curves.empty());
  const auto fam = enumerate_families(1, 3).candidates;
  REQUIRE(set.isolated.size() == fam.size());
  for (const auto& c : fam) {
    int hits = 0;
    for (const auto& p : set.isolated) hits += dist(p.w, as_complex(c)) < kMatch ? 1 : 0;
    CHECK(hits == 1);
  }
}

TEST_CASE("full mode reproduces the branch result") {
  TorusOptions opt;
  opt.grid = 24;
  opt.mode = TorusMode::full;
  const TorusSolutionSet set = torus_zero_search(build_system(params_from_ac(1, 3).eigenmatrix()), opt);
  CHECK(set.mode == "full");
  CHECK(set.isolated.size() == 8);
  CHECK(set.curves.empty());
}

TEST_CASE("torus options are validated") {
  const HadamardSystem sys = build_system(params_from_ac(1, 1).eigenmatrix());
  TorusOptions opt;
  opt.grid = 12;
  CHECK_THROWS_AS(torus_zero_search(sys, opt), std::invalid_argument);
  opt.grid = 24;
  opt.mode = TorusMode::branches;
  CHECK_THROWS_AS(torus_zero_search(build_system(EigenmatrixTemplate(2, 1, -2, 0, 8)), opt), std::invalid_argument);
  CHECK_THROWS_AS(CompiledSystem{build_symbolic_system()}, std::invalid_argument);
}
