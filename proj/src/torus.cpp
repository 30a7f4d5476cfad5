#include "hsk/torus.hpp"

#include <Eigen/Dense>
#include <omp.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <numbers>
#include <numeric>

namespace hsk {

namespace {
constexpr double kTwoPi = 2 * std::numbers::pi;
using cd = std::complex<double>;

double wrap(double t) {
  t = std::fmod(t, kTwoPi);
  return t < 0 ? t + kTwoPi : t;
}
}  // namespace

CompiledSystem::CompiledSystem(const HadamardSystem& sys) {
  if (sys.symbolic || !sys.params) throw std::invalid_argument("torus search needs a numeric system");
  const double b = std::sqrt(sys.params->b2().get_d());
  branch_reducible_ = sys.params->r() == 0;
  for (std::size_t k = 0; k < 4; ++k) {
    std::map<std::array<int, 3>, cd> acc;
    for (const Term& t : sys.e[k].terms()) {
      for (int v = 0; v < static_cast<int>(kMaxVars); ++v) {
        if (v != var::w1 && v != var::w2 && v != var::w3 && v != var::b && t.mono.exp[static_cast<std::size_t>(v)] != 0) {
          throw std::invalid_argument("numeric system still involves a parameter");
        }
      }
      const int eb = t.mono.degree_in(var::b);
      const std::array<int, 3> e{t.mono.degree_in(var::w1), t.mono.degree_in(var::w2), t.mono.degree_in(var::w3)};
      for (int x : e) {
        if (x < 0) throw std::invalid_argument("negative exponent in numeric system");
        max_exp_ = std::max(max_exp_, x);
      }
      acc[e] += t.coeff.to_complex() * std::pow(b, eb);
    }
    for (const auto& [e, c] : acc) terms_[k].push_back({c, e});
  }
}

std::array<cd, 4> CompiledSystem::values(const std::array<cd, 3>& w) const {
  std::vector<std::array<cd, 3>> pw(static_cast<std::size_t>(max_exp_) + 1);
  pw[0] = {1.0, 1.0, 1.0};
  for (std::size_t p = 1; p < pw.size(); ++p) {
    for (std::size_t j = 0; j < 3; ++j) pw[p][j] = pw[p - 1][j] * w[j];
  }
  std::array<cd, 4> f{};
  for (std::size_t k = 0; k < 4; ++k) {
    for (const auto& t : terms_[k]) {
      f[k] += t.coeff * pw[static_cast<std::size_t>(t.exp[0])][0] * pw[static_cast<std::size_t>(t.exp[1])][1] *
              pw[static_cast<std::size_t>(t.exp[2])][2];
    }
  }
  return f;
}

void CompiledSystem::jacobian(const std::array<double, 3>& theta, std::array<cd, 4>& f,
                              std::array<std::array<cd, 3>, 4>& df) const {
  std::array<std::array<cd, 3>, 16> pw{};
  const std::size_t np = static_cast<std::size_t>(max_exp_) + 1;
  if (np > pw.size()) throw std::logic_error("exponent table too small");
  for (std::size_t j = 0; j < 3; ++j) {
    const cd w = std::polar(1.0, theta[j]);
    pw[0][j] = 1.0;
    for (std::size_t p = 1; p < np; ++p) pw[p][j] = pw[p - 1][j] * w;
  }
  const cd I(0, 1);
  for (std::size_t k = 0; k < 4; ++k) {
    cd v = 0;
    std::array<cd, 3> d{};
    for (const auto& t : terms_[k]) {
      const cd term = t.coeff * pw[static_cast<std::size_t>(t.exp[0])][0] *
                      pw[static_cast<std::size_t>(t.exp[1])][1] * pw[static_cast<std::size_t>(t.exp[2])][2];
      v += term;
      for (std::size_t j = 0; j < 3; ++j) d[j] += static_cast<double>(t.exp[j]) * term;
    }
    f[k] = v;
    for (std::size_t j = 0; j < 3; ++j) df[k][j] = I * d[j];
  }
}

namespace {

struct Residual {
  std::array<double, 8> F{};
  std::array<std::array<double, 3>, 8> J{};
  int m = 0;  // rows
  int n = 0;  // unknowns
};

std::array<double, 3> full_angles(const std::array<double, 3>& x, int branch) {
  switch (branch) {
    case 0: return {x[0], x[1], 0.0};
    case 1: return {x[0], x[1], x[0] + x[1]};
    default: return x;
  }
}

void residual(const CompiledSystem& cs, const std::array<double, 3>& x, int branch, Residual& r) {
  std::array<cd, 4> f;
  std::array<std::array<cd, 3>, 4> df;
  cs.jacobian(full_angles(x, branch), f, df);
  static constexpr std::size_t branch_eqs[2] = {1, 3};
  const bool full = branch == 2;
  r.n = full ? 3 : 2;
  r.m = full ? 8 : 4;
  const std::size_t neq = full ? 4 : 2;
  for (std::size_t q = 0; q < neq; ++q) {
    const std::size_t k = full ? q : branch_eqs[q];
    std::array<cd, 3> grad{};
    if (full) grad = df[k];
    else if (branch == 0) grad = {df[k][0], df[k][1], 0.0};
    else grad = {df[k][0] + df[k][2], df[k][1] + df[k][2], 0.0};
    r.F[2 * q] = f[k].real();
    r.F[2 * q + 1] = f[k].imag();
    for (std::size_t j = 0; j < 3; ++j) {
      r.J[2 * q][j] = grad[j].real();
      r.J[2 * q + 1][j] = grad[j].imag();
    }
  }
}

double sq_norm(const Residual& r) {
  double s = 0;
  for (int i = 0; i < r.m; ++i) s += r.F[static_cast<std::size_t>(i)] * r.F[static_cast<std::size_t>(i)];
  return s;
}

// Solves the n x n system (n <= 3) by elimination with partial pivoting.
bool solve_small(std::array<std::array<double, 3>, 3> A, std::array<double, 3> b, int n, std::array<double, 3>& x) {
  const auto N = static_cast<std::size_t>(n);
  for (std::size_t c = 0; c < N; ++c) {
    std::size_t p = c;
    for (std::size_t r = c + 1; r < N; ++r) {
      if (std::abs(A[r][c]) > std::abs(A[p][c])) p = r;
    }
    if (A[p][c] == 0) return false;
    std::swap(A[p], A[c]);
    std::swap(b[p], b[c]);
    for (std::size_t r = c + 1; r < N; ++r) {
      const double f = A[r][c] / A[c][c];
      for (std::size_t k = c; k < N; ++k) A[r][k] -= f * A[c][k];
      b[r] -= f * b[c];
    }
  }
  for (std::size_t c = N; c-- > 0;) {
    double s = b[c];
    for (std::size_t k = c + 1; k < N; ++k) s -= A[c][k] * x[k];
    x[c] = s / A[c][c];
  }
  return true;
}

SeedResult refine(const CompiledSystem& cs, std::array<double, 3> x, int branch, const TorusOptions& opt) {
  SeedResult out;
  out.branch = branch;
  Residual r, trial;
  residual(cs, x, branch, r);
  double cost = sq_norm(r);
  double mu = -1;
  const auto n = static_cast<std::size_t>(r.n);
  int it = 0;
  for (; it < opt.max_iterations; ++it) {
    std::array<std::array<double, 3>, 3> A{};
    std::array<double, 3> g{};
    for (std::size_t i = 0; i < static_cast<std::size_t>(r.m); ++i) {
      for (std::size_t a = 0; a < n; ++a) {
        g[a] += r.J[i][a] * r.F[i];
        for (std::size_t b = 0; b < n; ++b) A[a][b] += r.J[i][a] * r.J[i][b];
      }
    }
    if (mu < 0) {
      double dmax = 0;
      for (std::size_t a = 0; a < n; ++a) dmax = std::max(dmax, A[a][a]);
      mu = 1e-3 * std::max(dmax, 1e-12);
    }
    bool accepted = false;
    double step = 0;
    while (!accepted && mu < 1e20) {
      auto M = A;
      for (std::size_t a = 0; a < n; ++a) M[a][a] += mu;
      std::array<double, 3> neg_g{-g[0], -g[1], -g[2]};
      std::array<double, 3> d{};
      if (!solve_small(M, neg_g, r.n, d)) {
        mu *= 4;
        continue;
      }
      std::array<double, 3> xn = x;
      step = 0;
      for (std::size_t a = 0; a < n; ++a) {
        xn[a] += d[a];
        step += d[a] * d[a];
      }
      step = std::sqrt(step);
      residual(cs, xn, branch, trial);
      const double cn = sq_norm(trial);
      if (cn <= cost) {
        x = xn;
        r = trial;
        cost = cn;
        mu = std::max(mu / 3, 1e-18);
        accepted = true;
      } else {
        mu *= 4;
        if (step < opt.newton_tol) break;
      }
    }
    if (!accepted || step < opt.newton_tol || cost == 0) {
      ++it;
      break;
    }
  }
  const auto th = full_angles(x, branch);
  out.theta = {wrap(th[0]), wrap(th[1]), wrap(th[2])};
  out.iterations = it;
  const auto vals = cs.values({std::polar(1.0, out.theta[0]), std::polar(1.0, out.theta[1]),
                               std::polar(1.0, out.theta[2])});
  out.residual = 0;
  for (const auto& v : vals) out.residual = std::max(out.residual, std::abs(v));
  out.converged = out.residual < opt.residual_tol;
  return out;
}

TorusMode resolve(const CompiledSystem& cs, TorusMode m) {
  if (m == TorusMode::automatic) return cs.branch_reducible() ? TorusMode::branches : TorusMode::full;
  if (m == TorusMode::branches && !cs.branch_reducible()) {
    throw std::invalid_argument("branch reduction requires r = 0");
  }
  return m;
}

std::size_t seed_count(const TorusOptions& opt, TorusMode mode) {
  const auto g = static_cast<std::size_t>(opt.grid);
  return mode == TorusMode::full ? g * g * g : 2 * g * g;
}

// Seed index -> (branch, starting angles); cell centres avoid the symmetric
// lines theta1 = theta2 of the grid.
SeedResult solve_seed(const CompiledSystem& cs, const TorusOptions& opt, TorusMode mode, std::size_t idx) {
  const auto g = static_cast<std::size_t>(opt.grid);
  const double h = kTwoPi / static_cast<double>(g);
  auto angle = [&](std::size_t i, double shift) { return (static_cast<double>(i) + shift) * h; };
  if (mode == TorusMode::full) {
    const std::size_t i = idx / (g * g), j = (idx / g) % g, k = idx % g;
    return refine(cs, {angle(i, 0.5), angle(j, 0.25), angle(k, 0.5)}, 2, opt);
  }
  const int branch = static_cast<int>(idx / (g * g));
  const std::size_t rem = idx % (g * g);
  return refine(cs, {angle(rem / g, 0.5), angle(rem % g, 0.25), 0.0}, branch, opt);
}

void check_options(const TorusOptions& opt) {
  if (opt.grid < 24) throw std::invalid_argument("grid must be at least 24 per angle");
  if (opt.grid > 512) throw std::invalid_argument("grid above 512 per angle is not supported");
  if (!(opt.newton_tol > 0) || !(opt.residual_tol > 0)) throw std::invalid_argument("tolerances must be positive");
}

}  // namespace

std::vector<SeedResult> solve_seeds_serial(const CompiledSystem& cs, const TorusOptions& opt, TorusMode mode) {
  check_options(opt);
  mode = resolve(cs, mode);
  const std::size_t n = seed_count(opt, mode);
  std::vector<SeedResult> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = solve_seed(cs, opt, mode, i);
  return out;
}

std::vector<SeedResult> solve_seeds_parallel(const CompiledSystem& cs, const TorusOptions& opt, TorusMode mode) {
  check_options(opt);
  mode = resolve(cs, mode);
  const std::size_t n = seed_count(opt, mode);
  std::vector<SeedResult> out(n);
  const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic, 64)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    out[static_cast<std::size_t>(i)] = solve_seed(cs, opt, mode, static_cast<std::size_t>(i));
  }
  return out;
}

namespace {

std::array<cd, 3> weights(const std::array<double, 3>& th) {
  return {std::polar(1.0, th[0]), std::polar(1.0, th[1]), std::polar(1.0, th[2])};
}

double dist(const std::array<cd, 3>& a, const std::array<cd, 3>& b) {
  double d = 0;
  for (std::size_t j = 0; j < 3; ++j) d = std::max(d, std::abs(a[j] - b[j]));
  return d;
}

bool angle_less(const TorusPoint& a, const TorusPoint& b) {
  for (std::size_t j = 0; j < 3; ++j) {
    const double x = wrap(std::arg(a.w[j])), y = wrap(std::arg(b.w[j]));
    if (x != y) return x < y;
  }
  return false;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

TorusSolutionSet classify_seeds(const CompiledSystem& cs, const std::vector<SeedResult>& seeds,
                                const TorusOptions& opt, TorusMode mode) {
  mode = resolve(cs, mode);
  TorusSolutionSet out;
  out.mode = mode == TorusMode::full ? "full" : "branches";
  out.seeds = seeds.size();

  std::vector<TorusPoint> curve_pts, iso_pts;
  std::vector<std::array<double, 3>> curve_tangents;
  for (const auto& s : seeds) {
    if (!s.converged) continue;
    ++out.converged;
    TorusPoint p;
    p.w = weights(s.theta);
    p.residual = s.residual;
    if (std::abs(p.w[0] - p.w[1]) <= opt.distinct_tol) {
      ++out.dropped_equal_weights;
      continue;
    }
    std::array<cd, 4> f;
    std::array<std::array<cd, 3>, 4> df;
    cs.jacobian(s.theta, f, df);
    Eigen::Matrix<double, 8, 3> J;
    for (int k = 0; k < 4; ++k) {
      for (int j = 0; j < 3; ++j) {
        J(2 * k, j) = df[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)].real();
        J(2 * k + 1, j) = df[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)].imag();
      }
    }
    Eigen::JacobiSVD<Eigen::Matrix<double, 8, 3>> svd(J, Eigen::ComputeFullV);
    const auto sv = svd.singularValues();
    p.sigma_ratio = sv(0) > 0 ? sv(2) / sv(0) : 0;
    if (p.sigma_ratio < opt.rank_tol) {
      curve_pts.push_back(p);
      const auto v = svd.matrixV().col(2);
      const double sign = v(0) < 0 ? -1.0 : 1.0;
      curve_tangents.push_back({sign * v(0), sign * v(1), sign * v(2)});
    } else {
      iso_pts.push_back(p);
    }
  }

  // isolated: greedy clustering in seed order, best residual represents
  std::vector<TorusPoint> reps;
  for (const auto& p : iso_pts) {
    bool merged = false;
    for (auto& q : reps) {
      if (dist(p.w, q.w) < opt.cluster_radius) {
        if (p.residual < q.residual) q = p;
        merged = true;
        break;
      }
    }
    if (!merged) reps.push_back(p);
  }
  std::sort(reps.begin(), reps.end(), angle_less);
  out.isolated = std::move(reps);

  // curves: union-find with a link radius of three grid cells
  const double link = 3 * kTwoPi / static_cast<double>(opt.grid);
  UnionFind uf(curve_pts.size());
  for (std::size_t a = 0; a < curve_pts.size(); ++a) {
    for (std::size_t b = a + 1; b < curve_pts.size(); ++b) {
      if (dist(curve_pts[a].w, curve_pts[b].w) < link) uf.unite(a, b);
    }
  }
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t a = 0; a < curve_pts.size(); ++a) groups[uf.find(a)].push_back(a);
  for (auto& [root, members] : groups) {
    CurveComponent comp;
    comp.point_count = members.size();
    std::vector<TorusPoint> pts;
    for (std::size_t m : members) pts.push_back(curve_pts[m]);
    std::sort(pts.begin(), pts.end(), angle_less);
    const std::size_t want = std::min<std::size_t>(12, pts.size());
    for (std::size_t q = 0; q < want; ++q) comp.samples.push_back(pts[q * pts.size() / want]);
    comp.tangent = curve_tangents[members.front()];
    out.curves.push_back(std::move(comp));
  }
  std::sort(out.curves.begin(), out.curves.end(),
            [](const CurveComponent& a, const CurveComponent& b) { return angle_less(a.samples[0], b.samples[0]); });

  out.caveats.push_back("completeness rests on grid coverage and is not certified");
  if (out.converged < out.seeds) {
    out.caveats.push_back(std::to_string(out.seeds - out.converged) + " seeds did not converge and were dropped");
  }
  return out;
}

TorusSolutionSet torus_zero_search(const HadamardSystem& sys, const TorusOptions& opt) {
  const CompiledSystem cs(sys);
  const TorusMode mode = resolve(cs, opt.mode);
  const auto seeds = opt.parallel ? solve_seeds_parallel(cs, opt, mode) : solve_seeds_serial(cs, opt, mode);
  return classify_seeds(cs, seeds, opt, mode);
}

int configure_threads_from_env() {
  if (const char* env = std::getenv("HSK_THREADS")) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && n > 0) omp_set_num_threads(static_cast<int>(n));
  }
  return omp_get_max_threads();
}

}  // namespace hsk
