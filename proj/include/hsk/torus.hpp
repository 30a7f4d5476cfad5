#pragma once

// Numerical search for common zeros of e_0..e_3 on the torus |w_j| = 1.
//
// Seeds on a regular angle grid are refined by damped Gauss-Newton on the
// real and imaginary parts of the equations. Converged points are classified
// by the singular values of the full 8x3 Jacobian: a numerically rank-deficient
// Jacobian marks a point of a one-parameter family, the rest are clustered as
// isolated solutions. The seed loop exists in a serial reference form and an
// OpenMP form that must agree bit for bit.

#include "hsk/hadamard.hpp"

#include <array>
#include <complex>
#include <cstddef>
#include <string>
#include <vector>

namespace hsk {

enum class TorusMode {
  automatic,  // branches when r = 0, full otherwise
  branches,   // w3 = 1 and w3 = w1 w2, two angles each, Newton on (e1, e3)
  full,       // three angles, Newton on all four e_k
};

struct TorusOptions {
  int grid = 64;                  // seeds per angle
  double newton_tol = 1e-12;      // stop when the step norm drops below this
  double residual_tol = 1e-8;     // max |e_k| accepted as a zero
  double cluster_radius = 1e-6;   // isolated points closer than this are merged
  double distinct_tol = 1e-4;     // points with |w1 - w2| <= this are dropped
  double rank_tol = 1e-6;         // sigma_min / sigma_max below this marks a curve point
  int max_iterations = 200;
  TorusMode mode = TorusMode::automatic;
  bool parallel = true;
};

struct TorusPoint {
  std::array<std::complex<double>, 3> w;
  double residual = 0;    // max_k |e_k|
  double sigma_ratio = 0; // sigma_min / sigma_max of the 8x3 Jacobian
};

struct CurveComponent {
  std::vector<TorusPoint> samples;  // sorted by arg w1
  std::size_t point_count = 0;
  /// Unit null vector in angle space at the first sample.
  std::array<double, 3> tangent{};
};

struct TorusSolutionSet {
  std::string mode;
  std::size_t seeds = 0;
  std::size_t converged = 0;
  std::size_t dropped_equal_weights = 0;
  std::vector<TorusPoint> isolated;
  std::vector<CurveComponent> curves;
  std::vector<std::string> caveats;
};

/// One refined seed; equality is exact so the two seed loops can be compared.
struct SeedResult {
  bool converged = false;
  int branch = 0;  // 0: w3 = 1, 1: w3 = w1 w2, 2: full
  std::array<double, 3> theta{};
  double residual = 0;
  int iterations = 0;
  friend bool operator==(const SeedResult&, const SeedResult&) = default;
};

/// Double-precision form of a numeric system, with b = sqrt(b^2).
class CompiledSystem {
 public:
  explicit CompiledSystem(const HadamardSystem& sys);

  /// e_k at the weights.
  std::array<std::complex<double>, 4> values(const std::array<std::complex<double>, 3>& w) const;
  /// Values and d e_k / d theta_j at w_j = exp(i theta_j).
  void jacobian(const std::array<double, 3>& theta, std::array<std::complex<double>, 4>& f,
                std::array<std::array<std::complex<double>, 3>, 4>& df) const;
  bool branch_reducible() const { return branch_reducible_; }

 private:
  struct CTerm {
    std::complex<double> coeff;
    std::array<int, 3> exp;
  };
  std::array<std::vector<CTerm>, 4> terms_;
  int max_exp_ = 0;
  bool branch_reducible_ = false;
};

std::vector<SeedResult> solve_seeds_serial(const CompiledSystem& cs, const TorusOptions& opt, TorusMode mode);
std::vector<SeedResult> solve_seeds_parallel(const CompiledSystem& cs, const TorusOptions& opt, TorusMode mode);

/// Classification and clustering of refined seeds (deterministic, serial).
TorusSolutionSet classify_seeds(const CompiledSystem& cs, const std::vector<SeedResult>& seeds,
                                const TorusOptions& opt, TorusMode mode);

TorusSolutionSet torus_zero_search(const HadamardSystem& sys, const TorusOptions& opt = {});

/// Applies HSK_THREADS (if set) to the OpenMP runtime; returns the thread cap in effect.
int configure_threads_from_env();

}  // namespace hsk
