#pragma once

// The Hadamard-condition polynomials e_0..e_3 of W = A0 + w1 A1 + w2 A2 + w3 A3,
// exact verification of candidate weights, the classified weight families,
// and the nonexistence arguments for the two remaining eigenmatrix cases.

#include "hsk/multipoly.hpp"
#include "hsk/schemes.hpp"

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace hsk {

/// P over the standard ring: entries in k1, k2, r, s, b.
Matrix<Polynomial> symbolic_P();

/// e_k = X1 X2 X3 ((sum_j P_kj X_j)(sum_j P_kj' / X_j) - n), P any 4x4 matrix
/// of polynomials, transpose map 1 <-> 2.
std::array<Polynomial, 4> hadamard_polynomials(const Matrix<Polynomial>& P);

struct HadamardSystem {
  bool symbolic = true;
  /// Set for numeric systems. Those keep b as a variable with b^2 reduced to
  /// the template value, so each e_k is A + b B with A, B in w1, w2, w3.
  std::optional<EigenmatrixTemplate> params;
  std::array<Polynomial, 4> e{Polynomial(standard_ring()), Polynomial(standard_ring()),
                              Polynomial(standard_ring()), Polynomial(standard_ring())};
};

HadamardSystem build_symbolic_system();
HadamardSystem build_system(const EigenmatrixTemplate& t);

/// Rewrites b^2 -> b2 until b has degree <= 1.
Polynomial reduce_b_square(const Polynomial& f, const Rational& b2);

enum class Family { a, b, c, d, e, custom };
std::string to_string(Family f);

struct HadamardCandidate {
  QuadExt w1, w2, w3;
  std::vector<Family> families;
  long a = 0, c = 0;
  /// Free unit parameter of family (a).
  std::optional<QuadExt> w;
  std::string label;
};

/// Parses an exact value such as "(3+4*i)/5" or "1/3 + 2/3*i*sqrt(2)"; at
/// most one distinct sqrt(m) may occur. Inverse of to_string(QuadExt).
QuadExt parse_exact(const std::string& text);

/// Exact test that (w1, w2, w3) annihilates e_0..e_3 of a numeric system.
/// When b and the weights live over different radicands the two components
/// A and B of e_k = A + b B must vanish separately.
bool check_common_zero(const HadamardSystem& sys, const HadamardCandidate& cand);
/// Values of e_0..e_3 at the candidate (throws ArithmeticError on a radicand clash).
std::array<QuadExt, 4> evaluate_system(const HadamardSystem& sys, const HadamardCandidate& cand);

/// W = A0 + w1 A1 + w2 A2 + w3 A3. Requires d = 3, A1^T = A2, A3 symmetric.
Matrix<QuadExt> build_W(const AssociationScheme& s, const HadamardCandidate& cand);
/// Exact W conj(W)^T = n I with unit-modulus entries.
bool check_hadamard_matrix(const Matrix<QuadExt>& W);

/// Non-certifying 128-bit floating check for numerically found weights.
struct NumericHadamardCheck {
  double max_deviation = 0;  // max |(W W* - n I)_{xy}|
  bool within_tolerance = false;
  static constexpr bool certifying = false;
};
NumericHadamardCheck check_hadamard_numeric(const AssociationScheme& s,
                                            const std::array<std::complex<double>, 3>& w,
                                            double tol = 1e-8);

struct FamilyListing {
  long a = 0, c = 0;
  std::vector<HadamardCandidate> candidates;
  /// Present iff c = 1: the continuum (w, -w, 1), |w| = 1.
  std::optional<std::string> family_a_relation;
  std::vector<std::string> notes;
};

/// samples_for_family_a >= 2; the first two samples are always i and -i.
FamilyListing enumerate_families(long a, long c, int samples_for_family_a = 4);

/// Family (b) weights w+ and w- at c = 1.
std::pair<QuadExt, QuadExt> family_b_weights(long a);

// ---------------------------------------------------------------- named polynomials
// All in the standard ring with a represented as -s/2.

Polynomial a_poly();
Polynomial K1_poly();  // 2a(2a-1)c
Polynomial K2_poly();  // 2a-1
Polynomial L_poly();   // (2a-1)c^2 - 2(a+1)c - 1
/// Specialization (k1, k2, r) -> (K1, K2, 0).
std::vector<Polynomial> case_i_images();
/// The ideal I: e_k after case_i_images, b^2 k2 - k1(k2+1) likewise, and the
/// three parameter relations k2 = K2, k1 = K1, b^2 = 4a^2 c.
std::vector<Polynomial> case_i_ideal();

Polynomial g_poly();                      // 2(w1w2+1) + ((2a-1)c-1)(w1+w2)
Polynomial g1_poly(bool plus_variant);    // (2a-1)(w1w2+w3^2) + (w1w2 + a((2a-1)c +- 1)(w1+w2) + 1)w3
Polynomial f1_poly(int var);              // quartic in w1 or w2
Polynomial f2_poly(int var);
Polynomial h1_poly();

/// Coefficients (a0, a1, a2) of f1 and (b0, b1, b2) of f2.
std::array<Polynomial, 3> f1_coefficients();
std::array<Polynomial, 3> f2_coefficients();

// ---------------------------------------------------------------- nonexistence

struct NonexistenceReport {
  SongCase which = SongCase::ii;
  Rational k1, k2;
  std::vector<CheckEntry> checks;
  /// Real coefficient t of the forced quadratic X^2 + t X + 1.
  Rational t;
  bool unit_root_possible = false;
  std::optional<QuadExt> forced_weight;  // w3 for (ii), w2 for (iii)
  Rational m1;
  bool m1_integral = false;
  bool hadamard_possible = true;
  std::string conclusion;
};

/// which must be SongCase::ii or SongCase::iii; throws SchemeError on invalid parameters.
NonexistenceReport nonexistence_check(SongCase which, long k1, long k2);

}  // namespace hsk
