#pragma once

// Sparse multivariate (Laurent) polynomials over Q(i) in a named-variable ring.
//
// Exponents are signed so that the ring homomorphisms of the form X2 -> 1/X1
// can be replayed literally; Groebner routines reject negative exponents.

#include "hsk/exactnum.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace hsk {

inline constexpr std::size_t kMaxVars = 12;

class VarRing {
 public:
  explicit VarRing(std::vector<std::string> names);

  std::size_t arity() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  /// Index of a variable, or -1.
  int index_of(const std::string& name) const;

 private:
  std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const VarRing>;

RingPtr make_ring(std::vector<std::string> names);

/// The 9-variable ring (w1, w2, w3, k1, k2, r, s, b, c).
const RingPtr& standard_ring();

namespace var {
inline constexpr int w1 = 0, w2 = 1, w3 = 2, k1 = 3, k2 = 4, r = 5, s = 6, b = 7, c = 8;
}

class RingMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Monomial {
  std::array<std::int8_t, kMaxVars> exp{};

  int degree() const;
  int degree_in(int v) const { return exp[static_cast<std::size_t>(v)]; }
  bool is_one() const;
  bool has_negative() const;
  /// True iff this divides other (both non-negative).
  bool divides(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend bool coprime(const Monomial& a, const Monomial& b);

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

struct Term {
  Monomial mono;
  GaussRat coeff;
};

class Polynomial {
 public:
  explicit Polynomial(RingPtr ring);
  Polynomial(RingPtr ring, const GaussRat& constant);

  static Polynomial variable(RingPtr ring, int index, int power = 1);
  static Polynomial variable(RingPtr ring, const std::string& name, int power = 1);
  /// Takes ownership of arbitrary terms: combines duplicates, drops zeros.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  /// Terms in ascending canonical (lexicographic exponent) order.
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool has_negative_exponents() const;
  /// Constant coefficient (zero if absent).
  GaussRat constant_term() const;
  GaussRat coefficient(const Monomial& m) const;
  int degree() const;
  int degree_in(int v) const;
  /// True iff variable v occurs in some term.
  bool involves(int v) const;

  Polynomial conj_coeffs() const;
  Polynomial pow(unsigned n) const;
  /// Coefficient of v^k as a polynomial in the remaining variables.
  Polynomial coefficient_of(int v, int k) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const GaussRat& c);
  Polynomial operator-() const;

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const GaussRat& c) { return a *= c; }
  friend Polynomial operator*(const GaussRat& c, Polynomial a) { return a *= c; }
  friend Polynomial operator+(Polynomial a, const GaussRat& c);
  friend Polynomial operator-(Polynomial a, const GaussRat& c);
  friend Polynomial operator+(const GaussRat& c, const Polynomial& a) { return a + c; }
  friend Polynomial operator-(const GaussRat& c, const Polynomial& a) { return -a + c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

 private:
  void check_ring(const Polynomial& o) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Ring homomorphism sending variable i to images[i]. Negative exponents
/// require the image to be a single term.
Polynomial substitute(const Polynomial& f, std::span<const Polynomial> images);
Polynomial substitute(const Polynomial& f, std::initializer_list<Polynomial> images);

/// Identity images for every variable of the ring.
std::vector<Polynomial> identity_images(const RingPtr& ring);

/// Exact evaluation at a point (one value per ring variable).
QuadExt evaluate(const Polynomial& f, std::span<const QuadExt> point);

// Text format: sums of products of coefficients, `i`, variables and `^k`,
// with parentheses, unary minus and `/` by constants.
Polynomial parse_polynomial(const std::string& text, const RingPtr& ring);
std::string to_string(const Polynomial& f);

}  // namespace hsk
