#pragma once

// Exact arithmetic over Q, Q(i) and Q(i, sqrt(m)).
//
// Rational is GMP's mpq_class (always canonical). GaussRat is re + im*i with
// rational parts. QuadExt is a + b*sqrt(m) with Gaussian-rational a, b and a
// single square-free radicand m >= 1 per value.

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hsk {

using Rational = mpq_class;
using Integer = mpz_class;

class ArithmeticError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Parses "p" or "p/q" into a canonical rational.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);
bool is_integer(const Rational& q);

class GaussRat {
 public:
  GaussRat() = default;
  GaussRat(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  GaussRat(Rational re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT
  GaussRat(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussRat i() { return GaussRat(0, 1); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussRat conj() const { return GaussRat(re_, -im_); }
  /// z * conj(z), a non-negative rational.
  Rational norm() const { return re_ * re_ + im_ * im_; }
  GaussRat inverse() const;

  GaussRat& operator+=(const GaussRat& o);
  GaussRat& operator-=(const GaussRat& o);
  GaussRat& operator*=(const GaussRat& o);
  GaussRat& operator/=(const GaussRat& o) { return *this *= o.inverse(); }
  GaussRat operator-() const { return GaussRat(-re_, -im_); }

  friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
  friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
  friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
  friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

 private:
  Rational re_{0};
  Rational im_{0};
};

std::string to_string(const GaussRat& z);

/// Square-free decomposition: n = square^2 * free with free square-free.
struct SquareFreeParts {
  Integer square;
  Integer free;
};
SquareFreeParts square_free_parts(const Integer& n);

/// High-precision complex value produced by embed_complex.
struct ComplexMP {
  mpf_class re;
  mpf_class im;
  std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }
};

class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(long v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  QuadExt(GaussRat a) : a_(std::move(a)) {}  // NOLINT
  QuadExt(GaussRat a, GaussRat b, long radicand);

  /// sqrt(q) for a rational q with the square part pulled out of the radicand;
  /// negative q gives i*sqrt(|q|).
  static QuadExt sqrt_of(const Rational& q);

  long radicand() const { return m_; }
  const GaussRat& rational_part() const { return a_; }
  const GaussRat& radical_part() const { return b_; }
  bool has_radical() const { return !b_.is_zero(); }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_one() const { return a_.is_one() && b_.is_zero(); }

  QuadExt conj() const;
  QuadExt inverse() const;
  /// z * conj(z); lies in the real subfield Q(sqrt(m)).
  QuadExt abs2() const { return *this * conj(); }
  /// True iff the value is a real rational number (no i, no radical).
  bool is_rational() const { return !has_radical() && a_.is_real(); }

  QuadExt& operator+=(const QuadExt& o);
  QuadExt& operator-=(const QuadExt& o);
  QuadExt& operator*=(const QuadExt& o);
  QuadExt& operator/=(const QuadExt& o) { return *this *= o.inverse(); }
  QuadExt operator-() const;

  friend QuadExt operator+(QuadExt a, const QuadExt& b) { return a += b; }
  friend QuadExt operator-(QuadExt a, const QuadExt& b) { return a -= b; }
  friend QuadExt operator*(QuadExt a, const QuadExt& b) { return a *= b; }
  friend QuadExt operator/(QuadExt a, const QuadExt& b) { return a /= b; }
  friend bool operator==(const QuadExt& x, const QuadExt& y);
  friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

 private:
  long merged_radicand(const QuadExt& o) const;
  void normalize();

  GaussRat a_;
  GaussRat b_;
  long m_ = 1;
};

std::string to_string(const QuadExt& z);

/// Embedding into C with sqrt(m) > 0; relative error below 2^(1 - precision_bits).
ComplexMP embed_complex(const QuadExt& x, unsigned precision_bits = 128);
std::complex<double> to_complex(const QuadExt& x);

}  // namespace hsk
