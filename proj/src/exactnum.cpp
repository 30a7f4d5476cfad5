#include "hsk/exactnum.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace hsk {

Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0) {
    throw std::invalid_argument("not a rational number: '" + text + "'");
  }
  if (q.get_den() == 0) throw ArithmeticError("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

bool is_integer(const Rational& q) { return mpz_divisible_p(q.get_num_mpz_t(), q.get_den_mpz_t()) != 0; }

// ---------------------------------------------------------------- GaussRat

GaussRat GaussRat::inverse() const {
  if (is_zero()) throw ArithmeticError("division by zero in Q(i)");
  if (is_real()) return GaussRat(1 / re_);
  Rational n = norm();
  return GaussRat(re_ / n, -im_ / n);
}

GaussRat& GaussRat::operator+=(const GaussRat& o) {
  re_ += o.re_;
  if (sgn(o.im_) != 0) im_ += o.im_;
  return *this;
}

GaussRat& GaussRat::operator-=(const GaussRat& o) {
  re_ -= o.re_;
  if (sgn(o.im_) != 0) im_ -= o.im_;
  return *this;
}

GaussRat& GaussRat::operator*=(const GaussRat& o) {
  // Real fast paths dominate: most polynomial coefficients are real.
  if (o.is_real()) {
    re_ *= o.re_;
    if (sgn(im_) != 0) im_ *= o.re_;
    return *this;
  }
  if (is_real()) {
    im_ = re_ * o.im_;
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string to_string(const GaussRat& z) {
  const bool has_re = sgn(z.re()) != 0;
  const bool has_im = sgn(z.im()) != 0;
  if (!has_im) return z.re().get_str();
  std::ostringstream os;
  if (has_re) os << '(' << z.re().get_str() << (sgn(z.im()) > 0 ? "+" : "-");
  else if (sgn(z.im()) < 0) os << '-';
  Rational mag = abs(z.im());
  if (mag != 1) os << mag.get_str() << '*';
  os << 'i';
  if (has_re) os << ')';
  return os.str();
}

// ---------------------------------------------------------------- square-free

SquareFreeParts square_free_parts(const Integer& n) {
  if (sgn(n) <= 0) throw std::invalid_argument("square_free_parts expects n > 0");
  Integer rest = n;
  Integer square = 1;
  Integer free = 1;
  for (Integer p = 2; p * p <= rest; ++p) {
    int mult = 0;
    while (rest % p == 0) {
      rest /= p;
      ++mult;
    }
    for (int k = 0; k < mult / 2; ++k) square *= p;
    if (mult % 2 == 1) free *= p;
  }
  free *= rest;
  return {square, free};
}

// ---------------------------------------------------------------- QuadExt

QuadExt::QuadExt(GaussRat a, GaussRat b, long radicand)
    : a_(std::move(a)), b_(std::move(b)), m_(radicand) {
  if (radicand < 1) throw std::invalid_argument("radicand must be >= 1");
  SquareFreeParts parts = square_free_parts(Integer(radicand));
  if (parts.square != 1) {
    b_ *= GaussRat(Rational(parts.square));
    m_ = parts.free.get_si();
  }
  normalize();
}

void QuadExt::normalize() {
  if (m_ == 1 && !b_.is_zero()) {
    a_ += b_;
    b_ = GaussRat();
  }
}

QuadExt QuadExt::sqrt_of(const Rational& q) {
  if (sgn(q) == 0) return QuadExt();
  Rational mag = abs(q);
  // sqrt(p/d) = sqrt(p*d)/d
  Integer pd = mag.get_num() * mag.get_den();
  SquareFreeParts parts = square_free_parts(pd);
  if (!parts.free.fits_slong_p()) throw ArithmeticError("radicand too large");
  Rational coeff(parts.square, mag.get_den());
  coeff.canonicalize();
  GaussRat c = sgn(q) > 0 ? GaussRat(coeff) : GaussRat(0, coeff);
  if (parts.free == 1) return QuadExt(c);
  return QuadExt(GaussRat(), c, parts.free.get_si());
}

long QuadExt::merged_radicand(const QuadExt& o) const {
  if (!has_radical()) return o.has_radical() ? o.m_ : m_;
  if (!o.has_radical()) return m_;
  if (m_ != o.m_) {
    throw ArithmeticError("mixing radicands sqrt(" + std::to_string(m_) + ") and sqrt(" +
                          std::to_string(o.m_) + ")");
  }
  return m_;
}

QuadExt QuadExt::conj() const {
  QuadExt r;
  r.a_ = a_.conj();
  r.b_ = b_.conj();
  r.m_ = m_;
  return r;
}

QuadExt QuadExt::operator-() const {
  QuadExt r;
  r.a_ = -a_;
  r.b_ = -b_;
  r.m_ = m_;
  return r;
}

QuadExt QuadExt::inverse() const {
  if (is_zero()) throw ArithmeticError("division by zero in Q(i, sqrt(m))");
  if (!has_radical()) return QuadExt(a_.inverse());
  // (a + b s)^-1 = (a - b s) / (a^2 - m b^2); the denominator is nonzero
  // because sqrt(m) is not in Q(i) for square-free m > 1.
  GaussRat den = a_ * a_ - GaussRat(Rational(m_)) * b_ * b_;
  GaussRat inv = den.inverse();
  QuadExt r;
  r.a_ = a_ * inv;
  r.b_ = -(b_ * inv);
  r.m_ = m_;
  return r;
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
  m_ = merged_radicand(o);
  a_ += o.a_;
  if (o.has_radical()) b_ += o.b_;
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
  m_ = merged_radicand(o);
  a_ -= o.a_;
  if (o.has_radical()) b_ -= o.b_;
  return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
  const long m = merged_radicand(o);
  if (!o.has_radical()) {
    a_ *= o.a_;
    if (has_radical()) b_ *= o.a_;
  } else if (!has_radical()) {
    b_ = a_ * o.b_;
    a_ *= o.a_;
  } else {
    GaussRat a = a_ * o.a_ + GaussRat(Rational(m)) * b_ * o.b_;
    GaussRat b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
  }
  m_ = m;
  return *this;
}

bool operator==(const QuadExt& x, const QuadExt& y) {
  if (x.a_ != y.a_ || x.b_ != y.b_) return false;
  return !x.has_radical() || x.m_ == y.m_;
}

std::string to_string(const QuadExt& z) {
  if (!z.has_radical()) return to_string(z.rational_part());
  std::string out;
  if (!z.rational_part().is_zero()) out = to_string(z.rational_part()) + " + ";
  out += to_string(z.radical_part()) + "*sqrt(" + std::to_string(z.radicand()) + ")";
  return out;
}

// ---------------------------------------------------------------- embedding

namespace {

mpf_class to_mpf(const Rational& q, unsigned bits) {
  mpf_class r(q, bits);
  return r;
}

// Magnitude estimate used to detect catastrophic cancellation.
double magnitude(const mpf_class& x) { return std::fabs(x.get_d()); }

}  // namespace

ComplexMP embed_complex(const QuadExt& x, unsigned precision_bits) {
  if (precision_bits < 53) precision_bits = 53;
  unsigned guard = 32;
  for (;;) {
    const unsigned bits = precision_bits + guard;
    mpf_class root(0, bits);
    if (x.has_radical()) {
      mpf_class m(x.radicand(), bits);
      mpf_sqrt(root.get_mpf_t(), m.get_mpf_t());
    }
    const GaussRat& a = x.rational_part();
    const GaussRat& b = x.radical_part();
    mpf_class bre(to_mpf(b.re(), bits) * root, bits);
    mpf_class bim(to_mpf(b.im(), bits) * root, bits);
    ComplexMP out{mpf_class(to_mpf(a.re(), bits) + bre, bits),
                  mpf_class(to_mpf(a.im(), bits) + bim, bits)};
    // Each part a + b*sqrt(m) can only lose bits to cancellation when the
    // summands are much larger than the result; retry with more guard bits.
    auto lost = [&](const mpf_class& sum, const Rational& ra, const mpf_class& rb) {
      if (sgn(rb) == 0 || sgn(ra) == 0) return false;
      double scale = std::max(std::fabs(ra.get_d()), magnitude(rb));
      double s = magnitude(sum);
      return s == 0.0 || s < scale * std::ldexp(1.0, -static_cast<int>(guard) + 2);
    };
    const bool cancel = lost(out.re, a.re(), bre) || lost(out.im, a.im(), bim);
    if (!cancel || guard >= 1024) {
      out.re.set_prec(precision_bits);
      out.im.set_prec(precision_bits);
      return out;
    }
    guard *= 2;
  }
}

std::complex<double> to_complex(const QuadExt& x) { return embed_complex(x, 64).to_complex(); }

}  // namespace hsk
