#include "hsk/hadamard.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <regex>

namespace hsk {

namespace {

const RingPtr& R() { return standard_ring(); }
Polynomial V(int idx, int power = 1) { return Polynomial::variable(R(), idx, power); }
Polynomial C(const GaussRat& q) { return Polynomial(R(), q); }

// Parses ring text in which the letter `a` stands for -s/2.
Polynomial with_a(const std::string& text) {
  std::string out;
  for (char ch : text) {
    if (ch == 'a') out += "(-1/2*s)";
    else out += ch;
  }
  return parse_polynomial(out, R());
}

QuadExt unit(long re_num, long im_num, long den) {
  return QuadExt(GaussRat(Rational(re_num, den), Rational(im_num, den)));
}

}  // namespace

Matrix<Polynomial> symbolic_P() {
  const GaussRat half(Rational(1, 2));
  const Polynomial one = C(1);
  const Polynomial k1 = V(var::k1), k2 = V(var::k2), r = V(var::r), s = V(var::s), b = V(var::b);
  const Polynomial rb_plus = (r + b * GaussRat::i()) * half;
  const Polynomial rb_minus = (r - b * GaussRat::i()) * half;
  Matrix<Polynomial> p(4, 4, C(0));
  p(0, 0) = one, p(0, 1) = k1 * half, p(0, 2) = k1 * half, p(0, 3) = k2;
  p(1, 0) = one, p(1, 1) = rb_plus, p(1, 2) = rb_minus, p(1, 3) = -(r + GaussRat(1));
  p(2, 0) = one, p(2, 1) = rb_minus, p(2, 2) = rb_plus, p(2, 3) = -(r + GaussRat(1));
  p(3, 0) = one, p(3, 1) = s * half, p(3, 2) = s * half, p(3, 3) = -(s + GaussRat(1));
  return p;
}

std::array<Polynomial, 4> hadamard_polynomials(const Matrix<Polynomial>& P) {
  if (P.rows() != 4 || P.cols() != 4) throw std::invalid_argument("P must be 4x4");
  static constexpr int transpose[4] = {0, 2, 1, 3};
  const RingPtr& ring = P(0, 0).ring();
  std::array<Polynomial, 4> X{Polynomial(ring, GaussRat(1)), Polynomial::variable(ring, var::w1),
                              Polynomial::variable(ring, var::w2), Polynomial::variable(ring, var::w3)};
  std::array<Polynomial, 4> Xinv{Polynomial(ring, GaussRat(1)), Polynomial::variable(ring, var::w1, -1),
                                 Polynomial::variable(ring, var::w2, -1),
                                 Polynomial::variable(ring, var::w3, -1)};
  Polynomial n(ring);
  for (std::size_t j = 0; j < 4; ++j) n += P(0, j);
  const Polynomial x123 = X[1] * X[2] * X[3];
  std::array<Polynomial, 4> e{Polynomial(ring), Polynomial(ring), Polynomial(ring), Polynomial(ring)};
  for (std::size_t k = 0; k < 4; ++k) {
    Polynomial left(ring), right(ring);
    for (std::size_t j = 0; j < 4; ++j) {
      left += P(k, j) * X[j];
      right += P(k, static_cast<std::size_t>(transpose[j])) * Xinv[j];
    }
    e[k] = x123 * (left * right - n);
  }
  return e;
}

HadamardSystem build_symbolic_system() {
  HadamardSystem sys;
  sys.symbolic = true;
  sys.e = hadamard_polynomials(symbolic_P());
  return sys;
}

Polynomial reduce_b_square(const Polynomial& f, const Rational& b2) {
  std::vector<Term> out;
  out.reserve(f.size());
  for (const Term& t : f.terms()) {
    Term u = t;
    int eb = u.mono.exp[var::b];
    if (eb < 0) throw std::invalid_argument("negative power of b");
    Rational scale = 1;
    while (eb >= 2) {
      scale *= b2;
      eb -= 2;
    }
    u.mono.exp[var::b] = static_cast<std::int8_t>(eb);
    u.coeff *= GaussRat(scale);
    out.push_back(std::move(u));
  }
  return Polynomial::from_terms(f.ring(), std::move(out));
}

HadamardSystem build_system(const EigenmatrixTemplate& t) {
  const HadamardSystem sym = build_symbolic_system();
  std::vector<Polynomial> img = identity_images(R());
  img[var::k1] = C(t.k1());
  img[var::k2] = C(t.k2());
  img[var::r] = C(t.r());
  img[var::s] = C(t.s());
  HadamardSystem sys;
  sys.symbolic = false;
  sys.params = t;
  for (std::size_t k = 0; k < 4; ++k) sys.e[k] = reduce_b_square(substitute(sym.e[k], img), t.b2());
  return sys;
}

std::string to_string(Family f) {
  switch (f) {
    case Family::a: return "a";
    case Family::b: return "b";
    case Family::c: return "c";
    case Family::d: return "d";
    case Family::e: return "e";
    case Family::custom: return "custom";
  }
  return "?";
}

namespace {

struct Split {
  QuadExt A, B;  // e = A + b B
};

Split split_value(const Polynomial& e, const HadamardCandidate& cand) {
  std::vector<QuadExt> pt(R()->arity(), QuadExt(0));
  pt[var::w1] = cand.w1;
  pt[var::w2] = cand.w2;
  pt[var::w3] = cand.w3;
  return {evaluate(e.coefficient_of(var::b, 0), pt), evaluate(e.coefficient_of(var::b, 1), pt)};
}

void require_numeric(const HadamardSystem& sys) {
  if (sys.symbolic || !sys.params) throw std::invalid_argument("a numeric system is required");
}

}  // namespace

std::array<QuadExt, 4> evaluate_system(const HadamardSystem& sys, const HadamardCandidate& cand) {
  require_numeric(sys);
  const QuadExt b = sys.params->b();
  std::array<QuadExt, 4> out;
  for (std::size_t k = 0; k < 4; ++k) {
    const Split v = split_value(sys.e[k], cand);
    out[k] = v.A + b * v.B;
  }
  return out;
}

QuadExt parse_exact(const std::string& text) {
  static const std::regex root(R"(sqrt\(\s*([0-9]+)\s*\))");
  long m = 0;
  for (std::sregex_iterator it(text.begin(), text.end(), root), end; it != end; ++it) {
    const long v = std::stol((*it)[1].str());
    if (m != 0 && v != m) throw std::invalid_argument("more than one radicand in '" + text + "'");
    m = v;
  }
  static const RingPtr ring = make_ring({"t"});
  const Polynomial p = parse_polynomial(std::regex_replace(text, root, "t"), ring);
  if (p.has_negative_exponents()) throw std::invalid_argument("negative power of a root in '" + text + "'");
  if (m == 0 && p.involves(0)) throw std::invalid_argument("unexpected variable in '" + text + "'");
  QuadExt out;
  const QuadExt t = m == 0 ? QuadExt(0) : QuadExt::sqrt_of(Rational(m));
  for (const Term& term : p.terms()) {
    QuadExt v(term.coeff);
    for (int k = 0; k < term.mono.degree_in(0); ++k) v *= t;
    out += v;
  }
  return out;
}

bool check_common_zero(const HadamardSystem& sys, const HadamardCandidate& cand) {
  require_numeric(sys);
  const QuadExt b = sys.params->b();
  for (std::size_t k = 0; k < 4; ++k) {
    const Split v = split_value(sys.e[k], cand);
    try {
      if (!(v.A + b * v.B).is_zero()) return false;
    } catch (const ArithmeticError&) {
      // sqrt of the b radicand lies outside the weights' field
      if (!v.A.is_zero() || !v.B.is_zero()) return false;
    }
  }
  return true;
}

Matrix<QuadExt> build_W(const AssociationScheme& s, const HadamardCandidate& cand) {
  if (s.d() != 3) throw SchemeError("W requires a 3-class scheme");
  if (s.transpose_of(1) != 2) throw SchemeError("W requires A1^T = A2");
  if (s.transpose_of(3) != 3) throw SchemeError("W requires A3 symmetric");
  const std::array<QuadExt, 4> w{QuadExt(1), cand.w1, cand.w2, cand.w3};
  Matrix<QuadExt> W(s.n(), s.n());
  for (std::size_t x = 0; x < s.n(); ++x) {
    for (std::size_t y = 0; y < s.n(); ++y) W(x, y) = w[static_cast<std::size_t>(s.relation(x, y))];
  }
  return W;
}

bool check_hadamard_matrix(const Matrix<QuadExt>& W) {
  if (!W.square() || W.rows() == 0) return false;
  const std::size_t n = W.rows();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (!W(x, y).abs2().is_one()) return false;
    }
  }
  const Matrix<QuadExt> G = W * W.map([](const QuadExt& z) { return z.conj(); }).transpose();
  return G == Matrix<QuadExt>::identity(n, QuadExt(static_cast<long>(n)));
}

NumericHadamardCheck check_hadamard_numeric(const AssociationScheme& s,
                                            const std::array<std::complex<double>, 3>& w,
                                            double tol) {
  constexpr unsigned bits = 128;
  const std::size_t n = s.n();
  std::array<mpf_class, 4> re{mpf_class(1, bits), mpf_class(w[0].real(), bits), mpf_class(w[1].real(), bits),
                              mpf_class(w[2].real(), bits)};
  std::array<mpf_class, 4> im{mpf_class(0, bits), mpf_class(w[0].imag(), bits), mpf_class(w[1].imag(), bits),
                              mpf_class(w[2].imag(), bits)};
  NumericHadamardCheck out;
  double worst = 0;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      mpf_class sr(0, bits), si(0, bits);
      for (std::size_t z = 0; z < n; ++z) {
        const auto p = static_cast<std::size_t>(s.relation(x, z));
        const auto q = static_cast<std::size_t>(s.relation(y, z));
        // W(x,z) * conj(W(y,z))
        sr += re[p] * re[q] + im[p] * im[q];
        si += im[p] * re[q] - re[p] * im[q];
      }
      if (x == y) sr -= static_cast<double>(n);
      worst = std::max(worst, std::hypot(sr.get_d(), si.get_d()));
    }
  }
  out.max_deviation = worst;
  out.within_tolerance = worst <= tol;
  return out;
}

// ---------------------------------------------------------------- families

std::pair<QuadExt, QuadExt> family_b_weights(long a) {
  if (a < 1) throw SchemeError("a must be positive");
  const QuadExt R2 = QuadExt::sqrt_of(Rational(2 * a * (a - 1)));
  const QuadExt A(a), A1(a - 1);
  const QuadExt I(GaussRat::i());
  const QuadExt D(2 * a * a - 2 * a + 1);
  const QuadExt wp = (-A1 - A * R2 + (-A + A1 * R2) * I) / D;
  const QuadExt wm = (-A1 + A * R2 + (-A - A1 * R2) * I) / D;
  return {wp, wm};
}

namespace {

void add_candidate(FamilyListing& out, HadamardCandidate cand) {
  for (auto& existing : out.candidates) {
    if (existing.w1 == cand.w1 && existing.w2 == cand.w2 && existing.w3 == cand.w3) {
      for (Family f : cand.families) {
        if (std::find(existing.families.begin(), existing.families.end(), f) == existing.families.end()) {
          existing.families.push_back(f);
        }
      }
      existing.label += " = " + cand.label;
      return;
    }
  }
  out.candidates.push_back(std::move(cand));
}

HadamardCandidate make(Family f, long a, long c, QuadExt w1, QuadExt w2, QuadExt w3, std::string label) {
  HadamardCandidate h;
  h.w1 = std::move(w1);
  h.w2 = std::move(w2);
  h.w3 = std::move(w3);
  h.families = {f};
  h.a = a;
  h.c = c;
  h.label = std::move(label);
  return h;
}

// Rational points u = ((p^2 - q^2) + 2pq i)/(p^2 + q^2) of the unit circle.
std::vector<QuadExt> pythagorean_units(std::size_t count) {
  std::vector<QuadExt> out;
  for (long p = 2; out.size() < count; ++p) {
    for (long q = 1; q < p && out.size() < count; ++q) {
      if (std::gcd(p, q) != 1 || (p - q) % 2 == 0) continue;
      const long den = p * p + q * q;
      out.push_back(unit(p * p - q * q, 2 * p * q, den));
      if (out.size() < count) out.push_back(unit(p * p - q * q, -2 * p * q, den));
    }
  }
  return out;
}

}  // namespace

FamilyListing enumerate_families(long a, long c, int samples_for_family_a) {
  if (a < 1 || c < 1) throw SchemeError("a and c must be positive integers");
  if (samples_for_family_a < 2) samples_for_family_a = 2;
  FamilyListing out;
  out.a = a;
  out.c = c;
  const QuadExt one(1), minus_one(-1), I(GaussRat::i());

  if (c == 1) {
    out.family_a_relation = "(w, -w, 1) with |w| = 1";
    std::vector<QuadExt> ws{I, -I};
    for (auto& u : pythagorean_units(static_cast<std::size_t>(samples_for_family_a - 2))) ws.push_back(u);
    for (const auto& w : ws) {
      auto h = make(Family::a, a, c, w, -w, one, "a: w = " + to_string(w));
      h.w = w;
      add_candidate(out, std::move(h));
    }
    if (a >= 2) {
      auto [wp, wm] = family_b_weights(a);
      add_candidate(out, make(Family::b, a, c, wp, wm, wp * wm, "b: (w+, w-, w+w-)"));
      add_candidate(out, make(Family::b, a, c, wm, wp, wm * wp, "b: (w-, w+, w-w+)"));
    } else {
      auto [wp, wm] = family_b_weights(a);
      out.notes.push_back("family b at a = 1 degenerates to (w1, w2, w3) = (" + to_string(wp) + ", " +
                          to_string(wm) + ", " + to_string(wp * wm) + ") with w1 = w2; excluded");
    }
  }
  if (a == 2 && c == 1) {
    for (int sg : {1, -1}) {
      const QuadExt u = unit(3, 4 * sg, 5);
      const std::string pm = sg > 0 ? "+" : "-";
      add_candidate(out, make(Family::c, a, c, u, minus_one, -u, "c: ((3" + pm + "4i)/5, -1, -w1)"));
      add_candidate(out, make(Family::c, a, c, minus_one, u, -u, "c: (-1, (3" + pm + "4i)/5, -w2)"));
    }
  }
  if (a == 1 && c == 3) {
    const QuadExt r2 = QuadExt::sqrt_of(Rational(2));
    for (int sg : {1, -1}) {
      const QuadExt v = (one + QuadExt(2 * sg) * r2 * I) / QuadExt(3);
      const std::string pm = sg > 0 ? "+" : "-";
      add_candidate(out, make(Family::d, a, c, v, minus_one, one, "d: ((1" + pm + "2sqrt2 i)/3, -1, 1)"));
      add_candidate(out, make(Family::d, a, c, minus_one, v, one, "d: (-1, (1" + pm + "2sqrt2 i)/3, 1)"));
    }
    for (int sg : {1, -1}) {
      const QuadExt u = QuadExt(sg) * I;
      const std::string pm = sg > 0 ? "" : "-";
      add_candidate(out, make(Family::e, a, c, u, minus_one, -u, "e: (" + pm + "i, -1, -w1)"));
      add_candidate(out, make(Family::e, a, c, minus_one, u, -u, "e: (-1, " + pm + "i, -w2)"));
    }
  }
  if (out.candidates.empty()) out.notes.push_back("no family is valid at this (a, c)");
  return out;
}

// ---------------------------------------------------------------- named polynomials

Polynomial a_poly() { return with_a("a"); }
Polynomial K1_poly() { return with_a("2*a*(2*a-1)*c"); }
Polynomial K2_poly() { return with_a("2*a-1"); }
Polynomial L_poly() { return with_a("(2*a-1)*c^2-2*(a+1)*c-1"); }

std::vector<Polynomial> case_i_images() {
  std::vector<Polynomial> img = identity_images(R());
  img[var::k1] = K1_poly();
  img[var::k2] = K2_poly();
  img[var::r] = C(0);
  return img;
}

std::vector<Polynomial> case_i_ideal() {
  const HadamardSystem sym = build_symbolic_system();
  const auto img = case_i_images();
  std::vector<Polynomial> gens;
  for (const auto& e : sym.e) gens.push_back(substitute(e, img));
  gens.push_back(substitute(parse_polynomial("b^2*k2-k1*(k2+1)", R()), img));
  gens.push_back(K2_poly() - V(var::k2));
  gens.push_back(K1_poly() - V(var::k1));
  gens.push_back(with_a("b^2-4*a^2*c"));
  return gens;
}

Polynomial g_poly() { return with_a("2*(w1*w2+1)+((2*a-1)*c-1)*(w1+w2)"); }

Polynomial g1_poly(bool plus_variant) {
  return with_a(std::string("(2*a-1)*(w1*w2+w3^2)+(w1*w2+a*((2*a-1)*c") + (plus_variant ? "+" : "-") +
                "1)*(w1+w2)+1)*w3");
}

std::array<Polynomial, 3> f1_coefficients() {
  return {with_a("2*a*c"), with_a("2*(c-1)*((2*a-1)*c-1)"),
          with_a("4*a*c^2*((c-1)*a-c)+(c-1)*(c^2+2*c+5)")};
}

std::array<Polynomial, 3> f2_coefficients() {
  return {with_a("(c+1)*(4*a*c*(a-1)+c+1)"), with_a("4*(a*(c-1)+2)*((2*a-1)*c-1)"),
          with_a("2*a*(2*a-1)^2*c^3-2*(2*a-1)*(2*a^2-a+1)*c^2-2*(a-2)*c-2*(5*a-9)")};
}

namespace {
Polynomial palindromic_quartic(const std::array<Polynomial, 3>& co, int v) {
  const Polynomial x = V(v);
  return co[0] * x.pow(4) + co[1] * x.pow(3) + co[2] * x.pow(2) + co[1] * x + co[0];
}
}  // namespace

Polynomial f1_poly(int v) { return palindromic_quartic(f1_coefficients(), v); }
Polynomial f2_poly(int v) { return palindromic_quartic(f2_coefficients(), v); }

Polynomial h1_poly() {
  return parse_polynomial("k1*(w1+w2)*(w1*w2+w3^2)-2*(k1-k2+1)*w1*w2*w3+2*w1*w2*(w3^2+1)", R());
}

// ---------------------------------------------------------------- nonexistence

namespace {

// Unit-modulus roots of X^2 + t X + 1 for rational t >= 2.
bool palindromic_unit_root(const Rational& t, QuadExt& root) {
  if (t == 2) {
    root = QuadExt(-1);
    return true;
  }
  return false;
}

}  // namespace

NonexistenceReport nonexistence_check(SongCase which, long k1, long k2) {
  if (which == SongCase::i) throw SchemeError("nonexistence applies to cases ii and iii only");
  if (k1 < 2 || k1 % 2 != 0) throw SchemeError("k1 must be an even positive integer");
  if (k2 < 1) throw SchemeError("k2 must be a positive integer");
  NonexistenceReport rep;
  rep.which = which;
  rep.k1 = k1;
  rep.k2 = k2;
  const Polynomial w1 = V(var::w1), w2 = V(var::w2), w3 = V(var::w3);

  if (which == SongCase::ii) {
    const EigenmatrixTemplate T(k1, k2, -(k2 + 1), 0, Rational((k2 + 1) * (k1 + k2 + 1)));
    const SongClassification sc = song_case(T);
    rep.checks.push_back({"template_is_case_ii", sc.which == SongCase::ii, describe(T)});
    const HadamardSystem sys = build_system(T);
    rep.t = k1 + k2 - 1;
    const Polynomial rhs = w1 * w2 * (w3 * w3 + C(rep.t) * w3 + C(1));
    rep.checks.push_back({"minus_e3_factors", -sys.e[3] == rhs, "-e3 = w1 w2 (w3^2 + t w3 + 1)"});
    QuadExt root;
    rep.unit_root_possible = palindromic_unit_root(rep.t, root);
    rep.checks.push_back({"t_at_least_2", rep.t >= 2, "t = " + rep.t.get_str()});
    if (rep.unit_root_possible) {
      rep.forced_weight = root;
      rep.checks.push_back({"forces_w3_minus_1_and_k1_plus_k2_3", k1 + k2 == 3 && root == QuadExt(-1),
                            "w3 = -1, (k1, k2) = (2, 1)"});
    }
    rep.m1 = sc.m1;
    rep.m1_integral = sc.m1_integral;
    if (rep.unit_root_possible) {
      rep.checks.push_back({"m1_non_integral", !rep.m1_integral, "m1 = " + rep.m1.get_str()});
    }
    rep.hadamard_possible = false;
    rep.conclusion = rep.unit_root_possible
                         ? "unit roots force w3 = -1, k1 + k2 = 3; then m1 = " + rep.m1.get_str() +
                               " is not an integer: no complex Hadamard matrix"
                         : "X^2 + " + rep.t.get_str() + " X + 1 has no unit-modulus root: no complex Hadamard matrix";
  } else {
    const EigenmatrixTemplate T(k1, k2, -1, k1, Rational(k1 + 1));
    const SongClassification sc = song_case(T);
    rep.checks.push_back({"template_is_case_iii", sc.which == SongCase::iii, describe(T)});
    const HadamardSystem sys = build_system(T);
    const Polynomial b = V(var::b);
    const Polynomial diff = b * GaussRat::i() * w3 * (w1 - w2) * (w1 - C(1)) * (w2 - C(1));
    rep.checks.push_back({"e1_minus_e2_factors", sys.e[1] - sys.e[2] == diff,
                          "e1 - e2 = b i w3 (w1 - w2)(w1 - 1)(w2 - 1)"});
    std::vector<Polynomial> img = identity_images(R());
    img[var::w1] = C(1);
    const Polynomial lhs = GaussRat(-4) * substitute(sys.e[1], img);
    const Polynomial rhs = w3 * (C(k1 + 2) * w2 * w2 + C(2 * (k1 + 2 * k2)) * w2 + C(k1 + 2));
    rep.checks.push_back({"minus_4e1_at_w1_1_factors", lhs == rhs,
                          "-4 e1(1, w2, w3) = w3((k1+2) w2^2 + 2(k1+2k2) w2 + k1+2)"});
    rep.t = Rational(2 * (k1 + 2 * k2), k1 + 2);
    rep.t.canonicalize();
    rep.checks.push_back({"t_at_least_2", rep.t >= 2, "t = " + rep.t.get_str()});
    QuadExt root;
    rep.unit_root_possible = palindromic_unit_root(rep.t, root);
    if (rep.unit_root_possible) {
      rep.forced_weight = root;
      rep.checks.push_back({"forces_w2_minus_1_and_k2_1", k2 == 1 && root == QuadExt(-1), "w2 = -1, k2 = 1"});
    }
    rep.m1 = sc.m1;
    rep.m1_integral = sc.m1_integral;
    if (rep.unit_root_possible) {
      rep.checks.push_back({"m1_non_integral", !rep.m1_integral, "m1 = " + rep.m1.get_str()});
    }
    rep.hadamard_possible = false;
    rep.conclusion = rep.unit_root_possible
                         ? "w1 = 1 by symmetry, unit roots force w2 = -1 and k2 = 1; then m1 = " +
                               rep.m1.get_str() + " is not an integer: no complex Hadamard matrix"
                         : "w2^2 + " + rep.t.get_str() +
                               " w2 + 1 has no unit-modulus root: no complex Hadamard matrix";
  }
  if (!all_passed(rep.checks)) {
    rep.hadamard_possible = true;
    rep.conclusion = "argument did not go through";
  }
  return rep;
}

}  // namespace hsk
