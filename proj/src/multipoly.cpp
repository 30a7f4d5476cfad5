#include "hsk/multipoly.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <unordered_set>

namespace hsk {

// ---------------------------------------------------------------- VarRing

VarRing::VarRing(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > kMaxVars) {
    throw std::invalid_argument("at most " + std::to_string(kMaxVars) + " variables supported");
  }
  std::unordered_set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty() || !seen.insert(n).second) {
      throw std::invalid_argument("variable names must be distinct and non-empty: '" + n + "'");
    }
  }
}

int VarRing::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  return it == names_.end() ? -1 : static_cast<int>(it - names_.begin());
}

RingPtr make_ring(std::vector<std::string> names) {
  return std::make_shared<const VarRing>(std::move(names));
}

const RingPtr& standard_ring() {
  static const RingPtr ring = make_ring({"w1", "w2", "w3", "k1", "k2", "r", "s", "b", "c"});
  return ring;
}

// ---------------------------------------------------------------- Monomial

int Monomial::degree() const { return std::accumulate(exp.begin(), exp.end(), 0); }

bool Monomial::is_one() const {
  return std::all_of(exp.begin(), exp.end(), [](std::int8_t e) { return e == 0; });
}

bool Monomial::has_negative() const {
  return std::any_of(exp.begin(), exp.end(), [](std::int8_t e) { return e < 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (exp[i] > other.exp[i]) return false;
  }
  return true;
}

namespace {
std::int8_t checked_exp(int e) {
  if (e > 127 || e < -127) throw std::overflow_error("monomial exponent overflow");
  return static_cast<std::int8_t>(e);
}
}  // namespace

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exp[i] = checked_exp(a.exp[i] + b.exp[i]);
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exp[i] = checked_exp(a.exp[i] - b.exp[i]);
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exp[i] = std::max(a.exp[i], b.exp[i]);
  return r;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (a.exp[i] > 0 && b.exp[i] > 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------- Polynomial

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw std::invalid_argument("polynomial needs a ring");
}

Polynomial::Polynomial(RingPtr ring, const GaussRat& constant) : Polynomial(std::move(ring)) {
  if (!constant.is_zero()) terms_.push_back({Monomial{}, constant});
}

Polynomial Polynomial::variable(RingPtr ring, int index, int power) {
  if (index < 0 || static_cast<std::size_t>(index) >= ring->arity()) {
    throw std::out_of_range("variable index out of range");
  }
  Polynomial p(std::move(ring));
  Monomial m;
  m.exp[static_cast<std::size_t>(index)] = checked_exp(power);
  p.terms_.push_back({m, GaussRat(1)});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, const std::string& name, int power) {
  int idx = ring->index_of(name);
  if (idx < 0) throw std::invalid_argument("unknown variable '" + name + "'");
  return variable(std::move(ring), idx, power);
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.mono < b.mono; });
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
  return p;
}

void Polynomial::check_ring(const Polynomial& o) const {
  if (ring_ != o.ring_ && ring_->names() != o.ring_->names()) {
    throw RingMismatch("polynomials live in different rings");
  }
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

bool Polynomial::has_negative_exponents() const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return t.mono.has_negative(); });
}

GaussRat Polynomial::constant_term() const { return coefficient(Monomial{}); }

GaussRat Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return t.mono < key; });
  if (it != terms_.end() && it->mono == m) return it->coeff;
  return GaussRat();
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

int Polynomial::degree_in(int v) const {
  int d = terms_.empty() ? -1 : -128;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree_in(v));
  return d;
}

bool Polynomial::involves(int v) const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [v](const Term& t) { return t.mono.degree_in(v) != 0; });
}

Polynomial Polynomial::conj_coeffs() const {
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono, t.coeff.conj()});
  return r;
}

Polynomial Polynomial::pow(unsigned n) const {
  Polynomial result(ring_, GaussRat(1));
  Polynomial base = *this;
  while (n > 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n > 0) base *= base;
  }
  return result;
}

Polynomial Polynomial::coefficient_of(int v, int k) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.mono.degree_in(v) == k) {
      Term u = t;
      u.mono.exp[static_cast<std::size_t>(v)] = 0;
      out.push_back(std::move(u));
    }
  }
  return from_terms(ring_, std::move(out));
}

namespace {

std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, bool negate_b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].mono < b[j].mono)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].mono < a[i].mono) {
      out.push_back(negate_b ? Term{b[j].mono, -b[j].coeff} : b[j]);
      ++j;
    } else {
      GaussRat c = negate_b ? a[i].coeff - b[j].coeff : a[i].coeff + b[j].coeff;
      if (!c.is_zero()) out.push_back({a[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_ring(o);
  terms_ = merge_terms(terms_, o.terms_, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_ring(o);
  terms_ = merge_terms(terms_, o.terms_, true);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  *this = *this * o;
  return *this;
}

Polynomial& Polynomial::operator*=(const GaussRat& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono, -t.coeff});
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_ring(b);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
  std::map<Monomial, GaussRat> acc;
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      auto [it, inserted] = acc.try_emplace(s.mono * t.mono);
      it->second += s.coeff * t.coeff;
    }
  }
  Polynomial r(a.ring_);
  r.terms_.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (!c.is_zero()) r.terms_.push_back({m, std::move(c)});
  }
  return r;
}

Polynomial operator+(Polynomial a, const GaussRat& c) { return a += Polynomial(a.ring(), c); }
Polynomial operator-(Polynomial a, const GaussRat& c) { return a -= Polynomial(a.ring(), c); }

bool operator==(const Polynomial& a, const Polynomial& b) {
  a.check_ring(b);
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff) {
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------- homomorphisms

std::vector<Polynomial> identity_images(const RingPtr& ring) {
  std::vector<Polynomial> images;
  images.reserve(ring->arity());
  for (std::size_t i = 0; i < ring->arity(); ++i) {
    images.push_back(Polynomial::variable(ring, static_cast<int>(i)));
  }
  return images;
}

namespace {

// Cache of image powers, including inverse powers of single-term images.
class PowerCache {
 public:
  PowerCache(const Polynomial& base, int var_index) : base_(base), var_(var_index) {
    positive_.push_back(Polynomial(base.ring(), GaussRat(1)));
  }

  const Polynomial& get(int e) {
    if (e >= 0) {
      while (static_cast<int>(positive_.size()) <= e) positive_.push_back(positive_.back() * base_);
      return positive_[static_cast<std::size_t>(e)];
    }
    if (negative_.empty()) {
      if (base_.size() != 1) {
        throw ArithmeticError("negative power of variable " + std::to_string(var_) +
                              " needs a single-term image");
      }
      const Term& t = base_.terms().front();
      Term inv{Monomial{} / t.mono, t.coeff.inverse()};
      negative_.push_back(Polynomial(base_.ring(), GaussRat(1)));
      inverse_ = Polynomial::from_terms(base_.ring(), {inv});
    }
    while (static_cast<int>(negative_.size()) <= -e) negative_.push_back(negative_.back() * *inverse_);
    return negative_[static_cast<std::size_t>(-e)];
  }

 private:
  const Polynomial& base_;
  int var_;
  std::vector<Polynomial> positive_;
  std::vector<Polynomial> negative_;
  std::optional<Polynomial> inverse_;
};

}  // namespace

Polynomial substitute(const Polynomial& f, std::span<const Polynomial> images) {
  if (images.size() != f.ring()->arity()) {
    throw std::invalid_argument("substitute: expected " + std::to_string(f.ring()->arity()) +
                                " images, got " + std::to_string(images.size()));
  }
  if (f.is_zero()) return Polynomial(images.empty() ? f.ring() : images[0].ring());
  const RingPtr& target = images.empty() ? f.ring() : images[0].ring();
  for (const auto& img : images) {
    if (img.ring()->names() != target->names()) throw RingMismatch("images live in different rings");
  }
  std::vector<PowerCache> caches;
  caches.reserve(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) caches.emplace_back(images[i], static_cast<int>(i));

  // Accumulate term contributions; variables with identity images are kept
  // as monomial shifts, avoiding polynomial products with single terms.
  std::vector<Term> acc;
  for (const auto& t : f.terms()) {
    Polynomial prod(target, t.coeff);
    for (std::size_t v = 0; v < images.size(); ++v) {
      const int e = t.mono.exp[v];
      if (e == 0) continue;
      prod = prod * caches[v].get(e);
      if (prod.is_zero()) break;
    }
    for (const auto& u : prod.terms()) acc.push_back(u);
  }
  return Polynomial::from_terms(target, std::move(acc));
}

Polynomial substitute(const Polynomial& f, std::initializer_list<Polynomial> images) {
  std::vector<Polynomial> v(images);
  return substitute(f, std::span<const Polynomial>(v));
}

QuadExt evaluate(const Polynomial& f, std::span<const QuadExt> point) {
  if (point.size() != f.ring()->arity()) {
    throw std::invalid_argument("evaluate: expected " + std::to_string(f.ring()->arity()) +
                                " values, got " + std::to_string(point.size()));
  }
  std::vector<std::map<int, QuadExt>> powers(point.size());
  auto power = [&](std::size_t v, int e) -> const QuadExt& {
    auto it = powers[v].find(e);
    if (it != powers[v].end()) return it->second;
    QuadExt base = e < 0 ? point[v].inverse() : point[v];
    QuadExt r(1);
    for (int k = 0; k < std::abs(e); ++k) r *= base;
    return powers[v].emplace(e, std::move(r)).first->second;
  };
  QuadExt sum;
  for (const auto& t : f.terms()) {
    QuadExt prod(t.coeff);
    for (std::size_t v = 0; v < point.size() && !prod.is_zero(); ++v) {
      const int e = t.mono.exp[v];
      if (e != 0) prod *= power(v, e);
    }
    sum += prod;
  }
  return sum;
}

}  // namespace hsk
