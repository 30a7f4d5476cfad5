#include "hsk/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace hsk {

namespace {

class Parser {
 public:
  Parser(const std::string& text, const RingPtr& ring) : text_(text), ring_(ring) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument("polynomial parse error at column " + std::to_string(pos_ + 1) +
                                ": " + msg);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char ch) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else return acc;
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    for (;;) {
      if (accept('*')) {
        acc *= unary();
      } else if (accept('/')) {
        Polynomial d = unary();
        if (!d.is_constant() || d.is_zero()) fail("division only by nonzero constants");
        acc *= d.constant_term().inverse();
      } else {
        return acc;
      }
    }
  }

  Polynomial unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = primary();
    if (!accept('^')) return base;
    bool negative = accept('-');
    skip_ws();
    long e = integer_literal();
    if (e > 127) fail("exponent too large");
    if (!negative) return base.pow(static_cast<unsigned>(e));
    if (base.size() != 1) fail("negative exponent needs a single-term base");
    const Term& t = base.terms().front();
    Monomial inv = Monomial{} / t.mono;
    Term one{inv, t.coeff.inverse()};
    return Polynomial::from_terms(ring_, {one}).pow(static_cast<unsigned>(e));
  }

  long integer_literal() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::stol(text_.substr(start, pos_ - start));
  }

  Polynomial primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Polynomial(ring_, GaussRat(Rational(Integer(text_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string name = text_.substr(start, pos_ - start);
      int idx = ring_->index_of(name);
      if (idx >= 0) return Polynomial::variable(ring_, idx);
      if (name == "i") return Polynomial(ring_, GaussRat::i());
      pos_ = start;
      fail("unknown variable '" + name + "'");
    }
    fail("unexpected '" + std::string(1, ch) + "'");
  }

  const std::string& text_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

std::string monomial_text(const Monomial& m, const VarRing& ring) {
  std::string out;
  for (std::size_t v = 0; v < ring.arity(); ++v) {
    const int e = m.exp[v];
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.name(v);
    if (e != 1) out += '^' + std::to_string(e);
  }
  return out;
}

}  // namespace

Polynomial parse_polynomial(const std::string& text, const RingPtr& ring) {
  return Parser(text, ring).parse();
}

std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  // Highest total degree first, then reverse canonical order.
  std::vector<const Term*> order;
  for (const auto& t : f.terms()) order.push_back(&t);
  std::stable_sort(order.begin(), order.end(), [](const Term* a, const Term* b) {
    const int da = a->mono.degree(), db = b->mono.degree();
    if (da != db) return da > db;
    return b->mono < a->mono;
  });
  std::ostringstream os;
  bool first = true;
  for (const Term* t : order) {
    const GaussRat& c = t->coeff;
    const std::string mono = monomial_text(t->mono, *f.ring());
    bool negative = c.is_real() && sgn(c.re()) < 0;
    GaussRat mag = negative ? -c : c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (mono.empty()) {
      os << to_string(mag);
    } else if (mag.is_one()) {
      os << mono;
    } else {
      os << to_string(mag) << '*' << mono;
    }
  }
  return os.str();
}

}  // namespace hsk
