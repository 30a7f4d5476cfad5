#include "hsk/schemes.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hsk {

bool all_passed(const std::vector<CheckEntry>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const CheckEntry& c) { return c.passed; });
}

// ---------------------------------------------------------------- templates

EigenmatrixTemplate::EigenmatrixTemplate(Rational k1, Rational k2, Rational r, Rational s,
                                         Rational b2)
    : k1_(std::move(k1)), k2_(std::move(k2)), r_(std::move(r)), s_(std::move(s)), b2_(std::move(b2)) {
  if (!is_integer(k1_) || sgn(k1_) <= 0 || k1_.get_num() % 2 != 0) {
    throw SchemeError("k1 must be an even positive integer, got " + k1_.get_str());
  }
  if (!is_integer(k2_) || sgn(k2_) <= 0) {
    throw SchemeError("k2 must be a positive integer, got " + k2_.get_str());
  }
  if (!is_integer(r_) || !is_integer(s_)) throw SchemeError("r and s must be integers");
  if (sgn(b2_) <= 0) throw SchemeError("b^2 must be positive, got " + b2_.get_str());
}

Matrix<QuadExt> EigenmatrixTemplate::P() const {
  const QuadExt half(GaussRat(Rational(1, 2)));
  const QuadExt bi = b() * QuadExt(GaussRat::i());
  Matrix<QuadExt> p(4, 4);
  for (std::size_t k = 0; k < 4; ++k) p(k, 0) = QuadExt(1);
  p(0, 1) = p(0, 2) = QuadExt(GaussRat(k1_ / 2));
  p(0, 3) = QuadExt(GaussRat(k2_));
  p(1, 1) = p(2, 2) = (QuadExt(GaussRat(r_)) + bi) * half;
  p(1, 2) = p(2, 1) = (QuadExt(GaussRat(r_)) - bi) * half;
  p(1, 3) = p(2, 3) = QuadExt(GaussRat(Rational(-(r_ + 1))));
  p(3, 1) = p(3, 2) = QuadExt(GaussRat(Rational(s_ / 2)));
  p(3, 3) = QuadExt(GaussRat(Rational(-(s_ + 1))));
  return p;
}

std::string describe(const EigenmatrixTemplate& t) {
  std::ostringstream os;
  os << "(k1,k2,r,s,b^2)=(" << t.k1().get_str() << ',' << t.k2().get_str() << ','
     << t.r().get_str() << ',' << t.s().get_str() << ',' << t.b2().get_str() << ')';
  return os.str();
}

SchemeParameters params_from_ac(long a, long c) {
  if (a < 1 || c < 1) throw SchemeError("a and c must be positive integers");
  SchemeParameters p;
  p.a = a;
  p.c = c;
  p.k1 = Rational(2 * a * (2 * a - 1) * c);
  p.k2 = Rational(2 * a - 1);
  p.r = 0;
  p.s = Rational(-2 * a);
  p.b2 = Rational(4 * a * a * c);
  p.n = 1 + p.k1 + p.k2;
  p.L = Rational((2 * a - 1) * c * c - 2 * (a + 1) * c - 1);
  if (sgn(p.L) == 0) throw SchemeError("internal: L = 0 for integer (a, c)");
  return p;
}

std::string to_string(SongCase c) {
  switch (c) {
    case SongCase::i: return "i";
    case SongCase::ii: return "ii";
    case SongCase::iii: return "iii";
  }
  return "?";
}

SongClassification song_case(const EigenmatrixTemplate& t) {
  const Rational& k1 = t.k1();
  const Rational& k2 = t.k2();
  std::vector<SongClassification> hits;
  if (t.r() == 0 && t.s() == -(k2 + 1) && t.b2() == k1 * (k2 + 1) / k2) {
    hits.push_back({SongCase::i, Rational((k1 + k2 + 1) * k2 / (2 * (k2 + 1)))});
  }
  if (t.r() == -(k2 + 1) && t.s() == 0 && t.b2() == (k2 + 1) * (k1 + k2 + 1)) {
    hits.push_back({SongCase::ii, Rational(k1 / (2 * (k2 + 1)))});
  }
  if (t.r() == -1 && t.s() == k1 && t.b2() == k1 + 1) {
    hits.push_back({SongCase::iii, Rational((k1 + k2 + 1) * k1 / (k1 + 1))});
  }
  if (hits.size() != 1) {
    throw SchemeError(describe(t) + " matches " + std::to_string(hits.size()) +
                      " of the three eigenmatrix cases");
  }
  hits[0].m1.canonicalize();
  hits[0].m1_integral = is_integer(hits[0].m1);
  return hits[0];
}

Matrix<QuadExt> inverse(const Matrix<QuadExt>& a) {
  if (!a.square()) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  Matrix<QuadExt> m = a;
  Matrix<QuadExt> inv = Matrix<QuadExt>::identity(n, QuadExt(1));
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m(pivot, col).is_zero()) ++pivot;
    if (pivot == n) throw ArithmeticError("singular matrix");
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m(pivot, j), m(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    }
    const QuadExt scale = m(col, col).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      m(col, j) *= scale;
      inv(col, j) *= scale;
    }
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || m(row, col).is_zero()) continue;
      const QuadExt f = m(row, col);
      for (std::size_t j = 0; j < n; ++j) {
        m(row, j) -= f * m(col, j);
        inv(row, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

std::vector<Rational> template_multiplicities(const EigenmatrixTemplate& t) {
  Matrix<QuadExt> q = inverse(t.P());
  const QuadExt n(GaussRat(t.n()));
  std::vector<Rational> m;
  for (std::size_t k = 0; k < 4; ++k) {
    QuadExt v = n * q(0, k);
    if (!v.is_rational()) throw SchemeError("multiplicity is not rational");
    m.push_back(v.rational_part().re());
  }
  return m;
}

// ---------------------------------------------------------------- schemes

AssociationScheme::AssociationScheme(std::vector<std::vector<int>> relation, int classes)
    : relation_(std::move(relation)), d_(classes) {
  const std::size_t n = relation_.size();
  if (n == 0) throw SchemeError("empty relation matrix");
  if (d_ < 1) throw SchemeError("class count must be positive");
  for (std::size_t x = 0; x < n; ++x) {
    if (relation_[x].size() != n) throw SchemeError("relation matrix is not square");
    for (int v : relation_[x]) {
      if (v < 0 || v > d_) {
        throw SchemeError("relation index " + std::to_string(v) + " outside [0, " +
                          std::to_string(d_) + "]");
      }
    }
  }
  adjacency_.assign(static_cast<std::size_t>(d_) + 1, Matrix<int>(n, n, 0));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) adjacency_[static_cast<std::size_t>(relation_[x][y])](x, y) = 1;
  }
}

std::optional<int> AssociationScheme::transpose_of(int j) const {
  const Matrix<int> t = adjacency(j).transpose();
  for (int k = 0; k <= d_; ++k) {
    if (adjacency(k) == t) return k;
  }
  return std::nullopt;
}

long AssociationScheme::valency(int j) const {
  long v = 0;
  for (std::size_t y = 0; y < n(); ++y) v += adjacency(j)(0, y);
  return v;
}

AxiomReport verify_scheme_axioms(const AssociationScheme& s) {
  AxiomReport rep;
  const std::size_t n = s.n();
  const int d = s.d();

  bool diag = true;
  for (std::size_t x = 0; x < n && diag; ++x) {
    for (std::size_t y = 0; y < n && diag; ++y) {
      if ((x == y) != (s.relation(x, y) == 0)) diag = false;
    }
  }
  rep.checks.push_back({"a0_is_identity", diag, diag ? "" : "relation 0 is not the diagonal"});

  std::string empty;
  for (int j = 1; j <= d; ++j) {
    if (s.valency(j) == 0 && s.adjacency(j) == Matrix<int>(n, n, 0)) empty += std::to_string(j) + ' ';
  }
  rep.checks.push_back({"classes_nonempty", empty.empty(), empty.empty() ? "" : "empty classes: " + empty});

  Matrix<int> sum(n, n, 0);
  for (int j = 0; j <= d; ++j) sum = sum + s.adjacency(j);
  const bool partition = sum == Matrix<int>(n, n, 1);
  rep.checks.push_back({"adjacency_sum_is_J", partition, ""});

  bool closed = true;
  for (int j = 0; j <= d; ++j) {
    auto t = s.transpose_of(j);
    rep.transpose_map.push_back(t.value_or(-1));
    if (!t) closed = false;
  }
  rep.checks.push_back({"transpose_closed", closed, closed ? "" : "some A_j^T is not an adjacency matrix"});

  bool regular = true;
  for (int j = 0; j <= d; ++j) {
    long k0 = -1;
    for (std::size_t x = 0; x < n; ++x) {
      long row = 0;
      for (std::size_t y = 0; y < n; ++y) row += s.adjacency(j)(x, y);
      if (k0 < 0) k0 = row;
      if (row != k0) regular = false;
    }
    rep.valencies.push_back(k0);
  }
  rep.checks.push_back({"regular", regular, ""});

  // A_i A_j must be constant on every relation class.
  bool structure = diag && partition;
  std::string why;
  std::vector<std::vector<std::vector<long>>> p(
      static_cast<std::size_t>(d) + 1,
      std::vector<std::vector<long>>(static_cast<std::size_t>(d) + 1,
                                     std::vector<long>(static_cast<std::size_t>(d) + 1, -1)));
  for (int i = 0; i <= d && structure; ++i) {
    for (int j = 0; j <= d && structure; ++j) {
      const Matrix<int> prod = s.adjacency(i) * s.adjacency(j);
      for (std::size_t x = 0; x < n && structure; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          long& slot = p[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
                        [static_cast<std::size_t>(s.relation(x, y))];
          if (slot < 0) slot = prod(x, y);
          else if (slot != prod(x, y)) {
            structure = false;
            why = "A_" + std::to_string(i) + " A_" + std::to_string(j) + " not constant on class " +
                  std::to_string(s.relation(x, y));
            break;
          }
        }
      }
    }
  }
  rep.checks.push_back({"intersection_numbers", structure, why});

  bool commutative = structure;
  for (int i = 0; i <= d && commutative; ++i) {
    for (int j = 0; j <= d && commutative; ++j) {
      if (p[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] !=
          p[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]) {
        commutative = false;
      }
    }
  }
  rep.checks.push_back({"commutative", commutative, ""});

  rep.passed = all_passed(rep.checks);
  if (rep.passed) rep.intersection = std::move(p);
  return rep;
}

EigenmatrixReport verify_eigenmatrix(const AssociationScheme& s, const EigenmatrixTemplate& t) {
  EigenmatrixReport rep;
  const std::size_t n = s.n();
  if (s.d() != 3) {
    rep.checks.push_back({"three_classes", false, "scheme has d = " + std::to_string(s.d())});
    return rep;
  }
  const bool size_ok = t.n() == Rational(static_cast<long>(n));
  rep.checks.push_back({"point_count", size_ok,
                        "n = " + std::to_string(n) + ", template n = " + t.n().get_str()});
  if (!size_ok) return rep;

  const Matrix<QuadExt> P = t.P();
  Matrix<QuadExt> Q;
  try {
    Q = inverse(P);
  } catch (const ArithmeticError& e) {
    rep.checks.push_back({"p_invertible", false, e.what()});
    return rep;
  }
  rep.checks.push_back({"p_invertible", true, ""});
  const QuadExt nq(GaussRat(Rational(static_cast<long>(n))));
  // Q = n P^{-1}; E_k = (1/n) sum_j Q_{j,k} A_j = sum_j (P^{-1})_{j,k} A_j.
  std::vector<Matrix<QuadExt>> A;
  for (int j = 0; j <= 3; ++j) {
    A.push_back(s.adjacency(j).map([](int v) { return QuadExt(v); }));
  }
  std::vector<Matrix<QuadExt>> E;
  for (std::size_t k = 0; k < 4; ++k) {
    Matrix<QuadExt> ek(n, n);
    for (std::size_t j = 0; j < 4; ++j) {
      const QuadExt& coeff = Q(j, k);
      if (coeff.is_zero()) continue;
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          if (s.adjacency(static_cast<int>(j))(x, y) != 0) ek(x, y) += coeff;
        }
      }
    }
    E.push_back(std::move(ek));
  }

  const QuadExt inv_n = nq.inverse();
  const bool e0 = E[0] == Matrix<QuadExt>(n, n, inv_n);
  rep.checks.push_back({"e0_is_J_over_n", e0, ""});

  Matrix<QuadExt> total(n, n);
  for (const auto& ek : E) total = total + ek;
  const bool sum_ok = total == Matrix<QuadExt>::identity(n, QuadExt(1));
  rep.checks.push_back({"idempotents_sum_to_identity", sum_ok, ""});

  bool ortho = true;
  std::string ortho_detail;
  const Matrix<QuadExt> zero(n, n);
  for (std::size_t k = 0; k < 4 && ortho; ++k) {
    for (std::size_t l = k; l < 4; ++l) {
      const Matrix<QuadExt> prod = E[k] * E[l];
      if (prod != (k == l ? E[k] : zero)) {
        ortho = false;
        ortho_detail = "E_" + std::to_string(k) + " E_" + std::to_string(l);
        break;
      }
    }
  }
  rep.checks.push_back({"idempotents_orthogonal", ortho, ortho_detail});

  bool eig = true;
  std::string eig_detail;
  for (std::size_t j = 0; j < 4 && eig; ++j) {
    for (std::size_t k = 0; k < 4; ++k) {
      Matrix<QuadExt> lhs = A[j] * E[k];
      Matrix<QuadExt> rhs = E[k].map([&](const QuadExt& v) { return v * P(k, j); });
      if (lhs != rhs) {
        eig = false;
        eig_detail = "A_" + std::to_string(j) + " E_" + std::to_string(k) + " != P(" +
                     std::to_string(k) + "," + std::to_string(j) + ") E_" + std::to_string(k);
        break;
      }
    }
  }
  rep.checks.push_back({"eigenvalues_match", eig, eig_detail});

  bool integral = true;
  Rational msum = 0;
  for (const auto& ek : E) {
    QuadExt tr;
    for (std::size_t x = 0; x < n; ++x) tr += ek(x, x);
    if (!tr.is_rational()) {
      integral = false;
      rep.multiplicities.push_back(Rational(0));
      continue;
    }
    Rational m = tr.rational_part().re();
    if (!is_integer(m) || sgn(m) <= 0) integral = false;
    msum += m;
    rep.multiplicities.push_back(m);
  }
  rep.checks.push_back({"multiplicities_integral", integral, ""});
  rep.checks.push_back({"multiplicities_sum_to_n", msum == Rational(static_cast<long>(n)), ""});
  rep.passed = all_passed(rep.checks);
  return rep;
}

// ---------------------------------------------------------------- groups

Group::Group(std::vector<std::vector<int>> table, std::vector<std::string> labels)
    : table_(std::move(table)), labels_(std::move(labels)) {
  const std::size_t n = table_.size();
  if (n == 0) throw SchemeError("empty group table");
  for (const auto& row : table_) {
    if (row.size() != n) throw SchemeError("group table is not square");
    std::vector<int> sorted = row;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t k = 0; k < n; ++k) {
      if (sorted[k] != static_cast<int>(k)) throw SchemeError("group table row is not a permutation");
    }
  }
  for (std::size_t e = 0; e < n && identity_ < 0; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) {
      ok = table_[e][x] == static_cast<int>(x) && table_[x][e] == static_cast<int>(x);
    }
    if (ok) identity_ = static_cast<int>(e);
  }
  if (identity_ < 0) throw SchemeError("group table has no identity");
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        if (table_[static_cast<std::size_t>(table_[x][y])][z] !=
            table_[x][static_cast<std::size_t>(table_[y][z])]) {
          throw SchemeError("group table is not associative");
        }
      }
    }
  }
  inverse_.assign(n, -1);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (table_[x][y] == identity_) inverse_[x] = static_cast<int>(y);
    }
  }
  if (labels_.empty()) {
    for (std::size_t x = 0; x < n; ++x) labels_.push_back(std::to_string(x));
  }
  if (labels_.size() != n) throw SchemeError("label count does not match group order");
}

int Group::element(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw SchemeError("no group element labelled '" + label + "'");
  return static_cast<int>(it - labels_.begin());
}

Group cyclic_group(int n) {
  if (n < 1) throw SchemeError("cyclic group order must be positive");
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) t[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = (x + y) % n;
  }
  return Group(std::move(t));
}

Group quaternion_group() {
  // element 2u + (sign < 0), unit u in {1, i, j, k}
  static const int unit_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int unit_sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int x = 0; x < 8; ++x) {
    for (int y = 0; y < 8; ++y) {
      const int ux = x / 2, uy = y / 2;
      int sign = (x % 2 ? -1 : 1) * (y % 2 ? -1 : 1) * unit_sign[ux][uy];
      t[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = 2 * unit_mul[ux][uy] + (sign < 0 ? 1 : 0);
    }
  }
  return Group(std::move(t), {"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
}

AssociationScheme cayley_scheme(const Group& g, const std::vector<std::vector<int>>& classes) {
  const std::size_t n = g.order();
  std::vector<int> class_of(n, -1);
  class_of[static_cast<std::size_t>(g.identity())] = 0;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    for (int x : classes[c]) {
      if (x < 0 || static_cast<std::size_t>(x) >= n) throw SchemeError("class element out of range");
      if (class_of[static_cast<std::size_t>(x)] != -1) {
        throw SchemeError("element " + g.label(x) + " is the identity or occurs in two classes");
      }
      class_of[static_cast<std::size_t>(x)] = static_cast<int>(c) + 1;
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (class_of[x] < 0) throw SchemeError("element " + g.label(static_cast<int>(x)) + " is in no class");
  }
  for (std::size_t c = 0; c < classes.size(); ++c) {
    std::vector<int> inv;
    for (int x : classes[c]) inv.push_back(class_of[static_cast<std::size_t>(g.inverse(x))]);
    if (std::adjacent_find(inv.begin(), inv.end(), std::not_equal_to<>()) != inv.end()) {
      throw SchemeError("inverse of class S" + std::to_string(c + 1) + " is not a class");
    }
    const int target = inv.front() - 1;
    if (classes[static_cast<std::size_t>(target)].size() != classes[c].size()) {
      throw SchemeError("inverse of class S" + std::to_string(c + 1) + " is not a class");
    }
  }
  std::vector<std::vector<int>> rel(n, std::vector<int>(n));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      rel[x][y] = class_of[static_cast<std::size_t>(g.mul(g.inverse(static_cast<int>(x)), static_cast<int>(y)))];
    }
  }
  AssociationScheme s(std::move(rel), static_cast<int>(classes.size()));
  AxiomReport rep = verify_scheme_axioms(s);
  if (!rep.passed) {
    for (const auto& c : rep.checks) {
      if (!c.passed) throw SchemeError("partition is not a Schur ring: " + c.name + " " + c.detail);
    }
  }
  return s;
}

AssociationScheme z4_scheme() { return cayley_scheme(cyclic_group(4), {{1}, {3}, {2}}); }

AssociationScheme quaternion_scheme() {
  const Group q = quaternion_group();
  auto el = [&](const char* l) { return q.element(l); };
  return cayley_scheme(q, {{el("i"), el("j"), el("k")}, {el("-i"), el("-j"), el("-k")}, {el("-1")}});
}

// ---------------------------------------------------------------- Bush type

Matrix<int> sylvester_hadamard(std::size_t order) {
  if (order == 0 || (order & (order - 1)) != 0) throw SchemeError("Sylvester order must be a power of two");
  Matrix<int> h(1, 1, 1);
  while (h.rows() < order) {
    const std::size_t m = h.rows();
    Matrix<int> next(2 * m, 2 * m);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        next(i, j) = next(i, j + m) = next(i + m, j) = h(i, j);
        next(i + m, j + m) = -h(i, j);
      }
    }
    h = std::move(next);
  }
  return h;
}

bool is_hadamard(const Matrix<int>& h) {
  if (!h.square() || h.rows() == 0) return false;
  const std::size_t n = h.rows();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (h(i, j) != 1 && h(i, j) != -1) return false;
    }
  }
  return h * h.transpose() == Matrix<int>::identity(n, static_cast<int>(n), 0);
}

BushTypeResult bush_type_from_hadamard(const Matrix<int>& H) {
  if (!is_hadamard(H)) throw SchemeError("precondition: seed is not a Hadamard matrix");
  const std::size_t m = H.rows();
  if (m < 2 || m % 2 != 0) throw SchemeError("precondition: seed order must be even (2a)");

  // Normalize the first row to all ones; rows 1.. are then orthogonal to 1.
  Matrix<int> h = H;
  for (std::size_t j = 0; j < m; ++j) {
    if (h(0, j) < 0) {
      for (std::size_t i = 0; i < m; ++i) h(i, j) = -h(i, j);
    }
  }
  // Symmetric Latin square with constant zero diagonal (round-robin on m points).
  const std::size_t q = m - 1;
  auto label = [&](std::size_t x, std::size_t y) -> std::size_t {
    if (x == y) return 0;
    if (x == q) return (2 * y) % q + 1;
    if (y == q) return (2 * x) % q + 1;
    return (x + y) % q + 1;
  };
  const std::size_t n = m * m;
  Matrix<int> K(n, n);
  for (std::size_t bx = 0; bx < m; ++bx) {
    for (std::size_t by = 0; by < m; ++by) {
      const std::size_t l = label(bx, by);
      const int sign = bx == by ? 1 : (bx < by ? 1 : -1);
      for (std::size_t u = 0; u < m; ++u) {
        for (std::size_t v = 0; v < m; ++v) K(bx * m + u, by * m + v) = sign * h(l, u) * h(l, v);
      }
    }
  }

  BushTypeResult out{K, AssociationScheme({{0}}, 1), {}};
  out.checks.push_back({"K_is_hadamard", is_hadamard(K), ""});
  bool diag = true, skew = true;
  for (std::size_t bx = 0; bx < m; ++bx) {
    for (std::size_t by = 0; by < m; ++by) {
      for (std::size_t u = 0; u < m; ++u) {
        for (std::size_t v = 0; v < m; ++v) {
          const int e = K(bx * m + u, by * m + v);
          if (bx == by && e != 1) diag = false;
          if (bx != by && K(by * m + v, bx * m + u) != -e) skew = false;
        }
      }
    }
  }
  out.checks.push_back({"diagonal_blocks_all_ones", diag, ""});
  out.checks.push_back({"off_diagonal_blocks_skew_paired", skew, ""});

  std::vector<std::vector<int>> rel(n, std::vector<int>(n));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y) rel[x][y] = 0;
      else if (x / m == y / m) rel[x][y] = 3;
      else rel[x][y] = K(x, y) > 0 ? 1 : 2;
    }
  }
  out.scheme = AssociationScheme(std::move(rel), 3);
  AxiomReport axioms = verify_scheme_axioms(out.scheme);
  out.checks.push_back({"scheme_axioms", axioms.passed, ""});
  if (axioms.passed) {
    const EigenmatrixReport er =
        verify_eigenmatrix(out.scheme, params_from_ac(static_cast<long>(m / 2), 1).eigenmatrix());
    out.checks.push_back({"scheme_eigenmatrix", er.passed, ""});
  }
  for (const auto& c : out.checks) {
    if (!c.passed) throw SchemeError("Bush-type construction failed: " + c.name);
  }
  return out;
}

// ---------------------------------------------------------------- isomorphism

namespace {

std::vector<std::vector<int>> row_profiles(const AssociationScheme& s) {
  std::vector<std::vector<int>> prof(s.n(), std::vector<int>(static_cast<std::size_t>(s.d()) + 1, 0));
  for (std::size_t x = 0; x < s.n(); ++x) {
    for (std::size_t y = 0; y < s.n(); ++y) ++prof[x][static_cast<std::size_t>(s.relation(x, y))];
  }
  return prof;
}

bool extend(std::size_t x, const AssociationScheme& s, const AssociationScheme& t,
            const std::vector<std::vector<int>>& ps, const std::vector<std::vector<int>>& pt,
            std::vector<int>& perm, std::vector<bool>& used) {
  if (x == s.n()) return true;
  for (std::size_t y = 0; y < t.n(); ++y) {
    if (used[y] || ps[x] != pt[y]) continue;
    bool ok = true;
    for (std::size_t u = 0; u < x && ok; ++u) {
      const auto pu = static_cast<std::size_t>(perm[u]);
      ok = s.relation(x, u) == t.relation(y, pu) && s.relation(u, x) == t.relation(pu, y);
    }
    if (!ok) continue;
    perm[x] = static_cast<int>(y);
    used[y] = true;
    if (extend(x + 1, s, t, ps, pt, perm, used)) return true;
    used[y] = false;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const AssociationScheme& s,
                                                 const AssociationScheme& t) {
  if (s.n() > 16 || t.n() > 16) throw SchemeError("isomorphism search is limited to n <= 16");
  if (s.n() != t.n() || s.d() != t.d()) return std::nullopt;
  std::vector<int> perm(s.n(), -1);
  std::vector<bool> used(s.n(), false);
  if (extend(0, s, t, row_profiles(s), row_profiles(t), perm, used)) return perm;
  return std::nullopt;
}

}  // namespace hsk
