#pragma once

// Association schemes as concrete relation matrices, the parametrized 4x4
// first eigenmatrix of a nonsymmetric 3-class scheme, Song's case split,
// and constructions (Cayley schemes, Bush-type Hadamard schemes, files).

#include "hsk/exactnum.hpp"
#include "hsk/matrix.hpp"

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hsk {

class SchemeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

struct CheckEntry {
  std::string name;
  bool passed = false;
  std::string detail;
};

bool all_passed(const std::vector<CheckEntry>& checks);

// ---------------------------------------------------------------- templates

/// First eigenmatrix template
///   [1  k1/2       k1/2       k2     ]
///   [1  (r+bi)/2   (r-bi)/2   -(r+1) ]
///   [1  (r-bi)/2   (r+bi)/2   -(r+1) ]
///   [1  s/2        s/2        -(s+1) ]
/// with b = sqrt(b2) > 0 and n = 1 + k1 + k2.
class EigenmatrixTemplate {
 public:
  /// Validates k1 even positive, k2 positive, r and s integers, b2 > 0.
  EigenmatrixTemplate(Rational k1, Rational k2, Rational r, Rational s, Rational b2);

  const Rational& k1() const { return k1_; }
  const Rational& k2() const { return k2_; }
  const Rational& r() const { return r_; }
  const Rational& s() const { return s_; }
  const Rational& b2() const { return b2_; }
  QuadExt b() const { return QuadExt::sqrt_of(b2_); }
  Rational n() const { return 1 + k1_ + k2_; }

  Matrix<QuadExt> P() const;

  friend bool operator==(const EigenmatrixTemplate&, const EigenmatrixTemplate&) = default;

 private:
  Rational k1_, k2_, r_, s_, b2_;
};

std::string describe(const EigenmatrixTemplate& t);

struct SchemeParameters {
  long a = 0;
  long c = 0;
  Rational k1, k2, r, s, b2;
  Rational n;
  Rational L;  // (2a-1)c^2 - 2(a+1)c - 1

  QuadExt b() const { return QuadExt::sqrt_of(b2); }
  EigenmatrixTemplate eigenmatrix() const { return {k1, k2, r, s, b2}; }
};

/// k1 = 2a(2a-1)c, k2 = 2a-1, b = 2a sqrt(c), r = 0, s = -2a.
SchemeParameters params_from_ac(long a, long c);

enum class SongCase { i, ii, iii };
std::string to_string(SongCase c);

struct SongClassification {
  SongCase which;
  Rational m1;
  bool m1_integral = false;
};

/// Throws SchemeError when the parameters match none of the three cases.
SongClassification song_case(const EigenmatrixTemplate& t);

/// (m0, m1, m2, m3): top row of n * P^{-1}.
std::vector<Rational> template_multiplicities(const EigenmatrixTemplate& t);

/// Gauss-Jordan inverse over Q(i, sqrt(m)); throws on a singular matrix.
Matrix<QuadExt> inverse(const Matrix<QuadExt>& a);

// ---------------------------------------------------------------- schemes

class AssociationScheme {
 public:
  /// Validates shape and index range only; axioms are checked separately.
  AssociationScheme(std::vector<std::vector<int>> relation, int classes);

  std::size_t n() const { return relation_.size(); }
  int d() const { return d_; }
  int relation(std::size_t x, std::size_t y) const { return relation_[x][y]; }
  const std::vector<std::vector<int>>& relation_matrix() const { return relation_; }
  const Matrix<int>& adjacency(int j) const { return adjacency_.at(static_cast<std::size_t>(j)); }
  /// j' with A_{j'} = A_j^T, if one exists.
  std::optional<int> transpose_of(int j) const;
  long valency(int j) const;

  friend bool operator==(const AssociationScheme& a, const AssociationScheme& b) {
    return a.d_ == b.d_ && a.relation_ == b.relation_;
  }

 private:
  std::vector<std::vector<int>> relation_;
  int d_;
  std::vector<Matrix<int>> adjacency_;
};

struct AxiomReport {
  std::vector<CheckEntry> checks;
  bool passed = false;
  /// p[i][j][k] with A_i A_j = sum_k p[i][j][k] A_k (filled on pass).
  std::vector<std::vector<std::vector<long>>> intersection;
  std::vector<int> transpose_map;
  std::vector<long> valencies;
};

AxiomReport verify_scheme_axioms(const AssociationScheme& s);

struct EigenmatrixReport {
  std::vector<CheckEntry> checks;
  bool passed = false;
  std::vector<Rational> multiplicities;  // trace(E_k)
};

/// Builds E_k = (1/n) sum_j Q_{j,k} A_j with Q = n P^{-1} and checks the
/// idempotent relations and A_j E_k = P_{k,j} E_k exactly.
EigenmatrixReport verify_eigenmatrix(const AssociationScheme& s, const EigenmatrixTemplate& t);

// ---------------------------------------------------------------- groups

/// Finite group given by its multiplication table (elements 0..n-1).
class Group {
 public:
  explicit Group(std::vector<std::vector<int>> table, std::vector<std::string> labels = {});

  std::size_t order() const { return table_.size(); }
  int mul(int x, int y) const { return table_[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]; }
  int identity() const { return identity_; }
  int inverse(int x) const { return inverse_[static_cast<std::size_t>(x)]; }
  const std::string& label(int x) const { return labels_[static_cast<std::size_t>(x)]; }
  int element(const std::string& label) const;

 private:
  std::vector<std::vector<int>> table_;
  std::vector<std::string> labels_;
  int identity_ = -1;
  std::vector<int> inverse_;
};

Group cyclic_group(int n);
/// Labels 1, -1, i, -i, j, -j, k, -k.
Group quaternion_group();

/// relation(x, y) = 1 + index of the class containing x^{-1} y.
AssociationScheme cayley_scheme(const Group& g, const std::vector<std::vector<int>>& classes);

// Named schemes used across the tools.
AssociationScheme z4_scheme();        // S1={1}, S2={3}, S3={2}
AssociationScheme quaternion_scheme();  // S1={i,j,k}, S2={-i,-j,-k}, S3={-1}

// ---------------------------------------------------------------- Bush type

/// Sylvester Hadamard matrix; order must be a power of two.
Matrix<int> sylvester_hadamard(std::size_t order);
bool is_hadamard(const Matrix<int>& h);

struct BushTypeResult {
  Matrix<int> K;
  AssociationScheme scheme;
  std::vector<CheckEntry> checks;
};

/// From a Hadamard matrix H of order 2a builds a Bush-type Hadamard matrix K
/// of order 4a^2 with all-ones diagonal blocks and skew-paired off-diagonal
/// blocks K(y,x) = -K(x,y)^T, and reads off the 3-class scheme. Throws
/// SchemeError on a failed property.
BushTypeResult bush_type_from_hadamard(const Matrix<int>& H);

/// Brute-force relabeling search (n <= 16): perm with T(perm x, perm y) = S(x, y).
std::optional<std::vector<int>> find_isomorphism(const AssociationScheme& s,
                                                 const AssociationScheme& t);

// ---------------------------------------------------------------- files

AssociationScheme read_scheme(std::istream& in);
void write_scheme(std::ostream& out, const AssociationScheme& s);
AssociationScheme load_scheme(const std::string& path);
void save_scheme(const AssociationScheme& s, const std::string& path);

/// Seed Hadamard format: line `n`, then n rows of +/- or 1/-1 entries.
Matrix<int> read_hadamard_seed(std::istream& in);
Matrix<int> load_hadamard_seed(const std::string& path);

}  // namespace hsk
