#pragma once

// Buchberger's algorithm over Q(i) with Gebauer-Moeller pair pruning and the
// sugar selection strategy, multivariate division, and ideal membership.

#include "hsk/multipoly.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace hsk {

class MonomialOrder {
 public:
  enum class Kind { degrevlex, lex };

  /// precedence lists ring variable indices from most to least significant.
  MonomialOrder(Kind kind, std::vector<int> precedence);

  /// Ring order as precedence.
  static MonomialOrder degrevlex(const VarRing& ring);
  static MonomialOrder lex(const VarRing& ring);
  /// degrevlex with w1 > w2 > w3 > b > k1 > k2 > r > s > c on the standard
  /// ring; ring order elsewhere.
  static MonomialOrder default_for(const VarRing& ring);

  Kind kind() const { return kind_; }
  const std::vector<int>& precedence() const { return precedence_; }

  /// <0, 0, >0 as a is smaller than, equal to, larger than b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

 private:
  Kind kind_;
  std::vector<int> precedence_;
};

class GroebnerBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GroebnerOptions {
  /// Maximum number of S-pairs reduced before giving up.
  std::size_t pair_limit = 200000;
};

struct GroebnerStats {
  std::size_t pairs_considered = 0;
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
  std::size_t product_criterion = 0;
  std::size_t chain_criterion = 0;
};

struct GroebnerBasis {
  std::vector<Polynomial> generators;
  MonomialOrder order;
  bool reduced = false;
  GroebnerStats stats;

  bool is_unit() const;
};

/// Leading term under the order (the polynomial must be nonzero).
const Term& leading_term(const Polynomial& f, const MonomialOrder& order);

/// Full multivariate division remainder.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const MonomialOrder& order);

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order,
                         const GroebnerOptions& options = {});

/// True iff every S-polynomial of the basis reduces to zero.
bool is_groebner_basis(const std::vector<Polynomial>& basis, const MonomialOrder& order);

/// A generator c*x^k - h with x absent from h, used as the rewrite x^k -> h/c.
struct Elimination {
  int variable;
  int power;
  Polynomial image;  // h/c
};

/// Pre-elimination pass: repeatedly picks generators that isolate a single
/// variable power and rewrites the rest. Linear rules (k = 1) remove the
/// variable together with its generator; higher powers keep the generator.
struct Preeliminated {
  std::vector<Polynomial> gens;
  std::vector<Elimination> rules;
  Polynomial apply(const Polynomial& f) const;
};
Preeliminated preeliminate(const std::vector<Polynomial>& gens);

struct MembershipOptions {
  bool preeliminate = true;
  GroebnerOptions groebner;
};

struct MembershipResult {
  bool member = false;
  std::size_t basis_size = 0;
  std::vector<Elimination> rules;
  GroebnerStats stats;
};

MembershipResult ideal_membership(const Polynomial& f, const std::vector<Polynomial>& gens,
                                  const MonomialOrder& order, const MembershipOptions& options = {});

bool ideal_contains(const Polynomial& f, const std::vector<Polynomial>& gens,
                    const MonomialOrder& order, const MembershipOptions& options = {});

/// Pre-elimination and basis computed once, for repeated membership queries.
struct PreparedIdeal {
  Preeliminated pre;
  GroebnerBasis basis;
  bool contains(const Polynomial& f) const;
  bool is_unit() const { return basis.is_unit(); }
};
PreparedIdeal prepare_ideal(const std::vector<Polynomial>& gens, const MonomialOrder& order,
                            const MembershipOptions& options = {});

}  // namespace hsk
