#include "hsk/groebner.hpp"

#include <algorithm>
#include <numeric>

namespace hsk {

// ---------------------------------------------------------------- orders

MonomialOrder::MonomialOrder(Kind kind, std::vector<int> precedence)
    : kind_(kind), precedence_(std::move(precedence)) {
  std::vector<int> sorted = precedence_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != static_cast<int>(i)) {
      throw std::invalid_argument("monomial order precedence must be a permutation");
    }
  }
}

MonomialOrder MonomialOrder::degrevlex(const VarRing& ring) {
  std::vector<int> p(ring.arity());
  std::iota(p.begin(), p.end(), 0);
  return {Kind::degrevlex, std::move(p)};
}

MonomialOrder MonomialOrder::lex(const VarRing& ring) {
  std::vector<int> p(ring.arity());
  std::iota(p.begin(), p.end(), 0);
  return {Kind::lex, std::move(p)};
}

MonomialOrder MonomialOrder::default_for(const VarRing& ring) {
  if (ring.names() == standard_ring()->names()) {
    return {Kind::degrevlex, {var::w1, var::w2, var::w3, var::b, var::k1, var::k2, var::r, var::s,
                              var::c}};
  }
  return degrevlex(ring);
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (kind_ == Kind::lex) {
    for (int v : precedence_) {
      const int d = a.exp[static_cast<std::size_t>(v)] - b.exp[static_cast<std::size_t>(v)];
      if (d != 0) return d;
    }
    return 0;
  }
  const int da = a.degree(), db = b.degree();
  if (da != db) return da - db;
  for (auto it = precedence_.rbegin(); it != precedence_.rend(); ++it) {
    const int d = a.exp[static_cast<std::size_t>(*it)] - b.exp[static_cast<std::size_t>(*it)];
    if (d != 0) return -d;
  }
  return 0;
}

// ---------------------------------------------------------------- internals

namespace {

// Terms sorted ascending by the order; the leading term is back().
struct OPoly {
  std::vector<Term> terms;
  int sugar = 0;

  bool empty() const { return terms.empty(); }
  const Term& lt() const { return terms.back(); }
};

OPoly to_opoly(const Polynomial& f, const MonomialOrder& order) {
  if (f.has_negative_exponents()) {
    throw std::invalid_argument("Groebner routines need polynomials without negative exponents");
  }
  OPoly p;
  p.terms = f.terms();
  std::sort(p.terms.begin(), p.terms.end(), [&](const Term& a, const Term& b) {
    return order.compare(a.mono, b.mono) < 0;
  });
  p.sugar = f.degree();
  return p;
}

Polynomial from_opoly(const OPoly& p, const RingPtr& ring) {
  return Polynomial::from_terms(ring, p.terms);
}

// p - c * m * g, all ascending.
std::vector<Term> sub_multiple(const std::vector<Term>& p, const GaussRat& c, const Monomial& m,
                               const std::vector<Term>& g, const MonomialOrder& order) {
  std::vector<Term> out;
  out.reserve(p.size() + g.size());
  std::size_t i = 0, j = 0;
  while (i < p.size() || j < g.size()) {
    if (j == g.size()) {
      out.push_back(p[i++]);
      continue;
    }
    Monomial gm = g[j].mono * m;
    int cmp = i == p.size() ? 1 : order.compare(p[i].mono, gm);
    if (cmp < 0) {
      out.push_back(p[i++]);
    } else if (cmp > 0) {
      out.push_back({gm, -(c * g[j].coeff)});
      ++j;
    } else {
      GaussRat v = p[i].coeff - c * g[j].coeff;
      if (!v.is_zero()) out.push_back({gm, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

void make_monic(OPoly& p) {
  if (p.empty() || p.lt().coeff.is_one()) return;
  GaussRat inv = p.lt().coeff.inverse();
  for (auto& t : p.terms) t.coeff *= inv;
}

// Full reduction of p by the polynomials in basis (pointers to OPolys).
OPoly reduce_full(OPoly p, const std::vector<const OPoly*>& basis, const MonomialOrder& order) {
  std::vector<Term> remainder;  // collected in descending order
  while (!p.empty()) {
    const Term& t = p.lt();
    const OPoly* divisor = nullptr;
    for (const OPoly* g : basis) {
      if (g->lt().mono.divides(t.mono)) {
        divisor = g;
        break;
      }
    }
    if (divisor == nullptr) {
      remainder.push_back(t);
      p.terms.pop_back();
      continue;
    }
    GaussRat c = t.coeff / divisor->lt().coeff;
    Monomial m = t.mono / divisor->lt().mono;
    p.terms.pop_back();
    std::vector<Term> tail(divisor->terms.begin(), divisor->terms.end() - 1);
    p.terms = sub_multiple(p.terms, c, m, tail, order);
  }
  std::reverse(remainder.begin(), remainder.end());
  p.terms = std::move(remainder);
  return p;
}

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
  int sugar;
};

class Buchberger {
 public:
  Buchberger(const MonomialOrder& order, const GroebnerOptions& options)
      : order_(order), options_(options) {}

  // Returns false when the ideal is the unit ideal.
  bool add_generator(OPoly p) {
    make_monic(p);
    if (p.lt().mono.is_one()) {
      unit_ = true;
      return false;
    }
    polys_.push_back(std::move(p));
    active_.push_back(true);
    update(polys_.size() - 1);
    return true;
  }

  void run() {
    while (!unit_ && !pairs_.empty()) {
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs_.size(); ++k) {
        if (pair_less(pairs_[k], pairs_[best])) best = k;
      }
      Pair p = pairs_[best];
      pairs_[best] = pairs_.back();
      pairs_.pop_back();
      ++stats_.pairs_considered;
      if (++stats_.pairs_reduced > options_.pair_limit) {
        throw GroebnerBudgetExceeded("Buchberger pair limit of " +
                                     std::to_string(options_.pair_limit) + " exceeded");
      }
      OPoly s = spoly(p);
      OPoly h = reduce_full(std::move(s), active_basis(), order_);
      if (h.empty()) {
        ++stats_.zero_reductions;
        continue;
      }
      add_generator(std::move(h));
    }
  }

  bool unit() const { return unit_; }
  const GroebnerStats& stats() const { return stats_; }

  // Minimal, fully interreduced, monic basis sorted by descending leading monomial.
  std::vector<OPoly> reduced_basis() const {
    std::vector<const OPoly*> minimal;
    for (std::size_t k = 0; k < polys_.size(); ++k) {
      if (!active_[k]) continue;
      minimal.push_back(&polys_[k]);
    }
    std::vector<OPoly> out;
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      std::vector<const OPoly*> others;
      for (std::size_t l = 0; l < minimal.size(); ++l) {
        if (l != k) others.push_back(minimal[l]);
      }
      OPoly head;
      head.terms.push_back(minimal[k]->lt());
      OPoly tail = *minimal[k];
      tail.terms.pop_back();
      OPoly red = reduce_full(std::move(tail), others, order_);
      red.terms.push_back(minimal[k]->lt());
      make_monic(red);
      out.push_back(std::move(red));
    }
    std::sort(out.begin(), out.end(), [&](const OPoly& a, const OPoly& b) {
      return order_.compare(a.lt().mono, b.lt().mono) > 0;
    });
    return out;
  }

 private:
  bool pair_less(const Pair& a, const Pair& b) const {
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    int c = order_.compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    return std::tie(a.i, a.j) < std::tie(b.i, b.j);
  }

  std::vector<const OPoly*> active_basis() const {
    std::vector<const OPoly*> out;
    for (std::size_t k = 0; k < polys_.size(); ++k) {
      if (active_[k]) out.push_back(&polys_[k]);
    }
    return out;
  }

  OPoly spoly(const Pair& p) const {
    const OPoly& f = polys_[p.i];
    const OPoly& g = polys_[p.j];
    Monomial mf = p.lcm / f.lt().mono;
    Monomial mg = p.lcm / g.lt().mono;
    OPoly s;
    s.sugar = p.sugar;
    // Both monic: s = mf*f - mg*g, leading terms cancel.
    std::vector<Term> ft(f.terms.begin(), f.terms.end() - 1);
    std::vector<Term> gt(g.terms.begin(), g.terms.end() - 1);
    std::vector<Term> fm;
    fm.reserve(ft.size());
    for (const auto& t : ft) fm.push_back({t.mono * mf, t.coeff});
    s.terms = sub_multiple(fm, GaussRat(1), mg, gt, order_);
    return s;
  }

  Pair make_pair(std::size_t i, std::size_t j) const {
    const OPoly& f = polys_[i];
    const OPoly& g = polys_[j];
    Monomial l = lcm(f.lt().mono, g.lt().mono);
    const int dl = l.degree();
    int sugar = std::max(f.sugar + dl - f.lt().mono.degree(), g.sugar + dl - g.lt().mono.degree());
    return {i, j, l, sugar};
  }

  // Gebauer-Moeller installation of the new polynomial h.
  void update(std::size_t h) {
    const Monomial& lh = polys_[h].lt().mono;
    std::vector<Pair> c;
    for (std::size_t g = 0; g < h; ++g) {
      if (active_[g]) c.push_back(make_pair(g, h));
    }
    std::vector<Pair> d;
    for (std::size_t k = 0; k < c.size(); ++k) {
      const Pair& p = c[k];
      const Monomial& lg = polys_[p.i].lt().mono;
      bool keep = coprime(lh, lg);
      if (!keep) {
        keep = true;
        for (std::size_t l = k + 1; l < c.size() && keep; ++l) {
          if (c[l].lcm.divides(p.lcm)) keep = false;
        }
        for (const Pair& q : d) {
          if (!keep) break;
          if (q.lcm.divides(p.lcm)) keep = false;
        }
        if (!keep) ++stats_.chain_criterion;
      }
      if (keep) d.push_back(p);
    }
    std::vector<Pair> e;
    for (const Pair& p : d) {
      if (coprime(lh, polys_[p.i].lt().mono)) ++stats_.product_criterion;
      else e.push_back(p);
    }
    std::vector<Pair> kept;
    for (const Pair& p : pairs_) {
      const Monomial l1h = lcm(polys_[p.i].lt().mono, lh);
      const Monomial l2h = lcm(polys_[p.j].lt().mono, lh);
      if (lh.divides(p.lcm) && l1h != p.lcm && l2h != p.lcm) {
        ++stats_.chain_criterion;
        continue;
      }
      kept.push_back(p);
    }
    kept.insert(kept.end(), e.begin(), e.end());
    pairs_ = std::move(kept);
    for (std::size_t g = 0; g < h; ++g) {
      if (active_[g] && lh.divides(polys_[g].lt().mono)) active_[g] = false;
    }
  }

  const MonomialOrder& order_;
  GroebnerOptions options_;
  std::vector<OPoly> polys_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
  GroebnerStats stats_;
  bool unit_ = false;
};

}  // namespace

// ---------------------------------------------------------------- public API

bool GroebnerBasis::is_unit() const {
  return generators.size() == 1 && generators[0].is_constant() && !generators[0].is_zero();
}

const Term& leading_term(const Polynomial& f, const MonomialOrder& order) {
  if (f.is_zero()) throw std::invalid_argument("leading term of the zero polynomial");
  const auto& ts = f.terms();
  auto it = std::max_element(ts.begin(), ts.end(), [&](const Term& a, const Term& b) {
    return order.compare(a.mono, b.mono) < 0;
  });
  return *it;
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const MonomialOrder& order) {
  std::vector<OPoly> ob;
  ob.reserve(basis.size());
  for (const auto& g : basis) {
    if (!g.is_zero()) ob.push_back(to_opoly(g, order));
  }
  std::vector<const OPoly*> ptrs;
  for (const auto& g : ob) ptrs.push_back(&g);
  return from_opoly(reduce_full(to_opoly(f, order), ptrs, order), f.ring());
}

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order,
                         const GroebnerOptions& options) {
  if (gens.empty()) return {{}, order, true, {}};
  const RingPtr& ring = gens.front().ring();
  Buchberger engine(order, options);
  bool unit = false;
  for (const auto& g : gens) {
    if (g.ring()->names() != ring->names()) throw RingMismatch("generators live in different rings");
    if (g.is_zero()) continue;
    if (!engine.add_generator(to_opoly(g, order))) {
      unit = true;
      break;
    }
  }
  if (!unit) engine.run();
  GroebnerBasis out{{}, order, true, engine.stats()};
  if (unit || engine.unit()) {
    out.generators.push_back(Polynomial(ring, GaussRat(1)));
    return out;
  }
  for (const auto& p : engine.reduced_basis()) out.generators.push_back(from_opoly(p, ring));
  return out;
}

bool is_groebner_basis(const std::vector<Polynomial>& basis, const MonomialOrder& order) {
  std::vector<OPoly> ob;
  for (const auto& g : basis) {
    if (!g.is_zero()) ob.push_back(to_opoly(g, order));
  }
  std::vector<const OPoly*> ptrs;
  for (const auto& g : ob) ptrs.push_back(&g);
  for (std::size_t i = 0; i < ob.size(); ++i) {
    for (std::size_t j = i + 1; j < ob.size(); ++j) {
      const Monomial l = lcm(ob[i].lt().mono, ob[j].lt().mono);
      GaussRat ci = ob[i].lt().coeff.inverse();
      GaussRat cj = ob[j].lt().coeff.inverse();
      std::vector<Term> a;
      for (const auto& t : ob[i].terms) a.push_back({t.mono * (l / ob[i].lt().mono), t.coeff * ci});
      OPoly s;
      s.terms = sub_multiple(a, cj, l / ob[j].lt().mono, ob[j].terms, order);
      if (!reduce_full(std::move(s), ptrs, order).empty()) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------- pre-elimination

namespace {

// Finds x^k with constant coefficient such that x occurs only in that term.
std::optional<Elimination> isolating_rule(const Polynomial& g, bool linear_only) {
  const std::size_t n = g.ring()->arity();
  for (std::size_t v = 0; v < n; ++v) {
    const Term* hit = nullptr;
    bool ok = true;
    for (const auto& t : g.terms()) {
      if (t.mono.exp[v] == 0) continue;
      if (hit != nullptr) {
        ok = false;
        break;
      }
      hit = &t;
    }
    if (!ok || hit == nullptr || hit->mono.exp[v] < 1) continue;
    Monomial pure;
    pure.exp[v] = hit->mono.exp[v];
    if (hit->mono != pure) continue;
    if (linear_only && pure.exp[v] != 1) continue;
    Polynomial lead = Polynomial::from_terms(g.ring(), {*hit});
    Polynomial rest = g - lead;
    Polynomial image = rest * (-hit->coeff.inverse());
    return Elimination{static_cast<int>(v), pure.exp[v], std::move(image)};
  }
  return std::nullopt;
}

// Rewrites f using x^k -> image (x-degree reduced below k, or x removed when k = 1).
Polynomial apply_rule(const Polynomial& f, const Elimination& rule) {
  if (!f.involves(rule.variable)) return f;
  if (rule.power == 1) {
    std::vector<Polynomial> images = identity_images(f.ring());
    images[static_cast<std::size_t>(rule.variable)] = rule.image;
    return substitute(f, images);
  }
  const int maxdeg = f.degree_in(rule.variable);
  Polynomial out(f.ring());
  std::vector<Polynomial> image_pow{Polynomial(f.ring(), GaussRat(1))};
  for (int e = 0; e <= maxdeg; ++e) {
    Polynomial coeff = f.coefficient_of(rule.variable, e);
    if (coeff.is_zero()) continue;
    const int q = e / rule.power, rem = e % rule.power;
    while (static_cast<int>(image_pow.size()) <= q) image_pow.push_back(image_pow.back() * rule.image);
    out += coeff * image_pow[static_cast<std::size_t>(q)] *
           Polynomial::variable(f.ring(), rule.variable, rem);
  }
  return out;
}

}  // namespace

Polynomial Preeliminated::apply(const Polynomial& f) const {
  Polynomial out = f;
  for (const auto& rule : rules) out = apply_rule(out, rule);
  return out;
}

Preeliminated preeliminate(const std::vector<Polynomial>& gens) {
  Preeliminated state;
  std::vector<Polynomial> work;
  for (const auto& g : gens) {
    if (!g.is_zero()) work.push_back(g);
  }
  std::vector<bool> used_power(kMaxVars, false);
  for (bool linear_only : {true, false}) {
    for (bool progress = true; progress;) {
      progress = false;
      for (std::size_t k = 0; k < work.size(); ++k) {
        auto rule = isolating_rule(work[k], linear_only);
        if (!rule) continue;
        if (rule->power > 1) {
          if (used_power[static_cast<std::size_t>(rule->variable)]) continue;
          used_power[static_cast<std::size_t>(rule->variable)] = true;
        }
        std::vector<Polynomial> next;
        for (std::size_t l = 0; l < work.size(); ++l) {
          if (l == k) {
            if (rule->power > 1) next.push_back(work[l]);
            continue;
          }
          Polynomial h = apply_rule(work[l], *rule);
          if (!h.is_zero()) next.push_back(std::move(h));
        }
        work = std::move(next);
        state.rules.push_back(std::move(*rule));
        progress = true;
        break;
      }
    }
  }
  state.gens = std::move(work);
  return state;
}

MembershipResult ideal_membership(const Polynomial& f, const std::vector<Polynomial>& gens,
                                  const MonomialOrder& order, const MembershipOptions& options) {
  MembershipResult result;
  if (f.is_zero()) {
    result.member = true;
    return result;
  }
  std::vector<Polynomial> work = gens;
  Polynomial target = f;
  if (options.preeliminate) {
    Preeliminated pre = preeliminate(gens);
    target = pre.apply(f);
    work = std::move(pre.gens);
    result.rules = std::move(pre.rules);
  }
  if (target.is_zero()) {
    result.member = true;
    return result;
  }
  GroebnerBasis gb = buchberger(work, order, options.groebner);
  result.basis_size = gb.generators.size();
  result.stats = gb.stats;
  result.member = normal_form(target, gb.generators, order).is_zero();
  return result;
}

bool ideal_contains(const Polynomial& f, const std::vector<Polynomial>& gens,
                    const MonomialOrder& order, const MembershipOptions& options) {
  return ideal_membership(f, gens, order, options).member;
}

PreparedIdeal prepare_ideal(const std::vector<Polynomial>& gens, const MonomialOrder& order,
                            const MembershipOptions& options) {
  PreparedIdeal out{options.preeliminate ? preeliminate(gens) : Preeliminated{gens, {}},
                    GroebnerBasis{{}, order, false, {}}};
  out.basis = buchberger(out.pre.gens, order, options.groebner);
  return out;
}

bool PreparedIdeal::contains(const Polynomial& f) const {
  const Polynomial target = pre.apply(f);
  if (target.is_zero()) return true;
  return normal_form(target, basis.generators, basis.order).is_zero();
}

}  // namespace hsk
