#include "alvero/groebner.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace alvero {

namespace {

using Terms = std::vector<Term>;

// Monotone bit signature: a | b implies (mask(a) & ~mask(b)) == 0.
std::uint64_t divmask(const Monomial& m) {
  std::uint64_t mask = 0;
  for (std::size_t j = 0; j < m.size(); ++j) {
    const unsigned e = m[j];
    const std::uint64_t base = std::uint64_t{1} << (5 * j);
    if (e >= 1) mask |= base;
    if (e >= 2) mask |= base << 1;
    if (e >= 4) mask |= base << 2;
    if (e >= 8) mask |= base << 3;
    if (e >= 16) mask |= base << 4;
  }
  return mask;
}

Terms sort_by_order(const MultiPoly& p, const MonomialOrder& order) {
  Terms t(p.terms().begin(), p.terms().end());
  if (order.kind() != OrderKind::grevlex || order.ranking().size() != p.nvars() ||
      !std::is_sorted(order.ranking().begin(), order.ranking().end())) {
    std::sort(t.begin(), t.end(), [&](const Term& a, const Term& b) { return order.greater(a.monomial, b.monomial); });
  }
  return t;
}

// out = a + c * m * b, with b's terms shifted by m; all sorted by `order`.
void axpy_merge(Terms& out, std::span<const Term> a, const Rational& c, const Monomial& m, std::span<const Term> b,
                const MonomialOrder& order) {
  out.clear();
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  Monomial shifted;
  bool have = false;
  while (i < a.size() && j < b.size()) {
    if (!have) {
      shifted = b[j].monomial * m;
      have = true;
    }
    const int cmp = order.compare(a[i].monomial, shifted);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back({shifted, c * b[j].coeff});
      ++j;
      have = false;
    } else {
      Rational s = a[i].coeff + c * b[j].coeff;
      if (s != 0) out.push_back({a[i].monomial, std::move(s)});
      ++i;
      ++j;
      have = false;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back({b[j].monomial * m, c * b[j].coeff});
}

struct Element {
  Terms terms;  // sorted by the working order; monic
  std::uint64_t mask = 0;
  std::vector<MultiPoly> cofactors;  // only with tracking
  const Monomial& lm() const { return terms.front().monomial; }
};

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

class Engine {
 public:
  Engine(std::vector<MultiPoly> gens, const MonomialOrder& order, const GroebnerOptions& options)
      : gens_(std::move(gens)), order_(order), opts_(options) {}

  GroebnerBasis run();

  // Full reduction of `work` against the active elements. `cof` tracks the
  // cofactors of `work` when non-null.
  Terms reduce(Terms work, std::vector<MultiPoly>* cof, const std::vector<std::size_t>& reducers,
               std::size_t skip = SIZE_MAX);

 private:
  const Element* find_reducer(const Monomial& m, std::uint64_t mask, const std::vector<std::size_t>& reducers,
                              std::size_t skip) const;
  void make_monic(Terms& t, std::vector<MultiPoly>* cof) const;
  void insert(Terms h, std::vector<MultiPoly> cof);
  std::vector<std::size_t> active() const;
  GroebnerBasis finish();

  std::vector<MultiPoly> gens_;
  MonomialOrder order_;
  GroebnerOptions opts_;
  GroebnerStats stats_;
  std::vector<Element> elements_;
  std::vector<bool> in_basis_;
  std::vector<Pair> pairs_;
  bool unit_ = false;
};

const Element* Engine::find_reducer(const Monomial& m, std::uint64_t mask, const std::vector<std::size_t>& reducers,
                                    std::size_t skip) const {
  for (std::size_t idx : reducers) {
    if (idx == skip) continue;
    const Element& e = elements_[idx];
    if ((e.mask & ~mask) != 0) continue;
    if (e.lm().divides(m)) return &e;
  }
  return nullptr;
}

void Engine::make_monic(Terms& t, std::vector<MultiPoly>* cof) const {
  if (t.empty() || t.front().coeff == 1) return;
  const Rational inv = 1 / t.front().coeff;
  for (auto& term : t) term.coeff *= inv;
  if (cof != nullptr) {
    for (auto& c : *cof) c *= inv;
  }
}

Terms Engine::reduce(Terms work, std::vector<MultiPoly>* cof, const std::vector<std::size_t>& reducers,
                     std::size_t skip) {
  Terms done;
  Terms scratch;
  std::size_t pos = 0;
  while (pos < work.size()) {
    const Term& top = work[pos];
    const Element* g = find_reducer(top.monomial, divmask(top.monomial), reducers, skip);
    if (g == nullptr) {
      done.push_back(top);
      ++pos;
      continue;
    }
    const Monomial shift = top.monomial.divided_by(g->lm());
    const Rational c = -top.coeff;  // g is monic
    if (opts_.budget != nullptr) opts_.budget->charge(g->terms.size(), "groebner reduction");
    ++stats_.reduction_steps;
    if (cof != nullptr) {
      for (std::size_t l = 0; l < cof->size(); ++l) {
        if (!g->cofactors[l].is_zero()) (*cof)[l] += g->cofactors[l].scaled(c, shift);
      }
    }
    axpy_merge(scratch, std::span<const Term>(work).subspan(pos + 1), c, shift,
               std::span<const Term>(g->terms).subspan(1), order_);
    std::swap(work, scratch);
    pos = 0;
  }
  return done;
}

std::vector<std::size_t> Engine::active() const {
  std::vector<std::size_t> a;
  for (std::size_t k = 0; k < elements_.size(); ++k) {
    if (in_basis_[k]) a.push_back(k);
  }
  return a;
}

// Gebauer-Möller update with the new element h.
void Engine::insert(Terms h, std::vector<MultiPoly> cof) {
  const std::size_t hi = elements_.size();
  Element e{std::move(h), 0, std::move(cof)};
  e.mask = divmask(e.lm());
  elements_.push_back(std::move(e));
  in_basis_.push_back(false);
  const Monomial& lh = elements_[hi].lm();

  if (lh.is_one()) unit_ = true;

  std::vector<Pair> fresh;
  for (std::size_t g : active()) fresh.push_back({g, hi, elements_[g].lm().lcm(lh)});

  std::vector<Pair> kept;
  std::vector<bool> removed(fresh.size(), false);
  for (std::size_t a = 0; a < fresh.size(); ++a) {
    const Pair& p = fresh[a];
    bool drop = false;
    if (!elements_[p.i].lm().coprime(lh)) {
      for (std::size_t b = 0; b < fresh.size() && !drop; ++b) {
        if (b == a || removed[b]) continue;
        drop = fresh[b].lcm.divides(p.lcm);
      }
    }
    if (drop) {
      removed[a] = true;
      ++stats_.pairs_pruned;
    }
  }
  for (std::size_t a = 0; a < fresh.size(); ++a) {
    if (removed[a]) continue;
    if (elements_[fresh[a].i].lm().coprime(lh)) {
      ++stats_.pairs_pruned;
      continue;
    }
    kept.push_back(fresh[a]);
  }

  std::vector<Pair> old;
  old.reserve(pairs_.size() + kept.size());
  for (auto& p : pairs_) {
    const bool chain = lh.divides(p.lcm) && elements_[p.i].lm().lcm(lh) != p.lcm &&
                       elements_[p.j].lm().lcm(lh) != p.lcm;
    if (chain) {
      ++stats_.pairs_pruned;
    } else {
      old.push_back(std::move(p));
    }
  }
  for (auto& p : kept) old.push_back(std::move(p));
  pairs_ = std::move(old);

  for (std::size_t g = 0; g < hi; ++g) {
    if (in_basis_[g] && lh.divides(elements_[g].lm())) in_basis_[g] = false;
  }
  in_basis_[hi] = true;
}

GroebnerBasis Engine::run() {
  if (gens_.empty()) throw std::invalid_argument("Gröbner basis of an empty generator list");
  const std::size_t nvars = gens_.front().nvars();
  for (const auto& g : gens_) {
    if (g.nvars() != nvars) throw AmbientMismatch("generators live in different variable counts");
  }
  if (order_.nvars() != nvars) throw AmbientMismatch("monomial order has wrong variable count");

  const bool track = opts_.track_cofactors;
  for (std::size_t k = 0; k < gens_.size() && !(unit_ && opts_.stop_on_unit); ++k) {
    std::vector<MultiPoly> cof;
    if (track) {
      cof.assign(gens_.size(), MultiPoly(nvars));
      cof[k] = MultiPoly::constant(nvars, 1);
    }
    Terms h = reduce(sort_by_order(gens_[k], order_), track ? &cof : nullptr, active());
    if (h.empty()) continue;
    make_monic(h, track ? &cof : nullptr);
    insert(std::move(h), std::move(cof));
  }

  while (!pairs_.empty() && !(unit_ && opts_.stop_on_unit)) {
    // Normal strategy: smallest lcm (degree first), then insertion order.
    auto best = pairs_.begin();
    for (auto it = pairs_.begin() + 1; it != pairs_.end(); ++it) {
      if (it->lcm.total_degree() != best->lcm.total_degree()) {
        if (it->lcm.total_degree() < best->lcm.total_degree()) best = it;
        continue;
      }
      const int c = order_.compare(it->lcm, best->lcm);
      if (c < 0 || (c == 0 && std::pair(it->j, it->i) < std::pair(best->j, best->i))) best = it;
    }
    const Pair p = *best;
    *best = std::move(pairs_.back());
    pairs_.pop_back();
    ++stats_.pairs_processed;

    const Element& a = elements_[p.i];
    const Element& b = elements_[p.j];
    const Monomial ma = p.lcm.divided_by(a.lm());
    const Monomial mb = p.lcm.divided_by(b.lm());
    Terms spoly;
    axpy_merge(spoly, Terms{}, Rational(1), ma, std::span<const Term>(a.terms).subspan(1), order_);
    Terms tmp;
    axpy_merge(tmp, spoly, Rational(-1), mb, std::span<const Term>(b.terms).subspan(1), order_);
    std::vector<MultiPoly> cof;
    if (track) {
      cof.assign(gens_.size(), MultiPoly(nvars));
      for (std::size_t l = 0; l < gens_.size(); ++l) {
        cof[l] = a.cofactors[l].scaled(1, ma) - b.cofactors[l].scaled(1, mb);
      }
    }
    Terms h = reduce(std::move(tmp), track ? &cof : nullptr, active());
    if (h.empty()) {
      ++stats_.zero_reductions;
      continue;
    }
    make_monic(h, track ? &cof : nullptr);
    insert(std::move(h), std::move(cof));
  }
  return finish();
}

GroebnerBasis Engine::finish() {
  const std::size_t nvars = gens_.front().nvars();
  const bool track = opts_.track_cofactors;
  std::vector<std::size_t> minimal;
  if (unit_) {
    for (std::size_t k = 0; k < elements_.size(); ++k) {
      if (elements_[k].lm().is_one()) {
        minimal.push_back(k);
        break;
      }
    }
  } else {
    minimal = active();
  }

  std::vector<Terms> reduced;
  std::vector<std::vector<MultiPoly>> cofs;
  for (std::size_t idx : minimal) {
    std::vector<MultiPoly> cof = elements_[idx].cofactors;
    const Terms& t = elements_[idx].terms;
    // Keep the leading term, fully reduce the tail by the other elements.
    Terms tail = reduce(Terms(t.begin() + 1, t.end()), track ? &cof : nullptr, minimal, idx);
    Terms full{t.front()};
    full.insert(full.end(), tail.begin(), tail.end());
    reduced.push_back(std::move(full));
    cofs.push_back(std::move(cof));
  }

  std::vector<std::size_t> perm(reduced.size());
  for (std::size_t k = 0; k < perm.size(); ++k) perm[k] = k;
  std::sort(perm.begin(), perm.end(), [&](std::size_t x, std::size_t y) {
    return order_.greater(reduced[x].front().monomial, reduced[y].front().monomial);
  });

  std::vector<MultiPoly> basis;
  std::optional<std::vector<std::vector<MultiPoly>>> cofactors;
  if (track) cofactors.emplace();
  for (std::size_t k : perm) {
    basis.push_back(MultiPoly::from_terms(nvars, reduced[k]));
    if (track) cofactors->push_back(std::move(cofs[k]));
  }
  return GroebnerBasis(std::move(gens_), std::move(basis), order_, stats_, std::move(cofactors));
}

}  // namespace

GroebnerBasis::GroebnerBasis(std::vector<MultiPoly> generators, std::vector<MultiPoly> basis, MonomialOrder order,
                             GroebnerStats stats, std::optional<std::vector<std::vector<MultiPoly>>> cofactors)
    : generators_(std::move(generators)),
      basis_(std::move(basis)),
      order_(std::move(order)),
      stats_(stats),
      cofactors_(std::move(cofactors)) {
  for (const auto& b : basis_) {
    if (b.is_zero()) throw std::invalid_argument("zero polynomial in a Gröbner basis");
    if (b.nvars() != order_.nvars()) throw AmbientMismatch("basis element has wrong variable count");
    ordered_.push_back(sort_by_order(b, order_));
    leading_.push_back(ordered_.back().front().monomial);
  }
}

GroebnerBasis buchberger(std::vector<MultiPoly> generators, const MonomialOrder& order,
                         const GroebnerOptions& options) {
  return Engine(std::move(generators), order, options).run();
}

Division divide(const MultiPoly& p, const GroebnerBasis& basis, StepBudget* budget) {
  if (p.nvars() != basis.nvars()) throw AmbientMismatch("polynomial and basis live in different rings");
  const MonomialOrder& order = basis.order();
  const std::size_t n = basis.basis().size();
  std::vector<std::uint64_t> masks(n);
  for (std::size_t k = 0; k < n; ++k) masks[k] = divmask(basis.leading_monomial(k));

  std::vector<Terms> quotients(n);
  Terms done;
  Terms work = sort_by_order(p, order);
  Terms scratch;
  std::size_t pos = 0;
  while (pos < work.size()) {
    const Term& top = work[pos];
    const std::uint64_t mask = divmask(top.monomial);
    std::size_t k = 0;
    for (; k < n; ++k) {
      if ((masks[k] & ~mask) == 0 && basis.leading_monomial(k).divides(top.monomial)) break;
    }
    if (k == n) {
      done.push_back(top);
      ++pos;
      continue;
    }
    const Terms& g = basis.ordered_terms(k);
    const Monomial shift = top.monomial.divided_by(g.front().monomial);
    const Rational c = top.coeff / g.front().coeff;
    if (budget != nullptr) budget->charge(g.size(), "normal form");
    quotients[k].push_back({shift, c});
    axpy_merge(scratch, std::span<const Term>(work).subspan(pos + 1), -c, shift, std::span<const Term>(g).subspan(1),
               order);
    std::swap(work, scratch);
    pos = 0;
  }
  Division result;
  for (auto& q : quotients) result.quotients.push_back(MultiPoly::from_terms(p.nvars(), std::move(q)));
  result.remainder = MultiPoly::from_terms(p.nvars(), std::move(done));
  return result;
}

MultiPoly normal_form(const MultiPoly& p, const GroebnerBasis& basis, StepBudget* budget) {
  return divide(p, basis, budget).remainder;
}

bool is_reduced_groebner_basis(const GroebnerBasis& gb) {
  const auto& b = gb.basis();
  if (b.empty()) return false;
  const MonomialOrder& order = gb.order();
  for (std::size_t k = 0; k < b.size(); ++k) {
    if (gb.ordered_terms(k).front().coeff != 1) return false;
    for (std::size_t l = 0; l < b.size(); ++l) {
      if (l == k) continue;
      for (const auto& t : b[k].terms()) {
        if (gb.leading_monomial(l).divides(t.monomial)) return false;
      }
    }
    if (k > 0 && !order.greater(gb.leading_monomial(k - 1), gb.leading_monomial(k))) return false;
  }
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = i + 1; j < b.size(); ++j) {
      const Monomial l = gb.leading_monomial(i).lcm(gb.leading_monomial(j));
      const MultiPoly s = b[i].scaled(1, l.divided_by(gb.leading_monomial(i))) -
                          b[j].scaled(1, l.divided_by(gb.leading_monomial(j)));
      if (!normal_form(s, gb).is_zero()) return false;
    }
  }
  for (const auto& g : gb.generators()) {
    if (!normal_form(g, gb).is_zero()) return false;
  }
  return true;
}

int krull_dimension(const GroebnerBasis& gb) {
  if (gb.is_unit()) return -1;
  const std::size_t n = gb.nvars();
  int best = 0;
  for (std::uint32_t subset = 0; subset < (std::uint32_t{1} << n); ++subset) {
    const int size = __builtin_popcount(subset);
    if (size <= best) continue;
    bool independent = true;
    for (std::size_t k = 0; k < gb.basis().size() && independent; ++k) {
      const Monomial& lm = gb.leading_monomial(k);
      bool inside = true;
      for (std::size_t j = 0; j < n && inside; ++j) {
        if (lm[j] != 0 && !(subset & (std::uint32_t{1} << j))) inside = false;
      }
      if (inside) independent = false;
    }
    if (independent) best = size;
  }
  return best;
}

}  // namespace alvero
