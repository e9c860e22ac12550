#include "alvero/multipoly.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace alvero {

namespace {

bool grevlex_greater(const Term& a, const Term& b) {
  return grevlex_compare(a.monomial, b.monomial) > 0;
}

// Sorted merge of a + sign*b into out.
void merge_into(std::vector<Term>& out, std::span<const Term> a, std::span<const Term> b, bool negate_b) {
  out.clear();
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const int c = grevlex_compare(a[i].monomial, b[j].monomial);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j++]);
      if (negate_b) out.back().coeff = -out.back().coeff;
    } else {
      Rational s = negate_b ? Rational(a[i].coeff - b[j].coeff) : Rational(a[i].coeff + b[j].coeff);
      if (s != 0) out.push_back({a[i].monomial, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) {
    out.push_back(b[j]);
    if (negate_b) out.back().coeff = -out.back().coeff;
  }
}

}  // namespace

MultiPoly MultiPoly::constant(std::size_t nvars, const Rational& c) {
  MultiPoly p(nvars);
  if (c != 0) p.terms_.push_back({Monomial(nvars), c});
  return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t var, const Rational& c) {
  if (var >= nvars) throw std::out_of_range("variable index beyond ambient count");
  return monomial(Monomial::variable(nvars, var), c);
}

MultiPoly MultiPoly::monomial(const Monomial& m, const Rational& c) {
  MultiPoly p(m.size());
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

MultiPoly MultiPoly::from_terms(std::size_t nvars, std::vector<Term> terms) {
  for (const auto& t : terms) {
    if (t.monomial.size() != nvars) throw AmbientMismatch("term has wrong variable count");
  }
  std::sort(terms.begin(), terms.end(), grevlex_greater);
  MultiPoly p(nvars);
  p.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coeff += t.coeff;
      continue;
    }
    if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
    p.terms_.push_back(std::move(t));
  }
  if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
  return p;
}

bool MultiPoly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().monomial.is_one());
}

Rational MultiPoly::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& key) {
    return grevlex_compare(t.monomial, key) > 0;
  });
  if (it != terms_.end() && it->monomial == m) return it->coeff;
  return 0;
}

unsigned MultiPoly::total_degree() const noexcept {
  // Grevlex is degree-compatible, so the leading term has maximal degree.
  return terms_.empty() ? 0 : terms_.front().monomial.total_degree();
}

void MultiPoly::check_same(const MultiPoly& other) const {
  if (nvars_ != other.nvars_) {
    throw AmbientMismatch("polynomials live in " + std::to_string(nvars_) + " and " +
                          std::to_string(other.nvars_) + " variables");
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  check_same(other);
  std::vector<Term> out;
  merge_into(out, terms_, other.terms_, false);
  terms_ = std::move(out);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  check_same(other);
  std::vector<Term> out;
  merge_into(out, terms_, other.terms_, true);
  terms_ = std::move(out);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& other) { return *this = *this * other; }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_same(b);
  if (a.is_zero() || b.is_zero()) return MultiPoly(a.nvars_);
  const MultiPoly& small = a.size() <= b.size() ? a : b;
  const MultiPoly& big = a.size() <= b.size() ? b : a;
  if (small.size() == 1) return big.scaled(small.terms_[0].coeff, small.terms_[0].monomial);
  std::vector<Term> products;
  products.reserve(a.size() * b.size());
  for (const auto& s : small.terms_) {
    for (const auto& t : big.terms_) products.push_back({s.monomial * t.monomial, s.coeff * t.coeff});
  }
  return MultiPoly::from_terms(a.nvars_, std::move(products));
}

MultiPoly MultiPoly::scaled(const Rational& c, const Monomial& m) const {
  MultiPoly r(nvars_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves any monomial order.
  for (const auto& t : terms_) r.terms_.push_back({t.monomial * m, t.coeff * c});
  return r;
}

MultiPoly MultiPoly::pow(unsigned n) const {
  MultiPoly result = constant(nvars_, 1);
  MultiPoly base = *this;
  while (n > 0) {
    if (n & 1u) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

MultiPoly MultiPoly::exact_div(const MultiPoly& divisor) const {
  check_same(divisor);
  if (divisor.is_zero()) throw std::domain_error("division by the zero polynomial");
  const Term& lead = divisor.leading();
  std::vector<Term> quotient;
  MultiPoly rest = *this;
  while (!rest.is_zero()) {
    const Term& top = rest.leading();
    if (!lead.monomial.divides(top.monomial)) throw std::domain_error("polynomial division is not exact");
    Term q{top.monomial.divided_by(lead.monomial), top.coeff / lead.coeff};
    rest -= divisor.scaled(q.coeff, q.monomial);
    quotient.push_back(std::move(q));
  }
  MultiPoly r(nvars_);
  r.terms_ = std::move(quotient);  // produced in decreasing order
  return r;
}

Rational MultiPoly::evaluate(std::span<const Rational> point) const {
  if (point.size() != nvars_) throw AmbientMismatch("point length differs from variable count");
  std::vector<std::vector<Rational>> powers(nvars_);
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational v = t.coeff;
    for (std::size_t j = 0; j < nvars_; ++j) {
      const unsigned e = t.monomial[j];
      if (e == 0) continue;
      auto& pw = powers[j];
      if (pw.empty()) pw.push_back(1);
      while (pw.size() <= e) pw.push_back(pw.back() * point[j]);
      v *= pw[e];
    }
    sum += v;
  }
  return sum;
}

MultiPoly MultiPoly::extended(std::size_t nvars) const {
  if (nvars < nvars_) throw AmbientMismatch("cannot drop variables");
  MultiPoly r(nvars);
  r.terms_.reserve(terms_.size());
  // Appending trailing zero exponents keeps grevlex order intact.
  for (const auto& t : terms_) r.terms_.push_back({t.monomial.extended(nvars), t.coeff});
  return r;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
}

}  // namespace alvero
