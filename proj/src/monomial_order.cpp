#include "alvero/monomial_order.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace alvero {

MonomialOrder::MonomialOrder(OrderKind kind, std::size_t nvars) : kind_(kind), ranking_(nvars) {
  std::iota(ranking_.begin(), ranking_.end(), std::size_t{0});
}

MonomialOrder::MonomialOrder(OrderKind kind, std::vector<std::size_t> ranking)
    : kind_(kind), ranking_(std::move(ranking)) {
  std::vector<std::size_t> sorted = ranking_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t j = 0; j < sorted.size(); ++j) {
    if (sorted[j] != j) throw std::invalid_argument("variable ranking is not a permutation");
  }
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const noexcept {
  if (kind_ == OrderKind::lex) {
    for (std::size_t v : ranking_) {
      if (a[v] != b[v]) return a[v] > b[v] ? 1 : -1;
    }
    return 0;
  }
  if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree() ? -1 : 1;
  for (std::size_t r = ranking_.size(); r-- > 0;) {
    const std::size_t v = ranking_[r];
    if (a[v] != b[v]) return a[v] < b[v] ? 1 : -1;
  }
  return 0;
}

MonomialOrder MonomialOrder::extended(std::size_t nvars) const {
  if (nvars < ranking_.size()) throw std::invalid_argument("cannot shrink a monomial order");
  std::vector<std::size_t> r = ranking_;
  for (std::size_t v = ranking_.size(); v < nvars; ++v) r.push_back(v);
  return MonomialOrder(kind_, std::move(r));
}

std::string MonomialOrder::tag() const {
  std::string t(to_string(kind_));
  bool identity = true;
  for (std::size_t j = 0; j < ranking_.size(); ++j) identity = identity && ranking_[j] == j;
  if (identity) return t;
  t += ":";
  for (std::size_t j = 0; j < ranking_.size(); ++j) {
    if (j > 0) t += ",";
    t += std::to_string(ranking_[j] + 1);
  }
  return t;
}

OrderKind parse_order_kind(std::string_view name) {
  if (name == "lex") return OrderKind::lex;
  if (name == "grevlex") return OrderKind::grevlex;
  throw std::invalid_argument("unknown monomial order '" + std::string(name) + "'");
}

std::string_view to_string(OrderKind kind) { return kind == OrderKind::lex ? "lex" : "grevlex"; }

}  // namespace alvero
