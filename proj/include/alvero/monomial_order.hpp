#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "alvero/monomial.hpp"

namespace alvero {

enum class OrderKind { lex, grevlex };

/// Monomial order on a fixed number of variables. `ranking` lists variable
/// indices from the largest variable to the smallest; the identity ranking
/// gives a_1 > a_2 > ... > a_n.
class MonomialOrder {
 public:
  MonomialOrder(OrderKind kind, std::size_t nvars);
  MonomialOrder(OrderKind kind, std::vector<std::size_t> ranking);

  static MonomialOrder lex(std::size_t nvars) { return {OrderKind::lex, nvars}; }
  static MonomialOrder grevlex(std::size_t nvars) { return {OrderKind::grevlex, nvars}; }

  OrderKind kind() const noexcept { return kind_; }
  std::size_t nvars() const noexcept { return ranking_.size(); }
  const std::vector<std::size_t>& ranking() const noexcept { return ranking_; }

  /// <0, 0, >0 as a is smaller than, equal to, greater than b.
  int compare(const Monomial& a, const Monomial& b) const noexcept;
  bool greater(const Monomial& a, const Monomial& b) const noexcept { return compare(a, b) > 0; }

  /// The same order with extra variables appended as the smallest ones.
  MonomialOrder extended(std::size_t nvars) const;

  /// "grevlex" or "lex", followed by ":" and the ranking when it is not the
  /// identity, e.g. "lex:2,1,3" (1-based).
  std::string tag() const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  OrderKind kind_;
  std::vector<std::size_t> ranking_;
};

/// Parses "lex" or "grevlex" (case-sensitive). Throws std::invalid_argument.
OrderKind parse_order_kind(std::string_view name);
std::string_view to_string(OrderKind kind);

}  // namespace alvero
