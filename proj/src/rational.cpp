#include "alvero/rational.hpp"

#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

namespace alvero {

namespace {

bool valid_integer(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

Integer to_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  if (!valid_integer(num)) throw std::invalid_argument("malformed rational: " + std::string(text));
  if (slash == std::string_view::npos) return Rational(to_integer(num));
  const auto den = text.substr(slash + 1);
  if (!valid_integer(den) || den.front() == '-' || den.front() == '+') {
    throw std::invalid_argument("malformed rational: " + std::string(text));
  }
  Integer d = to_integer(den);
  if (d == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
  Rational q(to_integer(num), d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Integer binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  std::vector<Integer> row(k + 1, 0);
  row[0] = 1;
  for (unsigned i = 1; i <= n; ++i) {
    for (unsigned j = std::min(i, k); j > 0; --j) row[j] += row[j - 1];
  }
  return row[k];
}

Integer factorial(unsigned n) {
  Integer r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace alvero
