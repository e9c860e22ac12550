#include "alvero/poly_text.hpp"

#include <cctype>
#include <cstdint>
#include <limits>

namespace alvero {

namespace {

void append_term(std::string& out, const Rational& coeff, const std::string& body) {
  const bool negative = coeff < 0;
  const Rational magnitude = negative ? Rational(-coeff) : coeff;
  if (out.empty()) {
    if (negative) out += "-";
  } else {
    out += negative ? " - " : " + ";
  }
  if (body.empty()) {
    out += to_string(magnitude);
  } else if (magnitude == 1) {
    out += body;
  } else {
    out += to_string(magnitude) + "*" + body;
  }
}

std::string monomial_body(const Monomial& m, unsigned xpower) {
  std::string body;
  for (std::size_t j = 0; j < m.size(); ++j) {
    if (m[j] == 0) continue;
    if (!body.empty()) body += "*";
    body += "a" + std::to_string(j + 1);
    if (m[j] > 1) body += "^" + std::to_string(m[j]);
  }
  if (xpower > 0) {
    if (!body.empty()) body += "*";
    body += "x";
    if (xpower > 1) body += "^" + std::to_string(xpower);
  }
  return body;
}

// Recursive-descent parser producing a UniPoly; MultiPoly parsing rejects x.
class Parser {
 public:
  Parser(std::string_view text, std::size_t nvars, bool allow_x)
      : text_(text), nvars_(nvars), allow_x_(allow_x) {}

  UniPoly parse() {
    UniPoly p = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string digits() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  UniPoly expression() {
    UniPoly acc = signed_term();
    for (;;) {
      if (accept('+')) {
        acc += product();
      } else if (accept('-')) {
        acc -= product();
      } else {
        return acc;
      }
    }
  }

  UniPoly signed_term() {
    if (accept('-')) return -product();
    accept('+');
    return product();
  }

  UniPoly product() {
    UniPoly acc = power();
    while (accept('*')) acc = acc * power();
    return acc;
  }

  UniPoly power() {
    if (accept('-')) return -power();
    UniPoly base = primary();
    if (!accept('^')) return base;
    const std::string e = digits();
    if (e.size() > 5 || std::stoul(e) > std::numeric_limits<std::uint16_t>::max()) fail("exponent too large");
    const auto n = static_cast<unsigned>(std::stoul(e));
    UniPoly r = UniPoly::constant(MultiPoly::constant(nvars_, 1));
    for (unsigned k = 0; k < n; ++k) r = r * base;
    return r;
  }

  UniPoly primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      UniPoly inner = expression();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string lit = digits();
      if (accept('/')) lit += "/" + digits();
      Rational q;
      try {
        q = parse_rational(lit);
      } catch (const std::invalid_argument& e) {
        fail(e.what());
      }
      return UniPoly::constant(MultiPoly::constant(nvars_, q));
    }
    if (c == 'x') {
      ++pos_;
      if (!allow_x_) fail("x is not allowed here");
      return UniPoly::monomial(nvars_, 1, MultiPoly::constant(nvars_, 1));
    }
    if (c == 'a') {
      ++pos_;
      const std::string idx = digits();
      if (idx.size() > 3) fail("variable index too large");
      const auto j = std::stoul(idx);
      if (j == 0 || j > nvars_) fail("variable a" + idx + " outside a1..a" + std::to_string(nvars_));
      return UniPoly::constant(MultiPoly::variable(nvars_, j - 1));
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  std::size_t nvars_;
  bool allow_x_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_string(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& t : p.terms()) append_term(out, t.coeff, monomial_body(t.monomial, 0));
  return out;
}

std::string to_string(const UniPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t k = p.coeffs().size(); k-- > 0;) {
    for (const auto& t : p.coeffs()[k].terms()) {
      append_term(out, t.coeff, monomial_body(t.monomial, static_cast<unsigned>(k)));
    }
  }
  return out;
}

MultiPoly parse_multipoly(std::string_view text, std::size_t nvars) {
  UniPoly u = Parser(text, nvars, false).parse();
  return u.is_zero() ? MultiPoly(nvars) : u.coeffs()[0];
}

UniPoly parse_unipoly(std::string_view text, std::size_t nvars) { return Parser(text, nvars, true).parse(); }

std::size_t max_variable_index(std::string_view text) {
  std::size_t best = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != 'a') continue;
    std::size_t j = i + 1;
    std::size_t v = 0;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])) && j - i <= 3) {
      v = v * 10 + static_cast<std::size_t>(text[j] - '0');
      ++j;
    }
    best = std::max(best, v);
  }
  return best;
}

}  // namespace alvero
