#include "zetalab/expr.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "zetalab/error.hpp"

namespace zetalab::expr {

namespace {
constexpr unsigned kMaxExponent = 4096;
}

unsigned total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0u); }

MPoly MPoly::constant(std::size_t num_vars, const Int& c) {
  MPoly p(num_vars);
  p.add_term(Exponents(num_vars, 0), c);
  return p;
}

MPoly MPoly::variable(std::size_t num_vars, std::size_t index) {
  MPoly p(num_vars);
  Exponents e(num_vars, 0);
  e.at(index) = 1;
  p.add_term(e, 1);
  return p;
}

void MPoly::add_term(const Exponents& exps, const Int& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

unsigned MPoly::degree_in(std::size_t v) const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[v]);
  return d;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly r(a.num_vars_);
  Exponents e(a.num_vars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

MPoly MPoly::operator-() const {
  MPoly r(num_vars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

MPoly pow(const MPoly& base, unsigned exponent) {
  MPoly result = MPoly::constant(base.num_vars(), 1);
  MPoly b = base;
  while (exponent > 0) {
    if (exponent & 1u) result = result * b;
    exponent >>= 1;
    if (exponent > 0) b = b * b;
  }
  return result;
}

std::string MPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  // Highest total degree first for readability.
  std::vector<std::pair<Exponents, Int>> sorted(terms_.begin(), terms_.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    return total_degree(a.first) > total_degree(b.first);
  });
  for (const auto& [e, c] : sorted) {
    Int mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names.at(i);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += mono;
    }
  }
  return out;
}

IntPoly to_univariate(const MPoly& p) {
  if (p.num_vars() != 1) throw std::invalid_argument("to_univariate needs exactly one variable");
  std::vector<Int> c;
  for (const auto& [e, v] : p.terms()) {
    if (c.size() <= e[0]) c.resize(e[0] + 1);
    c[e[0]] = v;
  }
  return IntPoly(std::move(c));
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& vars, SourcePos origin)
      : text_(text), vars_(vars), origin_(origin) {}

  MPoly parse() {
    skip_space();
    if (at_end()) fail("expression", "empty polynomial");
    MPoly p = expression();
    skip_space();
    if (!at_end()) fail("operator or end of input", std::string("unexpected '") + peek() + "'");
    return p;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_])) && text_[pos_] != '\n') ++pos_;
  }

  [[noreturn]] void fail(const std::string& expected, const std::string& detail) const {
    throw SyntaxError(origin_.line, origin_.column + pos_, expected, detail);
  }

  MPoly expression() {
    MPoly acc = term();
    for (;;) {
      skip_space();
      char c = peek();
      if (c != '+' && c != '-') return acc;
      ++pos_;
      MPoly rhs = term();
      if (c == '+') acc += rhs; else acc -= rhs;
    }
  }

  MPoly term() {
    MPoly acc = unary();
    for (;;) {
      skip_space();
      if (peek() != '*') return acc;
      ++pos_;
      acc = acc * unary();
    }
  }

  MPoly unary() {
    skip_space();
    if (peek() == '-') {
      ++pos_;
      return -unary();
    }
    if (peek() == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  MPoly power() {
    MPoly base = primary();
    skip_space();
    if (peek() != '^') return base;
    ++pos_;
    skip_space();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("nonnegative integer exponent", "");
    Int e = integer_literal();
    if (e > kMaxExponent) fail("exponent at most " + std::to_string(kMaxExponent), "exponent too large");
    return pow(base, static_cast<unsigned>(e.get_ui()));
  }

  Int integer_literal() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return Int(std::string(text_.substr(start, pos_ - start)));
  }

  MPoly primary() {
    skip_space();
    const std::size_t nv = vars_.size();
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) return MPoly::constant(nv, integer_literal());
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      auto it = std::find(vars_.begin(), vars_.end(), name);
      if (it == vars_.end()) {
        throw Error(ErrorCode::UnknownVariable,
                    "line " + std::to_string(origin_.line) + ", column " +
                        std::to_string(origin_.column + start) + ": unknown variable '" + name + "'");
      }
      return MPoly::variable(nv, static_cast<std::size_t>(it - vars_.begin()));
    }
    if (c == '(') {
      ++pos_;
      MPoly inner = expression();
      skip_space();
      if (peek() != ')') fail("')'", at_end() ? "unbalanced parenthesis" : std::string("found '") + peek() + "'");
      ++pos_;
      return inner;
    }
    fail("integer, variable or '('", at_end() ? "unexpected end of input" : std::string("found '") + c + "'");
  }

  std::string_view text_;
  const std::vector<std::string>& vars_;
  SourcePos origin_;
  std::size_t pos_ = 0;
};

}  // namespace

MPoly parse_polynomial(std::string_view text, const std::vector<std::string>& variables,
                       SourcePos origin) {
  return Parser(text, variables, origin).parse();
}

}  // namespace zetalab::expr
