#include "zetalab/variety.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "zetalab/error.hpp"
#include "zetalab/finite_field.hpp"

namespace zetalab::variety {

std::vector<std::string> variable_names(std::size_t count) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < count; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

std::vector<std::string> VarietySpec::variable_names() const {
  return variety::variable_names(num_variables());
}

namespace {

struct Line {
  std::string_view text;
  std::size_t number;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t start = 0, number = 1;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back({line, number++});
    start = end + 1;
  }
  return lines;
}

bool is_blank_or_comment(std::string_view s) {
  for (char c : s) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::uint64_t parse_uint(std::string_view s, std::size_t line, std::size_t col, const char* what) {
  if (s.empty() || s.size() > 18) throw SyntaxError(line, col, what, "expected an integer");
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw SyntaxError(line, col + i, what, std::string("unexpected '") + s[i] + "'");
    v = v * 10 + static_cast<std::uint64_t>(s[i] - '0');
  }
  return v;
}

void parse_header(const Line& line, VarietySpec& spec, const VarietyLimits& limits) {
  bool have_p = false, have_e = false, have_n = false, have_ambient = false;
  std::size_t pos = 0;
  const std::string_view t = line.text;
  while (pos < t.size()) {
    while (pos < t.size() && std::isspace(static_cast<unsigned char>(t[pos]))) ++pos;
    if (pos >= t.size()) break;
    std::size_t start = pos;
    while (pos < t.size() && !std::isspace(static_cast<unsigned char>(t[pos]))) ++pos;
    std::string_view word = t.substr(start, pos - start);
    std::size_t col = start + 1;
    if (word == "affine" || word == "projective") {
      if (have_ambient) throw SyntaxError(line.number, col, "header field", "ambient given twice");
      spec.ambient = word == "affine" ? Ambient::Affine : Ambient::Projective;
      have_ambient = true;
      continue;
    }
    std::size_t eq = word.find('=');
    if (eq == std::string_view::npos)
      throw SyntaxError(line.number, col, "p=, e=, n=, affine or projective",
                        "found '" + std::string(word) + "'");
    std::string_view key = word.substr(0, eq);
    std::uint64_t value = parse_uint(word.substr(eq + 1), line.number, col + eq + 1, "integer value");
    bool* seen = key == "p" ? &have_p : key == "e" ? &have_e : key == "n" ? &have_n : nullptr;
    if (!seen)
      throw SyntaxError(line.number, col, "p=, e=, n=, affine or projective",
                        "unknown key '" + std::string(key) + "'");
    if (*seen) throw SyntaxError(line.number, col, "header field", std::string(key) + " given twice");
    *seen = true;
    if (key == "p") spec.p = value;
    else if (key == "e") spec.e = static_cast<unsigned>(value);
    else spec.n = static_cast<unsigned>(value);
  }
  if (!have_p || !have_e || !have_n || !have_ambient)
    throw SyntaxError(line.number, t.size() + 1, "header `p=<int> e=<int> <affine|projective> n=<int>`",
                      "incomplete header");
  if (spec.p > limits.max_prime || !field::is_prime(spec.p))
    throw Error(ErrorCode::BadFieldParams, "p=" + std::to_string(spec.p) + " is not a supported prime");
  if (spec.e < 1 || spec.e > limits.max_base_degree)
    throw Error(ErrorCode::BadFieldParams, "e=" + std::to_string(spec.e) + " is outside [1, " +
                                               std::to_string(limits.max_base_degree) + "]");
  if (spec.num_variables() > limits.max_variables)
    throw Error(ErrorCode::CapExceeded, std::to_string(spec.num_variables()) +
                                            " variables exceed the cap of " +
                                            std::to_string(limits.max_variables));
}

std::string monomial_text(const expr::Exponents& e, const std::vector<std::string>& names) {
  expr::MPoly m(e.size());
  m.add_term(e, 1);
  return m.to_string(names);
}

void check_homogeneous(const Equation& eq, const std::vector<std::string>& names) {
  const auto& terms = eq.poly.terms();
  if (terms.empty()) return;
  const auto& first = terms.begin()->first;
  unsigned d = expr::total_degree(first);
  for (const auto& [e, c] : terms) {
    if (expr::total_degree(e) != d) {
      throw Error(ErrorCode::NonHomogeneous,
                  "equation '" + eq.name + "' mixes monomials " + monomial_text(first, names) +
                      " (degree " + std::to_string(d) + ") and " + monomial_text(e, names) +
                      " (degree " + std::to_string(expr::total_degree(e)) + ")");
    }
  }
}

}  // namespace

VarietySpec parse_variety(std::string_view text, std::string name, const VarietyLimits& limits) {
  VarietySpec spec;
  spec.name = std::move(name);
  auto lines = split_lines(text);
  std::size_t i = 0;
  while (i < lines.size() && is_blank_or_comment(lines[i].text)) ++i;
  if (i == lines.size()) throw SyntaxError(1, 1, "header line", "empty input");
  parse_header(lines[i++], spec, limits);
  const auto names = spec.variable_names();
  for (; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (is_blank_or_comment(line.text)) continue;
    std::size_t colon = line.text.find(':');
    if (colon == std::string_view::npos)
      throw SyntaxError(line.number, 1, "`<name>: <polynomial>`", "missing ':'");
    std::string_view label = line.text.substr(0, colon);
    while (!label.empty() && std::isspace(static_cast<unsigned char>(label.front()))) label.remove_prefix(1);
    while (!label.empty() && std::isspace(static_cast<unsigned char>(label.back()))) label.remove_suffix(1);
    if (label.empty()) throw SyntaxError(line.number, 1, "equation name", "empty name");
    for (std::size_t k = 0; k < label.size(); ++k) {
      char c = label[k];
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-')
        throw SyntaxError(line.number, k + 1, "equation name", std::string("unexpected '") + c + "'");
    }
    Equation eq;
    eq.name = std::string(label);
    eq.poly = expr::parse_polynomial(line.text.substr(colon + 1), names, {line.number, colon + 2});
    if (spec.ambient == Ambient::Projective) check_homogeneous(eq, names);
    spec.equations.push_back(std::move(eq));
  }
  return spec;
}

VarietySpec load_variety(const std::string& path, const VarietyLimits& limits) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot read variety file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string name = path;
  if (auto slash = name.find_last_of('/'); slash != std::string::npos) name = name.substr(slash + 1);
  if (auto dot = name.rfind('.'); dot != std::string::npos && dot > 0) name = name.substr(0, dot);
  return parse_variety(buf.str(), name, limits);
}

std::string render(const VarietySpec& spec) {
  std::string out = "p=" + std::to_string(spec.p) + " e=" + std::to_string(spec.e) +
                    (spec.ambient == Ambient::Affine ? " affine" : " projective") +
                    " n=" + std::to_string(spec.n) + "\n";
  const auto names = spec.variable_names();
  for (const auto& eq : spec.equations) out += eq.name + ": " + eq.poly.to_string(names) + "\n";
  return out;
}

std::string canonical_form(const VarietySpec& spec) {
  std::string out = "p=" + std::to_string(spec.p) + ";e=" + std::to_string(spec.e) + ";" +
                    (spec.ambient == Ambient::Affine ? "A" : "P") + std::to_string(spec.n);
  for (const auto& eq : spec.equations) {
    out += ";";
    for (const auto& [exps, c] : eq.poly.terms()) {
      out += "[" + c.get_str();
      for (unsigned x : exps) out += "," + std::to_string(x);
      out += "]";
    }
  }
  return out;
}

std::string digest(const VarietySpec& spec) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : canonical_form(spec)) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) out[i] = hex[h & 0xf];
  return out;
}

VarietySpec with_base_degree(const VarietySpec& spec, unsigned new_e) {
  if (new_e < 1) throw Error(ErrorCode::BadFieldParams, "base degree must be at least 1");
  VarietySpec out = spec;
  out.e = new_e;
  return out;
}

VarietySpec hyperplane_section(const VarietySpec& spec, std::size_t k) {
  const std::size_t nv = spec.num_variables();
  if (k >= nv) throw std::out_of_range("hyperplane_section: variable index out of range");
  VarietySpec out = spec;
  out.equations.push_back({"h" + std::to_string(k), expr::MPoly::variable(nv, k)});
  if (!out.name.empty()) out.name += "|x" + std::to_string(k) + "=0";
  return out;
}

namespace {

// Substitutes x_k = 1 and drops that variable.
expr::MPoly dehomogenize(const expr::MPoly& p, std::size_t k) {
  expr::MPoly out(p.num_vars() - 1);
  for (const auto& [e, c] : p.terms()) {
    expr::Exponents reduced;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (i != k) reduced.push_back(e[i]);
    out.add_term(reduced, c);
  }
  return out;
}

// Appends a new variable that no existing term uses.
expr::MPoly widen(const expr::MPoly& p) {
  expr::MPoly out(p.num_vars() + 1);
  for (const auto& [e, c] : p.terms()) {
    expr::Exponents wider = e;
    wider.push_back(0);
    out.add_term(wider, c);
  }
  return out;
}

}  // namespace

VarietySpec open_complement(const VarietySpec& spec, std::size_t k) {
  const std::size_t nv = spec.num_variables();
  if (k >= nv) throw std::out_of_range("open_complement: variable index out of range");
  VarietySpec out = spec;
  out.equations.clear();
  if (spec.ambient == Ambient::Projective) {
    out.ambient = Ambient::Affine;
    for (const auto& eq : spec.equations) out.equations.push_back({eq.name, dehomogenize(eq.poly, k)});
  } else {
    out.n = spec.n + 1;
    for (const auto& eq : spec.equations) out.equations.push_back({eq.name, widen(eq.poly)});
    expr::MPoly unit = expr::MPoly::variable(nv + 1, k) * expr::MPoly::variable(nv + 1, nv) -
                       expr::MPoly::constant(nv + 1, 1);
    out.equations.push_back({"u" + std::to_string(k), unit});
  }
  if (!out.name.empty()) out.name += "|x" + std::to_string(k) + "!=0";
  return out;
}

}  // namespace zetalab::variety
