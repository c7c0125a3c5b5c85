#pragma once

// Textual variety descriptions: an affine or projective system of integer
// polynomial equations, viewed over F_q with q = p^e.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "zetalab/expr.hpp"

namespace zetalab::variety {

enum class Ambient { Affine, Projective };

struct VarietyLimits {
  std::size_t max_variables = 8;
  std::uint64_t max_prime = std::uint64_t{1} << 31;
  unsigned max_base_degree = 24;
};

struct Equation {
  std::string name;
  expr::MPoly poly;
};

struct VarietySpec {
  std::uint64_t p = 2;
  unsigned e = 1;
  Ambient ambient = Ambient::Affine;
  // Affine(n) has variables x0..x{n-1}; Projective(n) has x0..xn.
  unsigned n = 0;
  std::vector<Equation> equations;
  std::string name;

  std::size_t num_variables() const { return ambient == Ambient::Affine ? n : n + 1; }
  std::vector<std::string> variable_names() const;
};

std::vector<std::string> variable_names(std::size_t count);

// Header `p=<int> e=<int> <affine|projective> n=<int>` followed by
// `<name>: <polynomial>` lines. Blank lines and lines starting with '#' are
// ignored.
VarietySpec parse_variety(std::string_view text, std::string name = "",
                          const VarietyLimits& limits = {});
VarietySpec load_variety(const std::string& path, const VarietyLimits& limits = {});

// Text accepted by parse_variety that reproduces the description.
std::string render(const VarietySpec& spec);

// Field and equations only; the display name and equation labels are excluded.
std::string canonical_form(const VarietySpec& spec);
// 16 hex digits of FNV-1a 64 over canonical_form.
std::string digest(const VarietySpec& spec);

// Same equations, base field F_{p^e} replaced by F_{p^new_e}.
VarietySpec with_base_degree(const VarietySpec& spec, unsigned new_e);

// Closed stratum X ∩ {x_k = 0}.
VarietySpec hyperplane_section(const VarietySpec& spec, std::size_t k);

// Open stratum X ∩ {x_k != 0}. Projective input is dehomogenized at x_k (an
// affine spec in n variables); affine input gains a variable z with x_k*z = 1.
VarietySpec open_complement(const VarietySpec& spec, std::size_t k);

}  // namespace zetalab::variety
