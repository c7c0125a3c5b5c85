#pragma once

// Point-counting engine behind count_points. A system is split into
// charts (projective input) and, per chart, into connected components of
// the variable/equation incidence graph. Within a component each "solved"
// variable occurs in exactly one equation and is counted by univariate root
// counting; the remaining variables are enumerated.

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "zetalab/expr.hpp"
#include "zetalab/poly.hpp"
#include "zetalab/variety.hpp"

namespace zetalab::counts::detail {

struct Monomial {
  std::uint32_t residue;  // coefficient reduced into [0, p)
  std::vector<std::pair<std::uint16_t, std::uint16_t>> powers;  // (enumerated var, exponent)
};
using Compiled = std::vector<Monomial>;

struct SolvedEquation {
  // Coefficient of v^k as a polynomial in the enumerated variables.
  std::vector<Compiled> by_power;
};

struct Component {
  unsigned num_enumerated = 0;
  std::vector<unsigned> max_degree;  // per enumerated variable
  std::vector<Compiled> checks;      // equations without a solved variable
  std::vector<SolvedEquation> solved;
};

struct AffinePlan {
  bool empty = false;  // some equation reduced to a nonzero constant
  unsigned free_vars = 0;
  std::vector<Component> components;
};

AffinePlan plan_affine(const std::vector<expr::MPoly>& equations, std::size_t num_vars, std::uint64_t p);

// Equations of chart k: x0..x{k-1} = 0, xk = 1, remaining coordinates free.
std::vector<expr::MPoly> chart_equations(const variety::VarietySpec& spec, std::size_t k);

// One plan per chart for projective input, a single plan for affine input.
std::vector<AffinePlan> plan_variety(const variety::VarietySpec& spec);

// Enumerated candidates summed over charts and components.
Int candidates(const std::vector<AffinePlan>& plans, const Int& q);

Int execute(const std::vector<AffinePlan>& plans, std::uint64_t p, unsigned degree, unsigned jobs);

// Largest field order handled by the log-table backend.
constexpr std::uint64_t kLogFieldMax = std::uint64_t{1} << 26;

}  // namespace zetalab::counts::detail
