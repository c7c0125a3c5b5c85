#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "zetalab/poly.hpp"
#include "zetalab/variety.hpp"

namespace zetalab::counts {

struct CountOptions {
  // Cap on enumerated candidates per count (after free variables are
  // factored out and solved variables eliminated).
  Int budget = 100000000;
  unsigned jobs = 1;
  // Empty disables the on-disk cache.
  std::string cache_path;
};

struct CountSeries {
  std::string spec_digest;
  std::vector<Int> counts;  // counts[m-1] = N_m
};

// q^m = p^(e*m) for the variety's base field.
Int field_order(const variety::VarietySpec& spec, unsigned m);

// Candidates the engine enumerates to compute N_m.
Int required_candidates(const variety::VarietySpec& spec, unsigned m);

// Largest M such that every N_m with m <= M fits the budget (capped at limit).
std::size_t largest_feasible_terms(const variety::VarietySpec& spec, const Int& budget,
                                   std::size_t limit = 64);

// N_m = #X(F_{q^m}). Throws BudgetExceeded.
Int count_points(const variety::VarietySpec& spec, unsigned m, const CountOptions& options = {});

// Points of projective chart k (x0..x{k-1} = 0, xk = 1). For affine input
// only k = 0 is valid and equals count_points.
Int count_chart(const variety::VarietySpec& spec, std::size_t k, unsigned m,
                const CountOptions& options = {});

// [N_1..N_M], consulting and extending the cache when configured. The budget
// is checked for every uncached m before any counting starts.
CountSeries count_series(const variety::VarietySpec& spec, std::size_t M, const CountOptions& options = {});

// Appends N_{len+1}..N_M to a series of this spec with the same cache and
// budget rules; earlier entries are kept.
void extend_series(const variety::VarietySpec& spec, CountSeries& series, std::size_t M,
                   const CountOptions& options = {});

}  // namespace zetalab::counts
