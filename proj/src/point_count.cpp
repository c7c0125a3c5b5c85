#include "zetalab/point_count.hpp"

#include "count_engine.hpp"
#include "zetalab/count_cache.hpp"
#include "zetalab/error.hpp"

namespace zetalab::counts {

Int field_order(const variety::VarietySpec& spec, unsigned m) {
  Int q;
  mpz_ui_pow_ui(q.get_mpz_t(), spec.p, static_cast<unsigned long>(spec.e) * m);
  return q;
}

Int required_candidates(const variety::VarietySpec& spec, unsigned m) {
  return detail::candidates(detail::plan_variety(spec), field_order(spec, m));
}

std::size_t largest_feasible_terms(const variety::VarietySpec& spec, const Int& budget, std::size_t limit) {
  const auto plans = detail::plan_variety(spec);
  std::size_t M = 0;
  while (M < limit && detail::candidates(plans, field_order(spec, static_cast<unsigned>(M + 1))) <= budget) ++M;
  return M;
}

namespace {

void check_budget(const variety::VarietySpec& spec, const std::vector<detail::AffinePlan>& plans, unsigned m,
                  const CountOptions& options) {
  if (m < 1) throw std::invalid_argument("extension degree must be at least 1");
  Int need = detail::candidates(plans, field_order(spec, m));
  if (need > options.budget) throw BudgetExceeded(need, options.budget, largest_feasible_terms(spec, options.budget));
}

}  // namespace

Int count_points(const variety::VarietySpec& spec, unsigned m, const CountOptions& options) {
  const auto plans = detail::plan_variety(spec);
  check_budget(spec, plans, m, options);
  return detail::execute(plans, spec.p, spec.e * m, options.jobs);
}

Int count_chart(const variety::VarietySpec& spec, std::size_t k, unsigned m, const CountOptions& options) {
  std::vector<detail::AffinePlan> plans;
  if (spec.ambient == variety::Ambient::Affine) {
    if (k != 0) throw std::out_of_range("affine specs have a single chart");
    plans = detail::plan_variety(spec);
  } else {
    if (k >= spec.num_variables()) throw std::out_of_range("chart index out of range");
    plans.push_back(detail::plan_affine(detail::chart_equations(spec, k), spec.num_variables() - k - 1, spec.p));
  }
  check_budget(spec, plans, m, options);
  return detail::execute(plans, spec.p, spec.e * m, options.jobs);
}

void extend_series(const variety::VarietySpec& spec, CountSeries& series, std::size_t M,
                   const CountOptions& options) {
  if (series.spec_digest.empty()) series.spec_digest = variety::digest(spec);
  if (series.counts.size() >= M) return;
  std::map<unsigned, Int> cached;
  std::optional<CountCache> cache;
  if (!options.cache_path.empty()) {
    cache.emplace(options.cache_path);
    cached = cache->load(series.spec_digest);
  }
  const auto plans = detail::plan_variety(spec);
  auto known = [&](unsigned m) { return m <= series.counts.size() || cached.count(m) > 0; };
  for (unsigned m = 1; m <= M; ++m) {
    if (known(m)) continue;
    Int need = detail::candidates(plans, field_order(spec, m));
    if (need > options.budget) {
      std::size_t feasible = 0;
      while (feasible < M && (known(static_cast<unsigned>(feasible + 1)) ||
                              detail::candidates(plans, field_order(spec, static_cast<unsigned>(feasible + 1))) <=
                                  options.budget))
        ++feasible;
      throw BudgetExceeded(need, options.budget, feasible);
    }
  }
  for (unsigned m = static_cast<unsigned>(series.counts.size()) + 1; m <= M; ++m) {
    auto it = cached.find(m);
    if (it != cached.end()) {
      series.counts.push_back(it->second);
      continue;
    }
    Int n = detail::execute(plans, spec.p, spec.e * m, options.jobs);
    if (cache) cache->store(series.spec_digest, m, n);
    series.counts.push_back(n);
  }
}

CountSeries count_series(const variety::VarietySpec& spec, std::size_t M, const CountOptions& options) {
  CountSeries series;
  extend_series(spec, series, M, options);
  return series;
}

}  // namespace zetalab::counts
