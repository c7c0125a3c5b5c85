#pragma once

// End-to-end orchestration: counts -> series -> reconstruction -> suites.

#include <cstdint>
#include <exception>
#include <optional>
#include <string>
#include <vector>

#include "zetalab/error.hpp"
#include "zetalab/point_count.hpp"
#include "zetalab/variety.hpp"
#include "zetalab/verify.hpp"
#include "zetalab/zeta.hpp"

namespace zetalab::pipeline {

// A module error annotated with the stage and input it came from; the
// original exception stays reachable through cause().
class StageError : public Error {
 public:
  StageError(std::string stage, std::string input, const Error& inner, std::exception_ptr cause);
  const std::string& stage() const noexcept { return stage_; }
  const std::string& input() const noexcept { return input_; }
  std::exception_ptr cause() const noexcept { return cause_; }

 private:
  std::string stage_;
  std::string input_;
  std::exception_ptr cause_;
};

struct PipelineOptions {
  counts::CountOptions counts;
  zeta::ReconstructOptions reconstruct;
};

struct ZetaResult {
  zeta::ZetaFunction zeta;
  std::vector<Int> counts;  // N_1..N_M actually used
};

// Counts adaptively: N_1..N_{2D+guard} for D = 1, 2, ... until a fit of total
// degree D is accepted. With `terms`, counts exactly that many and
// reconstructs from them. Throws StageError.
ZetaResult zeta_of_variety(const variety::VarietySpec& spec, const PipelineOptions& options = {},
                           std::optional<std::size_t> terms = std::nullopt);

// `m N_m` per line, m = 1, 2, ... consecutively; blank and '#' lines skipped.
std::vector<Int> parse_counts(std::string_view text);
std::vector<Int> load_counts(const std::string& path);
std::string render_counts(const std::vector<Int>& counts);

ZetaResult zeta_of_counts(const std::vector<Int>& counts, std::uint64_t p, unsigned e,
                          const PipelineOptions& options = {});

struct Input {
  // Exactly one of variety_path and zeta_literal.
  std::optional<std::string> variety_path;
  std::optional<std::string> zeta_literal;
  std::uint64_t p = 0;  // zeta literal only
  unsigned e = 1;
  std::optional<std::size_t> terms;
  std::string describe() const;
};

struct Suites {
  bool proper_smooth = false;
  std::optional<unsigned> dim;
  std::vector<unsigned> sign;  // odd weights
  // Runs when no other suite is selected, or when requested.
  bool general = false;
};

struct PipelineResult {
  zeta::ZetaFunction zeta;
  std::vector<Int> counts;
  verify::VerificationReport report;
};

zeta::ZetaFunction load_zeta(const Input& input, const PipelineOptions& options = {},
                             std::vector<Int>* counts_out = nullptr);

PipelineResult run_pipeline(const Input& input, const Suites& suites, const PipelineOptions& options = {});

// Writes the machine-readable report in one piece. Throws Io.
void write_report(const std::string& path, const verify::VerificationReport& report);

}  // namespace zetalab::pipeline
