#include "zetalab/pipeline.hpp"

#include <fstream>
#include <sstream>

namespace zetalab::pipeline {

namespace {
// what() without the leading "<code>: " the base class adds.
std::string strip_code(const Error& e) {
  std::string w = e.what();
  const std::string prefix = std::string(to_string(e.code())) + ": ";
  return w.rfind(prefix, 0) == 0 ? w.substr(prefix.size()) : w;
}
}  // namespace

StageError::StageError(std::string stage, std::string input, const Error& inner, std::exception_ptr cause)
    : Error(inner.code(), stage + " stage, " + input + ": " + strip_code(inner)),
      stage_(std::move(stage)),
      input_(std::move(input)),
      cause_(std::move(cause)) {}

namespace {

template <class F>
auto in_stage(const char* stage, const std::string& input, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const StageError&) {
    throw;
  } catch (const Error& e) {
    throw StageError(stage, input, e, std::current_exception());
  }
}

std::string describe_spec(const variety::VarietySpec& spec) {
  return "variety " + (spec.name.empty() ? std::string("<unnamed>") : spec.name) + " [" + variety::digest(spec) +
         "]";
}

}  // namespace

ZetaResult zeta_of_variety(const variety::VarietySpec& spec, const PipelineOptions& options,
                           std::optional<std::size_t> terms) {
  const std::string input = describe_spec(spec);
  counts::CountSeries series;
  if (terms) {
    in_stage("count", input, [&] { counts::extend_series(spec, series, *terms, options.counts); });
    auto z = in_stage("reconstruct", input, [&] {
      return zeta::reconstruct_rational(zeta::series_from_counts(series.counts), spec.p, spec.e,
                                        options.reconstruct);
    });
    return {std::move(z), std::move(series.counts)};
  }
  std::size_t best = 0;
  for (unsigned D = 1; D <= options.reconstruct.max_degree; ++D) {
    const std::size_t M = zeta::terms_needed(D, options.reconstruct.guard) - 1;
    in_stage("count", input, [&] { counts::extend_series(spec, series, M, options.counts); });
    auto attempt = in_stage("reconstruct", input, [&] {
      return zeta::try_pade(zeta::series_from_counts(series.counts), D, spec.p, spec.e);
    });
    if (attempt.fit) return {std::move(*attempt.fit), std::move(series.counts)};
    best = std::max(best, attempt.residual_position);
  }
  throw StageError("reconstruct", input,
                   NoStableFit(best, "no fit up to total degree " + std::to_string(options.reconstruct.max_degree)),
                   nullptr);
}

std::vector<Int> parse_counts(std::string_view text) {
  std::vector<Int> out;
  std::istringstream in{std::string(text)};
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::string m_text, n_text, extra;
    fields >> m_text >> n_text;
    if (n_text.empty() || (fields >> extra))
      throw SyntaxError(lineno, first + 1, "`m N_m`", "one pair of integers per line");
    Int m, n;
    if (m.set_str(m_text, 10) != 0 || n.set_str(n_text, 10) != 0)
      throw SyntaxError(lineno, first + 1, "integer", "in `" + line + "`");
    if (m != static_cast<unsigned long>(out.size() + 1))
      throw SyntaxError(lineno, first + 1, "m = " + std::to_string(out.size() + 1), "counts must be consecutive from 1");
    out.push_back(n);
  }
  return out;
}

std::vector<Int> load_counts(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot read counts file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_counts(buf.str());
}

std::string render_counts(const std::vector<Int>& counts) {
  std::string out;
  for (std::size_t m = 1; m <= counts.size(); ++m) out += std::to_string(m) + " " + counts[m - 1].get_str() + "\n";
  return out;
}

ZetaResult zeta_of_counts(const std::vector<Int>& counts, std::uint64_t p, unsigned e,
                          const PipelineOptions& options) {
  auto z = in_stage("reconstruct", std::to_string(counts.size()) + " supplied counts", [&] {
    return zeta::reconstruct_rational(zeta::series_from_counts(counts), p, e, options.reconstruct);
  });
  return {std::move(z), counts};
}

std::string Input::describe() const {
  if (variety_path) return "variety file " + *variety_path;
  return "zeta literal " + zeta_literal.value_or("") + " over F_" + std::to_string(p) + "^" + std::to_string(e);
}

zeta::ZetaFunction load_zeta(const Input& input, const PipelineOptions& options, std::vector<Int>* counts_out) {
  if (input.variety_path.has_value() == input.zeta_literal.has_value())
    throw std::invalid_argument("exactly one of a variety file and a zeta literal is required");
  if (input.zeta_literal) {
    return in_stage("parse", input.describe(),
                    [&] { return zeta::parse_zeta_literal(*input.zeta_literal, input.p, input.e); });
  }
  auto spec = in_stage("parse", input.describe(), [&] { return variety::load_variety(*input.variety_path); });
  auto result = zeta_of_variety(spec, options, input.terms);
  if (counts_out) *counts_out = result.counts;
  return std::move(result.zeta);
}

PipelineResult run_pipeline(const Input& input, const Suites& suites, const PipelineOptions& options) {
  std::vector<Int> counts;
  auto z = load_zeta(input, options, &counts);
  auto d = in_stage("classify", input.describe(), [&] { return weil::classify(z); });
  verify::VerificationReport report;
  bool any = false;
  auto add = [&](const verify::VerificationReport& r) {
    if (!any) {
      report = r;
      any = true;
    } else {
      report.append(r);
    }
  };
  in_stage("verify", input.describe(), [&] {
    if (suites.proper_smooth) add(verify::verify_proper_smooth(z, d, {suites.dim}));
    for (unsigned r : suites.sign) add(verify::verify_sign(z, d, r));
    if (suites.general || !any) add(verify::verify_general(z, d));
  });
  report.input = input.describe();
  if (!counts.empty()) report.header.push_back("counts: N_1..N_" + std::to_string(counts.size()));
  return {std::move(z), std::move(counts), std::move(report)};
}

void write_report(const std::string& path, const verify::VerificationReport& report) {
  const std::string text = report.machine();
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::Io, "cannot open report file " + path);
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out.flush()) throw Error(ErrorCode::Io, "cannot write report file " + path);
}

}  // namespace zetalab::pipeline
