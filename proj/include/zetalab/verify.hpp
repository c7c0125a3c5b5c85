#pragma once

// Theorem suites over a zeta function and their reports.

#include <optional>
#include <string>
#include <vector>

#include "zetalab/weil.hpp"
#include "zetalab/zeta.hpp"

namespace zetalab::verify {

enum class Status { Pass, Fail, NotApplicable };
std::string to_string(Status s);

struct CheckRecord {
  std::string name;  // e.g. "SYMMETRY[r=1]"
  std::string anchor;
  Status status = Status::Pass;
  std::string witness;
};

struct VerificationReport {
  std::string input;
  std::vector<std::string> header;  // assertions and context, human report only
  std::vector<CheckRecord> checks;

  bool all_passed() const;
  std::size_t failures() const;
  const CheckRecord* find(const std::string& name) const;
  void append(const VerificationReport& other);

  // One `name<TAB>status<TAB>witness` line per check.
  std::string machine() const;
  std::string human() const;
};

struct ProperSmoothOptions {
  // With a dimension d the weight-0 and weight-2d extremes are also checked.
  std::optional<unsigned> dim;
};

// Caller asserts the zeta function comes from a proper smooth variety.
VerificationReport verify_proper_smooth(const zeta::ZetaFunction& z, const ProperSmoothOptions& options = {});
VerificationReport verify_proper_smooth(const zeta::ZetaFunction& z, const weil::WeightDecomposition& d,
                                        const ProperSmoothOptions& options = {});

// Any separated finite-type scheme: odd-weight degree parity, mod-2 slope
// autoduality, and the sign checks for every odd weight present.
VerificationReport verify_general(const zeta::ZetaFunction& z);
VerificationReport verify_general(const zeta::ZetaFunction& z, const weil::WeightDecomposition& d);

// r must be odd.
VerificationReport verify_sign(const zeta::ZetaFunction& z, unsigned r);
VerificationReport verify_sign(const zeta::ZetaFunction& z, const weil::WeightDecomposition& d, unsigned r);

}  // namespace zetalab::verify
