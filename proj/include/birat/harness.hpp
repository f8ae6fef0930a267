#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "birat/ratmap.hpp"
#include "birat/surfaces.hpp"

namespace birat {

using Json = nlohmann::json;

struct ExpectedValue {
  Json value;
  std::string citation;
};

struct RowPlan {
  SurfaceTag tag = SurfaceTag::DP5;
  std::int64_t discriminant = 0;
  int degree = 0;        // d of the linear system
  int multiplicity = 1;  // e
  std::map<std::string, ExpectedValue> expected;
  bool with_inverse = false;
  bool with_normal_bundle = false;
  bool with_line_counts = false;
};

/// Reads the expected-value file; throws std::runtime_error on schema mismatch.
std::vector<RowPlan> load_plans(const std::string& path);
std::vector<RowPlan> parse_plans(const Json& doc);

enum class CheckStatus { Pass, Fail, Timeout, Skipped, Error };
std::string status_name(CheckStatus s);

struct CheckResult {
  std::string name;
  Json expected;
  Json computed;
  CheckStatus status = CheckStatus::Skipped;
  std::string citation;
  double seconds = 0;
  std::string note;
};

struct RowReport {
  std::string row;
  Coef prime = 0;
  std::uint64_t seed = 0;  // seed the reported values come from
  int retries = 0;
  double seconds = 0;
  std::vector<CheckResult> checks;
  std::vector<std::string> diagnostics;

  bool passed() const;
  const CheckResult* find(const std::string& name) const;
};

struct RunOptions {
  Coef prime = 32003;
  std::uint64_t seed = 1;
  double step_budget_seconds = 1800;
  int max_retries = 3;
};

/// The full pipeline for one surface.  Steps past a failed one that need its
/// output are reported as skipped; genericity failures reseed the whole row.
RowReport run_row(const RowPlan& plan, const RunOptions& opts);

/// Fiber checks: a smooth rational curve of degree e meeting S in length 3e - 1.
CongruenceCertificate certify_congruence_fiber(const Ideal& F, const Ideal& S, int e, Rng& rng);

/// Even d > 6 with 4 ∤ d, 9 ∤ d and no odd prime factor p ≡ 2 (mod 3).
bool admissible(std::int64_t d);
/// 3 S^2 - deg(S)^2.
std::int64_t d_invariant(std::int64_t deg_s, std::int64_t self_intersection);

/// Prime from BIRAT_PRIME, else 32003.
Coef default_prime();

Json report_json(const std::vector<RowReport>& reports);
void emit_report(const std::vector<RowReport>& reports, std::ostream& json_out);
/// Plain-text summary laid out like the two reference tables, plus failures.
std::string format_tables(const std::vector<RowReport>& reports);

}  // namespace birat
