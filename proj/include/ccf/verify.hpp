#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ccf/quaternion.hpp"

namespace ccf {

inline constexpr std::string_view kToolVersion = "0.1.0";

enum class Status { Pass, Fail, Discrepancy, Skipped };
std::string_view status_name(Status s);

struct CheckResult {
  std::string id;
  Status status = Status::Skipped;
  std::string details;
  nlohmann::json payload = nlohmann::json::object();
  double elapsed_ms = 0;
};

enum class Scope { All, Cf, Sequences, Aut, Braid, MatrixIso, Jordan };
std::string_view scope_name(Scope s);
/// Throws std::invalid_argument.
Scope parse_scope(std::string_view text);

struct RunOptions {
  Scope scope = Scope::All;
  std::vector<RatioConvention> conventions{RatioConvention::Plain, RatioConvention::Star};
};

struct RunReport {
  Scope scope = Scope::All;
  std::vector<RatioConvention> conventions;
  std::vector<CheckResult> checks; // sorted by id
  double total_elapsed_ms = 0;

  std::size_t count(Status s) const;
  const CheckResult* find(std::string_view id) const;
};

RunReport run_verify(const RunOptions& options);

/// 0 when no check failed, 1 otherwise.
int exit_code(const RunReport& r);

/// Timing lives only in "elapsed_ms" and "total_elapsed_ms".
nlohmann::json report_json(const RunReport& r);
std::string report_markdown(const RunReport& r);

} // namespace ccf
