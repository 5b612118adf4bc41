#pragma once

// Check results shared by the verification routines and the command line
// front end, plus the JSON run report.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "modrep/matrix.hpp"

namespace modrep {

enum class CheckStatus { Pass, Fail, Undetermined, OutOfRange };

std::string to_string(CheckStatus s);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Fail;
  std::string detail;
  std::optional<MatrixFF> witness;  // e.g. an isomorphism that was found
};

/// One CLI invocation's result.  Serialization is deterministic: keys are
/// emitted sorted and checks are sorted by name, so identical inputs and
/// seed produce identical bytes.  Wall-clock timing goes to stderr instead
/// of the report for exactly that reason; elapsed_ms is kept in the schema
/// but pinned to zero.
struct RunReport {
  std::string command;
  nlohmann::json params;
  std::vector<CheckResult> checks;
  std::uint64_t seed = 0;

  bool all_passed() const;
  /// Pass/fail counting for the exit code; undetermined and out-of-range
  /// statuses are not failures.
  std::size_t failures() const;

  nlohmann::json to_json() const;
  /// to_json() rendered with 2-space indent and a trailing newline.
  std::string to_json_string() const;
  std::string to_text() const;
};

nlohmann::json matrix_to_json(const MatrixFF& m);

}  // namespace modrep
