#include "modrep/report.hpp"

#include <algorithm>

#include "modrep/version.hpp"

namespace modrep {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "fail";
    case CheckStatus::Undetermined:
      return "undetermined";
    case CheckStatus::OutOfRange:
      return "out-of-range";
  }
  return "?";
}

bool RunReport::all_passed() const { return failures() == 0; }

std::size_t RunReport::failures() const {
  std::size_t n = 0;
  for (const auto& c : checks)
    if (c.status == CheckStatus::Fail) ++n;
  return n;
}

nlohmann::json matrix_to_json(const MatrixFF& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const FieldElement e = m.get(i, j);
      if (m.ctx().m() == 1) {
        row.push_back(e.coeff(0));
      } else {
        nlohmann::json limbs = nlohmann::json::array();
        for (std::uint32_t t = 0; t < m.ctx().m(); ++t)
          limbs.push_back(e.coeff(t));
        row.push_back(limbs);
      }
    }
    rows.push_back(row);
  }
  return rows;
}

nlohmann::json RunReport::to_json() const {
  std::vector<CheckResult> sorted = checks;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const CheckResult& a, const CheckResult& b) {
                     return a.name < b.name;
                   });
  nlohmann::json out;
  out["command"] = command;
  out["params"] = params;
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : sorted) {
    nlohmann::json jc;
    jc["name"] = c.name;
    jc["status"] = to_string(c.status);
    jc["detail"] = c.detail;
    if (c.witness) jc["witness"] = matrix_to_json(*c.witness);
    arr.push_back(jc);
  }
  out["checks"] = arr;
  out["meta"] = {{"version", kVersion}, {"seed", seed}, {"elapsed_ms", 0}};
  return out;
}

std::string RunReport::to_json_string() const { return to_json().dump(2) + "\n"; }

std::string RunReport::to_text() const {
  std::vector<CheckResult> sorted = checks;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const CheckResult& a, const CheckResult& b) {
                     return a.name < b.name;
                   });
  std::string out = command + "  " + params.dump() + "\n";
  std::size_t pass = 0;
  for (const auto& c : sorted) {
    std::string status = to_string(c.status);
    status.resize(13, ' ');
    for (auto& ch : status)
      if (ch >= 'a' && ch <= 'z') ch = static_cast<char>(ch - 'a' + 'A');
    out += "  " + status + " " + c.name;
    if (!c.detail.empty()) out += "  -- " + c.detail;
    out += "\n";
    if (c.status != CheckStatus::Fail) ++pass;
  }
  out += std::to_string(pass) + "/" + std::to_string(sorted.size()) +
         " checks passed\n";
  return out;
}

}  // namespace modrep
