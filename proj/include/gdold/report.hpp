#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "gdold/dold.hpp"
#include "gdold/verdicts.hpp"

namespace gdold {

/// Everything the analyze command reports about one P(m, X).
struct AnalysisReport {
  int m = 0;
  std::vector<int> parts;
  int n = 0;
  int r = 0;
  int d = 0;      // complex dimension of X
  int dim_p = 0;  // m + 2d
  bool orientable = false;
  bool spin = false;
  bool spin_note = false;  // the x^2-coefficient convention is decisive here
  std::uint64_t euler = 0;
  std::vector<std::string> sw;  // rendered w_0 .. w_cap
  Verdict stable;
  Verdict parallel;
  Verdict cobordism;
  SpanBounds span;
};

/// Compute the full report. Requires m >= 1, at least two blocks, and total
/// flag size n <= 8 (the spin test needs the cohomology engine); throws
/// std::invalid_argument otherwise. max_degree = -1 caps the rendered
/// Stiefel-Whitney list at dim P.
[[nodiscard]] AnalysisReport analyze(int m, const std::vector<int>& parts, int max_degree = -1);

[[nodiscard]] nlohmann::json verdict_to_json(const Verdict& v);
[[nodiscard]] nlohmann::json report_to_json(const AnalysisReport& rep);
[[nodiscard]] std::string report_to_text(const AnalysisReport& rep);

/// Note text emitted when the spin verdict is convention-sensitive.
[[nodiscard]] std::string spin_note_text();

}  // namespace gdold
