#pragma once

#include <map>
#include <string>

namespace gdold {

/// Three-valued outcome of a decision procedure. Open means the
/// implemented criteria genuinely do not decide the question for these
/// parameters; it is a first-class answer, not an error.
enum class VerdictState { Holds, Fails, Open };

[[nodiscard]] const char* to_string(VerdictState s);

/// A decided (or explicitly open) question, carrying a machine-readable rule
/// tag, a self-contained mathematical justification, and the numeric witness
/// data that the rule consumed.
struct Verdict {
  VerdictState state = VerdictState::Open;
  std::string rule_id;
  std::string citation;
  std::map<std::string, std::string> witness;
};

}  // namespace gdold
