#include "gdold/report.hpp"

#include <sstream>

#include "gdold/numeric.hpp"

namespace gdold {

AnalysisReport analyze(int m, const std::vector<int>& parts, int max_degree) {
  DoldDescriptor dold{m, FlagDescriptor{parts}};
  dold.validate();
  if (dold.flag.r() < 2) {
    throw std::invalid_argument("analyze: the flag must have at least two blocks");
  }
  if (dold.flag.n() > Monomial::kMaxVars) {
    throw std::invalid_argument(
        "analyze: total flag size n <= 8 required for cohomology computations");
  }
  const FlagManifold X(dold.flag);

  AnalysisReport rep;
  rep.m = m;
  rep.parts = parts;
  rep.n = dold.flag.n();
  rep.r = dold.flag.r();
  rep.d = dold.flag.complex_dim();
  rep.dim_p = dold.dim();
  rep.orientable = is_orientable_P(dold);
  const bool x_spin = X.is_spin();
  rep.spin = is_spin_P(dold, x_spin);
  rep.spin_note = spin_convention_sensitive(dold, x_spin);
  rep.euler = euler_char_P(dold);
  const int cap = max_degree < 0 ? dold.dim() : max_degree;
  for (const SWClass& w : sw_total_P(dold, cap)) {
    rep.sw.push_back(w.to_string());
  }
  rep.stable = stably_parallelizable_verdict(m, dold.flag);
  rep.parallel = parallelizable_verdict(m, dold.flag);
  rep.cobordism = cobordism_verdict(m, dold.flag);
  rep.span = span_bounds(dold);
  return rep;
}

nlohmann::json verdict_to_json(const Verdict& v) {
  nlohmann::json j;
  j["state"] = to_string(v.state);
  j["rule"] = v.rule_id;
  j["citation"] = v.citation;
  j["witness"] = nlohmann::json::object();
  for (const auto& [key, value] : v.witness) {
    j["witness"][key] = value;
  }
  return j;
}

nlohmann::json report_to_json(const AnalysisReport& rep) {
  nlohmann::json j;
  j["input"]["m"] = rep.m;
  j["input"]["parts"] = rep.parts;
  j["dimensions"]["n"] = rep.n;
  j["dimensions"]["r"] = rep.r;
  j["dimensions"]["complex_dim_x"] = rep.d;
  j["dimensions"]["dim_p"] = rep.dim_p;
  j["orientable"] = rep.orientable;
  j["spin"] = rep.spin;
  if (rep.spin_note) {
    j["spin_note"] = spin_note_text();
  }
  j["euler_char"] = rep.euler;
  j["sw"] = rep.sw;
  j["verdicts"]["stably_parallelizable"] = verdict_to_json(rep.stable);
  j["verdicts"]["parallelizable"] = verdict_to_json(rep.parallel);
  j["verdicts"]["cobordism"] = verdict_to_json(rep.cobordism);
  j["span"]["lower"] = rep.span.lower;
  if (rep.span.upper.has_value()) {
    j["span"]["upper"] = *rep.span.upper;
  } else {
    j["span"]["upper"] = nullptr;
  }
  return j;
}

namespace {

void append_verdict(std::ostringstream& os, const std::string& label, const Verdict& v) {
  os << label << ": " << to_string(v.state) << " (rule " << v.rule_id << ")\n";
  os << "  citation: " << v.citation << "\n";
  if (!v.witness.empty()) {
    os << "  witness:";
    for (const auto& [key, value] : v.witness) {
      os << " " << key << "=" << value;
    }
    os << "\n";
  }
}

}  // namespace

std::string report_to_text(const AnalysisReport& rep) {
  std::ostringstream os;
  os << "P(m, X) with m = " << rep.m << ", parts = (";
  for (std::size_t i = 0; i < rep.parts.size(); ++i) {
    if (i > 0) {
      os << ", ";
    }
    os << rep.parts[i];
  }
  os << ")\n";
  os << "dim P = " << rep.dim_p << " (n = " << rep.n << ", r = " << rep.r
     << ", complex dim X = " << rep.d << ")\n";
  os << "orientable: " << (rep.orientable ? "yes" : "no") << "\n";
  os << "spin: " << (rep.spin ? "yes" : "no") << "\n";
  if (rep.spin_note) {
    os << "spin note: " << spin_note_text() << "\n";
  }
  os << "euler characteristic: " << rep.euler << "\n";
  for (std::size_t k = 0; k < rep.sw.size(); ++k) {
    os << "w" << k << " = " << rep.sw[k] << "\n";
  }
  append_verdict(os, "stably parallelizable", rep.stable);
  append_verdict(os, "parallelizable", rep.parallel);
  append_verdict(os, "cobordism class nonzero", rep.cobordism);
  os << "span bounds: lower = " << rep.span.lower << ", upper = ";
  if (rep.span.upper.has_value()) {
    os << *rep.span.upper;
  } else {
    os << "unknown";
  }
  os << "\n";
  return os.str();
}

std::string spin_note_text() {
  return "spin decided by the x^2 coefficient binom(m+1+d,2) of w2; a convention "
         "summing binom(m+1,2)+binom(d,2) would disagree for these parameters";
}

}  // namespace gdold
