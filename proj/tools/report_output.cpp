#include "report_output.hpp"

#include <sstream>

namespace mulideal::cli {

std::string report_table(const CheckReport& report) {
  std::ostringstream os;
  os << report.name << ": " << (report.passed ? "pass" : "fail") << '\n';
  for (const auto& c : report.comparisons) {
    os << "  [" << (c.holds ? "ok" : "FAIL") << "] " << c.label << '\n';
  }
  for (const auto& [key, value] : report.notes.items()) os << "  " << key << " = " << value.dump() << '\n';
  if (report.witness) {
    const auto& w = *report.witness;
    os << "  witness: " << w.exponent.to_string() << " in " << w.comparison;
    if (w.coefficient) os << " at c = " << w.coefficient->to_string();
    os << '\n';
  }
  return os.str();
}

Output check_output(const CheckReport& report) {
  return Output{io::report_json(report), report_table(report), report.passed ? kSuccess : kCheckFailed};
}

}  // namespace mulideal::cli
