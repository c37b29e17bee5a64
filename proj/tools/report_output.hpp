#pragma once

#include <string>

#include "mulideal/check_report.hpp"
#include "mulideal/io.hpp"

namespace mulideal::cli {

enum ExitCode { kSuccess = 0, kCheckFailed = 1, kInputError = 2 };

struct Output {
  io::Json json;
  std::string table;
  int code = kSuccess;
};

std::string report_table(const CheckReport& report);

/// JSON report, table text, and exit code 0 or 1 by verdict.
Output check_output(const CheckReport& report);

}  // namespace mulideal::cli
