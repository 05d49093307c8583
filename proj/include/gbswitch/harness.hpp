#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "gbswitch/ksz.hpp"

namespace gbswitch::cli {

inline constexpr const char* kCsvHeader =
    "command,m,n,p,r,seed,method,value,reference,verdict,runtime_ms";

/// One output row. Empty strings are written as empty CSV fields and as
/// null in JSON.
struct ExperimentRecord {
  std::string command;
  std::string m;
  std::string n;
  std::string p;
  std::string r;
  std::string seed;
  std::string method;
  std::string value;
  std::string reference;
  Verdict verdict = Verdict::Info;
  std::int64_t runtime_ms = 0;
  /// Witness vectors as a JSON array; JSON output only.
  std::string witness;
};

std::string format_csv(const std::vector<ExperimentRecord>& rows);
std::string format_json(const std::vector<ExperimentRecord>& rows);

/// Shortest decimal that round-trips the double.
std::string format_number(double value);

/// Exit codes: 0 success/PASS, 1 any FAIL row, 2 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gbswitch::cli
