#pragma once

#include "a2twist/report.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace a2twist {

inline constexpr const char* kToolVersion = "0.1.0";

struct RunConfig {
  long cutoff = 40;
  long presentation_cutoff = 16;
  long exactness_cutoff = 30;
  long relations_cutoff = 24;
  long mode_bound = 12;       // |4n| bound for the bracket table
  long t_max_quarters = 24;   // quadratic and stability checks run for t ≤ t_max
  long shift_cutoff = 16;     // PBW monomials checked against the shift maps
  unsigned parallelism = 1;
  std::vector<std::string> suites;

  json to_json() const;
};

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Every suite name understood by run_verify, in execution order.
const std::vector<std::string>& all_suites();
/// Throws ConfigError on inconsistent cutoffs or unknown suite names.
void validate(const RunConfig& cfg);

/// {tool_version, config, suites: [{name, pass, details}]}
json run_verify(const RunConfig& cfg);
/// {tool_version, cutoff, match, buckets: [{charge, qweight, dim, oracle, match}]}
json run_dims(long cutoff, unsigned parallelism = 1);

}  // namespace a2twist
