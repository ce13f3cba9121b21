#include "a2twist/driver.hpp"

#include "a2twist/envelope.hpp"
#include "a2twist/principal.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <optional>

namespace a2twist {

json RunConfig::to_json() const {
  return json{{"cutoff", cutoff},
              {"presentation_cutoff", presentation_cutoff},
              {"exactness_cutoff", exactness_cutoff},
              {"relations_cutoff", relations_cutoff},
              {"mode_bound", mode_bound},
              {"t_max", QuarterInt(t_max_quarters).to_string()},
              {"shift_cutoff", shift_cutoff},
              {"parallelism", parallelism},
              {"suites", suites}};
}

const std::vector<std::string>& all_suites() {
  static const std::vector<std::string> names{"group",      "relations",    "brackets",  "quadratic", "oracle",
                                              "recursion",  "exactness",    "presentation", "shift",  "stability"};
  return names;
}

void validate(const RunConfig& cfg) {
  if (cfg.cutoff < 0 || cfg.presentation_cutoff < 0 || cfg.exactness_cutoff < 0 || cfg.relations_cutoff < 0 ||
      cfg.shift_cutoff < 0 || cfg.mode_bound < 0)
    throw ConfigError("cutoffs and bounds must be nonnegative");
  if (cfg.presentation_cutoff > cfg.cutoff) throw ConfigError("presentation cutoff exceeds the cutoff");
  if (cfg.exactness_cutoff > cfg.cutoff) throw ConfigError("exactness cutoff exceeds the cutoff");
  if (cfg.parallelism == 0) throw ConfigError("parallelism must be at least 1");
  for (const auto& s : cfg.suites)
    if (std::find(all_suites().begin(), all_suites().end(), s) == all_suites().end())
      throw ConfigError("unknown suite: " + s);
}

namespace {

long isqrt(long n) {
  long r = static_cast<long>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

json run_verify(const RunConfig& cfg) {
  validate(cfg);
  std::vector<std::string> order;
  for (const auto& s : all_suites())
    if (cfg.suites.empty() || std::find(cfg.suites.begin(), cfg.suites.end(), s) != cfg.suites.end())
      order.push_back(s);

  const long shift_fock = cfg.shift_cutoff + 2 * isqrt(cfg.shift_cutoff) + 1;
  const FockSpace fs(std::max({cfg.cutoff, cfg.relations_cutoff, shift_fock}));
  std::optional<WSpace> w;
  auto space = [&]() -> const WSpace& {
    if (!w) w = build_W(fs, cfg.cutoff, cfg.parallelism);
    return *w;
  };
  std::optional<GradedTable> table;
  auto graded = [&]() -> const GradedTable& {
    if (!table) table = graded_dimension(space(), cfg.cutoff);
    return *table;
  };

  json suites = json::array();
  for (const auto& s : order) {
    SuiteReport r;
    if (s == "group") r = check_group_layer();
    else if (s == "relations") r = check_linear_relations(fs, cfg.relations_cutoff);
    else if (s == "brackets") r = check_brackets(fs, cfg.relations_cutoff, cfg.mode_bound);
    else if (s == "quadratic") r = check_quadratic_relations(fs, cfg.relations_cutoff, QuarterInt(cfg.t_max_quarters));
    else if (s == "oracle") r = check_partition_identity(graded());
    else if (s == "recursion") r = check_recursion(graded());
    else if (s == "exactness") r = check_exact_sequence(fs, space(), cfg.exactness_cutoff, cfg.parallelism);
    else if (s == "presentation") r = check_presentation(fs, space(), cfg.presentation_cutoff, cfg.parallelism);
    else if (s == "shift") r = check_shift_identities(fs, cfg.shift_cutoff);
    else if (s == "stability") r = check_ideal_stability(QuarterInt(cfg.t_max_quarters));
    if (s == "presentation") r.details["monomial_basis_finding"] = monomial_basis_finding(fs, space(), cfg.presentation_cutoff);
    suites.push_back(r.to_json());
  }
  return json{{"tool_version", kToolVersion}, {"config", cfg.to_json()}, {"suites", suites}};
}

json run_dims(long cutoff, unsigned parallelism) {
  if (cutoff < 0) throw ConfigError("cutoff must be nonnegative");
  const FockSpace fs(cutoff);
  const GradedTable t = graded_dimension(build_W(fs, cutoff, parallelism), cutoff);
  json rows = json::array();
  bool all = true;
  for (long l = 0; l <= cutoff; ++l)
    for (long k = 0; k <= l; ++k) {
      const long d = t.dim(k, l), o = partition_oracle(k, l);
      all = all && d == o;
      rows.push_back(json{{"charge", k}, {"qweight", l}, {"dim", d}, {"oracle", o}, {"match", d == o}});
    }
  return json{{"tool_version", kToolVersion}, {"cutoff", cutoff}, {"match", all}, {"buckets", rows}};
}

}  // namespace a2twist
