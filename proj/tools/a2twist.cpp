#include "a2twist/driver.hpp"
#include "a2twist/principal.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iomanip>
#include <iostream>

using namespace a2twist;

namespace {

enum Exit { kOk = 0, kFailed = 1, kUsage = 2 };

int emit_dims(const json& doc, const std::string& format) {
  const auto& rows = doc["buckets"];
  if (format == "json") {
    std::cout << doc.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "charge,qweight,dim,oracle,match\n";
    for (const auto& r : rows)
      std::cout << r["charge"] << "," << r["qweight"] << "," << r["dim"] << "," << r["oracle"] << ","
                << (r["match"].get<bool>() ? "true" : "false") << "\n";
  } else {
    std::cout << std::setw(7) << "charge" << std::setw(9) << "qweight" << std::setw(7) << "dim" << std::setw(8)
              << "oracle" << "  match\n";
    for (const auto& r : rows)
      std::cout << std::setw(7) << r["charge"].get<long>() << std::setw(9) << r["qweight"].get<long>() << std::setw(7)
                << r["dim"].get<long>() << std::setw(8) << r["oracle"].get<long>() << "  "
                << (r["match"].get<bool>() ? "yes" : "NO") << "\n";
  }
  return doc["match"].get<bool>() ? kOk : kFailed;
}

int emit_verify(const json& doc, const std::string& format) {
  bool all = true;
  for (const auto& s : doc["suites"]) all = all && s["pass"].get<bool>();
  if (format == "json") {
    std::cout << doc.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "suite,pass,checks,failures,first_failure\n";
    for (const auto& s : doc["suites"]) {
      const auto& d = s["details"];
      std::string ff = d.value("first_failure", "");
      std::cout << s["name"].get<std::string>() << "," << (s["pass"].get<bool>() ? "true" : "false") << ","
                << d["checks"] << "," << d["failures"] << ",\"" << ff << "\"\n";
    }
  } else {
    for (const auto& s : doc["suites"]) {
      const auto& d = s["details"];
      std::cout << (s["pass"].get<bool>() ? "PASS " : "FAIL ") << std::left << std::setw(13)
                << s["name"].get<std::string>() << std::right << " checks=" << d["checks"]
                << " failures=" << d["failures"];
      if (d.contains("first_failure")) std::cout << "  first: " << d["first_failure"].get<std::string>();
      std::cout << "\n";
    }
  }
  return all ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification engine for the principal subspace of the twisted A2 level-one module"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string format = "json";
  const std::vector<std::string> formats{"json", "csv", "text"};

  auto* dims = app.add_subcommand("dims", "graded dimension table with the partition oracle column");
  dims->add_option("--cutoff", cfg.cutoff, "maximal qweight")->check(CLI::NonNegativeNumber);
  dims->add_option("--format", format)->check(CLI::IsMember(formats));
  dims->add_option("--parallelism", cfg.parallelism)->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--cutoff", cfg.cutoff, "qweight cutoff for the principal subspace");
  auto* pres = verify->add_option("--presentation-cutoff", cfg.presentation_cutoff);
  auto* exact = verify->add_option("--exactness-cutoff", cfg.exactness_cutoff);
  verify->add_option("--relations-cutoff", cfg.relations_cutoff, "qweight cutoff for the operator identities");
  verify->add_option("--mode-bound", cfg.mode_bound, "bracket table modes with |4n| up to this bound");
  verify->add_option("--t-max", cfg.t_max_quarters, "quadratic and stability checks for 4t up to this bound");
  verify->add_option("--shift-cutoff", cfg.shift_cutoff, "qweight bound for the shift identities");
  verify->add_option("--suites", cfg.suites, "subset of: group relations brackets quadratic oracle recursion "
                                             "exactness presentation shift stability")
      ->delimiter(',');
  verify->add_option("--format", format)->check(CLI::IsMember(formats));
  verify->add_option("--parallelism", cfg.parallelism)->check(CLI::PositiveNumber);

  long m = 0, n = 0;
  auto* oracle = app.add_subcommand("oracle", "count partitions of n into m distinct odd parts");
  oracle->add_option("--m", m)->required()->check(CLI::NonNegativeNumber);
  oracle->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
  std::string oracle_format = "text";
  oracle->add_option("--format", oracle_format)->check(CLI::IsMember(formats));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*dims) return emit_dims(run_dims(cfg.cutoff, cfg.parallelism), format);
    if (*verify) {
      if (!*pres) cfg.presentation_cutoff = std::min(cfg.presentation_cutoff, cfg.cutoff);
      if (!*exact) cfg.exactness_cutoff = std::min(cfg.exactness_cutoff, cfg.cutoff);
      return emit_verify(run_verify(cfg), format);
    }
    const long count = partition_oracle(m, n);
    if (oracle_format == "json")
      std::cout << json{{"m", m}, {"n", n}, {"count", count}}.dump(2) << "\n";
    else
      std::cout << count << "\n";
    return kOk;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
