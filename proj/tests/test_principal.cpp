#include "a2twist/driver.hpp"
#include "a2twist/principal.hpp"

#include <doctest.h>

#include <functional>

using namespace a2twist;

namespace {

// Subsets of {1, 3, 5, ...} with m elements summing to n, counted by
// dynamic programming over the largest allowed part.
long distinct_odd_dp(long m, long n) {
  std::vector<std::vector<long>> ways(m + 1, std::vector<long>(n + 1, 0));
  ways[0][0] = 1;
  for (long part = 1; part <= n; part += 2)
    for (long k = m; k >= 1; --k)
      for (long s = n; s >= part; --s) ways[k][s] += ways[k - 1][s - part];
  return ways[m][n];
}

}  // namespace

TEST_CASE("partition oracle") {
  CHECK(partition_oracle(2, 8) == 2);
  CHECK(partition_oracle(0, 0) == 1);
  CHECK(partition_oracle(1, 6) == 0);
  CHECK(partition_oracle(3, 9) == 1);
  CHECK(partition_oracle(1, 1) == 1);
  for (long m = 0; m <= 6; ++m)
    for (long n = 0; n <= 40; ++n) CHECK(partition_oracle(m, n) == distinct_odd_dp(m, n));
}

TEST_CASE("graded dimensions of the principal subspace") {
  const FockSpace fs(14);
  const WSpace w = build_W(fs, 14, 2);
  const GradedTable t = graded_dimension(w, 14);
  CHECK(t.dim(0, 0) == 1);
  for (long l = 1; l <= 14; ++l) CHECK(t.dim(1, l) == (l % 2 == 1 ? 1 : 0));
  CHECK(t.dim(2, 4) == 1);
  CHECK(t.dim(2, 2) == 0);
  CHECK(t.dim(-1, 3) == 0);
  for (long l = 0; l <= 14; ++l)
    for (long k = 0; k <= l; ++k) CHECK(t.dim(k, l) == distinct_odd_dp(k, l));
  CHECK(check_recursion(t).pass);
  CHECK(check_partition_identity(t).pass);
}

TEST_CASE("parallel and serial construction agree") {
  const FockSpace fs(12);
  const WSpace a = build_W(fs, 12, 1), b = build_W(fs, 12, 4);
  REQUIRE(a.size() == b.size());
  for (const auto& [k, v] : a) CHECK(b.at(k).vectors == v.vectors);
}

TEST_CASE("exact sequence and presentation at small cutoff") {
  const FockSpace fs(14);
  const WSpace w = build_W(fs, 12);
  CHECK(check_exact_sequence(fs, w, 12).pass);
  CHECK(check_presentation(fs, w, 10).pass);
}

TEST_CASE("run configuration") {
  RunConfig cfg;
  cfg.cutoff = 10;
  CHECK_THROWS_AS(validate(cfg), ConfigError);
  cfg.presentation_cutoff = 8;
  cfg.exactness_cutoff = 10;
  CHECK_NOTHROW(validate(cfg));
  cfg.suites = {"nonsense"};
  CHECK_THROWS_AS(validate(cfg), ConfigError);
  cfg.suites = {"recursion", "oracle"};
  cfg.cutoff = 12;
  const json doc = run_verify(cfg);
  CHECK(doc["suites"].size() == 2);
  for (const auto& s : doc["suites"]) CHECK(s["pass"] == true);
  CHECK(json::parse(doc.dump(2)).dump(2) == doc.dump(2));
}

TEST_CASE("dimension table document") {
  const json d = run_dims(8);
  CHECK(d["match"] == true);
  bool seen = false;
  for (const auto& b : d["buckets"])
    if (b["charge"] == 2 && b["qweight"] == 4) {
      seen = true;
      CHECK(b["dim"] == 1);
      CHECK(b["oracle"] == 1);
    }
  CHECK(seen);
  CHECK(run_dims(0)["buckets"].size() == 1);
}
