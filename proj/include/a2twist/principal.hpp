#pragma once

#include "a2twist/envelope.hpp"
#include "a2twist/fock.hpp"
#include "a2twist/report.hpp"

#include <map>
#include <utility>
#include <vector>

namespace a2twist {

/// Basis of one graded piece of the principal subspace, as real coordinate
/// vectors on enumerate_bucket(key). Every vector built from the vacuum is a
/// Gaussian multiple of a real vector, so the real parts span the same space.
struct BucketBasis {
  BucketKey key;
  std::vector<std::vector<Rational>> vectors;
  std::size_t dim() const { return vectors.size(); }
};

using WSpace = std::map<BucketKey, BucketBasis>;

/// Breadth-first closure of the vacuum under u(−n), z(−m) up to the cutoff.
WSpace build_W(const FockSpace& fs, long cutoff, unsigned parallelism = 1);

struct GradedTable {
  long cutoff = 0;
  std::map<std::pair<long, long>, long> entries;  // (charge, qweight) → dim
  /// Zero outside the table and for negative indices.
  long dim(long charge, long qweight) const;
};

GradedTable graded_dimension(const WSpace& w, long cutoff);

/// Number of partitions of n into m distinct odd parts, by exhaustive search.
long partition_oracle(long m, long n);

SuiteReport check_partition_identity(const GradedTable& table);
SuiteReport check_recursion(const GradedTable& table);
SuiteReport check_exact_sequence(const FockSpace& fs, const WSpace& w, long cutoff, unsigned parallelism = 1);
SuiteReport check_presentation(const FockSpace& fs, const WSpace& w, long cutoff, unsigned parallelism = 1);
/// Δ^T_c(a·1) = τ(a)·1, e_{α1}(a·1) = A·ψ(a)·1 with one A, and
/// e_{α1}·1 = (4/σ(α1))·u(−1/4)·1, for PBW monomials a up to the cutoff.
/// The Fock space needs cutoff + 2⌊√cutoff⌋ + 1.
SuiteReport check_shift_identities(const FockSpace& fs, long cutoff);

/// Finding: per bucket, whether u(−n_s)…u(−n_1)·v with distinct modes
/// n_1 < … < n_s are independent and span the bucket of W.
json monomial_basis_finding(const FockSpace& fs, const WSpace& w, long cutoff);

}  // namespace a2twist
