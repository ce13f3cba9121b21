#pragma once

#include "a2twist/group.hpp"
#include "a2twist/linalg.hpp"
#include "a2twist/report.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <tuple>
#include <unordered_map>
#include <vector>

namespace a2twist {

/// Heisenberg monomial as a partition in doubled-mode units, sorted
/// descending. A part r stands for β0(−r/2) when r is even and for β2(−r/2)
/// when r is odd; its quarter-weight is 2r.
using Parts = std::vector<std::uint16_t>;

struct PartsHash {
  std::size_t operator()(const Parts& p) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto x : p) h = (h ^ x) * 1099511628211ULL;
    return h;
  }
};

struct FockMonomial {
  long charge = 0;
  Parts parts;

  std::vector<long> b0modes() const;
  std::vector<QuarterInt> b2modes() const;
  long heis_qweight() const;
  long qweight() const { return heis_qweight() + charge * charge; }
  friend auto operator<=>(const FockMonomial&, const FockMonomial&) = default;
  std::string to_string() const;
};

using FockVector = std::map<FockMonomial, GaussianRational>;

struct BucketKey {
  long charge = 0;
  long qweight = 0;
  long heis_level() const { return qweight - charge * charge; }
  friend auto operator<=>(const BucketKey&, const BucketKey&) = default;
  std::string to_string() const;
};

class CutoffOverflow : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rational sparse matrix stored by column: column j lists (row, value).
struct RatSparse {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<std::pair<std::uint32_t, Rational>>> columns;

  std::size_t nnz() const;
  void apply_add(const std::vector<Rational>& x, std::vector<Rational>& y) const;
  void apply_add(const std::vector<GaussianRational>& x, std::vector<GaussianRational>& y) const;
};

/// Basis of the Heisenberg space at one quarter-level: partitions of level/2.
struct HeisLevel {
  long level = 0;
  std::vector<Parts> basis;
  std::unordered_map<Parts, std::uint32_t, PartsHash> index;
};

/// An operator between two buckets written as scalar · (Heisenberg matrix).
/// A null heis pointer means the identity on the Heisenberg factor. An empty
/// source or target bucket makes the map zero.
struct BucketAction {
  BucketKey source;
  BucketKey target;
  GaussianRational scalar;
  const RatSparse* heis = nullptr;
  bool zero = false;

  ExactMatrix matrix(std::size_t src_dim, std::size_t tgt_dim) const;
  std::vector<Rational> apply_real(const std::vector<Rational>& x, std::size_t tgt_dim) const;
  std::vector<GaussianRational> apply(const std::vector<GaussianRational>& x, std::size_t tgt_dim) const;
};

/// Dense coefficient vector on a single bucket.
struct BucketVector {
  BucketKey key;
  std::vector<GaussianRational> coeffs;
  bool is_zero() const;
};

/// The truncated twisted Fock space S[ν] ⊗ C[L/N] together with lazily cached
/// operator matrices. Caches are write-once per key and safe for concurrent
/// readers.
class FockSpace {
 public:
  explicit FockSpace(long cutoff, const TwistedGroup& group = TwistedGroup::a2());

  long cutoff() const { return cutoff_; }
  const TwistedGroup& group() const { return group_; }
  const TwistData& lattice() const { return group_.lattice(); }

  const HeisLevel& heis_level(long level) const;
  std::size_t bucket_dim(const BucketKey& key) const;
  std::vector<FockMonomial> enumerate_bucket(const BucketKey& key) const;
  BucketVector vacuum() const;
  FockVector to_fock_vector(const BucketVector& v) const;

  /// Heisenberg creation/annihilation β(n) for β ∈ {β0, β2}.
  FockVector heis_act(LatticeVector beta, QuarterInt n, const FockVector& v) const;

  /// x_α(n) from the source bucket. Throws CutoffOverflow when the target
  /// qweight exceeds the cutoff.
  BucketAction vertex_action(LatticeVector alpha, QuarterInt n, const BucketKey& src) const;
  BucketKey vertex_target(LatticeVector alpha, QuarterInt n, const BucketKey& src) const;
  ExactMatrix vertex_component(LatticeVector alpha, QuarterInt n, const BucketKey& src) const;

  BucketAction e_alpha1_action(const BucketKey& src) const;
  ExactMatrix e_alpha1_op(const BucketKey& src) const;
  BucketAction deltaT_action(const BucketKey& src) const;
  ExactMatrix deltaT_constant(const BucketKey& src) const;

  BucketVector apply(const BucketAction& a, const BucketVector& v) const;

  /// [x^{(to−from)/4}] E⁻(−λ,x)E⁺(−λ,x) between Heisenberg levels, where
  /// s0 = ⟨λ,β0⟩ and s2 = ⟨λ,β2⟩.
  const RatSparse& heis_vertex(long s0, long s2, long from, long to) const;
  /// [x^{−(from−to)/4}] E⁺(−λ,x).
  const RatSparse& heis_eplus(long s0, long s2, long from, long to) const;
  /// Coefficient polynomial of x^{level/4} in E⁻(−λ,x), on the basis of that level.
  std::vector<Rational> heis_eminus(long s0, long s2, long level) const;

 private:
  struct EminusTerm {
    Parts parts;
    Rational coef;
  };
  const std::vector<EminusTerm>& eminus_terms(long s0, long s2, long level) const;
  std::unique_ptr<RatSparse> build_heis(long s0, long s2, long from, long to, bool with_eminus) const;

  long cutoff_;
  const TwistedGroup& group_;

  mutable std::shared_mutex mu_;
  mutable std::map<long, std::unique_ptr<HeisLevel>> levels_;
  mutable std::map<std::tuple<long, long, long>, std::unique_ptr<std::vector<EminusTerm>>> eminus_;
  mutable std::map<std::tuple<long, long, long, long, bool>, std::unique_ptr<RatSparse>> heis_;
};

/// Partitions of n in descending lexicographic order.
std::vector<Parts> partitions_of(long n);

/// Operator identity suites on all buckets with qweight ≤ cutoff.
SuiteReport check_linear_relations(const FockSpace& fs, long cutoff);
SuiteReport check_brackets(const FockSpace& fs, long cutoff, long mode_bound = 12);
SuiteReport check_quadratic_relations(const FockSpace& fs, long cutoff, QuarterInt t_max = QuarterInt(24));

/// Charges c with c² ≤ qweight, and the nonempty buckets up to the cutoff.
std::vector<BucketKey> buckets_upto(long cutoff);

}  // namespace a2twist
