#pragma once

#include "a2twist/fock.hpp"
#include "a2twist/report.hpp"
#include "a2twist/scalar.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace a2twist {

/// Generator of the twisted nilpotent current algebra: u(n) = x_{α1}(n) with
/// n ∈ 1/4 + (1/2)Z, or the central z(m) = x_{α1+α2}(m) with m ∈ Z.
struct ModeGen {
  enum class Label : std::uint8_t { u, z };
  Label label = Label::u;
  QuarterInt n;

  static ModeGen U(QuarterInt n);
  static ModeGen Z(QuarterInt m);
  static bool valid(Label l, QuarterInt n);

  long charge() const { return label == Label::u ? 1 : 2; }
  long qweight() const { return -n.q; }
  bool nonnegative() const { return n.q >= 0; }
  friend auto operator<=>(const ModeGen&, const ModeGen&) = default;
  std::string to_string() const;
};

/// PBW monomial z(m_1)…z(m_r)·u(n_1)…u(n_s): both parts sorted
/// non-decreasing, so nonnegative modes sit at the right end.
struct PBWMonomial {
  std::vector<QuarterInt> zpart;
  std::vector<QuarterInt> upart;

  long charge() const { return static_cast<long>(upart.size() + 2 * zpart.size()); }
  long qweight() const;
  bool has_nonnegative() const;
  std::size_t degree() const { return upart.size() + zpart.size(); }
  friend auto operator<=>(const PBWMonomial&, const PBWMonomial&) = default;
  std::string to_string() const;
};

/// Element of U(n̄[ν̂]) in normal-ordered form.
class EnvElement {
 public:
  using Terms = std::map<PBWMonomial, GaussianRational>;

  EnvElement() = default;
  static EnvElement one();
  static EnvElement monomial(PBWMonomial m, GaussianRational c = GaussianRational(1));
  static EnvElement gen(ModeGen g);
  /// Ordered product of generators, normal-ordered.
  static EnvElement word(const std::vector<ModeGen>& gens);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  GaussianRational coeff(const PBWMonomial& m) const;

  void add(const PBWMonomial& m, const GaussianRational& c);
  EnvElement& operator+=(const EnvElement& o);
  EnvElement& operator-=(const EnvElement& o);
  EnvElement& operator*=(const GaussianRational& c);
  friend EnvElement operator+(EnvElement a, const EnvElement& b) { return a += b; }
  friend EnvElement operator-(EnvElement a, const EnvElement& b) { return a -= b; }
  friend EnvElement operator*(const GaussianRational& c, EnvElement a) { return a *= c; }
  friend EnvElement operator*(const EnvElement& a, const EnvElement& b);
  friend bool operator==(const EnvElement& a, const EnvElement& b) { return a.terms_ == b.terms_; }

  /// Right multiplication by a single generator, staying in normal order.
  EnvElement times(const ModeGen& g) const;

  /// (charge, qweight) when every term shares it.
  std::optional<std::pair<long, long>> homogeneous_degree() const;
  std::string to_string() const;

 private:
  Terms terms_;
};

/// Coefficient c with [u(a), u(b)] = c·z(a+b).
GaussianRational u_bracket_coeff(QuarterInt a, QuarterInt b);
EnvElement bracket(const ModeGen& a, const ModeGen& b);
/// Normal-order an arbitrary word given left to right.
EnvElement normal_order(const std::vector<ModeGen>& word);

/// Projection onto U(n̄₋) along U(n̄)·n̄₊: drop terms with a nonnegative mode.
EnvElement project_negative(const EnvElement& e);

enum class RKind { R1, R12, R121 };
std::string to_string(RKind k);
/// Truncated relation generator; `strict` enforces the ideal-generator range.
EnvElement make_R0(RKind kind, QuarterInt t, bool strict = true);
/// Smallest t for which the kind is an ideal generator, and the step in t.
QuarterInt r0_min(RKind kind);
long r0_charge(RKind kind);

/// PBW monomials of U(n̄₋) with the given charge and qweight, in increasing order.
std::vector<PBWMonomial> pbw_monomials(long charge, long qweight);

struct IdealOptions {
  long gen_slack = 0;  // generators up to qweight + gen_slack
  long pos_slack = 0;  // positive factors u(a) with 4a ≤ qweight(g) + pos_slack
};

/// Spanning set of π(I_Λ) on the bucket.
std::vector<EnvElement> ideal_bucket(long charge, long qweight, const IdealOptions& opt = {});
/// Rank of the span of ideal_bucket in the PBW basis of the bucket.
std::size_t ideal_rank(long charge, long qweight, const IdealOptions& opt = {});

EnvElement tau_shift(const EnvElement& e);
EnvElement tau_inverse(const EnvElement& e);
EnvElement psi_map(const EnvElement& e);

/// The proof identities for stability of I_Λ under τ and ψτ, for t ≤ t_max.
SuiteReport check_ideal_stability(QuarterInt t_max = QuarterInt(24));

/// f_Λ(e) = e·v_Λ in the twisted module. Throws CutoffOverflow past the cutoff.
FockVector evaluate_fLambda(const FockSpace& fs, const EnvElement& e);
/// Same, restricted to a homogeneous element, as a bucket vector.
BucketVector evaluate_fLambda_bucket(const FockSpace& fs, const EnvElement& e, const BucketKey& key);

}  // namespace a2twist
