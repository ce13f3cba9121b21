#pragma once

#include "a2twist/lattice.hpp"
#include "a2twist/report.hpp"

#include <map>
#include <string>

namespace a2twist {

enum class ExtTag { hatL, hatLnu };

/// i^phase · e_vec in the extension named by tag.
struct ExtElement {
  int phase = 0;
  LatticeVector vec;
  ExtTag ext = ExtTag::hatLnu;

  static ExtElement section(LatticeVector v, ExtTag t) { return {0, v, t}; }
  friend bool operator==(const ExtElement& a, const ExtElement& b) {
    return mod4(a.phase) == mod4(b.phase) && a.vec == b.vec && a.ext == b.ext;
  }
  std::string to_string() const;
};

/// The extensions L̂ (cocycle ε0) and L̂_ν (cocycle ε_C), the lift ν̂, and the
/// character τ on N̂ ⊂ L̂_ν.
class TwistedGroup {
 public:
  explicit TwistedGroup(const TwistData& td);
  static const TwistedGroup& a2();

  const TwistData& lattice() const { return td_; }

  /// Throws std::invalid_argument when the tags differ.
  ExtElement mul(const ExtElement& a, const ExtElement& b) const;
  ExtElement inverse(const ExtElement& a) const;
  ExtElement identity(ExtTag t) const { return {0, {0, 0}, t}; }
  /// a b a⁻¹ b⁻¹, a central element (vec 0); returned as its phase.
  int commutator_phase(const ExtElement& a, const ExtElement& b) const;

  /// ν̂ e_α = ε0(α,α) i^{⟨α,α1+α2⟩} e_{να}, extended by ν̂(i) = i.
  ExtElement nu_hat(const ExtElement& a) const;

  /// τ on N̂. Throws std::invalid_argument if vec ∉ N or the tag is hatL.
  GaussianRational tau(const ExtElement& a) const;
  /// τ(e_{α1−α2}) as exponent of i, solved from the defining relation.
  int tau_generator_exp() const { return tau_gen_exp_; }
  /// τ(a ν̂(a)⁻¹) versus i^{−Σ_j⟨ν^j ā,ā⟩/2}.
  bool tau_relation_holds(LatticeVector a) const;

  /// Coefficient and target charge of a·(e_{cα1} ⊗ 1) in U_T ≅ C[L/N].
  struct CosetImage {
    long charge;
    int phase;  // exponent of i
  };
  CosetImage ut_action(const ExtElement& a, long c) const;

 private:
  /// e_β^s for β = α1−α2, s ∈ Z, computed by repeated multiplication.
  ExtElement beta_power(long s) const;

  const TwistData& td_;
  int tau_gen_exp_ = 0;
};

/// Sparse element of U_T: charge c ↦ coefficient of e_{cα1} ⊗ 1.
using CosetVector = std::map<long, GaussianRational>;

CosetVector ut_action(const TwistedGroup& g, const ExtElement& a, const CosetVector& v);
/// (α1+α2)(0) acts on coset c by c; general h ∈ h_(0) by ⟨h, c·P_0(α1)⟩.
Rational h0_eigenvalue(const TwistData& td, const RationalHVector& h, long c);

/// Group-layer identities on the grid |m|,|n| ≤ radius: extension group laws,
/// cocycle and commutator identities, ν̂ as an automorphism with its powers,
/// well-definedness of τ, and U_T as a module.
SuiteReport check_group_layer(const TwistedGroup& g = TwistedGroup::a2(), long radius = 3);

}  // namespace a2twist
