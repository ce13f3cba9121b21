#pragma once

#include "a2twist/scalar.hpp"

#include <array>
#include <compare>
#include <string>

namespace a2twist {

/// m·α1 + n·α2
struct LatticeVector {
  long m = 0;
  long n = 0;

  friend LatticeVector operator+(LatticeVector a, LatticeVector b) { return {a.m + b.m, a.n + b.n}; }
  friend LatticeVector operator-(LatticeVector a, LatticeVector b) { return {a.m - b.m, a.n - b.n}; }
  friend LatticeVector operator-(LatticeVector a) { return {-a.m, -a.n}; }
  friend LatticeVector operator*(long s, LatticeVector a) { return {s * a.m, s * a.n}; }
  friend auto operator<=>(const LatticeVector&, const LatticeVector&) = default;
  std::string to_string() const;
};

/// Rational combination a·α1 + b·α2 inside h = C ⊗ L.
struct RationalHVector {
  Rational a{0};
  Rational b{0};

  RationalHVector() = default;
  RationalHVector(Rational x, Rational y) : a(std::move(x)), b(std::move(y)) {}
  RationalHVector(const LatticeVector& v) : a(v.m), b(v.n) {}  // NOLINT: lattice embeds in h

  friend RationalHVector operator+(const RationalHVector& x, const RationalHVector& y) {
    return {x.a + y.a, x.b + y.b};
  }
  friend RationalHVector operator-(const RationalHVector& x, const RationalHVector& y) {
    return {x.a - y.a, x.b - y.b};
  }
  friend RationalHVector operator*(const Rational& s, const RationalHVector& x) { return {s * x.a, s * x.b}; }
  friend bool operator==(const RationalHVector& x, const RationalHVector& y) { return x.a == y.a && x.b == y.b; }
  bool is_zero() const { return sgn(a) == 0 && sgn(b) == 0; }
  std::string to_string() const;
};

inline constexpr LatticeVector kAlpha1{1, 0};
inline constexpr LatticeVector kAlpha2{0, 1};
inline constexpr LatticeVector kBeta0{1, 1};   // α1+α2, fixed by ν
inline constexpr LatticeVector kBeta2{1, -1};  // α1−α2, negated by ν

/// Lattice, form and isometry of finite order k together with the primitive
/// k-th root of unity η. Only the A2 instance is constructed.
class TwistData {
 public:
  static const TwistData& a2();

  int k() const { return k_; }
  /// η = i, returned as exponent of i.
  int eta_exponent() const { return 1; }
  const std::array<std::array<long, 2>, 2>& gram_matrix() const { return gram_; }

  long gram(LatticeVector x, LatticeVector y) const;
  Rational gram(const RationalHVector& x, const RationalHVector& y) const;
  LatticeVector nu(LatticeVector x) const;
  RationalHVector nu(const RationalHVector& x) const;
  LatticeVector nu_pow(LatticeVector x, int j) const;

  /// P_p: projection onto the η^p-eigenspace of ν.
  RationalHVector project(const RationalHVector& x, int p) const;

  /// C0(a,b) = (−1)^⟨a,b⟩, as exponent of i.
  int commutator_C0_exp(LatticeVector a, LatticeVector b) const;
  /// C(a,b) = Π_j (−η^j)^⟨ν^j a, b⟩, as exponent of i.
  int commutator_C_exp(LatticeVector a, LatticeVector b) const;
  /// ε0(mα1+nα2, rα1+sα2) = (−1)^{nr}, as exponent of i.
  int eps0_exp(LatticeVector a, LatticeVector b) const;
  /// ε_C(a,b) = (−η)^{−⟨νa,b⟩}·ε0(a,b), as exponent of i.
  int epsC_exp(LatticeVector a, LatticeVector b) const;

  GaussianRational commutator_C0(LatticeVector a, LatticeVector b) const {
    return GaussianRational::i_pow(commutator_C0_exp(a, b));
  }
  GaussianRational commutator_C(LatticeVector a, LatticeVector b) const {
    return GaussianRational::i_pow(commutator_C_exp(a, b));
  }
  GaussianRational cocycle_eps0(LatticeVector a, LatticeVector b) const {
    return GaussianRational::i_pow(eps0_exp(a, b));
  }
  GaussianRational cocycle_epsC(LatticeVector a, LatticeVector b) const {
    return GaussianRational::i_pow(epsC_exp(a, b));
  }

  /// σ(α) = Π_{0<j<k/2}(1−η^{−j})^⟨ν^j α,α⟩ · 2^{⟨ν^{k/2}α,α⟩/2}.
  GaussianRational sigma(LatticeVector a) const;

  /// Σ_j ⟨ν^j a, a⟩.
  long orbit_norm(LatticeVector a) const;

 private:
  TwistData() = default;
  int k_ = 4;
  std::array<std::array<long, 2>, 2> gram_{{{2, -1}, {-1, 2}}};
  std::array<std::array<long, 2>, 2> nu_{{{0, 1}, {1, 0}}};  // columns: images of α1, α2
};

/// N = M = R = Z(α1−α2) for A2.
struct Sublattices {
  LatticeVector generator;
  /// Whether every defining condition was confirmed on the scanned generators.
  bool conditions_hold = false;
  std::string description;
};

Sublattices sublattices_NMR(const TwistData& td);
/// Membership in Z(α1−α2).
bool in_N(LatticeVector v);

/// Nonnegative residue of x mod 4.
inline int mod4(long x) { return static_cast<int>(((x % 4) + 4) % 4); }

}  // namespace a2twist
