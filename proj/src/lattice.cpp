#include "a2twist/lattice.hpp"

#include <stdexcept>

namespace a2twist {

std::string LatticeVector::to_string() const {
  return "(" + std::to_string(m) + "," + std::to_string(n) + ")";
}

std::string RationalHVector::to_string() const { return "(" + a.get_str() + "," + b.get_str() + ")"; }

const TwistData& TwistData::a2() {
  static const TwistData td;
  return td;
}

long TwistData::gram(LatticeVector x, LatticeVector y) const {
  return x.m * (gram_[0][0] * y.m + gram_[0][1] * y.n) + x.n * (gram_[1][0] * y.m + gram_[1][1] * y.n);
}

Rational TwistData::gram(const RationalHVector& x, const RationalHVector& y) const {
  Rational r = x.a * (gram_[0][0] * y.a + gram_[0][1] * y.b) + x.b * (gram_[1][0] * y.a + gram_[1][1] * y.b);
  r.canonicalize();
  return r;
}

LatticeVector TwistData::nu(LatticeVector x) const {
  return {nu_[0][0] * x.m + nu_[0][1] * x.n, nu_[1][0] * x.m + nu_[1][1] * x.n};
}

RationalHVector TwistData::nu(const RationalHVector& x) const {
  return {nu_[0][0] * x.a + nu_[0][1] * x.b, nu_[1][0] * x.a + nu_[1][1] * x.b};
}

LatticeVector TwistData::nu_pow(LatticeVector x, int j) const {
  j = mod4(j);
  for (int s = 0; s < j; ++s) x = nu(x);
  return x;
}

RationalHVector TwistData::project(const RationalHVector& x, int p) const {
  // P_p = (1/k) Σ_j η^{−pj} ν^j; the result must be real for this lattice.
  GaussianRational ca, cb;
  RationalHVector y = x;
  for (int j = 0; j < k_; ++j) {
    GaussianRational w = GaussianRational::i_pow(-static_cast<long>(p) * j);
    ca += w * GaussianRational(y.a);
    cb += w * GaussianRational(y.b);
    y = nu(y);
  }
  if (!ca.is_real() || !cb.is_real()) throw std::logic_error("project: non-real eigenprojection");
  Rational inv_k(1, k_);
  return {ca.re() * inv_k, cb.re() * inv_k};
}

int TwistData::commutator_C0_exp(LatticeVector a, LatticeVector b) const { return mod4(2 * gram(a, b)); }

int TwistData::commutator_C_exp(LatticeVector a, LatticeVector b) const {
  // −η^j = i^{2+j}
  long e = 0;
  for (int j = 0; j < k_; ++j) e += (2 + j) * gram(nu_pow(a, j), b);
  return mod4(e);
}

int TwistData::eps0_exp(LatticeVector a, LatticeVector b) const { return mod4(2 * (a.n * b.m)); }

int TwistData::epsC_exp(LatticeVector a, LatticeVector b) const {
  // (−η)^{−1} = i
  return mod4(gram(nu(a), b) + eps0_exp(a, b));
}

GaussianRational TwistData::sigma(LatticeVector a) const {
  GaussianRational s(1);
  for (int j = 1; 2 * j < k_; ++j) {
    GaussianRational base = GaussianRational(1) - GaussianRational::i_pow(-j);
    s *= base.pow(gram(nu_pow(a, j), a));
  }
  long half = gram(nu_pow(a, k_ / 2), a);
  if (half % 2 != 0) throw std::logic_error("sigma: evenness condition violated");
  return s * GaussianRational(2).pow(half / 2);
}

long TwistData::orbit_norm(LatticeVector a) const {
  long s = 0;
  for (int j = 0; j < k_; ++j) s += gram(nu_pow(a, j), a);
  return s;
}

bool in_N(LatticeVector v) { return v.m + v.n == 0; }

Sublattices sublattices_NMR(const TwistData& td) {
  Sublattices out;
  out.generator = kBeta2;
  bool ok = true;
  // N is the orthogonal complement of h_(0) = Cβ0.
  for (long m = -3; m <= 3; ++m)
    for (long n = -3; n <= 3; ++n) {
      LatticeVector v{m, n};
      bool orth = td.gram(v, kBeta0) == 0;
      if (orth != in_N(v)) ok = false;
    }
  // M = (1−ν)L is generated by (1−ν)α1 and (1−ν)α2.
  LatticeVector m1 = kAlpha1 - td.nu(kAlpha1);
  LatticeVector m2 = kAlpha2 - td.nu(kAlpha2);
  if (!(m1 == kBeta2) || !(m2 == -kBeta2)) ok = false;
  // C_N(α,β) = η^{Σ_j j⟨ν^j α,β⟩} is trivial on N, so R = N.
  long e = 0;
  for (int j = 0; j < td.k(); ++j) e += j * td.gram(td.nu_pow(kBeta2, j), kBeta2);
  if (mod4(e) != 0) ok = false;
  out.conditions_hold = ok;
  out.description = "N = M = R = Z(α1−α2)";
  return out;
}

}  // namespace a2twist
