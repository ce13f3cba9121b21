#include "a2twist/group.hpp"

#include <stdexcept>

namespace a2twist {

std::string ExtElement::to_string() const {
  return std::string(ext == ExtTag::hatL ? "L^" : "L^nu") + "[i^" + std::to_string(mod4(phase)) + " e" +
         vec.to_string() + "]";
}

TwistedGroup::TwistedGroup(const TwistData& td) : td_(td) {
  // Solve τ(a ν̂(a)⁻¹) = i^{−Σ_j⟨ν^j ā,ā⟩/2} at a = e_{α1}; a ν̂(a)⁻¹ has image
  // α1 − να1 = α1 − α2 = β.
  ExtElement a = ExtElement::section(kAlpha1, ExtTag::hatLnu);
  ExtElement x = mul(a, inverse(nu_hat(a)));
  if (!(x.vec == kBeta2)) throw std::logic_error("TwistedGroup: unexpected image of a ν̂(a)⁻¹");
  long target = -td_.orbit_norm(kAlpha1) / 2;
  // τ(i^p e_β) = i^p τ(e_β)
  tau_gen_exp_ = mod4(target - x.phase);
}

const TwistedGroup& TwistedGroup::a2() {
  static const TwistedGroup g(TwistData::a2());
  return g;
}

ExtElement TwistedGroup::mul(const ExtElement& a, const ExtElement& b) const {
  if (a.ext != b.ext) throw std::invalid_argument("ext_mul: mixed extension tags");
  int e = a.ext == ExtTag::hatL ? td_.eps0_exp(a.vec, b.vec) : td_.epsC_exp(a.vec, b.vec);
  return {mod4(a.phase + b.phase + e), a.vec + b.vec, a.ext};
}

ExtElement TwistedGroup::inverse(const ExtElement& a) const {
  // (i^p e_v)(i^q e_{−v}) = i^{p+q} ε(v,−v) e_0
  int e = a.ext == ExtTag::hatL ? td_.eps0_exp(a.vec, -a.vec) : td_.epsC_exp(a.vec, -a.vec);
  return {mod4(-a.phase - e), -a.vec, a.ext};
}

int TwistedGroup::commutator_phase(const ExtElement& a, const ExtElement& b) const {
  ExtElement c = mul(mul(a, b), mul(inverse(a), inverse(b)));
  if (!(c.vec == LatticeVector{0, 0})) throw std::logic_error("commutator not central");
  return c.phase;
}

ExtElement TwistedGroup::nu_hat(const ExtElement& a) const {
  int e = td_.eps0_exp(a.vec, a.vec) + mod4(td_.gram(a.vec, kBeta0));
  return {mod4(a.phase + e), td_.nu(a.vec), a.ext};
}

ExtElement TwistedGroup::beta_power(long s) const {
  ExtElement g = ExtElement::section(kBeta2, ExtTag::hatLnu);
  if (s < 0) g = inverse(g);
  ExtElement acc = identity(ExtTag::hatLnu);
  for (long k = 0; k < (s < 0 ? -s : s); ++k) acc = mul(acc, g);
  return acc;
}

GaussianRational TwistedGroup::tau(const ExtElement& a) const {
  if (a.ext != ExtTag::hatLnu) throw std::invalid_argument("tau: element must lie in L^nu");
  if (!in_N(a.vec)) throw std::invalid_argument("tau: element outside N^");
  long s = a.vec.m;  // vec = s(α1−α2)
  ExtElement p = beta_power(s);
  // a = i^{a.phase − p.phase} e_β^s
  return GaussianRational::i_pow(a.phase - p.phase + s * tau_gen_exp_);
}

bool TwistedGroup::tau_relation_holds(LatticeVector v) const {
  ExtElement a = ExtElement::section(v, ExtTag::hatLnu);
  ExtElement x = mul(a, inverse(nu_hat(a)));
  long on = td_.orbit_norm(v);
  if (on % 2 != 0) return false;
  return tau(x) == GaussianRational::i_pow(-on / 2);
}

TwistedGroup::CosetImage TwistedGroup::ut_action(const ExtElement& a, long c) const {
  if (a.ext != ExtTag::hatLnu) throw std::invalid_argument("ut_action: element must lie in L^nu");
  ExtElement rep = ExtElement::section(c * kAlpha1, ExtTag::hatLnu);
  ExtElement y = mul(a, rep);
  // e_v = ε_C(c'α1, μ)⁻¹ e_{c'α1} e_μ with μ ∈ N, and e_μ acts through τ.
  long cp = y.vec.m + y.vec.n;
  LatticeVector mu = y.vec - cp * kAlpha1;
  int phase = y.phase - td_.epsC_exp(cp * kAlpha1, mu);
  GaussianRational t = tau(ExtElement::section(mu, ExtTag::hatLnu));
  int te = t == GaussianRational(1) ? 0 : t == GaussianRational::i() ? 1 : t == GaussianRational(-1) ? 2 : 3;
  return {cp, mod4(phase + te)};
}

CosetVector ut_action(const TwistedGroup& g, const ExtElement& a, const CosetVector& v) {
  CosetVector out;
  for (const auto& [c, coef] : v) {
    auto img = g.ut_action(a, c);
    out[img.charge] += coef * GaussianRational::i_pow(img.phase);
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

Rational h0_eigenvalue(const TwistData& td, const RationalHVector& h, long c) {
  return td.gram(h, Rational(c) * td.project(RationalHVector(kAlpha1), 0));
}

}  // namespace a2twist
