#include "a2twist/group.hpp"

#include <doctest.h>

using namespace a2twist;
using G = GaussianRational;

namespace {

const TwistData& td() { return TwistData::a2(); }
const TwistedGroup& grp() { return TwistedGroup::a2(); }

// Π_{j=0}^{3} (−i^j)^{⟨ν^j a, b⟩}, multiplied out factor by factor.
G commutator_by_product(LatticeVector a, LatticeVector b) {
  G out(1);
  for (int j = 0; j < 4; ++j) {
    const G base = -G::i_pow(j);
    const long e = td().gram(td().nu_pow(a, j), b);
    out *= base.pow(e);
  }
  return out;
}

template <class F>
void grid(long r, F f) {
  for (long m = -r; m <= r; ++m)
    for (long n = -r; n <= r; ++n) f(LatticeVector{m, n});
}

}  // namespace

TEST_CASE("form and projections") {
  CHECK(td().gram(kAlpha1, kAlpha1) == 2);
  CHECK(td().gram(kAlpha1, kAlpha2) == -1);
  CHECK(td().gram(kBeta0, kBeta0) == 2);
  CHECK(td().gram(kBeta2, kBeta2) == 6);
  const RationalHVector a1(kAlpha1);
  CHECK(td().project(a1, 0) == RationalHVector(Rational(1, 2), Rational(1, 2)));
  CHECK(td().project(a1, 2) == RationalHVector(Rational(1, 2), Rational(-1, 2)));
  CHECK(td().project(a1, 1).is_zero());
  CHECK(td().project(a1, 3).is_zero());
  CHECK(td().nu(kAlpha1) == kAlpha2);
  CHECK(td().nu_pow(kAlpha1, 4) == kAlpha1);
}

TEST_CASE("commutator maps") {
  CHECK(td().commutator_C0(kAlpha1, kAlpha2) == G(-1));
  CHECK(td().commutator_C0(kAlpha1, kAlpha1) == G(1));
  CHECK(td().commutator_C0(kAlpha1, kBeta0) == G(-1));
  CHECK(td().commutator_C(kAlpha1, kAlpha1) == G(1));
  CHECK(td().commutator_C(kAlpha1, kAlpha2) == G(-1));
  CHECK(td().commutator_C(kAlpha1, -kAlpha1) == G(1));
  grid(3, [](LatticeVector a) {
    grid(2, [&](LatticeVector b) { CHECK(td().commutator_C(a, b) == commutator_by_product(a, b)); });
  });
}

TEST_CASE("cocycles") {
  CHECK(td().cocycle_eps0(kAlpha1, kAlpha2) == G(1));
  CHECK(td().cocycle_eps0(kAlpha2, kAlpha1) == G(-1));
  CHECK(td().cocycle_eps0(kAlpha1, -kAlpha1) == G(1));
  CHECK(td().cocycle_epsC(kAlpha1, kAlpha2) == G(-1));
  CHECK(td().cocycle_epsC(kAlpha2, kAlpha1) == G(1));
  grid(2, [](LatticeVector a) {
    grid(2, [&](LatticeVector b) {
      CHECK(td().cocycle_epsC(a, b) / td().cocycle_epsC(b, a) == td().commutator_C(a, b));
      CHECK(td().cocycle_eps0(a, b) / td().cocycle_eps0(b, a) == td().commutator_C0(a, b));
    });
  });
}

TEST_CASE("sublattice N") {
  const Sublattices s = sublattices_NMR(td());
  CHECK(s.generator == kBeta2);
  CHECK(s.conditions_hold);
  CHECK(td().commutator_C(kBeta2, kBeta2) == G(1));
  CHECK(in_N(kBeta2));
  CHECK(in_N(3 * kBeta2));
  CHECK_FALSE(in_N(kBeta0));
  CHECK_FALSE(in_N(kAlpha1));
}

TEST_CASE("extension products") {
  const auto e1 = ExtElement::section(kAlpha1, ExtTag::hatL);
  const auto e2 = ExtElement::section(kAlpha2, ExtTag::hatL);
  CHECK(grp().mul(e1, e2) == ExtElement{0, kBeta0, ExtTag::hatL});
  CHECK(grp().mul(e2, e1) == ExtElement{2, kBeta0, ExtTag::hatL});
  const auto f1 = ExtElement::section(kAlpha1, ExtTag::hatLnu);
  const auto f2 = ExtElement::section(kAlpha2, ExtTag::hatLnu);
  CHECK(mod4(grp().commutator_phase(f1, f2)) == 2);
  CHECK_THROWS_AS(grp().mul(e1, f2), std::invalid_argument);
  grid(2, [&](LatticeVector a) {
    const auto x = ExtElement{1, a, ExtTag::hatLnu};
    CHECK(grp().mul(x, grp().inverse(x)) == grp().identity(ExtTag::hatLnu));
  });
}

TEST_CASE("lift of the isometry") {
  const auto f1 = ExtElement::section(kAlpha1, ExtTag::hatLnu);
  CHECK(grp().nu_hat(f1) == ExtElement{1, kAlpha2, ExtTag::hatLnu});
  CHECK(grp().nu_hat(ExtElement::section(kBeta0, ExtTag::hatLnu)) == ExtElement::section(kBeta0, ExtTag::hatLnu));
  CHECK(grp().nu_hat(grp().nu_hat(f1)) == ExtElement{2, kAlpha1, ExtTag::hatLnu});
  grid(3, [](LatticeVector a) {
    ExtElement x = ExtElement::section(a, ExtTag::hatLnu);
    for (int k = 0; k < 4; ++k) x = grp().nu_hat(x);
    CHECK(x == ExtElement::section(a, ExtTag::hatLnu));
  });
}

TEST_CASE("character on N") {
  CHECK(grp().tau(ExtElement{1, {0, 0}, ExtTag::hatLnu}) == G::i());
  CHECK(grp().tau(ExtElement::section(kBeta2, ExtTag::hatLnu)) == G(0, -1));
  const G t1 = grp().tau(ExtElement::section(kBeta2, ExtTag::hatLnu));
  CHECK(grp().tau(ExtElement::section(2 * kBeta2, ExtTag::hatLnu)) ==
        t1 * t1 / td().cocycle_epsC(kBeta2, kBeta2));
  CHECK_THROWS_AS(grp().tau(ExtElement::section(kAlpha1, ExtTag::hatLnu)), std::invalid_argument);
  grid(3, [](LatticeVector a) { CHECK(grp().tau_relation_holds(a)); });
}

TEST_CASE("coset module") {
  const CosetVector vac{{0, G(1)}};
  const auto one = ut_action(grp(), ExtElement::section(kAlpha1, ExtTag::hatLnu), vac);
  CHECK(one == CosetVector{{1, G(1)}});
  const auto fixed = ut_action(grp(), ExtElement::section(kBeta2, ExtTag::hatLnu), vac);
  CHECK(fixed == CosetVector{{0, grp().tau(ExtElement::section(kBeta2, ExtTag::hatLnu))}});
  for (long c = -3; c <= 3; ++c) CHECK(h0_eigenvalue(td(), RationalHVector(kBeta0), c) == Rational(c));
}

TEST_CASE("group suite passes apart from the squared lift") {
  const SuiteReport r = check_group_layer(grp(), 2);
  const json d = r.to_json()["details"];
  CHECK(d["nu_squared_sign_rule_holds"] == true);
  for (const auto& s : r.sample) CHECK(s.find("nu^2") != std::string::npos);
}
