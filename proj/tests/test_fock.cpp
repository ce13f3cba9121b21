#include "a2twist/envelope.hpp"
#include "a2twist/fock.hpp"

#include <doctest.h>

using namespace a2twist;
using G = GaussianRational;

namespace {

const FockMonomial kVac{0, {}};

FockVector scale(FockVector v, const G& c) {
  for (auto& [m, x] : v) x *= c;
  return v;
}

void accumulate(FockVector& into, const FockVector& v) {
  for (const auto& [m, x] : v) into[m] += x;
  for (auto it = into.begin(); it != into.end();) it = it->second.is_zero() ? into.erase(it) : std::next(it);
}

FockVector at_level(const FockVector& v, long level) {
  FockVector out;
  for (const auto& [m, x] : v)
    if (m.heis_qweight() == level) out[m] = x;
  return out;
}

// exp(sign · Σ_{n>0} λ(±n)/n · x^{∓n}) applied to v by summing the power
// series with single-mode operators; only Heisenberg levels in [lo, hi] kept.
FockVector exp_series(const FockSpace& fs, long s0, long s2, bool creation, const FockVector& v, long lo, long hi) {
  const auto& td = fs.lattice();
  std::vector<std::pair<QuarterInt, G>> ops;  // mode, coefficient
  for (long r = 1; 2 * r <= hi; ++r) {
    const bool even = r % 2 == 0;
    const LatticeVector beta = even ? kBeta0 : kBeta2;
    const long s = even ? s0 : s2;
    Rational c = Rational(s, td.gram(beta, beta)) / Rational(r, 2);
    if (!creation) c = -c;
    ops.emplace_back(QuarterInt(creation ? -2 * r : 2 * r), G(c));
  }
  auto keep = [&](FockVector w) {
    for (auto it = w.begin(); it != w.end();) {
      const long l = it->first.heis_qweight();
      it = (l < lo || l > hi) && creation ? w.erase(it) : std::next(it);
    }
    return w;
  };
  FockVector result = v, term = v;
  for (long k = 1; !term.empty(); ++k) {
    FockVector next;
    for (const auto& [mode, c] : ops) {
      const LatticeVector beta = (mode.q / 2) % 2 == 0 ? kBeta0 : kBeta2;
      accumulate(next, scale(fs.heis_act(beta, mode, term), c));
    }
    term = keep(scale(next, G(Rational(1, k))));
    accumulate(result, term);
  }
  return result;
}

FockVector column_of(const FockSpace& fs, const RatSparse& m, std::size_t col, long to) {
  FockVector out;
  const auto& basis = fs.heis_level(to).basis;
  for (const auto& [row, x] : m.columns[col]) out[FockMonomial{0, basis[row]}] = G(x);
  return out;
}

FockVector bucket_fock(const FockSpace& fs, const BucketVector& v) { return fs.to_fock_vector(v); }

BucketVector act(const FockSpace& fs, LatticeVector a, long q, const BucketVector& v) {
  return fs.apply(fs.vertex_action(a, QuarterInt(q), v.key), v);
}

}  // namespace

TEST_CASE("bucket enumeration") {
  const FockSpace fs(12);
  CHECK(fs.enumerate_bucket({0, 0}) == std::vector<FockMonomial>{kVac});
  CHECK(fs.enumerate_bucket({1, 1}).size() == 1);
  CHECK(fs.enumerate_bucket({1, 1})[0].parts.empty());
  CHECK(fs.bucket_dim({0, 8}) == 5);
  CHECK(fs.bucket_dim({0, 2}) == 1);
  CHECK(fs.bucket_dim({0, 1}) == 0);
}

TEST_CASE("heisenberg modes") {
  const FockSpace fs(8);
  const FockVector vac{{kVac, G(1)}};
  auto two = fs.heis_act(kBeta0, QuarterInt(4), fs.heis_act(kBeta0, QuarterInt(-4), vac));
  CHECK(two == FockVector{{kVac, G(2)}});
  auto three = fs.heis_act(kBeta2, QuarterInt(2), fs.heis_act(kBeta2, QuarterInt(-2), vac));
  CHECK(three == FockVector{{kVac, G(3)}});
  CHECK(fs.heis_act(kBeta0, QuarterInt(4), vac).empty());
  CHECK_THROWS_AS(fs.heis_act(kBeta0, QuarterInt(2), vac), std::invalid_argument);
}

TEST_CASE("exponential operators agree with their power series") {
  const FockSpace fs(24);
  const FockVector vac{{kVac, G(1)}};
  for (auto [s0, s2] : std::vector<std::pair<long, long>>{{1, 3}, {-2, 0}, {0, -3}, {2, 6}})
    for (long level = 0; level <= 16; level += 2) {
      const auto coeffs = fs.heis_eminus(s0, s2, level);
      FockVector expected;
      const auto& basis = fs.heis_level(level).basis;
      for (std::size_t k = 0; k < basis.size(); ++k)
        if (sgn(coeffs[k]) != 0) expected[FockMonomial{0, basis[k]}] = G(coeffs[k]);
      CHECK(at_level(exp_series(fs, s0, s2, true, vac, 0, level), level) == expected);
    }

  for (auto [s0, s2] : std::vector<std::pair<long, long>>{{1, 3}, {-1, -3}, {2, 0}})
    for (long from : {6L, 10L, 12L})
      for (long to = 0; to <= from; to += 2) {
        const RatSparse& plus = fs.heis_eplus(s0, s2, from, to);
        const RatSparse& both = fs.heis_vertex(s0, s2, from, to + 4);
        const auto& src = fs.heis_level(from).basis;
        for (std::size_t j = 0; j < src.size(); ++j) {
          const FockVector v{{FockMonomial{0, src[j]}, G(1)}};
          const FockVector lowered = exp_series(fs, s0, s2, false, v, 0, from);
          CHECK(at_level(lowered, to) == column_of(fs, plus, j, to));
          const FockVector raised = exp_series(fs, s0, s2, true, lowered, 0, to + 4);
          CHECK(at_level(raised, to + 4) == column_of(fs, both, j, to + 4));
        }
      }
}

TEST_CASE("vertex operator examples") {
  const FockSpace fs(16);
  const ExactMatrix x = fs.vertex_component(kAlpha1, QuarterInt(-1), {0, 0});
  CHECK(x.rows() == 1);
  CHECK(x.get(0, 0) == G(Rational(1, 4), Rational(-1, 4)));
  CHECK(fs.vertex_target(kAlpha1, QuarterInt(-1), {0, 0}) == BucketKey{1, 1});
  CHECK(fs.e_alpha1_op({0, 0}).get(0, 0) == G(1));
  CHECK(fs.deltaT_constant({0, 0}).get(0, 0) == G(1));

  // x_{α2}(m) = ±x_{α1}(m) with + on 1/4 + Z; −1/4 lies in 3/4 + Z
  CHECK(fs.vertex_component(kAlpha2, QuarterInt(-1), {0, 0}) == x.scaled(G(-1)));
  CHECK(fs.vertex_component(kAlpha2, QuarterInt(-3), {0, 0}) == fs.vertex_component(kAlpha1, QuarterInt(-3), {0, 0}));
  CHECK(fs.vertex_component(kAlpha2, QuarterInt(-5), {0, 0}) ==
        fs.vertex_component(kAlpha1, QuarterInt(-5), {0, 0}).scaled(G(-1)));
  const BucketAction half = fs.vertex_action(kAlpha1, QuarterInt(-2), {0, 0});
  CHECK(fs.apply(half, fs.vacuum()).is_zero());
  CHECK_THROWS_AS(fs.vertex_action(kAlpha1, QuarterInt(-20), {0, 0}), CutoffOverflow);
}

TEST_CASE("constant term of the shift on simple vectors") {
  const FockSpace fs(20);
  const BucketVector vac = fs.vacuum();
  const BucketVector a = act(fs, kAlpha1, -3, vac);
  const BucketVector lhs = fs.apply(fs.deltaT_action(a.key), a);
  const BucketVector b = act(fs, kAlpha1, -1, vac);
  CHECK(lhs.key == b.key);
  CHECK(bucket_fock(fs, lhs) == scale(bucket_fock(fs, b), G(0, -1)));

  for (long m : {2L, 3L})
    for (long n : {3L, 5L, 7L}) {
      // z(−m) u(−n/4)·1 against (−i)·z(−m+1) u(−n/4+1/2)·1
      const BucketVector src = act(fs, kBeta0, -4 * m, act(fs, kAlpha1, -n, vac));
      const BucketVector out = fs.apply(fs.deltaT_action(src.key), src);
      const BucketVector image = act(fs, kBeta0, -4 * m + 4, act(fs, kAlpha1, -n + 2, vac));
      CHECK(bucket_fock(fs, out) == scale(bucket_fock(fs, image), G(0, -1)));
    }

}
