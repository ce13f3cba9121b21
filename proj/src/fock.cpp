#include "a2twist/fock.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace a2twist {

// ---------------------------------------------------------------------------
// Monomials and buckets

std::vector<long> FockMonomial::b0modes() const {
  std::vector<long> out;
  for (auto r : parts)
    if (r % 2 == 0) out.push_back(r / 2);
  return out;
}

std::vector<QuarterInt> FockMonomial::b2modes() const {
  std::vector<QuarterInt> out;
  for (auto r : parts)
    if (r % 2 == 1) out.emplace_back(2 * static_cast<std::int64_t>(r));
  return out;
}

long FockMonomial::heis_qweight() const {
  long s = 0;
  for (auto r : parts) s += 2 * static_cast<long>(r);
  return s;
}

std::string FockMonomial::to_string() const {
  std::ostringstream os;
  for (auto r : parts) {
    os << (r % 2 == 0 ? "b0(" : "b2(") << QuarterInt(-2 * static_cast<std::int64_t>(r)) << ")";
  }
  os << "e[" << charge << "]";
  return os.str();
}

std::string BucketKey::to_string() const {
  return "(" + std::to_string(charge) + "," + std::to_string(qweight) + ")";
}

std::vector<Parts> partitions_of(long n) {
  std::vector<Parts> out;
  if (n < 0) return out;
  Parts cur;
  std::function<void(long, long)> rec = [&](long rem, long maxp) {
    if (rem == 0) {
      out.push_back(cur);
      return;
    }
    for (long p = std::min(rem, maxp); p >= 1; --p) {
      cur.push_back(static_cast<std::uint16_t>(p));
      rec(rem - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<BucketKey> buckets_upto(long cutoff) {
  std::vector<BucketKey> out;
  long cmax = 0;
  while ((cmax + 1) * (cmax + 1) <= cutoff) ++cmax;
  for (long c = -cmax; c <= cmax; ++c)
    for (long w = c * c; w <= cutoff; w += 2) out.push_back({c, w});
  return out;
}

// ---------------------------------------------------------------------------
// Sparse rational matrices and bucket actions

std::size_t RatSparse::nnz() const {
  std::size_t s = 0;
  for (const auto& c : columns) s += c.size();
  return s;
}

void RatSparse::apply_add(const std::vector<Rational>& x, std::vector<Rational>& y) const {
  for (std::size_t j = 0; j < cols; ++j) {
    if (sgn(x[j]) == 0) continue;
    for (const auto& [i, a] : columns[j]) y[i] += a * x[j];
  }
}

void RatSparse::apply_add(const std::vector<GaussianRational>& x, std::vector<GaussianRational>& y) const {
  for (std::size_t j = 0; j < cols; ++j) {
    if (x[j].is_zero()) continue;
    for (const auto& [i, a] : columns[j]) y[i].add_mul(a, x[j]);
  }
}

ExactMatrix BucketAction::matrix(std::size_t src_dim, std::size_t tgt_dim) const {
  ExactMatrix m(tgt_dim, src_dim);
  if (zero || src_dim == 0 || tgt_dim == 0) return m;
  if (!heis) {
    for (std::size_t j = 0; j < src_dim; ++j) m.set(j, j, scalar);
    return m;
  }
  for (std::size_t j = 0; j < heis->cols; ++j)
    for (const auto& [i, a] : heis->columns[j]) m.set(i, j, scalar * GaussianRational(a));
  return m;
}

std::vector<Rational> BucketAction::apply_real(const std::vector<Rational>& x, std::size_t tgt_dim) const {
  std::vector<Rational> y(tgt_dim);
  if (zero || tgt_dim == 0) return y;
  if (!heis) return x;
  heis->apply_add(x, y);
  return y;
}

std::vector<GaussianRational> BucketAction::apply(const std::vector<GaussianRational>& x,
                                                  std::size_t tgt_dim) const {
  std::vector<GaussianRational> y(tgt_dim);
  if (zero || tgt_dim == 0) return y;
  if (!heis) {
    for (std::size_t j = 0; j < x.size(); ++j) y[j] = scalar * x[j];
    return y;
  }
  heis->apply_add(x, y);
  for (auto& v : y)
    if (!v.is_zero()) v *= scalar;
  return y;
}

bool BucketVector::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const GaussianRational& g) { return g.is_zero(); });
}

// ---------------------------------------------------------------------------
// Fock space

FockSpace::FockSpace(long cutoff, const TwistedGroup& group) : cutoff_(cutoff), group_(group) {}

const HeisLevel& FockSpace::heis_level(long level) const {
  static const HeisLevel empty{};
  if (level < 0 || level % 2 != 0) return empty;
  {
    std::shared_lock lk(mu_);
    auto it = levels_.find(level);
    if (it != levels_.end()) return *it->second;
  }
  auto hl = std::make_unique<HeisLevel>();
  hl->level = level;
  hl->basis = partitions_of(level / 2);
  for (std::uint32_t i = 0; i < hl->basis.size(); ++i) hl->index.emplace(hl->basis[i], i);
  std::unique_lock lk(mu_);
  auto [it, fresh] = levels_.try_emplace(level, std::move(hl));
  return *it->second;
}

std::size_t FockSpace::bucket_dim(const BucketKey& key) const { return heis_level(key.heis_level()).basis.size(); }

std::vector<FockMonomial> FockSpace::enumerate_bucket(const BucketKey& key) const {
  std::vector<FockMonomial> out;
  for (const auto& p : heis_level(key.heis_level()).basis) out.push_back({key.charge, p});
  return out;
}

BucketVector FockSpace::vacuum() const { return {{0, 0}, {GaussianRational(1)}}; }

FockVector FockSpace::to_fock_vector(const BucketVector& v) const {
  FockVector out;
  const auto& hl = heis_level(v.key.heis_level());
  for (std::size_t i = 0; i < v.coeffs.size(); ++i)
    if (!v.coeffs[i].is_zero()) out.emplace(FockMonomial{v.key.charge, hl.basis[i]}, v.coeffs[i]);
  return out;
}

FockVector FockSpace::heis_act(LatticeVector beta, QuarterInt n, const FockVector& v) const {
  bool is_b0 = beta == kBeta0;
  if (!is_b0 && !(beta == kBeta2)) throw std::invalid_argument("heis_act: beta must be α1+α2 or α1−α2");
  if (n.q == 0) throw std::invalid_argument("heis_act: zero mode");
  if (is_b0 ? !n.is_integer() : !n.is_half_odd()) throw std::invalid_argument("heis_act: mode parity mismatch");
  const auto r = static_cast<std::uint16_t>((n.q < 0 ? -n.q : n.q) / 2);
  const Rational norm(lattice().gram(beta, beta));
  FockVector out;
  for (const auto& [mono, coef] : v) {
    FockMonomial m = mono;
    if (n.q < 0) {
      m.parts.insert(std::upper_bound(m.parts.begin(), m.parts.end(), r, std::greater<>()), r);
      out[m] += coef;
    } else {
      auto it = std::find(m.parts.begin(), m.parts.end(), r);
      if (it == m.parts.end()) continue;
      long mult = std::count(m.parts.begin(), m.parts.end(), r);
      m.parts.erase(it);
      GaussianRational c = coef;
      c *= Rational(norm * n.value() * mult);
      out[m] += c;
    }
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

const std::vector<FockSpace::EminusTerm>& FockSpace::eminus_terms(long s0, long s2, long level) const {
  static const std::vector<EminusTerm> empty;
  if (level < 0 || level % 2 != 0) return empty;
  auto key = std::make_tuple(s0, s2, level);
  {
    std::shared_lock lk(mu_);
    auto it = eminus_.find(key);
    if (it != eminus_.end()) return *it->second;
  }
  // exp(Σ_r c_r y_r x^{r/2}) with c_r = s0/r (r even) and s2/(3r) (r odd)
  auto terms = std::make_unique<std::vector<EminusTerm>>();
  for (auto& p : partitions_of(level / 2)) {
    Rational coef(1);
    std::size_t i = 0;
    while (i < p.size()) {
      std::size_t j = i;
      while (j < p.size() && p[j] == p[i]) ++j;
      const long r = p[i];
      Rational c = r % 2 == 0 ? Rational(s0, r) : Rational(s2, 3 * r);
      c.canonicalize();
      for (std::size_t k = 1; k <= j - i; ++k) coef *= c / static_cast<long>(k);
      i = j;
    }
    if (sgn(coef) != 0) terms->push_back({std::move(p), std::move(coef)});
  }
  std::unique_lock lk(mu_);
  auto [it, fresh] = eminus_.try_emplace(key, std::move(terms));
  return *it->second;
}

std::vector<Rational> FockSpace::heis_eminus(long s0, long s2, long level) const {
  const auto& hl = heis_level(level);
  std::vector<Rational> out(hl.basis.size());
  for (const auto& t : eminus_terms(s0, s2, level)) out[hl.index.at(t.parts)] = t.coef;
  return out;
}

std::unique_ptr<RatSparse> FockSpace::build_heis(long s0, long s2, long from, long to, bool with_eminus) const {
  const HeisLevel& src = heis_level(from);
  const HeisLevel& tgt = heis_level(to);
  auto out = std::make_unique<RatSparse>();
  out->rows = tgt.basis.size();
  out->cols = src.basis.size();
  out->columns.resize(out->cols);
  if (out->rows == 0 || out->cols == 0) return out;

  std::vector<Rational> acc(out->rows);
  std::vector<std::uint32_t> touched;
  std::vector<char> mark(out->rows, 0);
  Parts remainder, merged;

  for (std::size_t col = 0; col < src.basis.size(); ++col) {
    const Parts& P = src.basis[col];
    // distinct values with multiplicities
    std::vector<std::pair<std::uint16_t, int>> groups;
    for (auto r : P) {
      if (!groups.empty() && groups.back().first == r)
        ++groups.back().second;
      else
        groups.emplace_back(r, 1);
    }
    // E⁺(−λ) substitutes y_r → y_r − shift_r x^{−r/2}.
    std::function<void(std::size_t, Rational, long)> rec = [&](std::size_t g, Rational coef, long removed) {
      if (g == groups.size()) {
        long rem_level = from - removed;
        auto emit = [&](const Parts& parts, const Rational& c) {
          auto it = tgt.index.find(parts);
          if (it == tgt.index.end()) throw std::logic_error("build_heis: target monomial missing");
          std::uint32_t i = it->second;
          if (!mark[i]) {
            mark[i] = 1;
            touched.push_back(i);
          }
          acc[i] += c;
        };
        if (!with_eminus) {
          if (rem_level == to) emit(remainder, coef);
          return;
        }
        for (const auto& t : eminus_terms(s0, s2, to - rem_level)) {
          merged.resize(remainder.size() + t.parts.size());
          std::merge(remainder.begin(), remainder.end(), t.parts.begin(), t.parts.end(), merged.begin(),
                     std::greater<>());
          emit(merged, coef * t.coef);
        }
        return;
      }
      const auto [r, a] = groups[g];
      const long shift = r % 2 == 0 ? s0 : s2;
      Rational c = coef;
      for (int j = 0; j <= a; ++j) {
        if (j > 0) {
          // C(a,j)(−shift)^j built incrementally
          c *= Rational(-shift * (a - j + 1), j);
          if (sgn(c) == 0) break;
        }
        for (int k = 0; k < a - j; ++k) remainder.push_back(r);
        rec(g + 1, c, removed + 2L * r * j);
        remainder.resize(remainder.size() - (a - j));
        if (!with_eminus && from - removed - 2L * r * (j + 1) < to) break;
      }
    };
    remainder.clear();
    rec(0, Rational(1), 0);
    std::sort(touched.begin(), touched.end());
    auto& column = out->columns[col];
    for (auto i : touched) {
      if (sgn(acc[i]) != 0) column.emplace_back(i, acc[i]);
      acc[i] = 0;
      mark[i] = 0;
    }
    touched.clear();
  }
  return out;
}

const RatSparse& FockSpace::heis_vertex(long s0, long s2, long from, long to) const {
  auto key = std::make_tuple(s0, s2, from, to, true);
  {
    std::shared_lock lk(mu_);
    auto it = heis_.find(key);
    if (it != heis_.end()) return *it->second;
  }
  auto m = build_heis(s0, s2, from, to, true);
  std::unique_lock lk(mu_);
  auto [it, fresh] = heis_.try_emplace(key, std::move(m));
  return *it->second;
}

const RatSparse& FockSpace::heis_eplus(long s0, long s2, long from, long to) const {
  auto key = std::make_tuple(s0, s2, from, to, false);
  {
    std::shared_lock lk(mu_);
    auto it = heis_.find(key);
    if (it != heis_.end()) return *it->second;
  }
  auto m = build_heis(s0, s2, from, to, false);
  std::unique_lock lk(mu_);
  auto [it, fresh] = heis_.try_emplace(key, std::move(m));
  return *it->second;
}

BucketKey FockSpace::vertex_target(LatticeVector alpha, QuarterInt n, const BucketKey& src) const {
  const TwistData& td = lattice();
  return {src.charge + td.gram(alpha, kBeta0), src.qweight - n.q - 4 + 2 * td.gram(alpha, alpha)};
}

BucketAction FockSpace::vertex_action(LatticeVector alpha, QuarterInt n, const BucketKey& src) const {
  const TwistData& td = lattice();
  BucketAction act;
  act.source = src;
  act.target = vertex_target(alpha, n, src);
  if (act.target.qweight > cutoff_)
    throw CutoffOverflow("vertex_action: target " + act.target.to_string() + " beyond cutoff");
  const long s0 = td.gram(alpha, kBeta0);
  const long s2 = td.gram(alpha, kBeta2);
  const long aa = td.gram(alpha, alpha);
  const long c = src.charge;
  // 4 × exponent of x^{α(0) + ⟨α(0),α(0)⟩/2 − ⟨α,α⟩/2} on coset c
  const long e0q = 2 * s0 * c + s0 * s0 - 2 * aa;
  const long nq = -n.q - 2 * aa - e0q;
  const long h = src.heis_level();
  const long h2 = h + nq;
  if (h2 != act.target.heis_level()) throw std::logic_error("vertex_action: grading mismatch");
  if (h < 0 || h2 < 0 || h % 2 != 0 || h2 % 2 != 0) {
    act.zero = true;
    return act;
  }
  auto img = group_.ut_action(ExtElement::section(alpha, ExtTag::hatLnu), c);
  if (img.charge != act.target.charge) throw std::logic_error("vertex_action: charge mismatch");
  act.scalar = td.sigma(alpha) * GaussianRational(Rational(1, 4)).pow(aa / 2) * GaussianRational::i_pow(img.phase);
  act.heis = &heis_vertex(s0, s2, h, h2);
  return act;
}

ExactMatrix FockSpace::vertex_component(LatticeVector alpha, QuarterInt n, const BucketKey& src) const {
  BucketAction a = vertex_action(alpha, n, src);
  return a.matrix(bucket_dim(src), bucket_dim(a.target));
}

BucketAction FockSpace::e_alpha1_action(const BucketKey& src) const {
  BucketAction act;
  act.source = src;
  act.target = {src.charge + 1, src.qweight + 2 * src.charge + 1};
  if (act.target.qweight > cutoff_)
    throw CutoffOverflow("e_alpha1: target " + act.target.to_string() + " beyond cutoff");
  const long h = src.heis_level();
  if (h < 0 || h % 2 != 0) {
    act.zero = true;
    return act;
  }
  auto img = group_.ut_action(ExtElement::section(kAlpha1, ExtTag::hatLnu), src.charge);
  act.scalar = GaussianRational::i_pow(img.phase);
  return act;
}

ExactMatrix FockSpace::e_alpha1_op(const BucketKey& src) const {
  BucketAction a = e_alpha1_action(src);
  return a.matrix(bucket_dim(src), bucket_dim(a.target));
}

BucketAction FockSpace::deltaT_action(const BucketKey& src) const {
  const TwistData& td = lattice();
  BucketAction act;
  act.source = src;
  act.target = {src.charge, src.qweight - 2 * src.charge};
  const long c = src.charge;
  const long h = src.heis_level();
  const long h2 = act.target.heis_level();
  if (c < 0 || h < 0 || h2 < 0 || h % 2 != 0) {
    act.zero = true;
    return act;
  }
  const RationalHVector lambda1(Rational(2, 3), Rational(1, 3));
  const Rational s0 = td.gram(lambda1, RationalHVector(kBeta0));
  const Rational s2 = td.gram(lambda1, RationalHVector(kBeta2));
  if (s0.get_den() != 1 || s2.get_den() != 1) throw std::logic_error("deltaT: non-integral shift");
  // i^{α1+α2} x^{(α1+α2)/2} on coset c gives i^c x^{c/2}.
  const Rational ph = td.gram(RationalHVector(kBeta0), Rational(c) * td.project(RationalHVector(kAlpha1), 0));
  act.scalar = GaussianRational::i_pow(ph.get_num().get_si());
  act.heis = &heis_eplus(s0.get_num().get_si(), s2.get_num().get_si(), h, h2);
  return act;
}

ExactMatrix FockSpace::deltaT_constant(const BucketKey& src) const {
  BucketAction a = deltaT_action(src);
  return a.matrix(bucket_dim(src), bucket_dim(a.target));
}

BucketVector FockSpace::apply(const BucketAction& a, const BucketVector& v) const {
  if (!(v.key == a.source)) throw std::invalid_argument("apply: vector not in the source bucket");
  return {a.target, a.apply(v.coeffs, bucket_dim(a.target))};
}

}  // namespace a2twist
