#include "a2twist/envelope.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace a2twist {

namespace {

const QuarterInt kQuarter(1);
const QuarterInt kHalf(2);
const QuarterInt kOne(4);

/// Non-decreasing insertion.
void insert_sorted(std::vector<QuarterInt>& v, QuarterInt x) { v.insert(std::upper_bound(v.begin(), v.end(), x), x); }

/// Partitions of n into exactly k parts, each part from `allowed(part)`,
/// parts listed non-increasing, with every part at most `maxpart`.
void parts_exact(long n, long k, long maxpart, const std::function<bool(long)>& allowed, std::vector<long>& cur,
                 std::vector<std::vector<long>>& out) {
  if (k == 0) {
    if (n == 0) out.push_back(cur);
    return;
  }
  for (long p = std::min(n, maxpart); p >= 1; --p) {
    if (!allowed(p)) continue;
    if (p * k < n) break;
    cur.push_back(p);
    parts_exact(n - p, k - 1, p, allowed, cur, out);
    cur.pop_back();
  }
}

}  // namespace

ModeGen ModeGen::U(QuarterInt n) {
  if (!valid(Label::u, n)) throw std::invalid_argument("u(n) needs n in 1/4 + (1/2)Z, got " + n.to_string());
  return {Label::u, n};
}

ModeGen ModeGen::Z(QuarterInt m) {
  if (!valid(Label::z, m)) throw std::invalid_argument("z(m) needs integer m, got " + m.to_string());
  return {Label::z, m};
}

bool ModeGen::valid(Label l, QuarterInt n) { return l == Label::u ? n.q % 2 != 0 : n.is_integer(); }

std::string ModeGen::to_string() const { return (label == Label::u ? "u(" : "z(") + n.to_string() + ")"; }

long PBWMonomial::qweight() const {
  long w = 0;
  for (auto m : zpart) w -= m.q;
  for (auto n : upart) w -= n.q;
  return w;
}

bool PBWMonomial::has_nonnegative() const {
  return (!zpart.empty() && zpart.back().q >= 0) || (!upart.empty() && upart.back().q >= 0);
}

std::string PBWMonomial::to_string() const {
  if (zpart.empty() && upart.empty()) return "1";
  std::string s;
  for (auto m : zpart) s += "z(" + m.to_string() + ")";
  for (auto n : upart) s += "u(" + n.to_string() + ")";
  return s;
}

EnvElement EnvElement::one() { return monomial(PBWMonomial{}); }

EnvElement EnvElement::monomial(PBWMonomial m, GaussianRational c) {
  EnvElement e;
  e.add(m, c);
  return e;
}

EnvElement EnvElement::gen(ModeGen g) { return one().times(g); }

EnvElement EnvElement::word(const std::vector<ModeGen>& gens) {
  EnvElement e = one();
  for (const auto& g : gens) e = e.times(g);
  return e;
}

GaussianRational EnvElement::coeff(const PBWMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? GaussianRational() : it->second;
}

void EnvElement::add(const PBWMonomial& m, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(m, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

EnvElement& EnvElement::operator+=(const EnvElement& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

EnvElement& EnvElement::operator-=(const EnvElement& o) {
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

EnvElement& EnvElement::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

EnvElement EnvElement::times(const ModeGen& g) const {
  EnvElement out;
  for (const auto& [mono, c] : terms_) {
    if (g.label == ModeGen::Label::z) {
      PBWMonomial m = mono;
      insert_sorted(m.zpart, g.n);
      out.add(m, c);
      continue;
    }
    PBWMonomial m = mono;
    insert_sorted(m.upart, g.n);
    out.add(m, c);
    // Moving u(y) left past each larger mode leaves a central bracket term.
    const auto& s = mono.upart;
    for (std::size_t j = s.size(); j-- > 0 && s[j] > g.n;) {
      GaussianRational k = u_bracket_coeff(s[j], g.n);
      if (k.is_zero()) continue;
      PBWMonomial r = mono;
      r.upart.erase(r.upart.begin() + static_cast<std::ptrdiff_t>(j));
      insert_sorted(r.zpart, s[j] + g.n);
      out.add(r, c * k);
    }
  }
  return out;
}

EnvElement operator*(const EnvElement& a, const EnvElement& b) {
  EnvElement out;
  for (const auto& [mono, c] : b.terms_) {
    EnvElement part = a;
    part *= c;
    for (auto m : mono.zpart) part = part.times(ModeGen{ModeGen::Label::z, m});
    for (auto n : mono.upart) part = part.times(ModeGen{ModeGen::Label::u, n});
    out += part;
  }
  return out;
}

std::optional<std::pair<long, long>> EnvElement::homogeneous_degree() const {
  std::optional<std::pair<long, long>> d;
  for (const auto& [m, c] : terms_) {
    std::pair<long, long> here{m.charge(), m.qweight()};
    if (d && *d != here) return std::nullopt;
    d = here;
  }
  return d;
}

std::string EnvElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")·" << m.to_string();
  }
  return os.str();
}

GaussianRational u_bracket_coeff(QuarterInt a, QuarterInt b) {
  if (!(a + b).is_integer()) return GaussianRational();
  return a.is_one_quarter() ? GaussianRational::frac(-1, 2) : GaussianRational::frac(1, 2);
}

EnvElement bracket(const ModeGen& a, const ModeGen& b) {
  if (a.label == ModeGen::Label::z || b.label == ModeGen::Label::z) return {};
  GaussianRational k = u_bracket_coeff(a.n, b.n);
  if (k.is_zero()) return {};
  return k * EnvElement::gen(ModeGen::Z(a.n + b.n));
}

EnvElement normal_order(const std::vector<ModeGen>& word) { return EnvElement::word(word); }

EnvElement project_negative(const EnvElement& e) {
  EnvElement out;
  for (const auto& [m, c] : e.terms())
    if (!m.has_nonnegative()) out.add(m, c);
  return out;
}

std::string to_string(RKind k) {
  switch (k) {
    case RKind::R1:
      return "R1";
    case RKind::R12:
      return "R12";
    case RKind::R121:
      return "R121";
  }
  return "?";
}

QuarterInt r0_min(RKind kind) {
  switch (kind) {
    case RKind::R1:
      return QuarterInt(2);
    case RKind::R12:
      return QuarterInt(8);
    case RKind::R121:
      return QuarterInt(5);
  }
  return {};
}

long r0_charge(RKind kind) { return kind == RKind::R1 ? 2 : kind == RKind::R12 ? 4 : 3; }

EnvElement make_R0(RKind kind, QuarterInt t, bool strict) {
  const bool residue_ok = kind == RKind::R1    ? t.is_half_integer()
                          : kind == RKind::R12 ? t.is_integer()
                                               : t.q % 2 != 0;
  if (!residue_ok) throw std::invalid_argument(to_string(kind) + ": t = " + t.to_string() + " has the wrong residue");
  if (strict && t < r0_min(kind))
    throw std::invalid_argument(to_string(kind) + ": t = " + t.to_string() + " below the generator range");
  EnvElement r;
  switch (kind) {
    case RKind::R1:
      // n1 + n2 = −t − 1/2 with n1, n2 ≤ −1/4
      for (QuarterInt n1 = -t - kQuarter; n1 <= -kQuarter; n1 += kHalf) {
        QuarterInt n2 = -t - kHalf - n1;
        r += EnvElement::word({ModeGen::U(n1 + kHalf), ModeGen::U(n2)});
        r += EnvElement::word({ModeGen::U(n1), ModeGen::U(n2 + kHalf)});
      }
      break;
    case RKind::R12:
      for (QuarterInt m1 = -t + kOne; m1 <= -kOne; m1 += kOne)
        r += EnvElement::word({ModeGen::Z(m1), ModeGen::Z(-t - m1)});
      break;
    case RKind::R121:
      for (QuarterInt m = -t + kQuarter; m <= -kOne; m += kQuarter) {
        if (!m.is_integer()) continue;
        r += EnvElement::word({ModeGen::Z(m), ModeGen::U(-t - m)});
      }
      break;
  }
  return r;
}

std::vector<PBWMonomial> pbw_monomials(long charge, long qweight) {
  std::vector<PBWMonomial> out;
  if (charge < 0 || qweight < 0) return out;
  auto any = [](long) { return true; };
  auto odd = [](long p) { return p % 2 != 0; };
  for (long r = 0; 2 * r <= charge; ++r) {
    const long s = charge - 2 * r;
    for (long wz = 0; wz <= qweight; wz += 4) {
      std::vector<std::vector<long>> zs, us;
      std::vector<long> cur;
      parts_exact(wz / 4, r, wz / 4, any, cur, zs);
      parts_exact(qweight - wz, s, qweight - wz, odd, cur, us);
      for (const auto& z : zs)
        for (const auto& u : us) {
          PBWMonomial m;
          for (long p : z) m.zpart.push_back(QuarterInt(-4 * p));
          for (long p : u) m.upart.push_back(QuarterInt(-p));
          out.push_back(std::move(m));
        }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

/// Non-decreasing multisets of positive u-modes with k elements and 4Σa ≤ budget.
void positive_u_multisets(long k, long budget, long min_q, std::vector<QuarterInt>& cur,
                          std::vector<std::vector<QuarterInt>>& out) {
  if (k == 0) {
    out.push_back(cur);
    return;
  }
  for (long q = min_q; q * k <= budget; q += 2) {
    cur.push_back(QuarterInt(q));
    positive_u_multisets(k - 1, budget - q, q, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<EnvElement> ideal_bucket(long charge, long qweight, const IdealOptions& opt) {
  std::vector<EnvElement> out;
  for (RKind kind : {RKind::R1, RKind::R12, RKind::R121}) {
    const long gc = r0_charge(kind);
    if (gc > charge) continue;
    const long step = kind == RKind::R12 ? 4 : 2;
    for (QuarterInt t = r0_min(kind); t.q <= qweight + opt.gen_slack; t += QuarterInt(step)) {
      const EnvElement g = make_R0(kind, t);
      for (long k = 0; gc + k <= charge; ++k) {
        std::vector<std::vector<QuarterInt>> pos;
        std::vector<QuarterInt> cur;
        positive_u_multisets(k, t.q + opt.pos_slack, 1, cur, pos);
        for (const auto& p : pos) {
          PBWMonomial pm;
          pm.upart = p;
          EnvElement h = project_negative(EnvElement::monomial(pm) * g);
          if (h.is_zero()) continue;
          const long hw = h.terms().begin()->first.qweight();
          for (const auto& lm : pbw_monomials(charge - gc - k, qweight - hw)) {
            EnvElement e = project_negative(EnvElement::monomial(lm) * h);
            if (!e.is_zero()) out.push_back(std::move(e));
          }
        }
      }
    }
  }
  return out;
}

std::size_t ideal_rank(long charge, long qweight, const IdealOptions& opt) {
  const auto basis = pbw_monomials(charge, qweight);
  std::map<PBWMonomial, std::size_t> index;
  for (std::size_t j = 0; j < basis.size(); ++j) index[basis[j]] = j;
  Echelon<GaussianRational> ech(basis.size());
  for (const auto& e : ideal_bucket(charge, qweight, opt)) {
    if (ech.rank() == basis.size()) break;
    std::vector<GaussianRational> v(basis.size());
    for (const auto& [m, c] : e.terms()) {
      auto it = index.find(m);
      if (it == index.end()) throw std::logic_error("ideal_rank: term " + m.to_string() + " outside the bucket");
      v[it->second] = c;
    }
    ech.insert(std::move(v));
  }
  return ech.rank();
}

namespace {

EnvElement shift(const EnvElement& e, int dir) {
  EnvElement out;
  const GaussianRational unit = dir > 0 ? -GaussianRational::i() : GaussianRational::i();
  for (const auto& [m, c] : e.terms()) {
    PBWMonomial r = m;
    for (auto& z : r.zpart) z += QuarterInt(4 * dir);
    for (auto& u : r.upart) u += QuarterInt(2 * dir);
    out.add(r, c * unit.pow(static_cast<long>(m.upart.size())));
  }
  return out;
}

}  // namespace

EnvElement tau_shift(const EnvElement& e) { return shift(e, 1); }
EnvElement tau_inverse(const EnvElement& e) { return shift(e, -1); }
EnvElement psi_map(const EnvElement& e) { return tau_inverse(e).times(ModeGen::U(-kQuarter)); }

namespace {

/// Solves π(lhs) = k·π(rhs) for a scalar k. Returns nullopt if no scalar
/// works; a zero π(rhs) forces π(lhs) = 0 and leaves k undetermined.
struct Ratio {
  bool ok = false;
  std::optional<GaussianRational> k;
};

Ratio solve_ratio(const EnvElement& lhs, const EnvElement& rhs) {
  Ratio r;
  if (rhs.is_zero()) {
    r.ok = lhs.is_zero();
    return r;
  }
  const auto& [m0, c0] = *rhs.terms().begin();
  GaussianRational k = lhs.coeff(m0) / c0;
  r.ok = (lhs - k * rhs).is_zero();
  if (r.ok) r.k = k;
  return r;
}

}  // namespace

SuiteReport check_ideal_stability(QuarterInt t_max) {
  SuiteReport rep("stability", "stability of the relation ideal under the shift maps");
  const GaussianRational theta1 = -GaussianRational::i();
  json flagged = json::array();
  json bvals = json::object(), dvals = json::object();

  // A failing identity at an endpoint of a listed range is flagged, not failed.
  auto check = [&](bool ok, const std::string& what, bool boundary) {
    if (!ok && boundary) {
      flagged.push_back(what);
      ++rep.checks;
      return;
    }
    rep.expect(ok, what);
  };

  for (QuarterInt t(2); t <= t_max; t += kHalf) {
    EnvElement img = tau_shift(make_R0(RKind::R1, t));
    const std::string ts = t.to_string();
    if (t <= QuarterInt(4)) {
      check(project_negative(img).is_zero(), "tau(R1_" + ts + ") in U(n)n+", t == QuarterInt(4));
    } else {
      EnvElement diff = img - theta1 * theta1 * make_R0(RKind::R1, t - kOne);
      check(project_negative(diff).is_zero(), "tau(R1_" + ts + ") = theta^2 R1_{t-1} mod U(n)n+", t == QuarterInt(6));
    }
  }
  for (QuarterInt t(8); t <= t_max; t += kOne) {
    EnvElement img = tau_shift(make_R0(RKind::R12, t));
    const std::string ts = t.to_string();
    if (t <= QuarterInt(12)) {
      check(project_negative(img).is_zero(), "tau(R12_" + ts + ") in U(n)n+", t == QuarterInt(12));
    } else {
      EnvElement diff = img - make_R0(RKind::R12, t - QuarterInt(8));
      check(project_negative(diff).is_zero(), "tau(R12_" + ts + ") = R12_{t-2} mod U(n)n+", t == QuarterInt(16));
    }
  }
  for (QuarterInt t(5); t <= t_max; t += kHalf) {
    EnvElement img = tau_shift(make_R0(RKind::R121, t));
    const std::string ts = t.to_string();
    if (t <= QuarterInt(9)) {
      check(project_negative(img).is_zero(), "tau(R121_" + ts + ") in U(n)n+", t == QuarterInt(9));
    } else {
      EnvElement diff = img - theta1 * make_R0(RKind::R121, t - QuarterInt(6));
      check(project_negative(diff).is_zero(), "tau(R121_" + ts + ") = theta R121_{t-3/2} mod U(n)n+",
            t == QuarterInt(11));
    }
  }

  const EnvElement u = EnvElement::gen(ModeGen::U(-kQuarter));
  for (QuarterInt t(2); t <= t_max; t += kHalf) {
    const EnvElement r = make_R0(RKind::R1, t);
    const EnvElement pt = psi_map(tau_shift(r));
    rep.expect(pt == r * u, "psi tau(R1_" + t.to_string() + ") = R1 u(-1/4)");
    Ratio b = solve_ratio(project_negative(pt - u * r), project_negative(make_R0(RKind::R121, t + kQuarter, false)));
    rep.expect(b.ok, "psi tau(R1_" + t.to_string() + ") = u(-1/4) R1 + b R121_{t+1/4} mod U(n)n+");
    bvals[t.to_string()] = b.k ? b.k->to_string() : (b.ok ? "undetermined" : "none");
  }
  for (QuarterInt t(8); t <= t_max; t += kOne) {
    const EnvElement r = make_R0(RKind::R12, t);
    rep.expect(psi_map(tau_shift(r)) == u * r, "psi tau(R12_" + t.to_string() + ") = u(-1/4) R12 exactly");
  }
  for (QuarterInt t(5); t <= t_max; t += kHalf) {
    const EnvElement r = make_R0(RKind::R121, t);
    const EnvElement pt = psi_map(tau_shift(r));
    const QuarterInt t2 = t + kQuarter;
    EnvElement target = t2.is_integer() ? make_R0(RKind::R12, t2, false) : EnvElement{};
    Ratio d = solve_ratio(pt - u * r, target);
    rep.expect(d.ok, "psi tau(R121_" + t.to_string() + ") = u(-1/4) R121 + d R12_{t+1/4} exactly");
    dvals[t.to_string()] = d.k ? d.k->to_string() : (d.ok ? "undetermined" : "none");
  }

  // z(−1) ∈ span{R1_1, u(−5/4)u(1/4), u(−3/4)u(−1/4)}
  {
    const auto basis = pbw_monomials(2, 4);
    std::vector<EnvElement> spanning{make_R0(RKind::R1, kOne),
                                     EnvElement::word({ModeGen::U(QuarterInt(-5)), ModeGen::U(kQuarter)}),
                                     EnvElement::word({ModeGen::U(QuarterInt(-3)), ModeGen::U(-kQuarter)})};
    std::map<PBWMonomial, std::size_t> idx;
    for (const auto& e : spanning)
      for (const auto& [m, c] : e.terms()) idx.emplace(m, 0);
    PBWMonomial zm;
    zm.zpart = {-kOne};
    idx.emplace(zm, 0);
    std::size_t j = 0;
    for (auto& [m, k] : idx) k = j++;
    auto vec = [&](const EnvElement& e) {
      std::vector<GaussianRational> v(idx.size());
      for (const auto& [m, c] : e.terms()) v[idx.at(m)] = c;
      return v;
    };
    std::vector<std::vector<GaussianRational>> cols;
    for (const auto& e : spanning) cols.push_back(vec(e));
    auto sol = span_membership(vec(EnvElement::monomial(zm)), cols);
    rep.expect(sol.has_value(), "z(-1) in span of R1_1 and two quadratic monomials");
    if (sol) {
      json abc = json::array();
      for (const auto& x : *sol) abc.push_back(x.to_string());
      rep.details["z_minus1_coefficients"] = abc;
    }
  }

  rep.details["t_max"] = t_max.to_string();
  rep.details["b"] = bvals;
  rep.details["d"] = dvals;
  rep.details["flagged"] = flagged;
  return rep;
}

namespace {

std::vector<std::pair<LatticeVector, QuarterInt>> ops_right_to_left(const PBWMonomial& m) {
  std::vector<std::pair<LatticeVector, QuarterInt>> ops;
  for (auto it = m.upart.rbegin(); it != m.upart.rend(); ++it) ops.emplace_back(kAlpha1, *it);
  for (auto it = m.zpart.rbegin(); it != m.zpart.rend(); ++it) ops.emplace_back(kBeta0, *it);
  return ops;
}

}  // namespace

BucketVector evaluate_fLambda_bucket(const FockSpace& fs, const EnvElement& e, const BucketKey& key) {
  BucketVector out{key, std::vector<GaussianRational>(fs.bucket_dim(key))};
  for (const auto& [m, c] : e.terms()) {
    if (m.charge() != key.charge || m.qweight() != key.qweight)
      throw std::invalid_argument("evaluate_fLambda: term " + m.to_string() + " outside bucket " + key.to_string());
    BucketVector v = fs.vacuum();
    bool zero = false;
    for (const auto& [alpha, n] : ops_right_to_left(m)) {
      BucketAction a = fs.vertex_action(alpha, n, v.key);
      if (a.zero) {
        zero = true;
        break;
      }
      v = fs.apply(a, v);
      if (v.is_zero()) {
        zero = true;
        break;
      }
    }
    if (zero) continue;
    for (std::size_t j = 0; j < out.coeffs.size(); ++j) out.coeffs[j].add_mul(c, v.coeffs[j]);
  }
  return out;
}

FockVector evaluate_fLambda(const FockSpace& fs, const EnvElement& e) {
  std::map<BucketKey, EnvElement> split;
  for (const auto& [m, c] : e.terms()) split[BucketKey{m.charge(), m.qweight()}].add(m, c);
  FockVector out;
  for (const auto& [key, part] : split) {
    for (auto& [mono, c] : fs.to_fock_vector(evaluate_fLambda_bucket(fs, part, key))) {
      auto [it, fresh] = out.try_emplace(mono, c);
      if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }
  return out;
}

}  // namespace a2twist
