#include "a2twist/fock.hpp"

#include <optional>

namespace a2twist {

namespace {

struct OpSpec {
  LatticeVector alpha;
  QuarterInt n;
};

/// coef · (ops applied left to right, i.e. ops[0] acts first)
struct Word {
  GaussianRational coef;
  std::vector<OpSpec> ops;
};

std::string describe(const std::vector<Word>& terms) {
  std::string s;
  for (const auto& w : terms) {
    s += (s.empty() ? "" : " + ") + w.coef.to_string() + "·";
    for (auto it = w.ops.rbegin(); it != w.ops.rend(); ++it) {
      const char* nm = it->alpha == kAlpha1 ? "x1" : it->alpha == kAlpha2 ? "x2" : "x12";
      s += std::string(nm) + "(" + it->n.to_string() + ")";
    }
  }
  return s;
}

/// Whether every intermediate and final bucket of the word stays within the cutoff.
bool representable(const FockSpace& fs, const BucketKey& src, const Word& w, long cutoff) {
  BucketKey k = src;
  for (const auto& op : w.ops) {
    k = fs.vertex_target(op.alpha, op.n, k);
    if (k.qweight > cutoff) return false;
  }
  return true;
}

/// Σ terms applied to every basis vector of src equals zero.
bool combination_vanishes(const FockSpace& fs, const BucketKey& src, const std::vector<Word>& terms) {
  const std::size_t sd = fs.bucket_dim(src);
  if (sd == 0) return true;
  std::vector<std::vector<BucketAction>> acts;
  for (const auto& w : terms) {
    std::vector<BucketAction> seq;
    BucketKey k = src;
    for (const auto& op : w.ops) {
      seq.push_back(fs.vertex_action(op.alpha, op.n, k));
      k = seq.back().target;
    }
    acts.push_back(std::move(seq));
  }
  for (std::size_t j = 0; j < sd; ++j) {
    std::optional<BucketKey> tk;
    std::vector<GaussianRational> acc;
    for (std::size_t t = 0; t < terms.size(); ++t) {
      std::vector<Rational> x(sd);
      x[j] = 1;
      GaussianRational s = terms[t].coef;
      BucketKey k = src;
      bool zero = false;
      for (const auto& a : acts[t]) {
        if (a.zero) {
          zero = true;
          break;
        }
        x = a.apply_real(x, fs.bucket_dim(a.target));
        s *= a.scalar;
        k = a.target;
      }
      if (zero) continue;
      if (!tk) {
        tk = k;
        acc.assign(fs.bucket_dim(k), GaussianRational());
      } else if (!(*tk == k)) {
        throw std::logic_error("combination_vanishes: inhomogeneous combination");
      }
      for (std::size_t i = 0; i < x.size(); ++i)
        if (sgn(x[i]) != 0) acc[i].add_mul(x[i], s);
    }
    for (const auto& g : acc)
      if (!g.is_zero()) return false;
  }
  return true;
}

bool any_nonzero(const FockSpace& fs, const BucketKey& src, const Word& w) {
  return !combination_vanishes(fs, src, {w});
}

GaussianRational kappa(QuarterInt m) {
  // −(i/4)(i^{−4m} − (−i)^{−4m})
  GaussianRational d = GaussianRational::i_pow(-m.q) - GaussianRational::i_pow(-3 * m.q);
  return GaussianRational(Rational(0), Rational(-1, 4)) * d;
}

}  // namespace

SuiteReport check_linear_relations(const FockSpace& fs, long cutoff) {
  SuiteReport rep("relations", "linear relations among the twisted vertex operator components");
  long nontrivial = 0, vanishing = 0;
  for (const auto& src : buckets_upto(cutoff)) {
    for (long mq = src.qweight - cutoff; mq <= src.qweight; ++mq) {
      QuarterInt m(mq);
      const std::string where = " on bucket " + src.to_string() + " at m=" + m.to_string();
      Word x1{GaussianRational(1), {{kAlpha1, m}}};
      Word x2{GaussianRational(1), {{kAlpha2, m}}};
      if (m.is_half_integer()) {
        rep.expect(combination_vanishes(fs, src, {x1}), "x_a1(m) != 0" + where);
        rep.expect(combination_vanishes(fs, src, {x2}), "x_a2(m) != 0" + where);
        ++vanishing;
      } else {
        Word neg1{GaussianRational(m.is_one_quarter() ? -1 : 1), {{kAlpha1, m}}};
        bool ok = combination_vanishes(fs, src, {x2, neg1});
        rep.expect(ok, std::string(m.is_one_quarter() ? "x_a2(m) != x_a1(m)" : "x_a2(m) != -x_a1(m)") + where);
        if (any_nonzero(fs, src, x1)) ++nontrivial;
      }
      if (src.qweight - mq <= cutoff && !m.is_integer()) {
        Word z{GaussianRational(1), {{kBeta0, m}}};
        rep.expect(combination_vanishes(fs, src, {z}), "x_a12(m) != 0" + where);
        ++vanishing;
      }
    }
  }
  rep.details["cutoff"] = cutoff;
  rep.details["nonzero_identified_pairs"] = nontrivial;
  rep.details["vanishing_checks"] = vanishing;
  return rep;
}

SuiteReport check_brackets(const FockSpace& fs, long cutoff, long mode_bound) {
  SuiteReport rep("brackets", "bracket table of the twisted nilpotent currents");
  std::vector<QuarterInt> umodes, zmodes, allmodes;
  for (long q = -mode_bound; q <= mode_bound; ++q) {
    allmodes.emplace_back(q);
    if (q % 2 != 0) umodes.emplace_back(q);
    if (q % 4 == 0) zmodes.emplace_back(q);
  }
  long nontrivial = 0;
  auto within = [&](const BucketKey& src, const std::vector<Word>& ws) {
    for (const auto& w : ws)
      if (!representable(fs, src, w, cutoff)) return false;
    return true;
  };
  const GaussianRational half(Rational(1, 2));
  for (const auto& src : buckets_upto(cutoff)) {
    for (auto m : umodes)
      for (auto n : umodes) {
        const std::string where = " on bucket " + src.to_string() + " at (m,n)=(" + m.to_string() + "," +
                                  n.to_string() + ")";
        QuarterInt mn = m + n;
        struct Fam {
          LatticeVector a, b;
          GaussianRational k;
          const char* name;
        };
        const Fam fams[] = {{kAlpha1, kAlpha2, half, "[x1,x2]"},
                            {kAlpha1, kAlpha1, kappa(m), "[x1,x1]"},
                            {kAlpha2, kAlpha2, -kappa(m), "[x2,x2]"}};
        for (const auto& f : fams) {
          std::vector<Word> ws{{GaussianRational(1), {{f.b, n}, {f.a, m}}},
                               {GaussianRational(-1), {{f.a, m}, {f.b, n}}},
                               {-f.k, {{kBeta0, mn}}}};
          if (!within(src, ws)) continue;
          if (rep.expect(combination_vanishes(fs, src, ws), std::string(f.name) + " mismatch" + where) &&
              !f.k.is_zero() && mn.is_integer() && any_nonzero(fs, src, ws[2]))
            ++nontrivial;
        }
      }
    for (auto m : zmodes)
      for (auto n : allmodes)
        for (LatticeVector a : {kAlpha1, kAlpha2, kBeta0}) {
          std::vector<Word> ws{{GaussianRational(1), {{a, n}, {kBeta0, m}}},
                               {GaussianRational(-1), {{kBeta0, m}, {a, n}}}};
          if (!within(src, ws)) continue;
          rep.expect(combination_vanishes(fs, src, ws),
                     "x12 not central on bucket " + src.to_string() + " at (m,n)=(" + m.to_string() + "," +
                         n.to_string() + ")");
        }
  }
  rep.details["cutoff"] = cutoff;
  rep.details["mode_bound_quarters"] = mode_bound;
  rep.details["nonzero_bracket_checks"] = nontrivial;
  return rep;
}

SuiteReport check_quadratic_relations(const FockSpace& fs, long cutoff, QuarterInt t_max) {
  SuiteReport rep("quadratic", "finite quadratic sums annihilating the twisted module");
  struct Family {
    std::string name;
    int t_residue_mod;  // t.q must be ≡ t_residue (mod t_mod)
    int t_residue;
    // summand for index variable k (in quarters), or nullopt if k is not a valid index
    std::function<std::optional<std::pair<std::vector<Word>, bool>>(long k, QuarterInt t, long w)> summand;
    // index range in quarters given t and source qweight
    std::function<std::pair<long, long>(QuarterInt t, long w)> range;
    // expected value r·x12(−t) of the full sum; zero for the annihilating families
    GaussianRational residual;
  };
  const QuarterInt half(2);
  auto pair_family = [&](const std::string& name, LatticeVector a, LatticeVector b, int sign,
                         GaussianRational residual = GaussianRational()) {
    Family f;
    f.name = name;
    f.residual = residual;
    f.t_residue_mod = 2;
    f.t_residue = 0;
    // n2 = k; n1 = −t − 1/2 − n2; terms a(n1+1/2) b(n2) + sign · a(n1) b(n2+1/2)
    f.summand = [=](long k, QuarterInt t, long w) -> std::optional<std::pair<std::vector<Word>, bool>> {
      if (k % 2 == 0) return std::nullopt;
      QuarterInt n2(k);
      QuarterInt n1 = -t - half - n2;
      std::vector<Word> ws{{GaussianRational(1), {{b, n2}, {a, n1 + half}}},
                           {GaussianRational(sign), {{b, n2 + half}, {a, n1}}}};
      bool core = n1.q <= w && n2.q <= w;
      return std::make_pair(ws, core);
    };
    f.range = [](QuarterInt t, long w) { return std::make_pair(-t.q - 2 - (w + 2), w + 2); };
    return f;
  };
  std::vector<Family> fams{pair_family("R_{1;t}", kAlpha1, kAlpha1, 1), pair_family("R_{2;t}", kAlpha2, kAlpha2, 1),
                           pair_family("R_{1;2;t}", kAlpha1, kAlpha2, -1, GaussianRational::frac(1, 2)),
                           pair_family("R_{2;1;t}", kAlpha2, kAlpha1, -1, GaussianRational::frac(-1, 2))};
  {
    Family f;
    f.name = "R_{1,2;t}";
    f.t_residue_mod = 4;
    f.t_residue = 0;
    f.summand = [](long k, QuarterInt t, long w) -> std::optional<std::pair<std::vector<Word>, bool>> {
      if (k % 4 != 0) return std::nullopt;
      QuarterInt m2(k);
      QuarterInt m1 = -t - m2;
      std::vector<Word> ws{{GaussianRational(1), {{kBeta0, m2}, {kBeta0, m1}}}};
      return std::make_pair(ws, m1.q <= w && m2.q <= w);
    };
    f.range = [](QuarterInt t, long w) { return std::make_pair(-t.q - (w + 4), w + 4); };
    fams.push_back(f);
  }
  for (LatticeVector a : {kAlpha1, kAlpha2}) {
    Family f;
    f.name = a == kAlpha1 ? "R_{1,2;1;t}" : "R_{1,2;2;t}";
    f.t_residue_mod = 2;
    f.t_residue = 1;
    f.summand = [a](long k, QuarterInt t, long w) -> std::optional<std::pair<std::vector<Word>, bool>> {
      QuarterInt n(k);
      QuarterInt m = -t - n;
      if (k % 2 == 0 || !m.is_integer()) return std::nullopt;
      std::vector<Word> ws{{GaussianRational(1), {{a, n}, {kBeta0, m}}}};
      return std::make_pair(ws, m.q <= w && n.q <= w);
    };
    f.range = [](QuarterInt t, long w) { return std::make_pair(-t.q - (w + 4), w + 2); };
    fams.push_back(f);
  }

  json per_family = json::object();
  for (const auto& f : fams) {
    long checked = 0, skipped = 0, margin = 0, nonzero_terms = 0;
    long zero_failures = 0, residual_checked = 0, residual_failures = 0;
    for (const auto& src : buckets_upto(cutoff)) {
      const long w = src.qweight;
      for (long tq = -w; tq <= t_max.q; ++tq) {
        if (((tq % f.t_residue_mod) + f.t_residue_mod) % f.t_residue_mod != f.t_residue) continue;
        if (w + tq > cutoff) break;
        QuarterInt t(tq);
        auto [lo, hi] = f.range(t, w);
        std::vector<Word> core_terms;
        std::vector<std::vector<Word>> margin_summands;
        bool admissible = true;
        for (long k = lo; k <= hi && admissible; ++k) {
          auto s = f.summand(k, t, w);
          if (!s) continue;
          bool rep_ok = true;
          for (const auto& wd : s->first) rep_ok = rep_ok && representable(fs, src, wd, cutoff);
          if (s->second) {
            if (!rep_ok) admissible = false;
            for (auto& wd : s->first) core_terms.push_back(wd);
          } else if (rep_ok) {
            margin_summands.push_back(s->first);
          }
        }
        if (!admissible) {
          ++skipped;
          continue;
        }
        const std::string where = " for t=" + t.to_string() + " on bucket " + src.to_string();
        if (!core_terms.empty()) {
          if (!rep.expect(combination_vanishes(fs, src, core_terms), f.name + " nonzero" + where)) ++zero_failures;
          for (const auto& wd : core_terms)
            if (any_nonzero(fs, src, wd)) ++nonzero_terms;
          if (!f.residual.is_zero()) {
            auto with_residual = core_terms;
            if (t.is_integer()) with_residual.push_back({-f.residual, {{kBeta0, -t}}});
            ++residual_checked;
            if (!combination_vanishes(fs, src, with_residual)) ++residual_failures;
          }
        }
        for (const auto& ms : margin_summands) {
          rep.expect(combination_vanishes(fs, src, ms), f.name + " tail summand nonzero" + where + ": " + describe(ms));
          ++margin;
        }
        ++checked;
      }
    }
    per_family[f.name] = json{{"checked", checked},
                              {"zero_failures", zero_failures},
                              {"skipped_unrepresentable", skipped},
                              {"tail_summands_checked", margin},
                              {"nonzero_individual_terms", nonzero_terms}};
    if (!f.residual.is_zero())
      per_family[f.name]["equals_multiple_of_x12"] = json{{"multiple", f.residual.to_string()},
                                                          {"checked", residual_checked},
                                                          {"failures", residual_failures}};
  }
  rep.details["cutoff"] = cutoff;
  rep.details["t_max"] = t_max.to_string();
  rep.details["families"] = per_family;
  return rep;
}

}  // namespace a2twist
