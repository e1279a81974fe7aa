#include "padichg/hyperseries.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "padichg/errors.hpp"
#include "padichg/modring.hpp"

namespace padichg {

namespace {

bool params_equal(const HGParams& x, const HGParams& y) {
  return x.p == y.p && x.a == y.a && x.b == y.b && x.c == y.c;
}

unsigned long pow_ul(long p, int e) {
  unsigned long r = 1;
  for (int i = 0; i < e; ++i) r *= static_cast<unsigned long>(p);
  return r;
}

// raw-integer construction for either engine
std::int64_t raw_from(const OpsU64&, const mpz_class& z) { return z.get_si(); }
const mpz_class& raw_from(const OpsMpz&, const mpz_class& z) { return z; }
std::int64_t raw_of(const OpsU64&, unsigned long n) { return static_cast<std::int64_t>(n); }
mpz_class raw_of(const OpsMpz&, unsigned long n) { return mpz_class(n); }

// Incremental accumulator for the coefficient ratios
//   C_n / C_{n-1} = prod_k (a_k + n - 1) / (prod_j (b_j + n - 1) * n).
// Valuation is tracked exactly; the unit part lives mod p^w.  Once a
// numerator factor hits 0 the series is polynomial and every later C_n = 0.
template <class Ops>
struct Stream {
  const Ops* M;
  bool dead = false;
  long val = 0;
  typename Ops::elt unit;
  unsigned long n = 0;
  std::vector<typename Ops::raw> anum, aden, bnum, bden;
  typename Ops::elt kconst;  // prod b denominators / prod a denominators

  Stream(const Ops& ops, const HGParams& prm) : M(&ops) {
    typename Ops::elt ad(1), bd(1);
    for (const auto& a : prm.a) {
      anum.push_back(raw_from(ops, mpz_class(a.get_num())));
      aden.push_back(raw_from(ops, mpz_class(a.get_den())));
      ad = ops.mul(ad, ops.from_mpz(a.get_den()));
    }
    for (const auto& b : prm.b) {
      bnum.push_back(raw_from(ops, mpz_class(b.get_num())));
      bden.push_back(raw_from(ops, mpz_class(b.get_den())));
      bd = ops.mul(bd, ops.from_mpz(b.get_den()));
    }
    kconst = ops.mul(bd, ops.inv(ad));
    unit = typename Ops::elt(1);
  }

  void step() {
    ++n;
    if (dead) return;
    long dval = 0;
    typename Ops::elt nu = M->mul(unit, kconst);
    for (std::size_t k = 0; k < anum.size(); ++k) {
      typename Ops::raw x = anum[k];
      anum[k] += aden[k];
      if (x == 0) {
        dead = true;
        return;
      }
      dval += M->strip_raw(x);
      nu = M->mul(nu, M->reduce_raw(x));
    }
    long dnv = 0;
    typename Ops::elt du(1);
    for (std::size_t j = 0; j < bnum.size(); ++j) {
      typename Ops::raw y = bnum[j];
      bnum[j] += bden[j];
      if (y == 0) throw internal_error("denominator Pochhammer factor vanished");
      dnv += M->strip_raw(y);
      du = M->mul(du, M->reduce_raw(y));
    }
    typename Ops::raw z = raw_of(*M, n);
    dnv += M->strip_raw(z);
    du = M->mul(du, M->reduce_raw(z));
    val += dval - dnv;
    unit = M->mul(nu, M->inv(du));
  }

  // residue of C_n mod p^w (requires val >= 0; caller checks)
  typename Ops::elt combined() const {
    if (dead || val >= M->w) return typename Ops::elt(0);
    return M->mul(unit, typename Ops::elt(M->ppow[static_cast<std::size_t>(val)]));
  }
};

void require_p_integral_arg(const Rational& q, long p, const char* what) {
  if (!is_p_integral(q, p))
    throw std::invalid_argument(std::string(what) + " must be p-integral, got " + rational_str(q));
}

bool is_nonpositive_integer(const Rational& q) {
  return q.get_den() == 1 && q.get_num() <= 0;
}

// exact-rational truncated sum  sum_{n < p} C_n alpha^n  reduced mod p;
// an independent small-scale route used as unit-root evidence
mpz_class exact_trunc_f_mod_p(const HGParams& prm, const Rational& alpha) {
  Rational cn(1), sum(1), apow(1);
  for (long n = 1; n < prm.p; ++n) {
    Rational ratio(1);
    for (const auto& a : prm.a) ratio *= a + Rational(n - 1);
    for (const auto& b : prm.b) ratio /= b + Rational(n - 1);
    ratio /= Rational(n);
    cn *= ratio;
    apow *= alpha;
    sum += cn * apow;
  }
  if (!is_p_integral(sum, prm.p))
    throw value_undefined_error("truncated series sum is not p-integral");
  return rational_mod_pk(sum, prm.p, 1);
}

struct LevelEval {
  mpz_class f, g;  // partial sums mod p^w
  int g_absprec;   // guaranteed absolute digits of g
};

// One pass over the coefficient stream, evaluating [F]_{<p^l}(alpha) and
// (optionally) [G]_{<p^l}(alpha) for every truncation exponent l in `levels`
// (ascending).  Units are carried mod p^w; the G constant term enters with w0
// absolute digits; each D at index m p^k costs k absolute digits, so the G
// sums are good to min(w0, w - max k encountered) digits.
template <class Ops>
std::vector<LevelEval> eval_levels_impl(const HGParams& prm, const Rational& alpha,
                                        const std::vector<int>& levels, int w, int w0,
                                        bool need_g) {
  const long p = prm.p;
  const Ops M(p, w);
  const HGParams prm1 = dwork_level(prm, 1);
  const bool same = params_equal(prm, prm1);
  const int lmax = levels.back();
  const unsigned long top = pow_ul(p, lmax);
  const unsigned long store = (need_g && lmax >= 1) ? top / static_cast<unsigned long>(p) : 1;

  // combined residues of the level-1 coefficients C'_j for j < p^(lmax-1);
  // when the parameter tuple is fixed under the Dwork prime map the level-0
  // pass fills them as it goes
  std::vector<typename Ops::elt> r1(store, typename Ops::elt(0));
  if (need_g) {
    r1[0] = typename Ops::elt(1);
    if (!same && store > 1) {
      Stream<Ops> s1(M, prm1);
      for (unsigned long j = 1; j < store; ++j) {
        s1.step();
        if (!s1.dead && s1.val < 0)
          throw value_undefined_error("series coefficient with negative valuation at level 1, index " +
                                      std::to_string(j));
        r1[j] = s1.combined();
      }
    }
  }

  const typename Ops::elt ares = M.from_rational(alpha);
  const typename Ops::elt cres = M.from_rational(prm.c);
  typename Ops::elt f_sum(1), g_sum(0);
  if (need_g) g_sum = M.from_mpz(constant_D0_residue(prm, w0));
  typename Ops::elt apow(1);
  typename Ops::elt cpow = cres;  // c^(n/p) for the next multiple of p
  int lost = 0;

  std::vector<unsigned long> cps;
  cps.reserve(levels.size());
  for (int l : levels) cps.push_back(pow_ul(p, l));

  std::vector<LevelEval> out;
  std::size_t li = 0;
  auto record = [&]() {
    out.push_back({M.to_mpz(f_sum), M.to_mpz(g_sum), need_g ? std::min(w0, w - lost) : w});
  };
  while (li < cps.size() && cps[li] == 1) {
    record();
    ++li;
  }

  Stream<Ops> s(M, prm);
  for (unsigned long n = 1; n < top; ++n) {
    s.step();
    apow = M.mul(apow, ares);
    if (!s.dead && s.val < 0)
      throw value_undefined_error("series coefficient with negative valuation at index " +
                                  std::to_string(n));
    const typename Ops::elt r = s.combined();
    f_sum = M.add(f_sum, M.mul(r, apow));
    if (need_g) {
      typename Ops::elt dres;
      if (n % static_cast<unsigned long>(p) != 0) {
        dres = M.mul(r, M.inv(M.reduce_raw(raw_of(M, n))));
      } else {
        const unsigned long idx = n / static_cast<unsigned long>(p);
        typename Ops::elt t = M.sub(r, M.mul(cpow, r1[idx]));
        cpow = M.mul(cpow, cres);
        int k = 1;
        unsigned long mp = idx;
        while (mp % static_cast<unsigned long>(p) == 0) {
          mp /= static_cast<unsigned long>(p);
          ++k;
        }
        if (!M.divisible_pk(t, k))
          throw value_undefined_error("logarithmic coefficient not p-integral at index " +
                                      std::to_string(n));
        if (k > lost) lost = k;
        dres = M.mul(M.div_pk(t, k), M.inv(M.reduce_raw(raw_of(M, mp))));
      }
      g_sum = M.add(g_sum, M.mul(dres, apow));
      if (same && n < store) r1[n] = r;
    }
    if (li < cps.size() && n + 1 == cps[li]) {
      record();
      ++li;
    }
  }
  return out;
}

bool u64_engine_fits(const HGParams& prm, int w, unsigned long top) {
  if (!OpsU64::modulus_fits(prm.p, w)) return false;
  const mpz_class cap = mpz_class(1) << 61;
  if (mpz_class(top) + 2 >= cap) return false;
  auto factor_fits = [&](const Rational& q) {
    mpz_class bound = abs(q.get_num()) + (mpz_class(top) + 2) * q.get_den();
    return bound < cap;
  };
  for (const auto& a : prm.a)
    if (!factor_fits(a)) return false;
  for (const auto& b : prm.b)
    if (!factor_fits(b)) return false;
  return true;
}

std::vector<LevelEval> eval_levels(const HGParams& prm, const Rational& alpha,
                                   const std::vector<int>& levels, int w, int w0,
                                   bool need_g) {
  if (levels.empty()) throw std::invalid_argument("no truncation levels given");
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (levels[i] < 0 || (i > 0 && levels[i] <= levels[i - 1]))
      throw std::invalid_argument("truncation levels must be ascending and non-negative");
  }
  require_p_integral_arg(alpha, prm.p, "evaluation point");
  mpz_class topz = pow_p(prm.p, levels.back());
  if (topz > (mpz_class(1) << 40))
    throw budget_error("truncation budget p^" + std::to_string(levels.back()) + " too large");
  const unsigned long top = topz.get_ui();
  if (u64_engine_fits(prm, w, top))
    return eval_levels_impl<OpsU64>(prm, alpha, levels, w, w0, need_g);
  return eval_levels_impl<OpsMpz>(prm, alpha, levels, w, w0, need_g);
}

PAdic padic_from_residue(long p, const mpz_class& r, int absprec) {
  mpz_class mod = pow_p(p, absprec);
  mpz_class red;
  mpz_fdiv_r(red.get_mpz_t(), r.get_mpz_t(), mod.get_mpz_t());
  if (red == 0) return PAdic::zero(p);
  mpz_class unit;
  int v = static_cast<int>(mpz_remove(unit.get_mpz_t(), red.get_mpz_t(), mpz_class(p).get_mpz_t()));
  return PAdic::make(p, v, unit, absprec - v);
}

}  // namespace

HGParams make_hg_params(std::vector<Rational> a, std::vector<Rational> b, long p,
                        const Rational& c) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime, got " + std::to_string(p));
  if (a.empty()) throw std::invalid_argument("need at least one numerator parameter");
  if (b.size() + 1 != a.size())
    throw std::invalid_argument(
        "need exactly one fewer denominator parameter than numerator parameters "
        "(the trailing 1 is implicit)");
  for (const auto& x : a) require_p_integral_arg(x, p, "numerator parameter");
  for (const auto& x : b) {
    require_p_integral_arg(x, p, "denominator parameter");
    if (is_nonpositive_integer(x))
      throw std::invalid_argument("denominator parameter must not be a non-positive integer, got " +
                                  rational_str(x));
  }
  require_p_integral_arg(c, p, "twist constant");
  if (c != 1 && !is_p_integral((c - 1) / Rational(p), p))
    throw std::invalid_argument("twist constant must be congruent to 1 mod p, got " +
                                rational_str(c));
  HGParams prm;
  prm.a = std::move(a);
  prm.b = std::move(b);
  prm.p = p;
  prm.c = c;
  return prm;
}

HGParams dwork_level(const HGParams& params, int level) {
  HGParams out = params;
  for (int i = 0; i < level; ++i) {
    for (auto& x : out.a) x = dwork_prime(x, params.p);
    for (auto& x : out.b) x = dwork_prime(x, params.p);
  }
  return out;
}

std::string params_str(const HGParams& params) {
  std::ostringstream os;
  os << "a=(";
  for (std::size_t i = 0; i < params.a.size(); ++i)
    os << (i ? "," : "") << rational_str(params.a[i]);
  os << ") b=(";
  for (std::size_t i = 0; i < params.b.size(); ++i)
    os << (i ? "," : "") << rational_str(params.b[i]);
  os << ") p=" << params.p;
  if (params.c != 1) os << " c=" << rational_str(params.c);
  return os.str();
}

TupleOrbit hg_tuple_orbit(const HGParams& params) {
  TupleOrbit orb;
  long pre = 0, per = 1;
  auto absorb = [&](const Rational& x) {
    DworkOrbit o = dwork_orbit(x, params.p);
    pre = std::max(pre, o.preperiod);
    per = std::lcm(per, o.period);
  };
  for (const auto& x : params.a) absorb(x);
  for (const auto& x : params.b) absorb(x);
  orb.preperiod = pre;
  orb.period = per;
  return orb;
}

DworkConditionReport check_dwork_conditions(const HGParams& params, long depth) {
  DworkConditionReport rep;
  TupleOrbit orb = hg_tuple_orbit(params);
  if (depth < 0) depth = orb.preperiod + orb.period;
  rep.depth = depth;

  // (i) every Dwork iterate of every denominator parameter is a unit
  for (std::size_t j = 0; j < params.b.size(); ++j) {
    DworkOrbit o = dwork_orbit(params.b[j], params.p);
    for (long lev = 0; lev < static_cast<long>(o.values.size()) && lev < depth; ++lev) {
      if (valuation_q(o.values[static_cast<std::size_t>(lev)], params.p) != 0) {
        rep.ok = false;
        rep.failures.push_back({"unit-b-iterates", lev,
                                "b[" + std::to_string(j) + "] iterate " +
                                    rational_str(o.values[static_cast<std::size_t>(lev)]) +
                                    " is not a unit"});
      }
    }
  }

  // (ii) per digit index, the sorted digit multisets interlace: the (j+1)-th
  // smallest a-digit stays strictly below the j-th smallest b-digit, where
  // only the b entries different from 1 count
  std::vector<std::size_t> bidx;
  for (std::size_t j = 0; j < params.b.size(); ++j)
    if (params.b[j] != 1) bidx.push_back(j);
  for (long d = 0; d < depth; ++d) {
    std::vector<long> adig, bdig;
    for (const auto& x : params.a) adig.push_back(padic_digit(x, params.p, static_cast<unsigned long>(d)));
    for (std::size_t j : bidx)
      bdig.push_back(padic_digit(params.b[j], params.p, static_cast<unsigned long>(d)));
    std::sort(adig.begin(), adig.end());
    std::sort(bdig.begin(), bdig.end());
    for (std::size_t j = 0; j < bdig.size(); ++j) {
      if (!(adig[j + 1] < bdig[j])) {
        rep.ok = false;
        std::ostringstream os;
        os << "digit " << d << ": a-digit " << adig[j + 1] << " not below b-digit " << bdig[j];
        rep.failures.push_back({"digit-interlacing", d, os.str()});
        break;
      }
    }
  }
  return rep;
}

// ---- coefficient table ------------------------------------------------------

struct CoefficientTable::ModState {
  OpsMpz M;
  Stream<OpsMpz> s0, s1;
  bool same;
  mpz_class cres;
  std::vector<char> dead0, dead1;
  std::vector<long> val0, val1;
  std::vector<mpz_class> unit0, unit1;

  ModState(const HGParams& lev, const HGParams& lev1, int w)
      : M(lev.p, w), s0(M, lev), s1(M, lev1), same(params_equal(lev, lev1)) {
    cres = M.from_rational(lev.c);
    dead0.push_back(0);
    val0.push_back(0);
    unit0.push_back(1);
    dead1.push_back(0);
    val1.push_back(0);
    unit1.push_back(1);
  }
  void ensure0(std::size_t n) {
    while (val0.size() <= n) {
      s0.step();
      dead0.push_back(s0.dead ? 1 : 0);
      val0.push_back(s0.val);
      unit0.push_back(s0.dead ? mpz_class(0) : s0.unit);
    }
  }
  void ensure1(std::size_t n) {
    if (same) {
      ensure0(n);
      return;
    }
    while (val1.size() <= n) {
      s1.step();
      dead1.push_back(s1.dead ? 1 : 0);
      val1.push_back(s1.val);
      unit1.push_back(s1.dead ? mpz_class(0) : s1.unit);
    }
  }
  bool lev1_dead(std::size_t n) const { return (same ? dead0[n] : dead1[n]) != 0; }
  long lev1_val(std::size_t n) const { return same ? val0[n] : val1[n]; }
  const mpz_class& lev1_unit(std::size_t n) const { return same ? unit0[n] : unit1[n]; }
};

CoefficientTable::CoefficientTable(const HGParams& params, int level, int working_prec)
    : base_(params), level_(level), wprec_(working_prec) {
  if (working_prec < 1) throw std::invalid_argument("working precision must be >= 1");
  if (level < 0) throw std::invalid_argument("orbit level must be >= 0");
  lev_ = dwork_level(params, level);
  lev1_ = dwork_level(lev_, 1);
  mod_ = std::make_shared<ModState>(lev_, lev1_, working_prec);
}

void CoefficientTable::ensure_exact(std::vector<Rational>& cache, const HGParams& prm,
                                    std::size_t n) {
  if (cache.empty()) cache.push_back(Rational(1));
  while (cache.size() <= n) {
    const long m = static_cast<long>(cache.size());
    Rational ratio(1);
    for (const auto& a : prm.a) ratio *= a + Rational(m - 1);
    for (const auto& b : prm.b) ratio /= b + Rational(m - 1);
    ratio /= Rational(m);
    cache.push_back(cache.back() * ratio);
  }
}

Rational CoefficientTable::c_exact(std::size_t n) {
  ensure_exact(cex_, lev_, n);
  return cex_[n];
}

Rational CoefficientTable::d_exact(std::size_t n) {
  if (n == 0) throw std::invalid_argument("the constant term is not rational; use constant_D0");
  ensure_exact(cex_, lev_, n);
  Rational t = cex_[n];
  const unsigned long p = static_cast<unsigned long>(base_.p);
  if (n % p == 0) {
    ensure_exact(cex1_, lev1_, n / p);
    mpz_class cn, cd;
    mpz_pow_ui(cn.get_mpz_t(), lev_.c.get_num_mpz_t(), n / p);
    mpz_pow_ui(cd.get_mpz_t(), lev_.c.get_den_mpz_t(), n / p);
    Rational cpow(cn, cd);
    cpow.canonicalize();
    t -= cex1_[n / p] * cpow;
  }
  return t / Rational(static_cast<long>(n));
}

PAdic CoefficientTable::c(std::size_t n) {
  mod_->ensure0(n);
  if (mod_->dead0[n]) return PAdic::zero(base_.p);
  return PAdic::make(base_.p, mod_->val0[n], mod_->unit0[n], wprec_);
}

PAdic CoefficientTable::d(std::size_t n) {
  if (n == 0) throw std::invalid_argument("use constant_D0 for the constant term");
  const long p = base_.p;
  const int w = wprec_;
  mod_->ensure0(n);
  auto combined = [&](bool dead, long v, const mpz_class& u) -> mpz_class {
    if (dead || v >= w) return 0;
    if (v < 0)
      throw value_undefined_error("coefficient with negative valuation; use the exact route");
    return (u * pow_p(p, static_cast<int>(v))) % mod_->M.mod;
  };
  mpz_class t = combined(mod_->dead0[n] != 0, mod_->val0[n], mod_->unit0[n]);
  int k = 0;
  unsigned long mp = n;
  if (n % static_cast<unsigned long>(p) == 0) {
    const std::size_t idx = n / static_cast<unsigned long>(p);
    mod_->ensure1(idx);
    mpz_class r1 = combined(mod_->lev1_dead(idx), mod_->lev1_val(idx), mod_->lev1_unit(idx));
    mpz_class cpow;
    mpz_powm_ui(cpow.get_mpz_t(), mod_->cres.get_mpz_t(), static_cast<unsigned long>(idx),
                mod_->M.mod.get_mpz_t());
    t = mod_->M.sub(t, mod_->M.mul(cpow, r1));
    mp = idx;
    k = 1;
    while (mp % static_cast<unsigned long>(p) == 0) {
      mp /= static_cast<unsigned long>(p);
      ++k;
    }
  }
  if (k >= w)
    throw precision_error("working precision too small: index " + std::to_string(n) +
                          " costs " + std::to_string(k) + " digits");
  if (!mod_->M.divisible_pk(t, k))
    throw value_undefined_error("logarithmic coefficient not p-integral at index " +
                                std::to_string(n));
  mpz_class q = mod_->M.div_pk(t, k);
  q = (q * mod_inverse(mpz_class(mp), pow_p(p, w - k))) % pow_p(p, w - k);
  return padic_from_residue(p, q, w - k);
}

// ---- constants ----------------------------------------------------------------

mpz_class constant_D0_residue(const HGParams& params, int prec) {
  if (prec < 1) throw std::invalid_argument("precision must be >= 1");
  const long p = params.p;
  const mpz_class mod = pow_p(p, prec);
  mpz_class acc = 0;
  for (const auto& a : params.a) acc += psi_tilde(a, p, prec);
  for (const auto& b : params.b) acc -= psi_tilde(b, p, prec);
  if (params.c != 1) {
    mpz_class lc = iwasawa_log_oneunit(params.c, p, prec + 1);
    if (!mpz_divisible_ui_p(lc.get_mpz_t(), static_cast<unsigned long>(p)))
      throw internal_error("log of a 1-unit not divisible by p");
    acc -= lc / p;
  }
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), acc.get_mpz_t(), mod.get_mpz_t());
  return r;
}

PAdic constant_D0(const HGParams& params, int prec) {
  return padic_from_residue(params.p, constant_D0_residue(params, prec), prec);
}

// ---- evaluation ----------------------------------------------------------------

PAdic truncated_eval(SeriesKind kind, const HGParams& params, int level, int n,
                     const Rational& alpha, int prec) {
  if (prec < 1) throw std::invalid_argument("precision must be >= 1");
  if (n < 0) throw std::invalid_argument("truncation exponent must be >= 0");
  const HGParams lev = dwork_level(params, level);
  if (kind == SeriesKind::F) {
    auto ev = eval_levels(lev, alpha, {n}, prec, prec, false);
    return padic_from_residue(params.p, ev[0].f, prec);
  }
  const int w = prec + std::max(n - 1, 0) + 1;
  auto ev = eval_levels(lev, alpha, {n}, w, prec, true);
  if (ev[0].g_absprec < prec) throw precision_error("logarithmic sum lost too many digits");
  return padic_from_residue(params.p, ev[0].g, prec);
}

PAdic dwork_ratio(const HGParams& params, int n, const Rational& alpha, int prec) {
  if (n < 1) throw std::invalid_argument("truncation exponent must be >= 1");
  PAdic num = truncated_eval(SeriesKind::F, params, 0, n, alpha, prec);
  mpz_class an, ad;
  mpz_pow_ui(an.get_mpz_t(), alpha.get_num_mpz_t(), static_cast<unsigned long>(params.p));
  mpz_pow_ui(ad.get_mpz_t(), alpha.get_den_mpz_t(), static_cast<unsigned long>(params.p));
  Rational ap(an, ad);
  ap.canonicalize();
  PAdic den = truncated_eval(SeriesKind::F, params, 1, n - 1, ap, prec);
  return num / den;
}

std::vector<mpz_class> log_ratio_levels(const HGParams& params, const Rational& alpha,
                                        const std::vector<int>& levels, int m) {
  if (m < 1) throw std::invalid_argument("precision must be >= 1");
  if (levels.empty()) throw std::invalid_argument("no truncation levels given");
  const int lmax = levels.back();
  const int w = std::max(2 * m + 2, m + lmax);
  const int w0 = m + 1;
  auto ev = eval_levels(params, alpha, levels, w, w0, true);
  const mpz_class modw = pow_p(params.p, w);
  const mpz_class modm = pow_p(params.p, m);
  std::vector<mpz_class> out;
  out.reserve(ev.size());
  for (const auto& le : ev) {
    if (le.g_absprec < m) throw precision_error("logarithmic sum lost too many digits");
    if (le.f % params.p == 0)
      throw value_undefined_error("truncated series sum is not a unit");
    mpz_class ratio = (le.g * mod_inverse(le.f, modw)) % modw;
    out.push_back(ratio % modm);
  }
  return out;
}

SpecialValueResult special_value(const HGParams& params, const Rational& alpha, int m) {
  if (m < 1) throw std::invalid_argument("precision must be >= 1");
  require_p_integral_arg(alpha, params.p, "evaluation point");
  DworkConditionReport rep = check_dwork_conditions(params);
  if (!rep.ok)
    throw std::invalid_argument("parameters fail the admissibility conditions: " +
                                rep.failures.front().witness);

  TupleOrbit orb = hg_tuple_orbit(params);
  const long L = orb.preperiod + orb.period;
  std::vector<mpz_class> hev;
  HGParams cur = params;
  for (long lev = 0; lev < L; ++lev) {
    mpz_class r = exact_trunc_f_mod_p(cur, alpha);
    if (r == 0)
      throw value_undefined_error("truncated series is not a unit at orbit level " +
                                  std::to_string(lev));
    hev.push_back(r);
    cur = dwork_level(cur, 1);
  }

  auto ratios = log_ratio_levels(params, alpha, {m, m + 1}, m);
  SpecialValueResult res;
  res.p = params.p;
  res.prec = m;
  res.modulus = pow_p(params.p, m);
  res.residue = ratios[0];
  res.stable = (ratios[0] == ratios[1]);
  if (!res.stable)
    throw internal_error("special value did not stabilize across consecutive truncations");
  res.h_unit_evidence = std::move(hev);
  return res;
}

mpz_class gauss_unit_check(long p, long N, long i, long j, long k) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (N < 2 || (p - 1) % N != 0)
    throw std::invalid_argument("need N >= 2 dividing p - 1");
  auto neg_frac_mod_p = [&](long x) {
    mpz_class inv = mod_inverse(mpz_class(N), mpz_class(p));
    mpz_class r = (-mpz_class(x) * inv) % p;
    if (r < 0) r += p;
    return r.get_si();
  };
  const long i0 = neg_frac_mod_p(i);
  const long j0 = neg_frac_mod_p(j);
  const long k0 = neg_frac_mod_p(k);
  const long A = p - k0 - 1;
  const long B = p - k0 + i0 + j0 - 1;
  const long C = p - k0 + i0 - 1;
  const long D = p - k0 + j0 - 1;
  if (A < 0 || B >= p || C >= p || D >= p)
    throw std::invalid_argument("factorial arguments out of range; need 1 <= i <= j, i + j <= k <= N");
  auto fact_mod = [&](long t) {
    mpz_class f = 1;
    for (long x = 2; x <= t; ++x) f = (f * x) % p;
    return f;
  };
  mpz_class closed =
      (fact_mod(A) * fact_mod(B)) % p * mod_inverse((fact_mod(C) * fact_mod(D)) % p, mpz_class(p)) % p;

  HGParams prm = make_hg_params({frac(i, N), frac(j, N)}, {frac(k, N)}, p);
  mpz_class direct = exact_trunc_f_mod_p(prm, Rational(1));
  if (direct != closed)
    throw internal_error("truncated sum disagrees with the closed factorial form");
  return closed;
}

}  // namespace padichg
