#include "padichg/congruence_lab.hpp"

#include <algorithm>
#include <stdexcept>

#include "padichg/errors.hpp"

namespace padichg {

namespace {

long pow_l(long p, int e) {
  long r = 1;
  for (int i = 0; i < e; ++i) r *= p;
  return r;
}

long diff_val(const Rational& q, long p) {
  if (q == 0) return kValInfinity;
  return valuation_q(q, p);
}

mpz_class mod_red(const mpz_class& x, const mpz_class& mod) {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), mod.get_mpz_t());
  return r;
}

CongruenceReport make_report(const char* suite, const HGParams& prm, int n) {
  CongruenceReport rep;
  rep.suite = suite;
  rep.family = params_str(prm);
  rep.p = prm.p;
  rep.n = n;
  return rep;
}

void push_exact(CongruenceReport& rep, std::string item, const Rational& diff, long req) {
  CheckResult cr;
  cr.item = std::move(item);
  cr.required_val = req;
  cr.observed_val = diff_val(diff, rep.p);
  cr.pass = cr.observed_val >= req;
  ++(cr.pass ? rep.passed : rep.failed);
  rep.checks.push_back(std::move(cr));
}

// `residue` is the difference already reduced mod p^req: zero passes; the
// reported valuation is exact on failure and a lower bound on success
void push_residue(CongruenceReport& rep, std::string item, const mpz_class& residue, long req) {
  CheckResult cr;
  cr.item = std::move(item);
  cr.required_val = req;
  if (residue == 0) {
    cr.observed_val = req;
    cr.pass = true;
  } else {
    mpz_class u;
    cr.observed_val =
        static_cast<long>(mpz_remove(u.get_mpz_t(), residue.get_mpz_t(), mpz_class(rep.p).get_mpz_t()));
    cr.pass = false;
  }
  ++(cr.pass ? rep.passed : rep.failed);
  rep.checks.push_back(std::move(cr));
}

void push_undefined(CongruenceReport& rep, std::string item, long observed, long req) {
  CheckResult cr;
  cr.item = std::move(item);
  cr.required_val = req;
  cr.observed_val = observed;
  cr.pass = false;
  ++rep.failed;
  rep.checks.push_back(std::move(cr));
}

struct Resolved {
  int n;
  long pn;
  long max_m;
  long max_deg;
  int l;
};

Resolved resolve(const HGParams& prm, const SuiteOptions& opt) {
  if (opt.n < 1) throw std::invalid_argument("suite exponent n must be >= 1");
  Resolved r;
  r.n = opt.n;
  mpz_class pn = pow_p(prm.p, opt.n);
  if (pn > (1L << 22)) throw budget_error("suite budget p^n too large");
  r.pn = pn.get_si();
  r.max_m = opt.max_m >= 0 ? opt.max_m : 2 * r.pn;
  r.max_deg = opt.max_deg >= 0 ? opt.max_deg : 2 * r.pn;
  r.l = opt.l >= 0 ? opt.l : opt.n;
  if (r.l > r.n) throw std::invalid_argument("congruence exponent l must be <= n");
  return r;
}

}  // namespace

CongruenceReport verify_dwork(const HGParams& prm, const SuiteOptions& opt) {
  const Resolved rv = resolve(prm, opt);
  CongruenceReport rep = make_report("dwork", prm, rv.n);
  const long p = prm.p;
  CoefficientTable t0(prm, 0, 1), t1(prm, 1, 1);
  std::vector<Rational> cpow = {Rational(1)};
  for (long d = 0; d < rv.max_deg; ++d) {
    Rational diff(0);
    for (long j = 0; p * j <= d; ++j) {
      const long i = d - p * j;
      const int ind = (p * j < rv.pn ? 1 : 0) - (i < rv.pn ? 1 : 0);
      if (ind == 0) continue;
      while (static_cast<long>(cpow.size()) <= j) cpow.push_back(cpow.back() * prm.c);
      diff += Rational(ind) * t0.c_exact(static_cast<std::size_t>(i)) * cpow[static_cast<std::size_t>(j)] *
              t1.c_exact(static_cast<std::size_t>(j));
    }
    push_exact(rep, "deg=" + std::to_string(d), diff, rv.l);
  }
  return rep;
}

CongruenceReport verify_log(const HGParams& prm, const SuiteOptions& opt) {
  const Resolved rv = resolve(prm, opt);
  CongruenceReport rep = make_report("log", prm, rv.n);
  const long p = prm.p;
  const long target = (p == 2) ? rv.n - 1 : rv.n;
  if (target < 1) throw std::invalid_argument("log suite needs n >= 2 at p = 2");
  CoefficientTable tab(prm, 0, 1);
  const mpz_class d0 = constant_D0_residue(prm, static_cast<int>(target));
  const mpz_class mod = pow_p(p, static_cast<int>(target));
  for (long m = 0; m <= rv.max_m; ++m) {
    Rational rat(0);
    for (long j = 1; j <= m; ++j)
      rat += tab.c_exact(static_cast<std::size_t>(m - j + rv.pn)) * tab.d_exact(static_cast<std::size_t>(j));
    for (long j = 0; j <= m; ++j)
      rat -= tab.c_exact(static_cast<std::size_t>(m - j)) * tab.d_exact(static_cast<std::size_t>(j + rv.pn));
    const Rational cm = tab.c_exact(static_cast<std::size_t>(m + rv.pn));
    std::string item = "m=" + std::to_string(m);
    if (!is_p_integral(rat, p) || !is_p_integral(cm, p)) {
      push_undefined(rep, std::move(item), std::min(diff_val(rat, p), diff_val(cm, p)), target);
      continue;
    }
    mpz_class res = mod_red(rational_mod_pk(rat, p, static_cast<int>(target)) +
                                rational_mod_pk(cm, p, static_cast<int>(target)) * d0,
                            mod);
    push_residue(rep, std::move(item), res, target);
  }
  return rep;
}

CongruenceReport verify_ratio(const HGParams& prm, const SuiteOptions& opt) {
  const Resolved rv = resolve(prm, opt);
  CongruenceReport rep = make_report("ratio", prm, rv.n);
  CoefficientTable tab(prm, 0, 1);
  for (long m = 1; m <= rv.max_m; ++m) {
    const long m2 = m + rv.pn;
    std::string item = "m=" + std::to_string(m) + " m'=" + std::to_string(m2);
    const Rational cm = tab.c_exact(static_cast<std::size_t>(m));
    const Rational cm2 = tab.c_exact(static_cast<std::size_t>(m2));
    if (cm == 0 || cm2 == 0) {
      push_undefined(rep, std::move(item), -kValInfinity, rv.n);
      continue;
    }
    const Rational diff = tab.d_exact(static_cast<std::size_t>(m)) / cm -
                          tab.d_exact(static_cast<std::size_t>(m2)) / cm2;
    push_exact(rep, std::move(item), diff, rv.n);
  }
  return rep;
}

CongruenceReport verify_unitroot(const HGParams& prm, const SuiteOptions& opt) {
  const Resolved rv = resolve(prm, opt);
  CongruenceReport rep = make_report("unitroot", prm, rv.n);
  const long p = prm.p;
  CoefficientTable t0(prm, 0, 1), t1(prm, 1, 1);
  const mpz_class d0n = constant_D0_residue(prm, rv.n);
  const mpz_class mod2n = pow_p(p, 2 * rv.n);
  const mpz_class modn = pow_p(p, rv.n);
  const long pn1 = rv.pn / p;
  for (long m = 1; m <= rv.max_m; ++m) {
    if (m % p == 0) continue;
    const Rational den = t0.c_exact(static_cast<std::size_t>(m * rv.pn));
    {
      std::string item = "m=" + std::to_string(m) + " frobenius";
      const Rational num = t1.c_exact(static_cast<std::size_t>(m * pn1));
      if (den == 0 || !is_p_integral(num / den, p)) {
        push_undefined(rep, std::move(item), den == 0 ? -kValInfinity : diff_val(num / den, p),
                       2 * rv.n);
      } else {
        const mpz_class lhs = rational_mod_pk(num / den, p, 2 * rv.n);
        const mpz_class rhs = mod_red(1 - mpz_class(m) * pow_p(p, rv.n) * d0n, mod2n);
        push_residue(rep, std::move(item), mod_red(lhs - rhs, mod2n), 2 * rv.n);
      }
    }
    {
      std::string item = "m=" + std::to_string(m) + " dlog";
      const Rational dd = t0.d_exact(static_cast<std::size_t>(m * rv.pn));
      if (den == 0 || !is_p_integral(dd / den, p)) {
        push_undefined(rep, std::move(item), den == 0 ? -kValInfinity : diff_val(dd / den, p), rv.n);
      } else {
        const mpz_class lhs = rational_mod_pk(dd / den, p, rv.n);
        push_residue(rep, std::move(item), mod_red(lhs - d0n, modn), rv.n);
      }
    }
  }
  return rep;
}

CongruenceReport verify_keylemma(const HGParams& prm, const SuiteOptions& opt) {
  const Resolved rv = resolve(prm, opt);
  CongruenceReport rep = make_report("keylemma", prm, rv.n);
  const long p = prm.p;
  CoefficientTable tab(prm, 0, 1);
  for (long m = 0; m <= rv.max_m; ++m) {
    std::vector<Rational> t(static_cast<std::size_t>(m) + 1);
    for (long i = 0; i <= m; ++i) {
      const long j = m - i;
      t[static_cast<std::size_t>(i)] =
          tab.c_exact(static_cast<std::size_t>(i)) * tab.c_exact(static_cast<std::size_t>(j + rv.pn)) -
          tab.c_exact(static_cast<std::size_t>(j)) * tab.c_exact(static_cast<std::size_t>(i + rv.pn));
    }
    for (int l = 0; l <= rv.n; ++l) {
      const long q = pow_l(p, rv.n - l);
      for (long k = 0; k < q; ++k) {
        Rational T(0);
        for (long i = k; i <= m; i += q) T += t[static_cast<std::size_t>(i)];
        push_exact(rep,
                   "l=" + std::to_string(l) + " k=" + std::to_string(k) + " m=" + std::to_string(m),
                   T, l + 1);
      }
    }
  }
  return rep;
}

CongruenceReport verify_coeffcong(const HGParams& prm, const SuiteOptions& opt) {
  const Resolved rv = resolve(prm, opt);
  CongruenceReport rep = make_report("coeffcong", prm, rv.n);
  const long p = prm.p;
  CoefficientTable t0(prm, 0, 1), t1(prm, 1, 1);
  for (long m = 1; m <= rv.max_m; ++m) {
    const long m2 = m + rv.pn;
    const Rational diff =
        t0.c_exact(static_cast<std::size_t>(m)) * t1.c_exact(static_cast<std::size_t>(m2 / p)) -
        t0.c_exact(static_cast<std::size_t>(m2)) * t1.c_exact(static_cast<std::size_t>(m / p));
    push_exact(rep, "m=" + std::to_string(m) + " m'=" + std::to_string(m2), diff, rv.n);
  }
  return rep;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"dwork",    "log",      "ratio",
                                                 "unitroot", "keylemma", "coeffcong"};
  return names;
}

CongruenceReport run_suite(const std::string& name, const HGParams& params,
                           const SuiteOptions& opt) {
  if (name == "dwork") return verify_dwork(params, opt);
  if (name == "log") return verify_log(params, opt);
  if (name == "ratio") return verify_ratio(params, opt);
  if (name == "unitroot") return verify_unitroot(params, opt);
  if (name == "keylemma") return verify_keylemma(params, opt);
  if (name == "coeffcong") return verify_coeffcong(params, opt);
  throw std::invalid_argument("unknown suite: " + name);
}

std::vector<HGParams> default_corpus(long p) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime, got " + std::to_string(p));
  std::vector<HGParams> out;
  out.push_back(make_hg_params({Rational(1)}, {}, p));
  out.push_back(make_hg_params({Rational(1), Rational(1)}, {Rational(1)}, p));
  for (long N = 2; N < p; ++N) {
    if ((p - 1) % N != 0) continue;
    for (long i = 1; i <= N; ++i)
      for (long j = i; j <= N; ++j)
        for (long k = i + j; k <= N; ++k)
          out.push_back(make_hg_params({frac(i, N), frac(j, N)}, {frac(k, N)}, p));
  }
  return out;
}

}  // namespace padichg
