#include "padichg/padic_core.hpp"

#include <cmath>
#include <cstdint>
#include <map>
#include <vector>

namespace padichg {

namespace {

void require_p_integral(const Rational& q, long p, const char* what) {
  if (!is_p_integral(q, p))
    throw std::invalid_argument(std::string(what) + ": denominator divisible by p");
}

void require_prime(long p) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
}

}  // namespace

PAdic reduce_rational(const Rational& q, long p, int prec) {
  require_prime(p);
  require_p_integral(q, p, "reduce_rational");
  return PAdic::from_rational(q, p, prec);
}

Rational dwork_prime(const Rational& a, long p) {
  require_prime(p);
  require_p_integral(a, p, "dwork_prime");
  long l = mpz_class(rational_mod_pk(-a, p, 1)).get_si();
  return Rational(a + l) / p;
}

long dwork_orbit_default_budget(const Rational& a, long p) {
  long den = mpz_class(a.get_den()).get_si();
  long budget = 4 * mult_order(p, den) + 8;
  // integers / large numerators take ~log_p|num| extra steps to settle
  mpz_class n = abs(a.get_num()) + a.get_den();
  budget += 2 * static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), static_cast<int>(p)) + 1);
  return budget;
}

DworkOrbit dwork_orbit(const Rational& a, long p, long max_steps) {
  require_prime(p);
  require_p_integral(a, p, "dwork_orbit");
  if (max_steps < 0) max_steps = dwork_orbit_default_budget(a, p);
  DworkOrbit orbit;
  std::map<Rational, long> seen;
  Rational x = a;
  for (long i = 0; i <= max_steps; ++i) {
    auto it = seen.find(x);
    if (it != seen.end()) {
      orbit.preperiod = it->second;
      orbit.period = i - it->second;
      return orbit;
    }
    seen.emplace(x, i);
    orbit.values.push_back(x);
    x = dwork_prime(x, p);
  }
  throw budget_error("dwork_orbit: no cycle within " + std::to_string(max_steps) +
                     " steps (raise max_steps)");
}

long padic_digit(const Rational& a, long p, unsigned long n) {
  require_prime(p);
  require_p_integral(a, p, "padic_digit");
  // [a]_n = [a^(n)]_0; walk the orbit once and read the digit off the cycle
  DworkOrbit orbit = dwork_orbit(a, p);
  unsigned long pre = static_cast<unsigned long>(orbit.preperiod);
  unsigned long per = static_cast<unsigned long>(orbit.period);
  unsigned long idx = n < pre ? n : pre + (n - pre) % per;
  return mpz_class(rational_mod_pk(-orbit.values[idx], p, 1)).get_si();
}

Rational pochhammer_exact(const Rational& a, unsigned long n) {
  Rational r = 1;
  Rational f = a;
  for (unsigned long i = 0; i < n; ++i, f += 1) r *= f;
  return r;
}

PAdic pochhammer(const Rational& a, unsigned long n, long p, int prec) {
  require_prime(p);
  require_p_integral(a, p, "pochhammer");
  mpz_class pk = pow_p(p, prec);
  mpz_class den_inv = mod_inverse(a.get_den() % pk, pk);
  mpz_class num = a.get_num();  // numerator of a + i advances by den each step
  long val = 0;
  mpz_class unit = 1;
  for (unsigned long i = 0; i < n; ++i, num += a.get_den()) {
    if (num == 0) return PAdic::zero(p);  // a is a non-positive integer
    mpz_class u = num;
    val += static_cast<long>(
        mpz_remove(u.get_mpz_t(), u.get_mpz_t(), mpz_class(p).get_mpz_t()));
    unit = (unit * (u % pk)) % pk;
    unit = (unit * den_inv) % pk;
  }
  if (unit < 0) unit += pk;
  return PAdic::make(p, val, unit, prec);
}

Rational braces_pochhammer_exact(const Rational& a, unsigned long n, long p) {
  require_prime(p);
  require_p_integral(a, p, "braces_pochhammer");
  Rational r = 1;
  Rational f = a;
  for (unsigned long i = 0; i < n; ++i, f += 1) {
    if (f != 0 && !mpz_divisible_ui_p(f.get_num().get_mpz_t(),
                                      static_cast<unsigned long>(p)))
      r *= f;
  }
  return r;
}

PAdic braces_pochhammer(const Rational& a, unsigned long n, long p, int prec) {
  return PAdic::from_rational(braces_pochhammer_exact(a, n, p), p, prec);
}

// ---- psi~ ------------------------------------------------------------------

namespace {

// batch-invert 1..n-1 (p-coprime part) and sum, u64 fast path
std::uint64_t harmonic_sum_u64(std::uint64_t n, std::uint64_t p, std::uint64_t pm) {
  std::vector<std::uint64_t> pref;
  pref.reserve(static_cast<std::size_t>(n));
  unsigned __int128 run = 1;
  for (std::uint64_t k = 1; k < n; ++k) {
    if (k % p == 0) continue;
    run = (run * k) % pm;
    pref.push_back(static_cast<std::uint64_t>(run));
  }
  if (pref.empty()) return 0;
  mpz_class inv = mod_inverse(mpz_class(static_cast<unsigned long>(pref.back())),
                              mpz_class(static_cast<unsigned long>(pm)));
  std::uint64_t inv_run = inv.get_ui();  // inverse of the running prefix product
  std::size_t idx = pref.size();
  std::uint64_t sum = 0;
  for (std::uint64_t k = n - 1; k >= 1; --k) {
    if (k % p == 0) continue;
    --idx;
    std::uint64_t prev = idx == 0 ? 1 : pref[idx - 1];
    // 1/k = (product before k) * inverse(product through k)
    std::uint64_t invk =
        static_cast<std::uint64_t>((static_cast<unsigned __int128>(prev) * inv_run) % pm);
    sum = (sum + invk) % pm;
    inv_run =
        static_cast<std::uint64_t>((static_cast<unsigned __int128>(inv_run) * k) % pm);
  }
  return sum;
}

mpz_class harmonic_sum_mpz(const mpz_class& n, long p, const mpz_class& pm) {
  mpz_class sum = 0;
  mpz_class run = 1;
  std::vector<mpz_class> pref;
  for (mpz_class k = 1; k < n; ++k) {
    if (mpz_divisible_ui_p(k.get_mpz_t(), static_cast<unsigned long>(p))) continue;
    run = (run * k) % pm;
    pref.push_back(run);
  }
  if (pref.empty()) return 0;
  mpz_class inv_run = mod_inverse(pref.back(), pm);
  std::size_t idx = pref.size();
  for (mpz_class k = n - 1; k >= 1; --k) {
    if (mpz_divisible_ui_p(k.get_mpz_t(), static_cast<unsigned long>(p))) continue;
    --idx;
    mpz_class prev = idx == 0 ? mpz_class(1) : pref[idx - 1];
    sum = (sum + prev * inv_run) % pm;
    inv_run = (inv_run * k) % pm;
  }
  return sum;
}

}  // namespace

mpz_class psi_tilde(const Rational& z, long p, int m) {
  require_prime(p);
  require_p_integral(z, p, "psi_tilde");
  if (m < 1) throw std::invalid_argument("psi_tilde: m must be >= 1");
  mpz_class pm = pow_p(p, m);
  mpz_class n = rational_mod_pk(z, p, m);
  if (n == 0) n = pm;  // representative in [1, p^m]
  if (pm.fits_ulong_p() && static_cast<std::uint64_t>(pm.get_ui()) < (1ULL << 62)) {
    return mpz_class(static_cast<unsigned long>(harmonic_sum_u64(
        n.get_ui(), static_cast<std::uint64_t>(p), pm.get_ui())));
  }
  return harmonic_sum_mpz(n, p, pm);
}

mpz_class iwasawa_log_oneunit(const Rational& c, long p, int m) {
  require_prime(p);
  require_p_integral(c, p, "iwasawa_log_oneunit");
  if (m < 1) throw std::invalid_argument("iwasawa_log_oneunit: m must be >= 1");
  Rational u = c - 1;
  if (u == 0) return 0;
  long v = valuation_q(u, p);
  if (v < 1) throw std::invalid_argument("iwasawa_log_oneunit: c is not a 1-unit");
  // term n: -(1-c)^n / n, valuation >= n*v - floor(log_p n); stop once every
  // remaining term vanishes at the working precision
  int logcap = 2;
  for (long nn = m + 4; nn > 0; nn >>= 1) ++logcap;
  int w = m + logcap + 2;
  mpz_class pw = pow_p(p, w);
  mpz_class base = rational_mod_pk(-u, p, w);  // (1-c) mod p^w
  mpz_class powterm = 1;
  mpz_class acc = 0;
  for (long n = 1;; ++n) {
    long lg = 0;
    for (long t = n; t >= p; t /= p) ++lg;
    if (n * v - lg >= w) break;
    powterm = (powterm * base) % pw;
    // v_p(n) digits move from the power into the denominator
    long e = (n % p == 0) ? valuation_z(mpz_class(n), p) : 0;
    mpz_class t = powterm;
    if (e > 0) {
      mpz_class pe = pow_p(p, e);
      if (!mpz_divisible_p(t.get_mpz_t(), pe.get_mpz_t()))
        throw internal_error("iwasawa_log_oneunit: power not divisible by p^v_p(n)");
      t /= pe;
    }
    mpz_class nunit = mpz_class(n) / pow_p(p, e);
    t = (t * mod_inverse(nunit % pw, pw)) % pw;
    acc = (acc - t) % pw;
  }
  acc %= pow_p(p, m);
  if (acc < 0) acc += pow_p(p, m);
  return acc;
}

}  // namespace padichg
