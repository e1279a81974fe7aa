#include "padichg/curve_series.hpp"

#include <algorithm>
#include <stdexcept>

#include "padichg/errors.hpp"

namespace padichg {

QSeries QSeries::constant(const Rational& v, std::size_t terms) {
  QSeries s(terms);
  if (terms > 0) s.c_[0] = v;
  return s;
}

QSeries QSeries::monomial(const Rational& v, std::size_t degree, std::size_t terms) {
  QSeries s(terms);
  if (degree < terms) s.c_[degree] = v;
  return s;
}

bool QSeries::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

QSeries operator+(const QSeries& x, const QSeries& y) {
  QSeries r(std::min(x.terms(), y.terms()));
  for (std::size_t k = 0; k < r.terms(); ++k) r.c_[k] = x.c_[k] + y.c_[k];
  return r;
}

QSeries operator-(const QSeries& x, const QSeries& y) {
  QSeries r(std::min(x.terms(), y.terms()));
  for (std::size_t k = 0; k < r.terms(); ++k) r.c_[k] = x.c_[k] - y.c_[k];
  return r;
}

QSeries operator*(const QSeries& x, const QSeries& y) {
  QSeries r(std::min(x.terms(), y.terms()));
  for (std::size_t k = 0; k < r.terms(); ++k)
    for (std::size_t t = 0; t <= k; ++t) r.c_[k] += x.c_[t] * y.c_[k - t];
  return r;
}

QSeries QSeries::scaled(const Rational& s) const {
  QSeries r(terms());
  for (std::size_t k = 0; k < terms(); ++k) r.c_[k] = c_[k] * s;
  return r;
}

QSeries QSeries::derivative() const {
  if (terms() == 0) throw std::invalid_argument("derivative of an empty series");
  QSeries r(terms() - 1);
  for (std::size_t k = 0; k + 1 < terms(); ++k) r.c_[k] = c_[k + 1] * Rational(static_cast<long>(k + 1));
  return r;
}

QSeries QSeries::integral(const Rational& c0) const {
  QSeries r(terms() + 1);
  r.c_[0] = c0;
  for (std::size_t k = 0; k < terms(); ++k) r.c_[k + 1] = c_[k] / Rational(static_cast<long>(k + 1));
  return r;
}

QSeries QSeries::reciprocal() const {
  if (terms() == 0 || c_[0] == 0)
    throw std::invalid_argument("reciprocal needs a nonzero constant term");
  QSeries r(terms());
  const Rational inv0 = Rational(1) / c_[0];
  r.c_[0] = inv0;
  for (std::size_t k = 1; k < terms(); ++k) {
    Rational acc(0);
    for (std::size_t t = 1; t <= k; ++t) acc += c_[t] * r.c_[k - t];
    r.c_[k] = -acc * inv0;
  }
  return r;
}

QSeries QSeries::shift_down() const {
  if (terms() == 0) throw std::invalid_argument("shift of an empty series");
  if (c_[0] != 0) throw internal_error("division by lambda with a surviving constant term");
  QSeries r(terms() - 1);
  for (std::size_t k = 1; k < terms(); ++k) r.c_[k - 1] = c_[k];
  return r;
}

QSeries QSeries::substitute_power(long e, std::size_t terms) const {
  if (e < 1) throw std::invalid_argument("substitution power must be >= 1");
  const std::size_t need = (terms + static_cast<std::size_t>(e) - 1) / static_cast<std::size_t>(e);
  if (this->terms() < need)
    throw std::invalid_argument("inner series too short for the requested truncation");
  QSeries r(terms);
  for (std::size_t k = 0; k * static_cast<std::size_t>(e) < terms; ++k)
    r.c_[k * static_cast<std::size_t>(e)] = c_[k];
  return r;
}

QSeries QSeries::truncated(std::size_t terms) const {
  if (terms > this->terms()) throw std::invalid_argument("cannot extend a truncated series");
  QSeries r(terms);
  for (std::size_t k = 0; k < terms; ++k) r.c_[k] = c_[k];
  return r;
}

QSeries hg_series_lambda(const Rational& a, std::size_t terms) {
  QSeries s(terms);
  if (terms == 0) return s;
  Rational cn(1);
  s.at(0) = cn;
  for (std::size_t n = 1; n < terms; ++n) {
    const Rational m(static_cast<long>(n - 1));
    cn *= (a + m) * (Rational(1) - a + m) / (Rational(static_cast<long>(n)) * Rational(static_cast<long>(n)));
    s.at(n) = cn;
  }
  return s;
}

QSeries hg_ode_residual(const QSeries& f, const Rational& a) {
  const std::size_t T = f.terms();
  if (T < 3) throw std::invalid_argument("need at least three coefficients");
  QSeries f1 = f.derivative();
  QSeries f2 = f1.derivative();
  QSeries lml2(T);  // lambda - lambda^2
  lml2.at(1) = 1;
  lml2.at(2) = -1;
  QSeries om2(T);  // 1 - 2 lambda
  om2.at(0) = 1;
  om2.at(1) = -2;
  return lml2 * f2 + om2 * f1 - f.scaled(a * (Rational(1) - a));
}

CurveEigenData make_curve_data(long N, long i, long p) {
  if (N < 2) throw std::invalid_argument("need N >= 2");
  if (i < 1 || i >= N) throw std::invalid_argument("need 1 <= i <= N - 1");
  if (!is_prime(p) || p == 2) throw std::invalid_argument("p must be an odd prime");
  if (N % p == 0) throw std::invalid_argument("p must not divide N");
  CurveEigenData d;
  d.N = N;
  d.i = i;
  d.p = p;
  long j = (i * mod_inverse(mpz_class(p), mpz_class(N)).get_si()) % N;
  if (j < 0) j += N;
  if (j == 0) throw internal_error("inner index landed on 0");
  d.j = j;
  d.sign = ((p * j - i) / N) % 2 == 0 ? 1 : -1;
  d.a = Rational(1) - frac(i, N);
  d.aj = Rational(1) - frac(j, N);
  return d;
}

CurveSolution solve_curve(const CurveEigenData& d, std::size_t terms) {
  if (terms < 3) throw std::invalid_argument("need at least three coefficients");
  const long p = d.p;
  const std::size_t T = terms + 4;

  QSeries F = hg_series_lambda(d.a, T);
  QSeries Fj_inner = hg_series_lambda(d.aj, T / static_cast<std::size_t>(p) + 1);
  QSeries Fp = Fj_inner.substitute_power(p, T);

  QSeries one_minus(T);
  one_minus.at(0) = 1;
  one_minus.at(1) = -1;
  QSeries om_p(T);
  om_p.at(0) = 1;
  if (static_cast<std::size_t>(p) < T) om_p.at(static_cast<std::size_t>(p)) = -1;
  QSeries lml2(T);
  lml2.at(1) = 1;
  lml2.at(2) = -1;

  const QSeries R = (one_minus * (F * F)).reciprocal();
  const QSeries S = (om_p * (Fp * Fp)).reciprocal();
  QSeries bracket = R - S;
  QSeries G_A = bracket.shift_down().integral(0);

  const QSeries inv_omp = om_p.reciprocal();
  const QSeries se = (QSeries::monomial(1, static_cast<std::size_t>(p - 1), T) * Fp) * inv_omp;
  QSeries E1 = (F * one_minus.reciprocal() - se.scaled(d.sign)).integral(0);

  QSeries E2A = (E1.shift_down() * R - (se * G_A).scaled(d.sign)).integral(0);
  QSeries E2B = se.scaled(-d.sign).integral(0);

  const QSeries Finv = F.reciprocal();
  const QSeries w = lml2 * F.derivative();
  QSeries eps1A = Finv * E1 + w * E2A;
  QSeries eps1B = w * E2B;
  const QSeries u = (lml2 * F).scaled(-(Rational(1) - d.a));
  QSeries eps2A = u * E2A;
  QSeries eps2B = u * E2B;

  CurveSolution sol;
  sol.data = d;
  sol.terms = terms;
  sol.F = F.truncated(terms);
  sol.Fj = Fj_inner;
  sol.E1 = E1.truncated(terms);
  sol.G.a = G_A.truncated(terms);
  sol.G.b = QSeries::constant(1, terms);
  sol.E2.a = E2A.truncated(terms);
  sol.E2.b = E2B.truncated(terms);
  sol.eps1.a = eps1A.truncated(terms);
  sol.eps1.b = eps1B.truncated(terms);
  sol.eps2.a = eps2A.truncated(terms);
  sol.eps2.b = eps2B.truncated(terms);
  sol.bracket_constant = bracket[0];
  sol.e2_pole_constant = E1[0];
  return sol;
}

mpz_class curve_psi_residue(const CurveEigenData& d, int prec) {
  mpz_class r = psi_tilde(d.a, d.p, prec) + psi_tilde(Rational(1) - d.a, d.p, prec);
  mpz_class mod = pow_p(d.p, prec);
  mpz_class out;
  mpz_fdiv_r(out.get_mpz_t(), r.get_mpz_t(), mod.get_mpz_t());
  return out;
}

std::vector<PAdic> lambda_view(const QSeries& s, long p, int prec) {
  std::vector<PAdic> out;
  out.reserve(s.terms());
  for (std::size_t k = 0; k < s.terms(); ++k) {
    if (s[k] == 0)
      out.push_back(PAdic::zero(p));
    else
      out.push_back(PAdic::from_rational(s[k], p, prec));
  }
  return out;
}

std::vector<PAdic> lambda_view(const PsiSeries& s, const CurveEigenData& d, int prec) {
  const long p = d.p;
  PAdic psi = [&] {
    mpz_class r = curve_psi_residue(d, prec);
    if (r == 0) return PAdic::zero(p);
    mpz_class u;
    int v = static_cast<int>(mpz_remove(u.get_mpz_t(), r.get_mpz_t(), mpz_class(p).get_mpz_t()));
    return PAdic::make(p, v, u, prec - v);
  }();
  std::vector<PAdic> av = lambda_view(s.a, p, prec);
  std::vector<PAdic> bv = lambda_view(s.b, p, prec);
  std::vector<PAdic> out;
  const std::size_t n = std::min(av.size(), bv.size());
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    PAdic term = bv[k].is_zero() || psi.is_zero() ? PAdic::zero(p) : psi * bv[k];
    if (av[k].is_zero())
      out.push_back(term);
    else if (term.is_zero())
      out.push_back(av[k]);
    else
      out.push_back(av[k] + term);
  }
  return out;
}

mpz_class endpoint_vanishing_crosscheck(const CurveEigenData& d, int m) {
  HGParams prm = make_hg_params({frac(d.i, d.N), Rational(1) - frac(d.i, d.N)},
                                {Rational(1)}, d.p);
  return special_value(prm, Rational(1), m).residue;
}

}  // namespace padichg
