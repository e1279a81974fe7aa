#pragma once

#include <cstddef>
#include <vector>

#include "padichg/hyperseries.hpp"

namespace padichg {

// Dense exact-rational power series truncated to a fixed number of known
// coefficients (degree < terms()).  Arithmetic keeps honest truncation
// lengths: a result never claims more coefficients than its inputs support.
class QSeries {
 public:
  QSeries() = default;
  explicit QSeries(std::size_t terms) : c_(terms, Rational(0)) {}
  static QSeries constant(const Rational& v, std::size_t terms);
  static QSeries monomial(const Rational& v, std::size_t degree, std::size_t terms);

  std::size_t terms() const { return c_.size(); }
  const Rational& operator[](std::size_t k) const { return c_.at(k); }
  Rational& at(std::size_t k) { return c_.at(k); }
  bool is_zero() const;

  friend QSeries operator+(const QSeries& x, const QSeries& y);
  friend QSeries operator-(const QSeries& x, const QSeries& y);
  friend QSeries operator*(const QSeries& x, const QSeries& y);  // truncated product
  QSeries scaled(const Rational& s) const;
  QSeries derivative() const;                  // one term shorter
  QSeries integral(const Rational& c0) const;  // one term longer
  QSeries reciprocal() const;                  // needs a nonzero constant term
  QSeries shift_down() const;                  // divide by lambda; constant must vanish
  QSeries substitute_power(long e, std::size_t terms) const;  // lambda -> lambda^e
  QSeries truncated(std::size_t terms) const;

 private:
  std::vector<Rational> c_;
};

// the solution 2F1(a, 1-a; 1; lambda) of
//   lambda (1-lambda) F'' + (1 - 2 lambda) F' - a (1-a) F = 0
QSeries hg_series_lambda(const Rational& a, std::size_t terms);
QSeries hg_ode_residual(const QSeries& f, const Rational& a);  // 0 iff f solves the ODE

// X(lambda) = a(lambda) + psi * b(lambda), where psi is the logarithmic
// constant psi~(a) + psi~(1-a).  No higher power of psi ever appears.
struct PsiSeries {
  QSeries a, b;
};

// Frobenius eigenvector data for the exponent pair at level i/N: the inner
// index j is the unique 1 <= j <= N-1 with p j = i mod N, and sign is
// (-1)^((p j - i)/N), the sign of the Frobenius twist.
struct CurveEigenData {
  long N = 0;
  long i = 0;
  long p = 0;
  long j = 0;
  int sign = 1;
  Rational a;   // 1 - i/N
  Rational aj;  // 1 - j/N
};

CurveEigenData make_curve_data(long N, long i, long p);

// Formal solution of the Frobenius-twisted system at a given truncation:
//   G'  = (1/lambda) (1/((1-lambda) F^2) - 1/((1-lambda^p) Fj(lambda^p)^2)),
//         G(0) = psi
//   E1' = F/(1-lambda) - sign * lambda^{p-1} Fj(lambda^p)/(1-lambda^p),
//         E1(0) = 0
//   E2' = E1/(lambda (1-lambda) F^2)
//         - sign * lambda^{p-1} Fj(lambda^p)/(1-lambda^p) * G,   E2(0) = 0
//   eps1 = F^{-1} E1 + (lambda - lambda^2) F' E2
//   eps2 = -(1-a) (lambda - lambda^2) F E2
// The twisted subtractions are exactly what makes every division by an index
// come out p-integral; solve_curve checks the structural constraints (the
// bracket in G' has no constant term, E1 and E2 vanish at 0) and leaves
// integrality to the caller/tests.
struct CurveSolution {
  CurveEigenData data;
  std::size_t terms = 0;
  QSeries F, Fj;  // Fj in the inner variable
  QSeries E1;
  PsiSeries G;  // G.b is the constant series 1
  PsiSeries E2, eps1, eps2;
  // evidence of the two pole cancellations the construction relies on: the
  // lambda^0 term of the G' bracket and of lambda * E2' (both must be 0)
  Rational bracket_constant;
  Rational e2_pole_constant;
};

CurveSolution solve_curve(const CurveEigenData& data, std::size_t terms);

// psi~(a) + psi~(1-a) mod p^prec
mpz_class curve_psi_residue(const CurveEigenData& data, int prec);

// p-adic coefficient views at a given precision
std::vector<PAdic> lambda_view(const QSeries& s, long p, int prec);
std::vector<PAdic> lambda_view(const PsiSeries& s, const CurveEigenData& data, int prec);

// The series eigenvalue story meets the special-value table at lambda = 1:
// the paired hypergeometric family (a, 1-a; 1) evaluated there must give 0.
// Returns the residue mod p^m computed through the special-value pipeline.
mpz_class endpoint_vanishing_crosscheck(const CurveEigenData& data, int m);

}  // namespace padichg
