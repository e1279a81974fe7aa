#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "padichg/padic_core.hpp"

namespace padichg {

// Hypergeometric parameter pack for
//   F(t) = sum_n C_n t^n,   C_n = prod_k (a_k)_n / (prod_j (b_j)_n * (1)_n)
// with s numerator parameters and s-1 listed denominator parameters (the
// trailing implicit one is always 1).  c is the Frobenius twist constant
// (t -> c t^p); it must be a 1-unit.
struct HGParams {
  std::vector<Rational> a;
  std::vector<Rational> b;
  long p = 0;
  Rational c = 1;
};

HGParams make_hg_params(std::vector<Rational> a, std::vector<Rational> b, long p,
                        const Rational& c = Rational(1));

// parameters with the Dwork prime map applied `level` times to every entry
HGParams dwork_level(const HGParams& params, int level);

std::string params_str(const HGParams& params);

struct TupleOrbit {
  long preperiod = 0;
  long period = 1;
};
TupleOrbit hg_tuple_orbit(const HGParams& params);

// ---- admissibility ----------------------------------------------------------
//
// Two conditions, checked digit-by-digit over one full orbit of the tuple:
//  (i)  every Dwork iterate of every b_j is a p-adic unit
//  (ii) at each digit index, after sorting the digit multisets, the (j+1)-th
//       smallest a-digit is strictly below the j-th smallest b-digit for
//       j = 1..q, where q counts the b entries different from 1

struct ConditionFailure {
  std::string condition;  // "unit-b-iterates" | "digit-interlacing"
  long digit_index = 0;
  std::string witness;
};

struct DworkConditionReport {
  bool ok = true;
  long depth = 0;
  std::vector<ConditionFailure> failures;
};

DworkConditionReport check_dwork_conditions(const HGParams& params, long depth = -1);

// ---- coefficient table ------------------------------------------------------
//
// Lazily extended table of C_n at a given orbit level, plus the D_n of the
// logarithmic companion series
//   G(t) = D_0 + sum_{n>=1} D_n t^n,
//   D_n = (C_n - c^{n/p} C'_{n/p}) / n   (the C' term only when p | n),
//   D_0 = sum psi~(a_k) - sum psi~(b_j) - log(c)/p.
// Exact mode returns rationals; p-adic mode carries units mod p^working_prec
// with exact valuation bookkeeping (the D_n subtraction costs v_p(n) digits
// of absolute precision, reflected in the returned prec).

class CoefficientTable {
 public:
  CoefficientTable(const HGParams& params, int level, int working_prec);

  const HGParams& base_params() const { return base_; }
  const HGParams& level_params() const { return lev_; }
  int level() const { return level_; }
  int working_prec() const { return wprec_; }

  PAdic c(std::size_t n);
  PAdic d(std::size_t n);  // n >= 1; use constant_D0 for n = 0
  Rational c_exact(std::size_t n);
  Rational d_exact(std::size_t n);

 private:
  HGParams base_, lev_, lev1_;
  int level_ = 0;
  int wprec_ = 0;
  std::vector<Rational> cex_, cex1_;
  struct ModState;
  std::shared_ptr<ModState> mod_;
  void ensure_exact(std::vector<Rational>& cache, const HGParams& prm, std::size_t n);
};

PAdic constant_D0(const HGParams& params, int prec);
mpz_class constant_D0_residue(const HGParams& params, int prec);  // mod p^prec

// ---- truncated evaluation ---------------------------------------------------

enum class SeriesKind { F, G };

// [F^(level)]_{< p^n}(alpha) or [G]_{< p^n}(alpha) as a p-adic number with
// `prec` guaranteed absolute digits
PAdic truncated_eval(SeriesKind kind, const HGParams& params, int level, int n,
                     const Rational& alpha, int prec);

// [F]_{<p^n}(alpha) / [F^(1)(t^p)]_{<p^n}(alpha) mod p^n (Dwork quotient)
PAdic dwork_ratio(const HGParams& params, int n, const Rational& alpha, int prec);

// [G]_{<p^n}(alpha) / [F]_{<p^n}(alpha) mod p^m for each truncation exponent
// n in `levels` (ascending).  One stream pass serves all levels.
std::vector<mpz_class> log_ratio_levels(const HGParams& params, const Rational& alpha,
                                        const std::vector<int>& levels, int m);

// ---- special value ----------------------------------------------------------

struct SpecialValueResult {
  long p = 0;
  int prec = 0;
  mpz_class modulus;
  mpz_class residue;   // the special value mod p^prec
  bool stable = false; // truncation levels prec and prec+1 agreed (required)
  std::vector<mpz_class> h_unit_evidence;  // [F^(i)]_{<p}(alpha) mod p per level
};

SpecialValueResult special_value(const HGParams& params, const Rational& alpha, int m);

// unit-root evidence for the (i/N, j/N; k/N) family at t = 1: the truncated
// sum [F]_{<p}(1) mod p against the closed-form factorial ratio; both routes
// must agree and be nonzero
mpz_class gauss_unit_check(long p, long N, long i, long j, long k);

}  // namespace padichg
