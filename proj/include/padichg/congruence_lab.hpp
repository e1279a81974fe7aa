#pragma once

#include <string>
#include <vector>

#include "padichg/hyperseries.hpp"

namespace padichg {

// Congruence verification suites.  Every suite recomputes the series
// coefficients as exact rationals (independently of the modular evaluation
// streams) and checks divisibility of the stated differences, so a suite run
// is a genuine cross-examination of the fast kernel rather than a replay.
//
// Suites (n = truncation exponent, defaults in parentheses):
//   dwork     coefficients of F * [F'(c t^p)]_{<p^n} - F'(c t^p) * [F]_{<p^n}
//             vanish mod p^l (l = n) up to degree max_deg (2 p^n)
//   log       S_m = sum_{i+j=m} (C_{i+p^n} D_j - C_i D_{j+p^n}) vanishes
//             mod p^n (mod p^{n-1} when p = 2) for m <= max_m (2 p^n)
//   ratio     D_m / C_m depends only on m mod p^n, to precision p^n
//   unitroot  C'_{m p^{n-1}} / C_{m p^n} = 1 - m p^n D_0 mod p^{2n}  and
//             D_{m p^n} / C_{m p^n} = D_0 mod p^n, for p coprime m <= max_m
//   keylemma  sum_{i+j=m, i = k mod p^{n-l}} (C_i C_{j+p^n} - C_j C_{i+p^n})
//             vanishes mod p^{l+1} for every l <= n, k, and m <= max_m
//   coeffcong C_m C'_{floor(m'/p)} = C_{m'} C'_{floor(m/p)} mod p^n for
//             m' = m + p^n, m <= max_m
//
// Here C' are the coefficients one Dwork level up and D_0 enters through its
// residue at the precision the congruence needs.

inline constexpr long kValInfinity = 1L << 60;  // exact-zero difference

struct CheckResult {
  std::string item;   // which instance, e.g. "m=7" or "l=1 k=3 m=12"
  bool pass = false;
  long observed_val = 0;  // v_p of the difference (kValInfinity for exact 0;
                          // residue-based checks report a lower bound)
  long required_val = 0;
};

struct CongruenceReport {
  std::string suite;
  std::string family;
  long p = 0;
  int n = 1;
  std::vector<CheckResult> checks;
  long passed = 0;
  long failed = 0;
  bool ok() const { return failed == 0; }
};

struct SuiteOptions {
  int n = 1;          // truncation exponent
  long max_m = -1;    // per-suite default 2 p^n
  long max_deg = -1;  // dwork: degree budget, default 2 p^n
  int l = -1;         // dwork: congruence exponent, default n
};

CongruenceReport verify_dwork(const HGParams& params, const SuiteOptions& opt);
CongruenceReport verify_log(const HGParams& params, const SuiteOptions& opt);
CongruenceReport verify_ratio(const HGParams& params, const SuiteOptions& opt);
CongruenceReport verify_unitroot(const HGParams& params, const SuiteOptions& opt);
CongruenceReport verify_keylemma(const HGParams& params, const SuiteOptions& opt);
CongruenceReport verify_coeffcong(const HGParams& params, const SuiteOptions& opt);

const std::vector<std::string>& suite_names();
CongruenceReport run_suite(const std::string& name, const HGParams& params,
                           const SuiteOptions& opt);

// the standard family list at a prime p: (1;-), (1,1;1), and (i/N, j/N; k/N)
// for every N >= 2 dividing p - 1 and 1 <= i <= j, i + j <= k <= N
std::vector<HGParams> default_corpus(long p);

}  // namespace padichg
