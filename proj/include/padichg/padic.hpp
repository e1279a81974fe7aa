#pragma once

#include <string>

#include "padichg/rational.hpp"

namespace padichg {

// A p-adic number in valuation/unit form: x = p^val * unit with the unit
// carried modulo p^prec (so prec = number of known significant digits).
// Exact zero is a distinguished state (valuation = +infinity morally).
//
// Precision semantics:
//   mul/div: prec of the result = min of the operand precs, valuations add
//   add/sub: operands are aligned at the smaller valuation; the result keeps
//            the digits of the overlap window, minus any digits cancelled in
//            front (the prec field reports what survived -- nothing is lost
//            silently)
//   division by p^k: shifts the valuation only, prec untouched
class PAdic {
 public:
  PAdic() = default;

  static PAdic zero(long p);
  static PAdic one(long p, int prec);
  // x = p^val * unit mod p^prec; unit must be coprime to p (unit==0 -> zero)
  static PAdic make(long p, long val, mpz_class unit, int prec);
  // embed an exact nonzero rational; valuation may be negative
  static PAdic from_rational(const Rational& q, long p, int prec);

  long prime() const { return p_; }
  bool is_zero() const { return zero_; }
  long valuation() const;           // throws value_undefined_error on zero
  const mpz_class& unit() const;    // unit part, throws on zero
  int prec() const { return prec_; }

  bool is_unit() const { return !zero_ && val_ == 0; }

  PAdic operator-() const;
  PAdic inv() const;                // throws nonunit on zero
  PAdic div_pow_p(long k) const;    // divide by p^k: valuation shifts only
  PAdic pow(unsigned long e) const;

  friend PAdic operator*(const PAdic& x, const PAdic& y);
  friend PAdic operator/(const PAdic& x, const PAdic& y);
  friend PAdic operator+(const PAdic& x, const PAdic& y);
  friend PAdic operator-(const PAdic& x, const PAdic& y);

  // least non-negative residue mod p^m; requires val >= 0 and enough digits
  mpz_class residue(long m) const;

  // equality of the overlapping known digits (common use: frozen-value tests)
  bool same_value(const PAdic& y) const;

  std::string str() const;

 private:
  long p_ = 0;
  bool zero_ = true;
  long val_ = 0;
  int prec_ = 0;
  mpz_class unit_ = 0;

  void check_compat(const PAdic& y) const;
};

}  // namespace padichg
