#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "padichg/errors.hpp"
#include "padichg/hyperseries.hpp"

using namespace padichg;

namespace {
HGParams half_half(long p) { return make_hg_params({frac(1, 2), frac(1, 2)}, {Rational(1)}, p); }
}  // namespace

TEST_CASE("parameter pack validation") {
  CHECK_NOTHROW(make_hg_params({Rational(1)}, {}, 5));
  CHECK_NOTHROW(make_hg_params({frac(1, 5), frac(2, 5)}, {frac(4, 5)}, 11));
  CHECK_THROWS_AS(make_hg_params({Rational(1)}, {}, 6), std::invalid_argument);       // not prime
  CHECK_THROWS_AS(make_hg_params({}, {}, 5), std::invalid_argument);                  // empty a
  CHECK_THROWS_AS(make_hg_params({Rational(1)}, {Rational(1)}, 5), std::invalid_argument);  // sizes
  CHECK_THROWS_AS(make_hg_params({frac(1, 5), Rational(1)}, {Rational(1)}, 5),
                  std::invalid_argument);  // 1/5 not 5-integral
  CHECK_THROWS_AS(make_hg_params({Rational(1), Rational(1)}, {Rational(0)}, 5),
                  std::invalid_argument);  // b = 0
  CHECK_THROWS_AS(make_hg_params({Rational(1), Rational(1)}, {Rational(-3)}, 5),
                  std::invalid_argument);  // b negative integer
  CHECK_THROWS_AS(make_hg_params({Rational(1)}, {}, 5, Rational(2)),
                  std::invalid_argument);  // c not a 1-unit
  CHECK_NOTHROW(make_hg_params({Rational(1)}, {}, 5, Rational(6)));
}

TEST_CASE("level shift and printing") {
  HGParams prm = make_hg_params({frac(1, 3), frac(2, 3)}, {frac(1, 2)}, 5);
  HGParams l1 = dwork_level(prm, 1);
  // 1/3 <-> 2/3 swap at p = 5; 1/2 is fixed
  CHECK(l1.a == std::vector<Rational>{frac(2, 3), frac(1, 3)});
  CHECK(l1.b == std::vector<Rational>{frac(1, 2)});
  HGParams l2 = dwork_level(prm, 2);
  CHECK(l2.a == prm.a);
  CHECK(params_str(prm) == "a=(1/3,2/3) b=(1/2) p=5");
  CHECK(params_str(make_hg_params({Rational(1)}, {}, 5, Rational(6))) == "a=(1) b=() p=5 c=6");
}

TEST_CASE("tuple orbit combines entry orbits") {
  TupleOrbit o1 = hg_tuple_orbit(half_half(3));
  CHECK(o1.preperiod == 0);
  CHECK(o1.period == 1);
  TupleOrbit o2 = hg_tuple_orbit(make_hg_params({frac(1, 3), frac(2, 3)}, {frac(1, 2)}, 5));
  CHECK(o2.preperiod == 0);
  CHECK(o2.period == 2);
  // integer entry 5 at p = 3 has preperiod 2
  TupleOrbit o3 = hg_tuple_orbit(make_hg_params({Rational(5), Rational(1)}, {frac(1, 2)}, 3));
  CHECK(o3.preperiod == 2);
  CHECK(o3.period == 1);
}

TEST_CASE("admissibility conditions") {
  SUBCASE("interlacing holds") {
    DworkConditionReport rep =
        check_dwork_conditions(make_hg_params({frac(1, 5), frac(2, 5)}, {frac(4, 5)}, 11));
    CHECK(rep.ok);
    CHECK(rep.failures.empty());
  }
  SUBCASE("interlacing fails at digit 0") {
    DworkConditionReport rep =
        check_dwork_conditions(make_hg_params({frac(1, 5), frac(4, 5)}, {frac(2, 5)}, 11));
    CHECK_FALSE(rep.ok);
    REQUIRE_FALSE(rep.failures.empty());
    CHECK(rep.failures[0].condition == "digit-interlacing");
    CHECK(rep.failures[0].digit_index == 0);
  }
  SUBCASE("b entries equal to 1 impose no interlacing") {
    CHECK(check_dwork_conditions(half_half(3)).ok);
    CHECK(check_dwork_conditions(make_hg_params({Rational(1), Rational(1)}, {Rational(1)}, 5)).ok);
  }
  SUBCASE("non-unit b iterate is flagged") {
    DworkConditionReport rep =
        check_dwork_conditions(make_hg_params({Rational(1), Rational(1)}, {Rational(5)}, 5));
    CHECK_FALSE(rep.ok);
    REQUIRE_FALSE(rep.failures.empty());
    CHECK(rep.failures[0].condition == "unit-b-iterates");
  }
}

TEST_CASE("coefficient table: exact values") {
  CoefficientTable tab(half_half(3), 0, 4);
  CHECK(tab.c_exact(0) == Rational(1));
  CHECK(tab.c_exact(1) == frac(1, 4));
  CHECK(tab.c_exact(2) == frac(9, 64));
  CHECK(tab.c_exact(3) == frac(25, 256));
  CHECK(tab.d_exact(1) == frac(1, 4));
  // the tuple is fixed under the prime map, so D_3 = (C_3 - C'_1)/3
  CHECK(tab.d_exact(3) == frac(-13, 256));
}

TEST_CASE("coefficient table: modular matches exact") {
  // the same numbers through the residue stream and through exact rationals
  for (long p : {3L, 5L}) {
    CoefficientTable tab(half_half(p), 0, 6);
    for (std::size_t n = 0; n <= 40; ++n) {
      Rational ce = tab.c_exact(n);
      PAdic cm = tab.c(n);
      if (ce == 0) {
        CHECK(cm.is_zero());
        continue;
      }
      long v = valuation_q(ce, p);
      REQUIRE(cm.valuation() == v);
      if (v >= 0) CHECK(cm.residue(6) == rational_mod_pk(ce, p, 6));
      if (n == 0) continue;
      Rational de = tab.d_exact(n);
      PAdic dm = tab.d(n);
      if (dm.is_zero()) {
        // absolute precision window of the modular route
        int a = 6;
        for (unsigned long t = n; t % p == 0; t /= p) --a;
        CHECK(valuation_q(de, p) >= a);
        continue;
      }
      int a = static_cast<int>(dm.valuation()) + dm.prec();
      CHECK(rational_mod_pk(de, p, a) == dm.residue(a));
    }
  }
}

TEST_CASE("coefficient table: level shift") {
  HGParams prm = make_hg_params({frac(1, 3), frac(2, 3)}, {frac(1, 2)}, 5);
  CoefficientTable t0(prm, 0, 4);
  CoefficientTable t1(prm, 1, 4);
  // level-1 parameters are (2/3, 1/3; 1/2): same multiset, so same series
  CHECK(t1.c_exact(7) == t0.c_exact(7));
  CHECK(t1.level_params().a == std::vector<Rational>{frac(2, 3), frac(1, 3)});
}

TEST_CASE("coefficient table: polynomial case goes dead") {
  // a = -2 makes (a)_n vanish for n >= 3
  CoefficientTable tab(make_hg_params({Rational(-2), Rational(1)}, {Rational(1)}, 5), 0, 4);
  CHECK(tab.c_exact(2) == Rational(1));
  CHECK(tab.c_exact(3) == 0);
  CHECK(tab.c(3).is_zero());
  CHECK(tab.c(10).is_zero());
  CHECK(tab.c(2).residue(2) == 1);
}

TEST_CASE("constant term of the logarithmic companion") {
  // two psi values of 1/2 at p = 3: psi~(1/2) = 4 mod 9 -> 2*4 = 8
  CHECK(constant_D0_residue(half_half(3), 2) == 8);
  PAdic d0 = constant_D0(half_half(3), 2);
  CHECK(d0.residue(2) == 8);
  // pure (1;-) series: no psi contribution at all
  CHECK(constant_D0(make_hg_params({Rational(1)}, {}, 5), 3).is_zero());
  // twist constant contributes -log(c)/p: log(6) = 555 mod 5^4 -> -111 mod 125
  CHECK(constant_D0_residue(make_hg_params({Rational(1)}, {}, 5, Rational(6)), 3) == 14);
}

TEST_CASE("truncated evaluation of F") {
  HGParams prm = half_half(5);
  PAdic f = truncated_eval(SeriesKind::F, prm, 0, 1, Rational(1), 1);
  CHECK(f.residue(1) == 1);
  // truncation exponent 0 keeps only the constant term
  PAdic f0 = truncated_eval(SeriesKind::F, prm, 0, 0, Rational(7), 3);
  CHECK(f0.residue(3) == 1);
  // exact cross-check at a deeper truncation: sum C_n 2^n for n < 25
  CoefficientTable tab(half_half(5), 0, 4);
  Rational s(0), pw(1);
  for (std::size_t n = 0; n < 25; ++n) {
    s += tab.c_exact(n) * pw;
    pw *= 2;
  }
  PAdic f2 = truncated_eval(SeriesKind::F, half_half(5), 0, 2, Rational(2), 4);
  CHECK(f2.residue(4) == rational_mod_pk(s, 5, 4));
}

TEST_CASE("truncated evaluation of G") {
  // a = (1), b = (): G = 0 + t + t^2/2, so [G]_{<3}(1) = 3/2
  HGParams prm = make_hg_params({Rational(1)}, {}, 3);
  PAdic g = truncated_eval(SeriesKind::G, prm, 0, 1, Rational(1), 2);
  CHECK(g.residue(2) == 6);  // 3/2 mod 9
  CHECK(g.valuation() == 1);

  // exact cross-check for the (1/2, 1/2; 1) series at p = 3, alpha = 1
  CoefficientTable tab(half_half(3), 0, 8);
  Rational tail(0);
  for (std::size_t n = 1; n < 27; ++n) tail += tab.d_exact(n);
  mpz_class want = (constant_D0_residue(half_half(3), 4) + rational_mod_pk(tail, 3, 4)) % 81;
  PAdic g3 = truncated_eval(SeriesKind::G, half_half(3), 0, 3, Rational(1), 4);
  CHECK(g3.residue(4) == want);
}

TEST_CASE("negative-valuation coefficients are rejected in evaluation") {
  // (1/2)^3 over (2/3)^2: the denominator strips p factors first
  HGParams prm = make_hg_params({frac(1, 2), frac(1, 2), frac(1, 2)}, {frac(2, 3), frac(2, 3)}, 5);
  CoefficientTable tab(prm, 0, 4);
  CHECK(valuation_q(tab.c_exact(2), 5) == -2);
  CHECK(tab.c(2).valuation() == -2);
  CHECK_THROWS_AS(truncated_eval(SeriesKind::F, prm, 0, 1, Rational(1), 2), value_undefined_error);
}

TEST_CASE("evaluation guards") {
  HGParams prm = half_half(3);
  CHECK_THROWS_AS(truncated_eval(SeriesKind::F, prm, 0, 60, Rational(1), 2), budget_error);
  CHECK_THROWS_AS(truncated_eval(SeriesKind::F, prm, 0, 2, frac(1, 3), 2), std::invalid_argument);
}

TEST_CASE("big-modulus engine agrees with the exact route") {
  // working modulus 3^40 exceeds the word-size engine; 9 terms keep it cheap
  HGParams prm = half_half(3);
  CoefficientTable tab(prm, 0, 4);
  Rational s(0), pw(1);
  for (std::size_t n = 0; n < 9; ++n) {
    s += tab.c_exact(n) * pw;
    pw *= 2;
  }
  PAdic f = truncated_eval(SeriesKind::F, prm, 0, 2, Rational(2), 40);
  CHECK(f.residue(40) == rational_mod_pk(s, 3, 40));

  // huge parameter numerators also push the stream off the word-size path
  mpz_class big = (mpz_class(1) << 62) + 1;
  HGParams prm2 = make_hg_params({Rational(big), Rational(1)}, {Rational(1)}, 5);
  Rational s2(0);
  Rational cn(1);
  for (long n = 0; n < 5; ++n) {
    if (n > 0) cn *= (Rational(big) + Rational(n - 1)) / Rational(n);
    s2 += cn;
  }
  PAdic f2 = truncated_eval(SeriesKind::F, prm2, 0, 1, Rational(1), 3);
  CHECK(f2.residue(3) == rational_mod_pk(s2, 5, 3));
}

TEST_CASE("quotient of consecutive truncations is Dwork-stable") {
  HGParams prm = half_half(3);
  PAdic r1 = dwork_ratio(prm, 1, Rational(1), 4);
  PAdic r2 = dwork_ratio(prm, 2, Rational(1), 4);
  PAdic r3 = dwork_ratio(prm, 3, Rational(1), 4);
  CHECK(r1.is_unit());
  CHECK(r2.residue(1) == r1.residue(1));
  CHECK(r3.residue(2) == r2.residue(2));
  // at alpha = 0 both truncations reduce to the constant term 1
  CHECK(dwork_ratio(prm, 2, Rational(0), 3).residue(3) == 1);
}

TEST_CASE("log-quotient across truncation levels") {
  // (1/2, 1/2; 1) at p = 3, alpha = 1 is the N = 2 table family: value 0 mod 3^4
  HGParams prm = half_half(3);
  auto r = log_ratio_levels(prm, Rational(1), {4, 5}, 4);
  REQUIRE(r.size() == 2);
  CHECK(r[0] == 0);
  CHECK(r[1] == 0);
}

TEST_CASE("special value: published table rows") {
  SUBCASE("(p,N,i,j,k) = (3,2,1,1,2) -> 0") {
    auto res = special_value(half_half(3), Rational(1), 4);
    CHECK(res.residue == 0);
    CHECK(res.stable);
    CHECK(res.modulus == 81);
    for (const auto& h : res.h_unit_evidence) CHECK(h != 0);
  }
  SUBCASE("(7,3,1,1,3) -> 290") {
    HGParams prm = make_hg_params({frac(1, 3), frac(1, 3)}, {Rational(1)}, 7);
    auto res = special_value(prm, Rational(1), 4);
    CHECK(res.residue == 290);
  }
  SUBCASE("(5,4,1,1,3) -> 131") {
    HGParams prm = make_hg_params({frac(1, 4), frac(1, 4)}, {frac(3, 4)}, 5);
    auto res = special_value(prm, Rational(1), 4);
    CHECK(res.residue == 131);
  }
  SUBCASE("(13,6,2,3,6) -> 11998") {
    HGParams prm = make_hg_params({frac(1, 3), frac(1, 2)}, {Rational(1)}, 13);
    auto res = special_value(prm, Rational(1), 4);
    CHECK(res.residue == 11998);
  }
}

TEST_CASE("special value: failure modes") {
  // truncated F vanishes mod 3 at alpha = 2: no unit-root evidence
  CHECK_THROWS_AS(special_value(half_half(3), Rational(2), 2), value_undefined_error);
  // inadmissible parameters are rejected up front
  CHECK_THROWS_AS(
      special_value(make_hg_params({frac(1, 5), frac(4, 5)}, {frac(2, 5)}, 11), Rational(1), 2),
      std::invalid_argument);
  // non-integral evaluation point
  CHECK_THROWS_AS(special_value(half_half(3), frac(1, 3), 2), std::invalid_argument);
}

TEST_CASE("special value at alpha = 0 is the constant term") {
  HGParams prm = half_half(3);
  auto res = special_value(prm, Rational(0), 3);
  CHECK(res.residue == constant_D0_residue(prm, 3));
}

TEST_CASE("factorial-ratio unit check") {
  CHECK(gauss_unit_check(7, 3, 1, 1, 3) == 6);
  CHECK(gauss_unit_check(5, 2, 1, 1, 2) == 1);
  CHECK(gauss_unit_check(5, 4, 1, 1, 2) == 3);
  CHECK_THROWS_AS(gauss_unit_check(7, 4, 1, 1, 2), std::invalid_argument);  // 4 does not divide 6
  // third route: the modular stream evaluation of [F]_{<p}(1) must agree
  struct Row {
    long p, N, i, j, k;
  } rows[] = {{7, 3, 1, 1, 3}, {11, 5, 1, 2, 4}, {13, 6, 2, 3, 6}, {5, 4, 1, 2, 3}};
  for (const auto& r : rows) {
    HGParams prm = make_hg_params({frac(r.i, r.N), frac(r.j, r.N)}, {frac(r.k, r.N)}, r.p);
    PAdic f = truncated_eval(SeriesKind::F, prm, 0, 1, Rational(1), 1);
    CHECK(f.residue(1) == gauss_unit_check(r.p, r.N, r.i, r.j, r.k));
  }
}
