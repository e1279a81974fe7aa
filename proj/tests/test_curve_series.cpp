#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "padichg/curve_series.hpp"
#include "padichg/padic_core.hpp"

using namespace padichg;

namespace {

QSeries qs(const std::vector<Rational>& v) {
  QSeries s(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) s.at(k) = v[k];
  return s;
}

Rational fr(long n, long d) { return frac(n, d); }

void check_prefix(const QSeries& s, const std::vector<Rational>& want) {
  REQUIRE(s.terms() >= want.size());
  for (std::size_t k = 0; k < want.size(); ++k) {
    CAPTURE(k);
    CHECK(s[k] == want[k]);
  }
}

// Every nonzero combined coefficient of a Psi-pair must be a p-adic integer,
// even though the two rational parts separately have p in the denominator.
void check_view_integral(const PsiSeries& s, const CurveEigenData& d) {
  auto view = lambda_view(s, d, 6);
  for (std::size_t k = 0; k < view.size(); ++k) {
    CAPTURE(k);
    if (!view[k].is_zero()) CHECK(view[k].valuation() >= 0);
  }
}

} // namespace

TEST_CASE("qseries arithmetic") {
  QSeries f = qs({fr(1, 1), fr(2, 1), fr(3, 1)});
  QSeries g = qs({fr(0, 1), fr(1, 1), fr(-1, 1)});

  SUBCASE("add sub scale") {
    check_prefix(f + g, {fr(1, 1), fr(3, 1), fr(2, 1)});
    check_prefix(f - g, {fr(1, 1), fr(1, 1), fr(4, 1)});
    check_prefix(f.scaled(fr(1, 2)), {fr(1, 2), fr(1, 1), fr(3, 2)});
  }
  SUBCASE("mul truncates to shorter factor") {
    QSeries h = f * g;
    CHECK(h.terms() == 3);
    check_prefix(h, {fr(0, 1), fr(1, 1), fr(1, 1)});
  }
  SUBCASE("reciprocal") {
    QSeries r = f.reciprocal();
    check_prefix(f * r, {fr(1, 1), fr(0, 1), fr(0, 1)});
    CHECK_THROWS_AS(g.reciprocal(), std::invalid_argument);
  }
  SUBCASE("calculus") {
    check_prefix(f.derivative(), {fr(2, 1), fr(6, 1)});
    check_prefix(f.integral(fr(5, 1)), {fr(5, 1), fr(1, 1), fr(1, 1), fr(1, 1)});
    check_prefix(g.shift_down(), {fr(1, 1), fr(-1, 1)});
    CHECK_THROWS_AS(f.shift_down(), internal_error);
  }
  SUBCASE("substitution and truncation") {
    QSeries fp = f.substitute_power(3, 7);
    check_prefix(fp, {fr(1, 1), fr(0, 1), fr(0, 1), fr(2, 1), fr(0, 1), fr(0, 1), fr(3, 1)});
    CHECK(f.truncated(2).terms() == 2);
    CHECK(qs({fr(0, 1), fr(0, 1)}).is_zero());
    CHECK_FALSE(g.is_zero());
  }
}

TEST_CASE("hypergeometric lambda series and its differential equation") {
  QSeries f = hg_series_lambda(fr(1, 2), 8);
  check_prefix(f, {fr(1, 1), fr(1, 4), fr(9, 64), fr(25, 256), fr(1225, 16384), fr(3969, 65536)});
  CHECK(hg_ode_residual(f, fr(1, 2)).is_zero());

  QSeries f3 = hg_series_lambda(fr(2, 3), 8);
  CHECK(hg_ode_residual(f3, fr(2, 3)).is_zero());
  // perturbing one coefficient must break the equation
  QSeries broken = f3;
  broken.at(4) += fr(1, 1);
  CHECK_FALSE(hg_ode_residual(broken, fr(2, 3)).is_zero());
}

TEST_CASE("curve data: conjugate index and sign") {
  // p*j == i mod N, sign = (-1)^((p*j - i)/N)
  CurveEigenData d = make_curve_data(2, 1, 3);
  CHECK(d.j == 1);
  CHECK(d.sign == -1);
  CHECK(d.a == fr(1, 2));
  CHECK(d.aj == fr(1, 2));

  CHECK(make_curve_data(2, 1, 5).sign == 1);
  CHECK(make_curve_data(5, 1, 11).j == 1);
  CHECK(make_curve_data(5, 1, 11).sign == 1);
  CHECK(make_curve_data(5, 2, 11).j == 2);
  CHECK(make_curve_data(5, 2, 11).sign == 1);
  CurveEigenData d67 = make_curve_data(6, 1, 7);
  CHECK(d67.j == 1);
  CHECK(d67.sign == -1);
  CHECK(d67.a == fr(5, 6));

  CHECK_THROWS_AS(make_curve_data(1, 1, 3), std::invalid_argument);  // N < 2
  CHECK_THROWS_AS(make_curve_data(4, 4, 3), std::invalid_argument);  // i >= N
  CHECK_THROWS_AS(make_curve_data(4, 1, 2), std::invalid_argument);  // p = 2
  CHECK_THROWS_AS(make_curve_data(4, 1, 9), std::invalid_argument);  // composite
  CHECK_THROWS_AS(make_curve_data(3, 1, 3), std::invalid_argument);  // p | N
}

TEST_CASE("frozen solution prefix for N=2 i=1 p=3") {
  CurveEigenData d = make_curve_data(2, 1, 3);
  CurveSolution s = solve_curve(d, 12);
  CHECK(s.terms == 12);

  check_prefix(s.E1, {fr(0, 1), fr(1, 1), fr(5, 8), fr(51, 64), fr(381, 1024), fr(25609, 81920),
                      fr(62775, 131072), fr(1755841, 7340032)});
  check_prefix(s.G.a, {fr(0, 1), fr(1, 2), fr(13, 64), fr(-3, 64), fr(2701, 32768),
                       fr(5057, 81920), fr(-9927, 524288), fr(146749, 3670016)});
  check_prefix(s.E2.a, {fr(0, 1), fr(1, 1), fr(9, 16), fr(97, 192), fr(1929, 4096),
                        fr(129419, 409600), fr(1009661, 3932160), fr(80561013, 256901120)});
  check_prefix(s.E2.b, {fr(0, 1), fr(0, 1), fr(0, 1), fr(1, 3), fr(0, 1), fr(0, 1), fr(5, 24),
                        fr(0, 1)});
  check_prefix(s.eps1.a, {fr(0, 1), fr(1, 1), fr(5, 8), fr(47, 64), fr(727, 3072),
                          fr(60967, 245760), fr(1328223, 3276800), fr(62745383, 550502400)});
  check_prefix(s.eps1.b, {fr(0, 1), fr(0, 1), fr(0, 1), fr(0, 1), fr(1, 12), fr(1, 96),
                          fr(1, 256), fr(665, 12288)});
  check_prefix(s.eps2.a, {fr(0, 1), fr(0, 1), fr(-1, 2), fr(3, 32), fr(5, 384), fr(51, 8192),
                          fr(171493, 2457600), fr(1582729, 39321600)});
  check_prefix(s.eps2.b, {fr(0, 1), fr(0, 1), fr(0, 1), fr(0, 1), fr(-1, 6), fr(1, 8),
                          fr(7, 384), fr(-149, 1536)});

  // the Psi-part of G is the constant 1, and F solves its equation
  CHECK(s.G.b.terms() == 12);
  check_prefix(s.G.b, {fr(1, 1), fr(0, 1), fr(0, 1)});
  CHECK(hg_ode_residual(s.F, d.a).is_zero());
}

TEST_CASE("structural facts of the solution") {
  CurveEigenData d = make_curve_data(2, 1, 3);
  CurveSolution s = solve_curve(d, 12);

  // E1 = lambda + O(lambda^2); sign enters at index p
  CHECK(s.E1[0] == 0);
  CHECK(s.E1[1] == 1);
  CHECK(s.E1[3] == fr(51, 64));
  // first post-constant coefficient of G comes out as 1/2
  CHECK(s.G.a[1] == fr(1, 2));
  // both eigenvector corrections vanish at lambda = 0
  CHECK(s.eps1.a[0] == 0);
  CHECK(s.eps1.b[0] == 0);
  CHECK(s.eps2.a[0] == 0);
  CHECK(s.eps2.b[0] == 0);
}

TEST_CASE("integrality: plain for E1 and G, combined view for the rest") {
  const long tuples[][3] = {{2, 1, 3}, {2, 1, 5}, {6, 1, 7}};
  for (auto& t : tuples) {
    CAPTURE(t[0]);
    CAPTURE(t[2]);
    CurveEigenData d = make_curve_data(t[0], t[1], t[2]);
    CurveSolution s = solve_curve(d, static_cast<std::size_t>(3 * t[2]));
    for (std::size_t k = 0; k < s.terms; ++k) {
      CAPTURE(k);
      CHECK(is_p_integral(s.E1[k], d.p));
      CHECK(is_p_integral(s.G.a[k], d.p));
    }
    check_view_integral(s.E2, d);
    check_view_integral(s.eps1, d);
    check_view_integral(s.eps2, d);
  }

  // the rational parts alone are NOT integral: the Psi pairing is essential
  CurveEigenData d3 = make_curve_data(2, 1, 3);
  CurveSolution s3 = solve_curve(d3, 12);
  CHECK_FALSE(is_p_integral(s3.E2.b[3], 3));
  CHECK_FALSE(is_p_integral(s3.E2.a[3], 3));
  CHECK_FALSE(is_p_integral(s3.eps1.b[4], 3));
  CHECK_FALSE(is_p_integral(s3.eps2.a[4], 3));
}

TEST_CASE("constant term of G matches the digamma construction") {
  CurveEigenData d3 = make_curve_data(2, 1, 3);
  CHECK(curve_psi_residue(d3, 2) == 8);
  CurveSolution s3 = solve_curve(d3, 6);
  auto view = lambda_view(s3.G, d3, 2);
  CHECK(view[0].residue(2) == 8);

  // for a = aj = 1/2 the constant is 2 * psi~_p(1/2)
  CurveEigenData d5 = make_curve_data(2, 1, 5);
  mpz_class expect = 2 * psi_tilde(fr(1, 2), 5, 3);
  mpz_class got = curve_psi_residue(d5, 3);
  CHECK(got == expect % mpz_class(125));
}

TEST_CASE("value at the end of the disc vanishes") {
  CHECK(endpoint_vanishing_crosscheck(make_curve_data(2, 1, 3), 4) == 0);
  CHECK(endpoint_vanishing_crosscheck(make_curve_data(6, 1, 7), 4) == 0);
}

TEST_CASE("lambda view handles zero coefficients and precision") {
  CurveEigenData d = make_curve_data(2, 1, 3);
  CurveSolution s = solve_curve(d, 8);
  auto ve1 = lambda_view(s.E1, 3, 4);
  CHECK(ve1.size() == 8);
  CHECK(ve1[0].is_zero());
  CHECK(ve1[1].residue(4) == 1);
  // 5/8 mod 81: 8^{-1} = 71, 5*71 = 355 = 4*81 + 31
  CHECK(ve1[2].residue(4) == 31);
}
