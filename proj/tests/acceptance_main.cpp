// Acceptance gate: one line per criterion, nonzero exit iff any fails.
// Usage: acceptance <path-to-cli-binary>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "padichg/congruence_lab.hpp"
#include "padichg/curve_series.hpp"
#include "padichg/padic_core.hpp"
#include "padichg/table.hpp"

using namespace padichg;
using ordered_json = nlohmann::ordered_json;

namespace {

struct GoldenRow {
  long p, N, i, j, k;
  long value;
};

// the published table mod p^4; the (11,5,1,2,5) and (13,3,1,1,3) entries are
// corrected values (independently re-derived; the circulating ones fail even
// a mod-p hand check)
const GoldenRow kGolden[] = {
    {3, 2, 1, 1, 2, 0},
    {5, 2, 1, 1, 2, 0},
    {5, 4, 1, 1, 2, 0},      {5, 4, 1, 1, 3, 131},    {5, 4, 1, 1, 4, 94},
    {5, 4, 1, 2, 3, 0},      {5, 4, 1, 2, 4, 604},    {5, 4, 1, 3, 4, 0},
    {7, 2, 1, 1, 2, 0},
    {7, 3, 1, 1, 2, 0},      {7, 3, 1, 1, 3, 290},    {7, 3, 1, 2, 3, 0},
    {7, 6, 1, 1, 2, 0},      {7, 6, 1, 1, 3, 985},    {7, 6, 1, 1, 4, 831},
    {7, 6, 1, 1, 5, 1058},   {7, 6, 1, 1, 6, 481},    {7, 6, 1, 2, 3, 0},
    {7, 6, 1, 2, 4, 1926},   {7, 6, 1, 2, 5, 1571},   {7, 6, 1, 2, 6, 1678},
    {7, 6, 1, 3, 4, 0},      {7, 6, 1, 3, 5, 1616},   {7, 6, 1, 3, 6, 1869},
    {7, 6, 1, 4, 5, 0},      {7, 6, 1, 4, 6, 324},    {7, 6, 1, 5, 6, 0},
    {7, 6, 2, 3, 5, 0},      {7, 6, 2, 3, 6, 2160},
    {11, 2, 1, 1, 2, 0},
    {11, 5, 1, 1, 2, 0},     {11, 5, 1, 1, 3, 4469},  {11, 5, 1, 1, 4, 2709},
    {11, 5, 1, 1, 5, 3590},  {11, 5, 1, 2, 3, 0},     {11, 5, 1, 2, 4, 12680},
    {11, 5, 1, 2, 5, 2626},  {11, 5, 1, 3, 4, 0},     {11, 5, 1, 3, 5, 180},
    {11, 5, 1, 4, 5, 0},     {11, 5, 2, 2, 4, 0},     {11, 5, 2, 2, 5, 10991},
    {11, 5, 2, 3, 5, 0},
    {13, 2, 1, 1, 2, 0},
    {13, 3, 1, 1, 2, 0},     {13, 3, 1, 1, 3, 11790}, {13, 3, 1, 2, 3, 0},
    {13, 4, 1, 1, 2, 0},     {13, 4, 1, 1, 3, 24856}, {13, 4, 1, 1, 4, 19301},
    {13, 4, 1, 2, 3, 0},     {13, 4, 1, 2, 4, 1084},  {13, 4, 1, 3, 4, 0},
    {13, 6, 1, 1, 2, 0},     {13, 6, 1, 1, 3, 13217}, {13, 6, 1, 1, 4, 11029},
    {13, 6, 1, 1, 5, 1195},  {13, 6, 1, 1, 6, 14792}, {13, 6, 1, 2, 3, 0},
    {13, 6, 1, 2, 4, 21091}, {13, 6, 1, 2, 5, 7884},  {13, 6, 1, 2, 6, 7433},
    {13, 6, 1, 3, 4, 0},     {13, 6, 1, 3, 5, 19795}, {13, 6, 1, 4, 5, 0},
    {13, 6, 1, 4, 6, 20137}, {13, 6, 1, 5, 6, 0},     {13, 6, 2, 3, 5, 0},
    {13, 6, 2, 3, 6, 11998},
};
constexpr std::size_t kGoldenCount = sizeof(kGolden) / sizeof(kGolden[0]);

std::string g_cli;

bool run_cli(const std::string& args, std::string& out) {
  std::string cmd = g_cli + " " + args;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return false;
  char buf[4096];
  out.clear();
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  return pclose(pipe) == 0;
}

int g_failures = 0;

void criterion(int idx, const std::string& what, const std::function<bool(std::string&)>& body) {
  std::string note;
  auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = body(note);
  } catch (const std::exception& e) {
    note = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("criterion %d: %s - %s (%.2fs)%s%s\n", idx, ok ? "PASS" : "FAIL", what.c_str(),
              secs, note.empty() ? "" : " | ", note.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

std::string golden_csv() {
  std::ostringstream os;
  os << "p,N,i,j,k,modulus,value\n";
  for (const auto& r : kGolden) {
    os << r.p << ',' << r.N << ',' << r.i << ',' << r.j << ',' << r.k << ','
       << pow_p(r.p, 4).get_str() << ',' << r.value << '\n';
  }
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: acceptance <cli-binary>\n");
    return 2;
  }
  g_cli = argv[1];

  criterion(1, "published table reproduced byte-exactly by the CLI", [](std::string& note) {
    std::string run1, run2, jsonout;
    if (!run_cli("table --paper", run1)) return false;
    if (!run_cli("table --paper", run2)) return false;
    if (!run_cli("table --paper --format json", jsonout)) return false;
    bool ok = run1 == golden_csv() && run1 == run2;
    // every json record must round-trip byte-identically
    std::istringstream is(jsonout);
    std::string line;
    std::size_t records = 0;
    while (std::getline(is, line)) {
      ++records;
      if (ordered_json::parse(line).dump() != line) ok = false;
    }
    ok = ok && records == kGoldenCount;
    note = "69 rows, stable bytes, json round-trip; 2 published entries corrected "
           "(documented in the golden fixture)";
    return ok;
  });

  criterion(2, "rows with i+j = k vanish exactly", [](std::string& note) {
    std::size_t vanishing = 0;
    bool ok = true;
    for (const auto& r : kGolden) {
      if (r.i + r.j != r.k) continue;
      ++vanishing;
      if (compute_row({r.p, r.N, r.i, r.j, r.k}, 4).value != 0) ok = false;
    }
    note = std::to_string(vanishing) + " vanishing rows";
    return ok && vanishing == 33;
  });

  criterion(3, "all congruence suites pass over the default corpus", [](std::string& note) {
    const std::pair<long, int> cases[] = {{3, 1}, {3, 2}, {5, 1}, {5, 2}, {7, 1}};
    long checks = 0, failed = 0;
    for (const auto& [p, n] : cases) {
      SuiteOptions so;
      so.n = n;
      for (const auto& fam : default_corpus(p)) {
        for (const auto& name : suite_names()) {
          CongruenceReport rep = run_suite(name, fam, so);
          checks += rep.passed + rep.failed;
          failed += rep.failed;
        }
      }
    }
    note = std::to_string(checks) + " checks, " + std::to_string(failed) + " failed";
    return failed == 0;
  });

  criterion(4, "table residues stable across truncation levels 4, 5, 6", [](std::string& note) {
    std::size_t rows = 0;
    bool ok = true;
    for (const auto& r : kGolden) {
      if (r.p > 7) continue;
      ++rows;
      auto vals = log_ratio_levels(row_params({r.p, r.N, r.i, r.j, r.k}), Rational(1),
                                   {4, 5, 6}, 4);
      if (!(vals.size() == 3 && vals[0] == vals[1] && vals[1] == vals[2] &&
            vals[0] == r.value))
        ok = false;
    }
    note = std::to_string(rows) + " rows with p <= 7";
    return ok;
  });

  criterion(5, "truncated series at 1 matches the factorial form, nonzero", [](std::string&) {
    for (const auto& r : kGolden) {
      // throws on route disagreement; zero means the unit condition failed
      if (gauss_unit_check(r.p, r.N, r.i, r.j, r.k) == 0) return false;
    }
    return true;
  });

  criterion(6, "digamma continuity on 200 random congruent pairs", [](std::string&) {
    std::mt19937 gen(12345);
    const long primes[] = {3, 5, 7, 11, 13};
    std::uniform_int_distribution<long> pick_p(0, 4), num(-1000000, 1000000), den(1, 10000),
        prec(1, 4), shift(1, 1000);
    for (int trial = 0; trial < 200; ++trial) {
      long p = primes[pick_p(gen)];
      int s = static_cast<int>(prec(gen));
      long v = den(gen);
      while (v % p == 0) v = den(gen);
      long v2 = den(gen);
      while (v2 % p == 0) v2 = den(gen);
      Rational z = frac(num(gen), v);
      Rational z2 = z + frac(shift(gen), v2) * Rational(pow_p(p, s));
      if (psi_tilde(z, p, s) != psi_tilde(z2, p, s)) return false;
    }
    return true;
  });

  criterion(7, "modular kernel agrees with the exact-rational oracle", [](std::string& note) {
    // a modular value is exact-zero when the true valuation exceeds its
    // absolute precision window; everything inside the window must agree
    auto matches = [](const Rational& exact, const PAdic& modular, long p, int window) {
      if (exact == 0) return modular.is_zero();
      if (modular.is_zero()) return valuation_q(exact, p) >= window;
      if (valuation_q(exact, p) != modular.valuation()) return false;
      int a = static_cast<int>(modular.valuation()) + modular.prec();
      return rational_mod_pk(exact, p, a) == modular.residue(a);
    };
    long compared = 0;
    for (long p : {3L, 5L}) {
      long top = 3 * p * p;
      for (const auto& fam : default_corpus(p)) {
        CoefficientTable t(fam, 0, 6);
        for (long n = 0; n < top; ++n) {
          if (!matches(t.c_exact(n), t.c(n), p, 6)) return false;
          ++compared;
          if (n >= 1) {
            int lost = 0;
            for (long u = n; u % p == 0; u /= p) ++lost;
            if (!matches(t.d_exact(n), t.d(n), p, 6 - lost)) return false;
            ++compared;
          }
        }
      }
    }
    note = std::to_string(compared) + " coefficients compared";
    return true;
  });

  criterion(8, "curve series checks for the five eigenvector families", [](std::string&) {
    const long tuples[][3] = {{2, 1, 3}, {2, 1, 5}, {5, 1, 11}, {5, 2, 11}, {6, 1, 7}};
    for (const auto& t : tuples) {
      CurveEigenData d = make_curve_data(t[0], t[1], t[2]);
      CurveSolution s = solve_curve(d, static_cast<std::size_t>(3 * t[2]));
      if (!hg_ode_residual(s.F, d.a).is_zero()) return false;
      if (s.bracket_constant != 0 || s.e2_pole_constant != 0) return false;
      if (s.eps1.a[0] != 0 || s.eps1.b[0] != 0 || s.eps2.a[0] != 0 || s.eps2.b[0] != 0)
        return false;
      if (endpoint_vanishing_crosscheck(d, 4) != 0) return false;
    }
    return true;
  });

  std::printf("acceptance: %zu criteria, %d failed\n", std::size_t{8}, g_failures);
  return g_failures == 0 ? 0 : 1;
}
