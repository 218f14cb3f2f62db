#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "walks/analytic.hpp"
#include "walks/enumerate.hpp"
#include "walks/recurrence.hpp"

using namespace walks;
using namespace walks::analytic;

namespace {

const Constants& C = constants();

void check_invariants(const BranchValues& v) {
  const double scale = std::max(1.0, std::pow(std::abs(v.at), 3));
  for (const cplx& y : v.values) CHECK(residual(v.at, y) <= 1e-10 * scale);
  const cplx sum = v.values[0] + v.values[1] + v.values[2];
  const cplx prod = v.values[0] * v.values[1] * v.values[2];
  CHECK(std::abs(sum) <= 1e-9 * std::max(1.0, std::abs(v.at)));
  CHECK(std::abs(prod + v.at * v.at * v.at) <= 1e-9 * scale);
}

}  // namespace

TEST_CASE("constants") {
  CHECK(std::abs(3 * C.y_c * C.y_c - C.x_c) < 1e-15);
  CHECK(std::abs(C.x_c * C.x_c * C.x_c + C.y_c * C.y_c * C.y_c - C.x_c * C.y_c) < 1e-15);
  CHECK(std::abs(C.j * C.j * C.j - 1.0) < 1e-15);
}

TEST_CASE("cubic roots") {
  for (cplx x : {cplx(0), cplx(0.3), cplx(C.x_c), cplx(-2, 1), cplx(5, -7)}) {
    const auto r = cubic_roots(x);
    for (const cplx& y : r) CHECK(residual(x, y) <= 1e-10 * std::max(1.0, std::pow(std::abs(x), 3)));
  }
  // Independent check at x = 1: y^3 - y + 1 has the real root -1.3247...
  const auto r = cubic_roots(1.0);
  bool found = false;
  for (const cplx& y : r) found = found || std::abs(y - (-1.324717957244746)) < 1e-12;
  CHECK(found);
  // At x_c the double root y_c is exact.
  const auto rc = cubic_roots(C.x_c);
  int at_yc = 0;
  for (const cplx& y : rc) at_yc += std::abs(y - C.y_c) < 1e-12;
  CHECK(at_yc == 2);
}

TEST_CASE("values at the critical points") {
  const BranchValues v = eval_branches(C.x_c);
  CHECK(std::abs(v[Branch::Xi0] - C.y_c) < 1e-9);
  CHECK(std::abs(v[Branch::Xi1] - C.y_c) < 1e-9);
  CHECK(std::abs(v[Branch::Xi2] + 2 * C.y_c) < 1e-9);

  const cplx j = C.j, j2 = C.j * C.j;
  const BranchValues a = eval_branches(j * C.x_c);
  CHECK(std::abs(a[Branch::Xi0] - j2 * C.y_c) < 1e-8);
  CHECK(std::abs(a[Branch::Xi1] + 2.0 * j2 * C.y_c) < 1e-8);
  CHECK(std::abs(a[Branch::Xi2] - j2 * C.y_c) < 1e-8);
  const BranchValues b = eval_branches(j2 * C.x_c);
  CHECK(std::abs(b[Branch::Xi0] - j * C.y_c) < 1e-8);
  CHECK(std::abs(b[Branch::Xi1] + 2.0 * j * C.y_c) < 1e-8);
  CHECK(std::abs(b[Branch::Xi2] - j * C.y_c) < 1e-8);

  CHECK(std::abs(std::sqrt(C.x_c) * closed_form(C.x_c, ClosedForm::Psi) - 1.5 * C.y_c) < 1e-12);
}

TEST_CASE("near zero the labels follow the series") {
  for (cplx x : {cplx(0.01), cplx(0, 0.01), cplx(0.005, -0.005), cplx(-0.007, 0.007)}) {
    const BranchValues v = eval_branches(x);
    CHECK(v.method == Method::SeriesNearZero);
    for (Branch b : {Branch::Xi0, Branch::Xi1, Branch::Xi2}) {
      const cplx s = series::kernel_root_series(b, 20).evaluate(x);
      CHECK(std::abs(v[b] - s) < 1e-12);
    }
    check_invariants(v);
  }
  const BranchValues z = eval_branches(0.0);
  for (const cplx& y : z.values) CHECK(y == cplx(0));
}

TEST_CASE("labels inside the disk agree with the series") {
  for (cplx x : {cplx(0.1), cplx(0.2, 0.2), cplx(-0.3, 0.1), cplx(0.05, -0.4)}) {
    const BranchValues v = eval_branches(x);
    for (Branch b : {Branch::Xi0, Branch::Xi1, Branch::Xi2}) {
      CHECK(std::abs(v[b] - series::kernel_root_series(b, 120).evaluate(x)) < 1e-9);
    }
    check_invariants(v);
  }
}

TEST_CASE("closed forms") {
  CHECK(std::abs(closed_form(0.1, ClosedForm::Xi) - series::xi_series(30).evaluate(0.1)) < 1e-12);
  CHECK(std::abs(closed_form(0.1, ClosedForm::Psi) - series::psi_series(30).evaluate(0.1)) < 1e-12);
  CHECK(std::abs(closed_form(C.x_c, ClosedForm::Xi) - C.y_c) < 1e-9);
  CHECK(closed_form(0.0, ClosedForm::Psi) == cplx(1));
  const cplx z(0.2, 0.15);
  CHECK(std::abs(closed_form(z, ClosedForm::Xi) - eval_branches(z)[Branch::Xi0]) < 1e-12);
}

TEST_CASE("cuts are rejected") {
  CHECK_THROWS_AS(eval_branches(-0.5), CutViolation);
  CHECK_THROWS_AS(eval_branches(cplx(-0.005, 1e-8)), CutViolation);
  CHECK_THROWS_AS(eval_branches(0.8), CutViolation);
  CHECK_THROWS_AS(eval_branches(C.j * 2.0), CutViolation);
  CHECK_THROWS_AS(eval_branches(C.j * C.j * 0.6), CutViolation);
  CHECK_NOTHROW(eval_branches(cplx(0.8, 1e-3)));
  CHECK_NOTHROW(eval_branches(C.j * C.x_c));
}

TEST_CASE("property: ordering on (0, x_c)") {
  for (int k = 1; k < 100; ++k) {
    const double x = C.x_c * k / 100.0;
    const BranchValues v = eval_branches(x);
    CHECK(v[Branch::Xi2].real() < 0);
    CHECK(v[Branch::Xi0].real() > 0);
    CHECK(v[Branch::Xi0].real() < v[Branch::Xi1].real());
    for (const cplx& y : v.values) CHECK(std::abs(y.imag()) < 1e-12);
  }
}

TEST_CASE("property: labels are continuous along sampled paths") {
  // Arcs and a spiral that avoid the cuts; consecutive values of one label stay
  // closer than the local root separation.
  std::vector<std::vector<cplx>> paths;
  auto arc = [&](double r, double a0, double a1) {
    std::vector<cplx> p;
    for (int k = 0; k <= 300; ++k) p.push_back(std::polar(r, a0 + (a1 - a0) * k / 300.0));
    paths.push_back(p);
  };
  arc(0.2, -3.1, 3.1);
  arc(0.5, -3.1, 3.1);
  for (double r : {0.9, 2.5}) {
    arc(r, 0.05, 2.0);
    arc(r, 2.15, 3.1);
    arc(r, -2.0, -0.05);
    arc(r, -3.1, -2.15);
  }
  std::vector<cplx> spiral;
  for (int k = 0; k < 400; ++k) spiral.push_back(std::polar(0.02 + 0.01 * k, 0.4 + 0.002 * k));
  paths.push_back(spiral);
  for (const auto& path : paths) {
    std::optional<BranchValues> prev;
    for (const cplx& x : path) {
      const BranchValues v = eval_branches(x);
      check_invariants(v);
      if (prev) {
        const auto r = cubic_roots(x);
        const double sep = std::min({std::abs(r[0] - r[1]), std::abs(r[0] - r[2]), std::abs(r[1] - r[2])});
        for (std::size_t b = 0; b < 3; ++b) CHECK(std::abs(v.values[b] - prev->values[b]) < sep);
      }
      prev = v;
    }
  }
}

TEST_CASE("singularity survey matches the expected structure") {
  const auto survey = singularity_survey();
  REQUIRE(survey.size() == 12);
  const auto cands = singular_candidates();
  // Rows: xi0, xi1, xi2; columns: 0, x_c, j x_c, j^2 x_c.
  const analytic::Verdict S = analytic::Verdict::Singular, R = analytic::Verdict::Regular;
  const analytic::Verdict expect[3][4] = {{R, S, S, S}, {S, S, R, R}, {S, R, S, S}};
  for (const auto& e : survey) {
    const auto b = static_cast<std::size_t>(e.branch);
    std::size_t c = 0;
    while (cands[c] != e.candidate) ++c;
    CAPTURE(series::to_string(e.branch));
    CAPTURE(c);
    CHECK(e.verdict == expect[b][c]);
  }
  const SingularFit f = fit_singularity(Branch::Xi0, C.x_c);
  CHECK(std::abs(f.exponent - 0.5) < 0.01);
  CHECK(std::abs(f.slope - 1 / std::sqrt(3.0)) < 1e-3);
  CHECK(std::abs(f.value - C.y_c) < 1e-9);
}

TEST_CASE("inconclusive fits are reported as such") {
  Tolerances tight = default_tolerances();
  tight.exponent_tol = 1e-9;
  tight.regular_exponent = 5;
  CHECK(classify(fit_singularity(Branch::Xi0, C.x_c, tight), tight) == analytic::Verdict::Inconclusive);
}

TEST_CASE("dominant root") {
  CHECK(dominant_root_check(C.x_c));
  CHECK(dominant_root_check(1.0));
  CHECK_THROWS_AS(dominant_root_check(0.0), std::domain_error);
  const SweepResult r = dominant_root_sweep(10000, 1234);
  CHECK(r.points == 10000);
  CHECK(r.failures == 0);
}

TEST_CASE("G' majorant") {
  const GPrimeBound g = gprime_bound_check();
  CHECK(g.bound_value < 0.16);
  CHECK(g.threshold > 0.23);
  CHECK(g.threshold < 0.24);
  CHECK(std::floor(g.threshold * 100) == 23);
  CHECK(g.passes);
  // First term 6 y_c^5 is a lower bound; the sum converges geometrically.
  CHECK(g.bound_value > 6 * std::pow(C.y_c, 5));
}

TEST_CASE("singularity chain") {
  const SingularityChain ch = singularity_chain_rec2();
  CHECK(std::abs(ch.points[1] - (-2 * C.y_c)) < 1e-9);
  CHECK(std::round(ch.points[1].real() * 100) == -84);
  CHECK(std::round(ch.points[2].real() * 100) == -26);
  CHECK(std::round(ch.points[2].imag() * 100) == -102);
  CHECK(std::round(ch.points[3].real() * 100) == 92);
  CHECK(std::round(ch.points[3].imag() * 100) == -102);
  CHECK(ch.modulus_x3 > 1.33);
  CHECK(ch.x1_roots_contain_x0);
}

TEST_CASE("radius estimates") {
  std::vector<BigInt> geo;
  for (unsigned m = 0; m <= 60; ++m) {
    BigInt v;
    mpz_ui_pow_ui(v.get_mpz_t(), 4, m);
    geo.push_back(v);
  }
  const RadiusEstimate g4 = radius_estimate(geo, 1);
  CHECK(std::abs(g4.estimate - 0.25) < 1e-6);
  CHECK(g4.index == 60);

  CHECK_THROWS_AS(radius_estimate(std::vector<BigInt>(30, 1), 5), std::invalid_argument);

  auto G = axis_sequence(count_quadrant(stepsets::knight(), {1, 1}, 295));
  G.resize(301);
  const RadiusEstimate rg = radius_estimate(G, 3);
  CHECK(rg.index == 300);
  CHECK(std::abs(rg.estimate / C.x_c - 1) < 0.05);

  const RadiusEstimate rf = radius_estimate(recur::f_sequence(300), 1);
  CHECK(std::abs(rf.estimate / C.x_c - 1) < 0.05);
}
