#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "walks/enumerate.hpp"
#include "walks/identities.hpp"
#include "walks/recurrence.hpp"

using namespace walks;
using namespace walks::series;

namespace {

USeries x_series(int order) { return USeries::monomial(1, 1, order); }

USeries from_ints(std::vector<long> c, int order) {
  std::vector<Rational> r;
  for (long v : c) r.emplace_back(v);
  return USeries(std::move(r), order);
}

void check_zero_to(const USeries& s, int N) {
  REQUIRE(s.order() >= N);
  for (int k = 0; k <= N; ++k) {
    CAPTURE(k);
    CHECK(s[k] == 0);
  }
}

void check_zero_to(const SqrtSeries& s, int P) {
  REQUIRE(s.precision() >= P);
  for (int e = 0; e <= P; ++e) {
    CAPTURE(e);
    CHECK((e % 2 == 0 ? s.even()[e / 2] : s.odd()[e / 2]) == 0);
  }
}

}  // namespace

TEST_CASE("order bookkeeping") {
  const USeries a = from_ints({1, 2, 3}, 5);
  const USeries b = from_ints({0, 0, 1}, 3);
  CHECK((a + b).order() == 3);
  CHECK((a * b).order() == 3);  // min(5 + 2, 3 + 0)
  CHECK((b * b).order() == 5);  // min(3 + 2, 3 + 2)
  CHECK(a.valuation() == 0);
  CHECK(b.valuation() == 2);
  CHECK(USeries::zero(4).valuation() == 5);
  CHECK_THROWS_AS(b[4], TruncationError);
  CHECK(b[-1] == 0);
  CHECK(a.shifted(2).order() == 7);
  CHECK(a.shifted(2)[3] == 2);
  CHECK(a.truncated(1).order() == 1);
}

TEST_CASE("composition") {
  const USeries f = from_ints({3, 1, 4, 1, 5, 9, 2, 6}, 7);
  const USeries id = compose(f, x_series(7));
  CHECK(id.order() == 7);
  for (int k = 0; k <= 7; ++k) CHECK(id[k] == f[k]);

  const USeries xi = xi_series(9);
  const USeries xx = compose(xi, xi);
  REQUIRE(xx.order() >= 9);
  for (int k = 0; k <= 9; ++k) CHECK(xx[k] == (k == 4 ? 1 : k == 7 ? 2 : 0));

  CHECK_THROWS_AS(compose(f, from_ints({1, 1}, 3)), std::domain_error);
}

TEST_CASE("reciprocal and sqrt1m") {
  const int N = 24;
  const USeries u = USeries::monomial(2, 4, N);
  const USeries inv = reciprocal(sqrt1m(u));
  REQUIRE(inv.order() >= N);
  // 1/sqrt(1 - 4t^2) = sum C(2k, k) t^{2k}.
  for (int k = 0; k <= N; ++k) CHECK(inv[k] == (k % 2 == 0 ? Rational(binomial(k, k / 2)) : Rational(0)));
  const USeries sq = sqrt1m(from_ints({0, 1}, 10));
  const USeries back = sq * sq;
  for (int k = 0; k <= 10; ++k) CHECK(back[k] == (k == 0 ? 1 : k == 1 ? -1 : 0));
  CHECK_THROWS_AS(reciprocal(from_ints({0, 1}, 4)), std::domain_error);
  CHECK_THROWS_AS(sqrt1m(from_ints({1}, 4)), std::domain_error);
}

TEST_CASE("sqrt series arithmetic") {
  const SqrtSeries sx(USeries::zero(5), USeries::constant(1, 5));  // sqrt(x)
  const SqrtSeries sq = sx * sx;
  CHECK(sq.even()[1] == 1);
  CHECK(sq.odd()[0] == 0);
  const SqrtSeries one_plus(USeries::constant(1, 6), USeries::constant(1, 6));  // 1 + sqrt(x)
  const SqrtSeries prod = one_plus * reciprocal(one_plus);
  for (int e = 0; e <= prod.precision(); ++e) CHECK((e % 2 == 0 ? prod.even()[e / 2] : prod.odd()[e / 2]) == (e == 0 ? 1 : 0));
  CHECK(std::abs(one_plus.evaluate(0.25) - 1.5) < 1e-15);
}

TEST_CASE("xi coefficients") {
  const USeries xi = xi_series(17);
  const std::vector<std::pair<int, long>> expect = {{2, 1}, {5, 1}, {8, 3}, {11, 12}, {14, 55}, {17, 273}};
  for (int k = 0; k <= 17; ++k) {
    long v = 0;
    for (auto [e, c] : expect)
      if (e == k) v = c;
    CHECK(xi[k] == v);
  }
  for (int N : {10, 30, 45}) {
    const USeries z = xi_series(N);
    check_zero_to(x_series(N) * z - USeries::monomial(3, 1, N) - z * z * z, N);
  }
}

TEST_CASE("psi coefficients") {
  const USeries psi = psi_series(30);
  CHECK(psi[0] == 1);
  CHECK(psi[3] == Rational(-3, 8));
  CHECK(psi[6] == Rational(-105, 128));
  for (int k = 1; k <= 30; ++k) {
    if (k % 3 != 0) CHECK(psi[k] == 0);
    CHECK(-psi[k] >= 0);
  }
}

TEST_CASE("kernel roots") {
  const int N = 30;
  const SqrtSeries r0 = kernel_root_series(Branch::Xi0, N);
  const SqrtSeries r1 = kernel_root_series(Branch::Xi1, N);
  const SqrtSeries r2 = kernel_root_series(Branch::Xi2, N);

  // xi_1 = sqrt(x) - x^2/2 - (3/8) x^{7/2} - x^5/2 - ...
  CHECK(r1.odd()[0] == 1);
  CHECK(r1.even()[2] == Rational(-1, 2));
  CHECK(r1.odd()[3] == Rational(-3, 8));
  CHECK(r1.even()[5] == Rational(-1, 2));

  const SqrtSeries e1 = r0 + r1 + r2;
  const SqrtSeries e2 = r0 * r1 + r0 * r2 + r1 * r2;
  const SqrtSeries e3 = r0 * r1 * r2;
  const SqrtSeries x = SqrtSeries::from_even(x_series(N));
  const SqrtSeries x3 = SqrtSeries::from_even(USeries::monomial(3, 1, N));
  const int P = 2 * N + 1;
  check_zero_to(e1.truncated(P), P);
  check_zero_to((e2 + x).truncated(P), P);
  check_zero_to((e3 + x3).truncated(P), P);

  for (const SqrtSeries& r : {r0, r1, r2}) {
    const SqrtSeries k = x3 + r * r * r - x * r;
    check_zero_to(k, std::min(k.precision(), P));
    CHECK(k.precision() >= 2 * N + 1);
  }
}

TEST_CASE("iterated G agrees with the walk counts") {
  const USeries g = g_series_iterated(60);
  const auto ax = axis_sequence(count_quadrant(stepsets::knight(), {1, 1}, 55));
  REQUIRE(g.order() >= 60);
  for (int m = 0; m <= 60; ++m) {
    CAPTURE(m);
    CHECK(g[m] == Rational(ax[static_cast<std::size_t>(m)]));
    CHECK(g[m] >= 0);
  }
  const std::vector<std::pair<int, long>> head = {{6, 1}, {9, 2}, {12, 6}, {15, 24}};
  for (auto [e, c] : head) CHECK(g[e] == c);

  // The first summand x^2 xi^2 agrees with G below x^12.
  const USeries xi = xi_series(20);
  const USeries first = (xi * xi).shifted(2);
  for (int m = 0; m < 12; ++m) CHECK(first[m] == g[m]);
  CHECK(first[12] != g[12]);
}

TEST_CASE("iterates of xi at least double their valuation") {
  const int N = 200;
  const USeries xi = xi_series(N);
  USeries cur = x_series(N);
  for (int i = 0; i < 6; ++i) {
    const USeries next = compose(xi, cur).truncated(N);
    if (next.valuation() > N) break;
    CHECK(next.valuation() >= 2 * cur.valuation());
    cur = next;
  }
}

TEST_CASE("R(x, y) expansion") {
  const BivSeries r = r_series(12);
  for (int i = 0; i <= 12; ++i) {
    for (int j = 0; i + j <= 12; ++j) {
      // xy(1+y)/(1-x) gives x^{a+1} y and x^{a+1} y^2; the other half is symmetric.
      const long expect = (i >= 1 && (j == 1 || j == 2)) + (j >= 1 && (i == 1 || i == 2));
      CAPTURE(i);
      CAPTURE(j);
      CHECK(r.at(i, j) == expect);
      CHECK(r.at(i, j) == r.at(j, i));
    }
  }
  CHECK(r.at(1, 1) == 2);
  CHECK_THROWS_AS(r.at(7, 6), TruncationError);
}

TEST_CASE("bivariate series") {
  const BivSeries k = kernel_polynomial(6);
  CHECK(k.at(1, 1) == 1);
  CHECK(k.at(3, 0) == -1);
  CHECK(k.at(0, 3) == -1);
  CHECK(k.valuation() == 2);
  CHECK((k * k).degree() == 8);  // min(6 + 2, 6 + 2)
  CHECK((k * k).at(2, 2) == 1);
  CHECK(k.transposed().at(3, 0) == -1);
  const USeries y = xi_series(12);
  check_zero_to(kernel_polynomial(12).substitute_y(y), 12);
}

TEST_CASE("identities hold") {
  CHECK(verify_identity(Identity::Main, 30).holds);
  CHECK(verify_identity(Identity::KnightKernel, 14).holds);
  CHECK(verify_identity(Identity::Diagonal, 16).holds);
  CHECK(verify_identity(Identity::Main2, 24, Branch::Xi0).holds);
  CHECK(verify_identity(Identity::Main2, 20, Branch::Xi1).holds);
  CHECK(verify_identity(Identity::Main2, 20, Branch::Xi2).holds);
  const auto r = verify_identity(Identity::Main, 30);
  CHECK(r.terms_checked == 31);
  CHECK_FALSE(r.first_failure.has_value());
}

TEST_CASE("diagonal sides") {
  const DiagonalSides d = diagonal_sides(16);
  const std::vector<long> q = {1, 2, 4, 12, 36, 120, 408};
  for (int k = 0; k <= 16; ++k) {
    const long expect = (k % 2 == 0 && k >= 4) ? q[static_cast<std::size_t>(k / 2 - 2)] : 0;
    CHECK(d.lhs[k] == expect);
    CHECK(d.rhs[k] == expect);
  }
}

TEST_CASE("fault injection is caught at the perturbed term") {
  {
    IdentityInputs in;
    std::vector<Rational> c = knight_g_series(30).coeffs();
    c.resize(31);
    c[9] += 1;
    in.g = USeries(c, 30);
    const auto r = verify_identity(Identity::Main, 30, Branch::Xi0, in);
    CHECK_FALSE(r.holds);
    REQUIRE(r.first_failure);
    CHECK(r.first_failure->term.to_string() == "x^9");
  }
  {
    // A perturbation at Q_{a,b} first shows at x^{a+1} y^{b+1}.
    std::map<std::pair<int, int>, Rational> q;
    const BivSeries base = knight_q_series(12);
    for (int i = 0; i <= 12; ++i)
      for (int j = 0; i + j <= 12; ++j) q[{i, j}] = base.at(i, j);
    q[{4, 1}] += 1;
    IdentityInputs in;
    in.q = BivSeries(q, 12);
    const auto r = verify_identity(Identity::KnightKernel, 14, Branch::Xi0, in);
    REQUIRE(r.first_failure);
    CHECK(r.first_failure->term == Term{Term::Kind::XY, 5, 2});
  }
  {
    IdentityInputs in;
    const BivSeries base = knight_q_series(14);
    std::map<std::pair<int, int>, Rational> q;
    for (int i = 0; i <= 14; ++i)
      for (int j = 0; i + j <= 14; ++j) q[{i, j}] = base.at(i, j);
    q[{3, 3}] += 1;
    in.q = BivSeries(q, 14);
    const auto r = verify_identity(Identity::Diagonal, 16, Branch::Xi0, in);
    REQUIRE(r.first_failure);
    CHECK(r.first_failure->term == Term{Term::Kind::T, 8, 0});
  }
  {
    IdentityInputs in;
    std::vector<Rational> c = f_series(24).coeffs();
    c.resize(25);
    c[7] += 1;
    in.f = USeries(c, 24);
    const auto r = verify_identity(Identity::Main2, 24, Branch::Xi0, in);
    REQUIRE(r.first_failure);
    CHECK(r.first_failure->term.to_string() == "x^7");
  }
  for (Branch b : {Branch::Xi1, Branch::Xi2}) {
    IdentityInputs in;
    std::vector<Rational> c = f_series(41).coeffs();
    c.resize(42);
    c[5] += 1;
    in.f = USeries(c, 41);
    const auto r = verify_identity(Identity::Main2, 20, b, in);
    REQUIRE(r.first_failure);
    // F(x) + F(xi_b) picks up x^5 + xi_b^5, whose lowest term is x^{5/2}.
    CHECK(r.first_failure->term == Term{Term::Kind::HalfX, 5, 0});
  }
}

TEST_CASE("short inputs raise TruncationError instead of a verdict") {
  IdentityInputs in;
  in.g = knight_g_series(20);
  CHECK_THROWS_AS(verify_identity(Identity::Main, 30, Branch::Xi0, in), TruncationError);
  IdentityInputs q;
  q.q = knight_q_series(8);
  CHECK_THROWS_AS(verify_identity(Identity::KnightKernel, 14, Branch::Xi0, q), TruncationError);
  IdentityInputs f;
  f.f = f_series(20);
  CHECK_THROWS_AS(verify_identity(Identity::Main2, 20, Branch::Xi1, f), TruncationError);
}

TEST_CASE("recurrence kernel equation (xy - x^3 - y^3) A = R - F(x) - F(y)") {
  const int D = 18;
  recur::Evaluator ev(recur::knight_recurrence());
  std::map<std::pair<int, int>, Rational> a;
  for (int i = 2; i <= D; ++i)
    for (int j = 2; (i - 2) + (j - 2) <= D - 2; ++j) a[{i - 2, j - 2}] = ev.value({i, j});
  const BivSeries A(a, D - 2);
  const USeries F = f_series(D);
  const BivSeries lhs = kernel_polynomial(D) * A;
  const BivSeries rhs = r_series(D) - BivSeries::from_x(F, D) - BivSeries::from_y(F, D);
  REQUIRE(lhs.degree() == D);
  for (int i = 0; i <= D; ++i)
    for (int j = 0; i + j <= D; ++j) CHECK(lhs.at(i, j) == rhs.at(i, j));
}
