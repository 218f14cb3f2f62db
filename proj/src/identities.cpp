#include "walks/identities.hpp"

#include <map>

#include "walks/enumerate.hpp"
#include "walks/recurrence.hpp"

namespace walks::series {

std::string to_string(Identity id) {
  switch (id) {
    case Identity::Main: return "main";
    case Identity::KnightKernel: return "knight-kernel";
    case Identity::Diagonal: return "diagonal";
    case Identity::Main2: return "main2";
  }
  return "?";
}

Identity parse_identity(const std::string& name) {
  for (Identity id : {Identity::Main, Identity::KnightKernel, Identity::Diagonal, Identity::Main2})
    if (name == to_string(id)) return id;
  throw std::invalid_argument("unknown identity \"" + name + "\"");
}

std::string Term::to_string() const {
  switch (kind) {
    case Kind::X: return "x^" + std::to_string(i);
    case Kind::T: return "t^" + std::to_string(i);
    case Kind::XY: return "x^" + std::to_string(i) + " y^" + std::to_string(j);
    case Kind::HalfX: return i % 2 == 0 ? "x^" + std::to_string(i / 2) : "x^(" + std::to_string(i) + "/2)";
  }
  return "?";
}

USeries knight_g_series(int order) {
  const int n_max = std::max(order - 5, 0);
  const auto g = axis_sequence(count_quadrant(stepsets::knight(), {1, 1}, n_max));
  return USeries(std::vector<Rational>(g.begin(), g.end()), order);
}

BivSeries knight_q_series(int degree) {
  const int n_max = std::max(degree - 2, 0);
  std::map<std::pair<int, int>, Rational> coeffs;
  for (const auto& [p, v] : count_quadrant(stepsets::knight(), {1, 1}, n_max).aggregate())
    if (p.i + p.j <= degree) coeffs[{p.i, p.j}] = Rational(v);
  return BivSeries(coeffs, degree);
}

USeries f_series(int order) {
  const auto f = recur::f_sequence(std::max(order, 2));
  return USeries(std::vector<Rational>(f.begin(), f.end()), order);
}

namespace {

void require_order(const char* what, int have, int need) {
  if (have < need) {
    throw TruncationError(std::string(what) + " is known to " + std::to_string(have) + " but " +
                          std::to_string(need) + " is required");
  }
}

template <typename Get>
IdentityReport compare(const std::vector<Term>& terms, Get get) {
  IdentityReport r;
  for (const Term& t : terms) {
    auto [lhs, rhs] = get(t);
    ++r.terms_checked;
    if (lhs != rhs) {
      r.first_failure = Mismatch{t, lhs, rhs};
      return r;
    }
  }
  r.holds = true;
  return r;
}

std::vector<Term> linear_terms(Term::Kind kind, int N) {
  std::vector<Term> out;
  for (int i = 0; i <= N; ++i) out.push_back({kind, i, 0});
  return out;
}

IdentityReport verify_main(int N, const IdentityInputs& in) {
  const USeries g = in.g ? *in.g : knight_g_series(N);
  require_order("G", g.order(), N);
  const USeries xi = xi_series(N);
  const USeries lhs = g + compose(g, xi);
  const USeries x_xi = xi.shifted(1);
  const USeries rhs = x_xi * x_xi;
  require_order("left side", lhs.order(), N);
  require_order("right side", rhs.order(), N);
  return compare(linear_terms(Term::Kind::X, N), [&](const Term& t) { return std::pair{lhs[t.i], rhs[t.i]}; });
}

IdentityReport verify_knight_kernel(int D, const IdentityInputs& in) {
  const BivSeries q = in.q ? *in.q : knight_q_series(D - 2);
  const USeries g = in.g ? *in.g : knight_g_series(D);
  require_order("Q", q.degree(), D - 2);
  require_order("G", g.order(), D);
  const BivSeries lhs = kernel_polynomial(D) * q;
  const BivSeries rhs = BivSeries({{{2, 2}, Rational(1)}}, D) - BivSeries::from_x(g, D) - BivSeries::from_y(g, D);
  require_order("left side", lhs.degree(), D);
  require_order("right side", rhs.degree(), D);
  std::vector<Term> terms;
  for (int d = 0; d <= D; ++d)
    for (int i = 0; i <= d; ++i) terms.push_back({Term::Kind::XY, i, d - i});
  return compare(terms, [&](const Term& t) { return std::pair{lhs.at(t.i, t.j), rhs.at(t.i, t.j)}; });
}

// Catalan generating function U(t) = (1 - sqrt(1 - 4t^2)) / (2t) to t^N.
USeries u_series(int N) {
  const USeries root = sqrt1m(USeries::monomial(2, 4, N + 1));
  std::vector<Rational> c(static_cast<std::size_t>(N) + 1);
  for (int k = 0; k <= N; ++k) c[static_cast<std::size_t>(k)] = -root[k + 1] / 2;
  return USeries(std::move(c), N);
}

}  // namespace

DiagonalSides diagonal_sides(int N, const IdentityInputs& in) {
  // [x^0] t^2 Q(tx, t/x) = sum_n Q_{n,n} t^{2n+2}.
  const int q_degree = std::max(N - 2, 0);
  const BivSeries q = in.q ? *in.q : knight_q_series(q_degree);
  require_order("Q", q.degree(), q_degree);
  std::vector<Rational> lhs(static_cast<std::size_t>(N) + 1);
  for (int n = 0; 2 * n + 2 <= N; ++n) lhs[static_cast<std::size_t>(2 * n + 2)] = q.at(n, n);

  // t^3 U(t) has valuation 4, so S is needed to z^{N/4}, i.e. G to x^{3 N/4}.
  const int s_order = N / 4;
  const USeries g = in.g ? *in.g : knight_g_series(3 * s_order);
  require_order("G", g.order(), 3 * s_order);
  std::vector<Rational> s(static_cast<std::size_t>(s_order) + 1);
  for (int k = 0; k <= s_order; ++k) s[static_cast<std::size_t>(k)] = g[3 * k];
  const USeries s_series(std::move(s), s_order);

  const USeries inner = u_series(N).shifted(3).truncated(N);
  const USeries bracket = USeries::monomial(4, 1, N) - Rational(2) * compose(s_series, inner);
  const USeries rhs = reciprocal(sqrt1m(USeries::monomial(2, 4, N))) * bracket;
  require_order("right side", rhs.order(), N);
  return {USeries(std::move(lhs), N), rhs.truncated(N)};
}

namespace {

IdentityReport verify_diagonal(int N, const IdentityInputs& in) {
  const DiagonalSides sides = diagonal_sides(N, in);
  return compare(linear_terms(Term::Kind::T, N),
                 [&](const Term& t) { return std::pair{sides.lhs[t.i], sides.rhs[t.i]}; });
}

IdentityReport verify_main2(int N, Branch b, const IdentityInputs& in) {
  if (b == Branch::Xi0) {
    const USeries f = in.f ? *in.f : f_series(N);
    require_order("F", f.order(), N);
    const USeries xi = xi_series(N);
    const USeries lhs = f + compose(f, xi);
    const USeries rhs = r_series(N).substitute_y(xi);
    require_order("left side", lhs.order(), N);
    require_order("right side", rhs.order(), N);
    return compare(linear_terms(Term::Kind::X, N), [&](const Term& t) { return std::pair{lhs[t.i], rhs[t.i]}; });
  }
  // Half-exponent precision 2N+1 covers every term up to x^{N+1/2}.
  const int P = 2 * N + 1;
  const USeries f = in.f ? *in.f : f_series(P);
  require_order("F", f.order(), P);
  const SqrtSeries root = kernel_root_series(b, N);
  const SqrtSeries lhs = SqrtSeries::from_even(f) + compose(f, root);
  const SqrtSeries rhs = r_series(P).substitute_y(root);
  require_order("left side", lhs.precision(), P);
  require_order("right side", rhs.precision(), P);
  std::vector<Term> terms;
  for (int e = 0; e <= P; ++e) terms.push_back({Term::Kind::HalfX, e, 0});
  auto coeff = [](const SqrtSeries& s, int e) { return e % 2 == 0 ? s.even()[e / 2] : s.odd()[(e - 1) / 2]; };
  return compare(terms, [&](const Term& t) { return std::pair{coeff(lhs, t.i), coeff(rhs, t.i)}; });
}

}  // namespace

IdentityReport verify_identity(Identity id, int N, Branch branch, const IdentityInputs& inputs) {
  if (N < 0) throw std::invalid_argument("identity order must be nonnegative");
  switch (id) {
    case Identity::Main: return verify_main(N, inputs);
    case Identity::KnightKernel: return verify_knight_kernel(N, inputs);
    case Identity::Diagonal: return verify_diagonal(N, inputs);
    case Identity::Main2: return verify_main2(N, branch, inputs);
  }
  throw std::invalid_argument("unknown identity");
}

}  // namespace walks::series
