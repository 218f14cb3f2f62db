#include "walks/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include <Eigen/Eigenvalues>

namespace walks::analytic {

namespace {

constexpr double kPi = 3.14159265358979323846;

double modulus_scale(cplx x) { return std::max(1.0, std::abs(x)); }

cplx kernel(cplx x, cplx y) { return y * y * y - x * y + x * x * x; }

cplx polish(cplx x, cplx y) {
  for (int it = 0; it < 8; ++it) {
    const cplx d = 3.0 * y * y - x;
    if (std::abs(d) == 0) break;
    const cplx step = kernel(x, y) / d;
    y -= step;
    if (std::abs(step) <= 1e-17 * modulus_scale(y)) break;
  }
  return y;
}

double min_separation(const std::array<cplx, 3>& r) {
  return std::min({std::abs(r[0] - r[1]), std::abs(r[0] - r[2]), std::abs(r[1] - r[2])});
}

// Permutation of `roots` closest to `ref` in the sum of squared distances.
std::array<cplx, 3> best_match(const std::array<cplx, 3>& ref, const std::array<cplx, 3>& roots) {
  std::array<int, 3> perm{0, 1, 2};
  std::array<cplx, 3> best = roots;
  double best_cost = std::numeric_limits<double>::infinity();
  do {
    double cost = 0;
    for (int k = 0; k < 3; ++k) cost += std::norm(ref[static_cast<std::size_t>(k)] - roots[static_cast<std::size_t>(perm[static_cast<std::size_t>(k)])]);
    if (cost < best_cost) {
      best_cost = cost;
      for (int k = 0; k < 3; ++k) best[static_cast<std::size_t>(k)] = roots[static_cast<std::size_t>(perm[static_cast<std::size_t>(k)])];
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

struct RootSeries {
  int order;
  std::array<series::SqrtSeries, 3> branches;
};

const RootSeries& root_series(int order) {
  static const RootSeries cached{20,
                                 {series::kernel_root_series(Branch::Xi0, 20), series::kernel_root_series(Branch::Xi1, 20),
                                  series::kernel_root_series(Branch::Xi2, 20)}};
  if (order == cached.order) return cached;
  thread_local RootSeries other{-1, {}};
  if (other.order != order) {
    other = {order,
             {series::kernel_root_series(Branch::Xi0, order), series::kernel_root_series(Branch::Xi1, order),
              series::kernel_root_series(Branch::Xi2, order)}};
  }
  return other;
}

std::array<cplx, 3> series_values(cplx x, const Tolerances& tol) {
  const RootSeries& rs = root_series(tol.series_order);
  return {rs.branches[0].evaluate(x), rs.branches[1].evaluate(x), rs.branches[2].evaluate(x)};
}

void check_residuals(const BranchValues& v, const Tolerances& tol) {
  for (const cplx& y : v.values) {
    if (residual(v.at, y) > tol.residual * std::max(1.0, std::pow(std::abs(v.at), 3))) {
      throw std::logic_error("branch value misses the kernel curve");
    }
  }
}

}  // namespace

const Constants& constants() {
  static const Constants c{std::cbrt(4.0) / 3.0, std::cbrt(2.0) / 3.0, std::polar(1.0, 2.0 * kPi / 3.0)};
  return c;
}

const Tolerances& default_tolerances() {
  static const Tolerances t{};
  return t;
}

double residual(cplx x, cplx y) { return std::abs(kernel(x, y)); }

std::array<cplx, 3> cubic_roots(cplx x, const Tolerances& tol) {
  Eigen::Matrix3cd companion = Eigen::Matrix3cd::Zero();
  companion(1, 0) = 1;
  companion(2, 1) = 1;
  companion(0, 2) = -x * x * x;
  companion(1, 2) = x;
  Eigen::ComplexEigenSolver<Eigen::Matrix3cd> solver(companion, false);
  std::array<cplx, 3> r{};
  for (int k = 0; k < 3; ++k) r[static_cast<std::size_t>(k)] = polish(x, solver.eigenvalues()(k));

  const double band = tol.cluster * modulus_scale(x);
  for (int a = 0; a < 3; ++a) {
    for (int b = a + 1; b < 3; ++b) {
      const auto ua = static_cast<std::size_t>(a);
      const auto ub = static_cast<std::size_t>(b);
      if (std::abs(r[ua] - r[ub]) >= band) continue;
      const cplx mean = (r[ua] + r[ub]) / 2.0;
      cplx d = std::sqrt(x / 3.0);
      if (std::abs(-d - mean) < std::abs(d - mean)) d = -d;
      r[ua] = r[ub] = d;
      r[static_cast<std::size_t>(3 - a - b)] = -2.0 * d;
      return r;
    }
  }
  return r;
}

std::array<cplx, 4> singular_candidates() {
  const Constants& c = constants();
  return {cplx(0), cplx(c.x_c), c.j * c.x_c, c.j * c.j * c.x_c};
}

std::string to_string(Method m) {
  switch (m) {
    case Method::SeriesNearZero: return "SeriesNearZero";
    case Method::PathContinuation: return "PathContinuation";
    case Method::ClosedForm: return "ClosedForm";
  }
  return "?";
}

void check_cut(cplx x, const Tolerances& tol) {
  const auto cands = singular_candidates();
  for (const cplx& p : cands) {
    if (std::abs(x - p) <= tol.singular_snap) return;
  }
  for (const cplx& p : cands) {
    const cplx dir = p == cplx(0) ? cplx(-1) : p / std::abs(p);
    const cplx rel = (x - p) * std::conj(dir);
    if (rel.real() > 0 && std::abs(rel.imag()) < tol.cut_band) {
      throw CutViolation("point (" + std::to_string(x.real()) + ", " + std::to_string(x.imag()) +
                         ") lies on the half-line cut from (" + std::to_string(p.real()) + ", " +
                         std::to_string(p.imag()) + ")");
    }
  }
}

BranchValues eval_branches(cplx x, const Tolerances& tol) {
  check_cut(x, tol);
  BranchValues out{x, {}, Method::SeriesNearZero, 0};
  if (std::abs(x) <= tol.base_radius) {
    out.values = best_match(series_values(x, tol), cubic_roots(x, tol));
    check_residuals(out, tol);
    return out;
  }

  const cplx unit = x / std::abs(x);
  const cplx base = tol.base_radius * unit;
  std::array<cplx, 3> cur = best_match(series_values(base, tol), cubic_roots(base, tol));

  std::optional<cplx> snap;
  cplx target = x;
  for (const cplx& p : singular_candidates()) {
    if (p != cplx(0) && std::abs(x - p) <= tol.singular_snap) {
      snap = p;
      target = p - tol.endpoint_gap * unit;
    }
  }

  double t = 0;
  double h = 1.0 / 32;
  while (t < 1) {
    const double hh = std::min(h, 1 - t);
    const cplx pt = base + (target - base) * (t + hh);
    const auto roots = cubic_roots(pt, tol);
    const auto cand = best_match(cur, roots);
    double move = 0;
    for (std::size_t k = 0; k < 3; ++k) move = std::max(move, std::abs(cand[k] - cur[k]));
    if (move < tol.step_fraction * min_separation(roots)) {
      cur = cand;
      t = hh == 1 - t ? 1 : t + hh;
      ++out.steps;
      h = std::min(2 * hh, 0.25);
    } else {
      h = hh / 2;
      if (h < tol.min_step) {
        throw PathError("continuation stalled at t = " + std::to_string(t) + "; roots too close to separate");
      }
    }
  }

  if (snap) {
    const auto roots = cubic_roots(*snap, tol);
    for (auto& v : cur) {
      v = *std::min_element(roots.begin(), roots.end(),
                            [&](const cplx& a, const cplx& b) { return std::abs(a - v) < std::abs(b - v); });
    }
  }
  out.values = cur;
  out.method = Method::PathContinuation;
  check_residuals(out, tol);
  return out;
}

cplx closed_form(cplx x, ClosedForm which) {
  const cplx s = 3.0 * x;
  const cplx a = std::asin(s * std::sqrt(s) / 2.0) / 3.0;
  return which == ClosedForm::Xi ? 2.0 * std::sqrt(x / 3.0) * std::sin(a) : std::cos(a);
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Singular: return "singular";
    case Verdict::Regular: return "regular";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

SingularFit fit_singularity(Branch b, cplx p, const Tolerances& tol) {
  const auto bi = static_cast<std::size_t>(b);
  SingularFit fit;
  fit.location = p;
  fit.value = eval_branches(p, tol).values[bi];

  const cplx unit = p == cplx(0) ? cplx(1) : p / std::abs(p);
  std::array<std::vector<double>, 2> dist;
  for (int side = 0; side < 2; ++side) {
    const double sign = side == 0 ? 1.0 : -1.0;
    const cplx dir = p == cplx(0) ? std::polar(1.0, sign * kPi / 4) : unit * cplx(-1, sign) / std::sqrt(2.0);
    std::vector<double> lx, ly;
    for (double delta : tol.offsets) {
      const double d = std::abs(eval_branches(p + delta * dir, tol).values[bi] - fit.value);
      dist[static_cast<std::size_t>(side)].push_back(d);
      if (d > 0) {
        lx.push_back(std::log(delta));
        ly.push_back(std::log(d));
      }
    }
    double slope = std::numeric_limits<double>::infinity();
    if (lx.size() >= 2) {
      const double n = static_cast<double>(lx.size());
      const double mx = std::accumulate(lx.begin(), lx.end(), 0.0) / n;
      const double my = std::accumulate(ly.begin(), ly.end(), 0.0) / n;
      double sxy = 0, sxx = 0;
      for (std::size_t k = 0; k < lx.size(); ++k) {
        sxy += (lx[k] - mx) * (ly[k] - my);
        sxx += (lx[k] - mx) * (lx[k] - mx);
      }
      slope = sxy / sxx;
    }
    fit.direction_exponents[static_cast<std::size_t>(side)] = slope;
  }
  fit.exponent = (fit.direction_exponents[0] + fit.direction_exponents[1]) / 2;

  const double nominal = std::abs(fit.exponent - 0.5) <= tol.exponent_tol ? 0.5 : 1.0;
  double sum = 0;
  int count = 0;
  const auto n_off = tol.offsets.size();
  for (std::size_t k = n_off - std::min<std::size_t>(n_off, static_cast<std::size_t>(tol.slope_points)); k < n_off; ++k) {
    for (const auto& side : dist) {
      sum += side[k] / std::pow(tol.offsets[k], nominal);
      ++count;
    }
  }
  fit.slope = count ? sum / count : 0;
  return fit;
}

Verdict classify(const SingularFit& fit, const Tolerances& tol) {
  const auto& e = fit.direction_exponents;
  if (std::abs(e[0] - 0.5) <= tol.exponent_tol && std::abs(e[1] - 0.5) <= tol.exponent_tol) return Verdict::Singular;
  if (e[0] >= tol.regular_exponent && e[1] >= tol.regular_exponent) return Verdict::Regular;
  return Verdict::Inconclusive;
}

std::vector<SurveyEntry> singularity_survey(const Tolerances& tol) {
  std::vector<SurveyEntry> out;
  for (Branch b : {Branch::Xi0, Branch::Xi1, Branch::Xi2}) {
    for (const cplx& p : singular_candidates()) {
      SingularFit fit = fit_singularity(b, p, tol);
      out.push_back({b, p, classify(fit, tol), fit});
    }
  }
  return out;
}

bool dominant_root_check(cplx x, const Tolerances& tol) {
  if (x == cplx(0)) throw std::domain_error("dominant root check is undefined at x = 0");
  const auto roots = cubic_roots(x, tol);
  double m = 0;
  for (const cplx& r : roots) m = std::max(m, std::abs(r));
  return m > std::abs(x);
}

SweepResult dominant_root_sweep(std::size_t count, std::uint64_t seed, double r_min, double r_max) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> log_r(std::log(r_min), std::log(r_max));
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  SweepResult res;
  for (std::size_t k = 0; k < count; ++k) {
    const cplx x = std::polar(std::exp(log_r(rng)), angle(rng));
    ++res.points;
    if (!dominant_root_check(x)) {
      ++res.failures;
      if (!res.first_failure) res.first_failure = x;
    }
  }
  return res;
}

GPrimeBound gprime_bound_check(const Tolerances& tol) {
  const Constants& c = constants();
  const double log_y = std::log(c.y_c);
  double sum = 0;
  int terms = 0;
  double prev = std::numeric_limits<double>::infinity();
  for (int i = 1;; ++i) {
    const double log_binom = std::lgamma(3.0 * i - 1) - std::lgamma(static_cast<double>(i)) - std::lgamma(2.0 * i);
    const double term = 3.0 * (i + 1) * std::exp(log_binom + (3.0 * i + 2) * log_y);
    sum += term;
    ++terms;
    if (term < tol.gprime_term_cutoff && term < prev) break;
    prev = term;
  }
  const double threshold = 2 * c.x_c * c.x_c * c.y_c;
  return {sum, threshold, sum < 0.16 && threshold >= 0.23 && threshold <= 0.24, terms};
}

SingularityChain singularity_chain_rec2(const Tolerances& tol) {
  const Constants& c = constants();
  SingularityChain ch{};
  ch.points[0] = c.x_c;
  ch.points[1] = eval_branches(c.x_c, tol)[Branch::Xi2];

  ch.roots_at_x1 = cubic_roots(ch.points[1], tol);
  ch.x1_roots_contain_x0 = std::any_of(ch.roots_at_x1.begin(), ch.roots_at_x1.end(),
                                       [&](const cplx& r) { return std::abs(r - ch.points[0]) < 1e-9; });
  std::vector<cplx> lower;
  for (const cplx& r : ch.roots_at_x1)
    if (r.imag() < -tol.cluster) lower.push_back(r);
  if (lower.size() != 1) {
    throw std::runtime_error("expected one root with negative imaginary part at x1, found " + std::to_string(lower.size()));
  }
  ch.points[2] = lower.front();

  ch.roots_at_x2 = cubic_roots(ch.points[2], tol);
  std::vector<cplx> large;
  for (const cplx& r : ch.roots_at_x2)
    if (std::abs(r) > 1.33) large.push_back(r);
  if (large.size() != 1) {
    throw std::runtime_error("expected one root of modulus > 1.33 at x2, found " + std::to_string(large.size()));
  }
  ch.points[3] = large.front();
  ch.modulus_x3 = std::abs(ch.points[3]);
  return ch;
}

RadiusEstimate radius_estimate(const std::vector<BigInt>& seq, int stride) {
  if (stride <= 0) throw std::invalid_argument("stride must be positive");
  std::size_t nonzero = 0;
  std::size_t last = 0;
  for (std::size_t m = 1; m < seq.size(); ++m) {
    if (m % static_cast<std::size_t>(stride) != 0 || sgn(seq[m]) == 0) continue;
    ++nonzero;
    last = m;
  }
  if (nonzero < 10) {
    throw std::invalid_argument("radius estimate needs at least 10 nonzero terms at stride " + std::to_string(stride) +
                                ", found " + std::to_string(nonzero));
  }
  long exp2 = 0;
  const double mant = mpz_get_d_2exp(&exp2, seq[last].get_mpz_t());
  const double log_abs = std::log(std::abs(mant)) + static_cast<double>(exp2) * std::log(2.0);
  return {std::exp(-log_abs / static_cast<double>(last)), last};
}

}  // namespace walks::analytic
