#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "walks/kernel.hpp"
#include "walks/numeric.hpp"

namespace walks::analytic {

using cplx = std::complex<double>;
using series::Branch;

struct Constants {
  double x_c;
  double y_c;
  cplx j;
};

/// x_c = 4^{1/3}/3, y_c = 2^{1/3}/3, j = exp(2 pi i / 3).
const Constants& constants();

/// Every numeric threshold the module uses.
struct Tolerances {
  /// |y^3 - x y + x^3| <= residual * max(1, |x|^3) for accepted roots.
  double residual = 1e-10;
  /// Points closer than this to a cut half-line are rejected.
  double cut_band = 1e-6;
  /// Series evaluation is used for |x| <= base_radius; continuation starts there.
  double base_radius = 0.01;
  int series_order = 20;
  /// A continuation step is accepted when every label moves less than this
  /// fraction of the smallest root separation.
  double step_fraction = 0.3;
  double min_step = 1e-12;
  /// Roots closer than this (relative to max(1, |x|)) are merged into the double root.
  double cluster = 1e-6;
  /// x within this distance of a singular point is treated as the point itself.
  double singular_snap = 1e-12;
  /// Continuation toward a singular endpoint stops this far short, then snaps.
  double endpoint_gap = 1e-7;
  /// Offsets for local exponent fits, geometric from 1e-2 to 1e-8.
  std::vector<double> offsets = {1e-2, 3.16227766016838e-3, 1e-3, 3.16227766016838e-4, 1e-4, 3.16227766016838e-5,
                                 1e-5, 3.16227766016838e-6, 1e-6, 3.16227766016838e-7, 1e-7, 3.16227766016838e-8, 1e-8};
  /// Number of smallest offsets used for the slope B.
  int slope_points = 3;
  double exponent_tol = 0.01;
  double regular_exponent = 0.9;
  double gprime_term_cutoff = 1e-15;
};

const Tolerances& default_tolerances();

/// Roots of y^3 - x y + x^3, Newton-polished; clustered roots are replaced by
/// the exact double root.
std::array<cplx, 3> cubic_roots(cplx x, const Tolerances& tol = default_tolerances());
double residual(cplx x, cplx y);

/// The four singular candidates 0, x_c, j x_c, j^2 x_c.
std::array<cplx, 4> singular_candidates();

/// x lies on one of the removed half-lines: the negative real axis, or
/// {p t : t > 1} for p in {x_c, j x_c, j^2 x_c}.
class CutViolation : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Continuation failed to keep labels separated.
class PathError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class Method { SeriesNearZero, PathContinuation, ClosedForm };
std::string to_string(Method m);

struct BranchValues {
  cplx at;
  /// Indexed by Branch.
  std::array<cplx, 3> values;
  Method method;
  /// Number of accepted continuation steps (0 near zero).
  int steps = 0;

  cplx operator[](Branch b) const { return values[static_cast<std::size_t>(b)]; }
};

/// Branch values on the plane minus the four half-lines. Near 0 the series of
/// the kernel roots label the numeric roots; elsewhere labels are carried
/// along the radial segment from base_radius * x/|x|.
BranchValues eval_branches(cplx x, const Tolerances& tol = default_tolerances());

/// Throws CutViolation if x is on or near a removed half-line.
void check_cut(cplx x, const Tolerances& tol = default_tolerances());

enum class ClosedForm { Xi, Psi };
/// xi(x) = 2 sqrt(x/3) sin(arcsin((3x)^{3/2}/2)/3), psi(x) = cos(arcsin((3x)^{3/2}/2)/3),
/// principal branches throughout.
cplx closed_form(cplx x, ClosedForm which);

enum class Verdict { Singular, Regular, Inconclusive };
std::string to_string(Verdict v);

/// Local model |f(x) - f(p)| ~ slope * |x - p|^exponent.
struct SingularFit {
  cplx location;
  /// f(p).
  cplx value;
  double slope = 0;
  double exponent = 0;
  /// Exponent fitted separately along the two approach directions.
  std::array<double, 2> direction_exponents{};
};

struct SurveyEntry {
  Branch branch;
  cplx candidate;
  Verdict verdict;
  SingularFit fit;
};

/// Fits every branch at every singular candidate.
SingularFit fit_singularity(Branch b, cplx p, const Tolerances& tol = default_tolerances());
Verdict classify(const SingularFit& fit, const Tolerances& tol = default_tolerances());
std::vector<SurveyEntry> singularity_survey(const Tolerances& tol = default_tolerances());

/// Some root of y^3 - x y + x^3 has modulus > |x|. Throws std::domain_error at 0.
bool dominant_root_check(cplx x, const Tolerances& tol = default_tolerances());

struct SweepResult {
  std::size_t points = 0;
  std::size_t failures = 0;
  std::optional<cplx> first_failure;
};

/// dominant_root_check on `count` points with log-uniform radius in
/// [r_min, r_max] and uniform angle.
SweepResult dominant_root_sweep(std::size_t count, std::uint64_t seed, double r_min = 0.01, double r_max = 10.0);

struct GPrimeBound {
  double bound_value;
  double threshold;
  bool passes;
  int terms;
};

/// 3 sum_{i>=1} (i+1) C(3i-2, i-1) y_c^{3i+2} against 2 x_c^2 y_c.
GPrimeBound gprime_bound_check(const Tolerances& tol = default_tolerances());

struct SingularityChain {
  /// x_0 = x_c, x_1 = xi_2(x_c), x_2, x_3.
  std::array<cplx, 4> points;
  std::array<cplx, 3> roots_at_x1;
  std::array<cplx, 3> roots_at_x2;
  bool x1_roots_contain_x0;
  double modulus_x3;
};

/// Throws std::runtime_error if a selection rule does not pick a unique root.
SingularityChain singularity_chain_rec2(const Tolerances& tol = default_tolerances());

struct RadiusEstimate {
  double estimate;
  std::size_t index;
};

/// Root test |g_m|^{-1/m} at the largest nonzero index m divisible by stride.
/// Throws std::invalid_argument with fewer than 10 such nonzero terms.
RadiusEstimate radius_estimate(const std::vector<BigInt>& seq, int stride);

}  // namespace walks::analytic
