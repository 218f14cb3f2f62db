#pragma once

#include <map>
#include <vector>

#include "walks/numeric.hpp"
#include "walks/stepset.hpp"

namespace walks {

enum class Region { Quadrant, RightHalfPlane };

std::string to_string(Region r);

/// True when p satisfies the region's constraints (i >= 0, and j >= 0 for the quadrant).
constexpr bool in_region(Region r, Point p) {
  return p.i >= 0 && (r == Region::RightHalfPlane || p.j >= 0);
}

/// Exact walk counts by endpoint and length, n = 0..n_max. Cells that are
/// absent hold zero. Immutable once built.
class CountGrid {
 public:
  using Layer = std::map<Point, BigInt>;

  CountGrid(StepSet steps, Point start, Region region, int n_max, std::vector<Layer> layers);

  const StepSet& steps() const { return steps_; }
  Point start() const { return start_; }
  Region region() const { return region_; }
  int n_max() const { return n_max_; }

  const BigInt& count(int i, int j, int n) const;
  const Layer& layer(int n) const { return layers_.at(static_cast<std::size_t>(n)); }

  /// Counts summed over every length 0..n_max.
  std::map<Point, BigInt> aggregate() const;

  /// Largest i (resp. j) any walk of length <= n_max can reach.
  int i_bound() const { return start_.i + n_max_ * steps_.max_abs_dx(); }
  int j_bound() const { return start_.j + n_max_ * steps_.max_abs_dy(); }

 private:
  StepSet steps_;
  Point start_;
  Region region_;
  int n_max_;
  std::vector<Layer> layers_;
};

/// Throws std::domain_error if start is outside the quadrant or n_max < 0.
CountGrid count_quadrant(const StepSet& s, Point start, int n_max);
/// Throws std::domain_error if start.i < 0 or n_max < 0.
CountGrid count_half_plane(const StepSet& s, Point start, int n_max);

/// Coefficients g_m of G(x) = x^3 * sum_i Q_{i,0} x^i, where Q_{i,0} is the
/// count at (i, 0) aggregated over lengths. Indices run to i_bound() + 3.
std::vector<BigInt> axis_sequence(const CountGrid& grid);

/// Aggregated counts Q_{n,n} for n = 0..min(i_bound, j_bound).
std::vector<BigInt> diagonal_sequence(const CountGrid& grid);

/// a(n) = total number of walks of length n, n = 0..n_max.
std::vector<BigInt> length_sequence(const CountGrid& grid);

/// Laurent polynomial in y with integer coefficients: coeffs[k] multiplies y^(low + k).
struct LaurentPoly {
  int low = 0;
  std::vector<BigInt> coeffs;

  BigInt at(int exponent) const;
  BigInt sum() const;
};

/// Walks on the half-line i >= 0 where each step of size h carries the weight
/// sum_{j : (h,j) in S} y^j. Entry [n][i] is the total weight of length-n walks
/// from start.i ending at i; the y exponent is measured from start.j. This is
/// the projection of the right half-plane walks onto the x-axis.
std::vector<std::map<int, LaurentPoly>> weighted_half_line_counts(const StepSet& s, Point start,
                                                                  int n_max);

}  // namespace walks
