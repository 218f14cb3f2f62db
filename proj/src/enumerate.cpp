#include "walks/enumerate.hpp"

#include <algorithm>
#include <stdexcept>

namespace walks {

std::string to_string(Region r) { return r == Region::Quadrant ? "quadrant" : "half-plane"; }

CountGrid::CountGrid(StepSet steps, Point start, Region region, int n_max, std::vector<Layer> layers)
    : steps_(std::move(steps)), start_(start), region_(region), n_max_(n_max), layers_(std::move(layers)) {}

const BigInt& CountGrid::count(int i, int j, int n) const {
  static const BigInt zero;
  if (n < 0 || n > n_max_) return zero;
  const Layer& l = layers_[static_cast<std::size_t>(n)];
  auto it = l.find({i, j});
  return it == l.end() ? zero : it->second;
}

std::map<Point, BigInt> CountGrid::aggregate() const {
  std::map<Point, BigInt> out;
  for (const Layer& l : layers_)
    for (const auto& [p, c] : l) out[p] += c;
  return out;
}

namespace {

CountGrid build(const StepSet& s, Point start, int n_max, Region region) {
  if (n_max < 0) throw std::domain_error("n_max must be nonnegative");
  if (!in_region(region, start)) {
    throw std::domain_error("start (" + std::to_string(start.i) + "," + std::to_string(start.j) +
                            ") lies outside the " + to_string(region));
  }
  std::vector<CountGrid::Layer> layers(static_cast<std::size_t>(n_max) + 1);
  layers[0][start] = 1;
  for (int n = 1; n <= n_max; ++n) {
    const auto& prev = layers[static_cast<std::size_t>(n - 1)];
    auto& cur = layers[static_cast<std::size_t>(n)];
    // Push each populated cell forward; equivalent to summing
    // counts(p - step, n - 1) over steps at every target p.
    for (const auto& [p, c] : prev) {
      for (const Step& st : s.steps()) {
        Point q = p + st;
        if (in_region(region, q)) cur[q] += c;
      }
    }
  }
  return CountGrid(s, start, region, n_max, std::move(layers));
}

}  // namespace

CountGrid count_quadrant(const StepSet& s, Point start, int n_max) {
  return build(s, start, n_max, Region::Quadrant);
}

CountGrid count_half_plane(const StepSet& s, Point start, int n_max) {
  return build(s, start, n_max, Region::RightHalfPlane);
}

std::vector<BigInt> axis_sequence(const CountGrid& grid) {
  std::vector<BigInt> g(static_cast<std::size_t>(grid.i_bound()) + 4);
  for (int n = 0; n <= grid.n_max(); ++n)
    for (const auto& [p, c] : grid.layer(n))
      if (p.j == 0) g[static_cast<std::size_t>(p.i) + 3] += c;
  return g;
}

std::vector<BigInt> diagonal_sequence(const CountGrid& grid) {
  const int bound = std::min(grid.i_bound(), grid.j_bound());
  std::vector<BigInt> d(static_cast<std::size_t>(std::max(bound, 0)) + 1);
  for (int n = 0; n <= grid.n_max(); ++n)
    for (const auto& [p, c] : grid.layer(n))
      if (p.i == p.j && p.i >= 0 && p.i <= bound) d[static_cast<std::size_t>(p.i)] += c;
  return d;
}

std::vector<BigInt> length_sequence(const CountGrid& grid) {
  std::vector<BigInt> a(static_cast<std::size_t>(grid.n_max()) + 1);
  for (int n = 0; n <= grid.n_max(); ++n)
    for (const auto& [p, c] : grid.layer(n)) a[static_cast<std::size_t>(n)] += c;
  return a;
}

BigInt LaurentPoly::at(int exponent) const {
  int k = exponent - low;
  if (k < 0 || k >= static_cast<int>(coeffs.size())) return 0;
  return coeffs[static_cast<std::size_t>(k)];
}

BigInt LaurentPoly::sum() const {
  BigInt total;
  for (const BigInt& c : coeffs) total += c;
  return total;
}

namespace {

// p += q * y^shift
void add_shifted(LaurentPoly& p, const LaurentPoly& q, int shift) {
  if (q.coeffs.empty()) return;
  int qlow = q.low + shift;
  int qhigh = qlow + static_cast<int>(q.coeffs.size()) - 1;
  if (p.coeffs.empty()) {
    p.low = qlow;
    p.coeffs.assign(q.coeffs.size(), 0);
  }
  int low = std::min(p.low, qlow);
  int high = std::max(p.low + static_cast<int>(p.coeffs.size()) - 1, qhigh);
  if (low < p.low) p.coeffs.insert(p.coeffs.begin(), static_cast<std::size_t>(p.low - low), 0);
  p.low = low;
  p.coeffs.resize(static_cast<std::size_t>(high - low + 1));
  for (std::size_t k = 0; k < q.coeffs.size(); ++k)
    p.coeffs[static_cast<std::size_t>(qlow - low) + k] += q.coeffs[k];
}

}  // namespace

std::vector<std::map<int, LaurentPoly>> weighted_half_line_counts(const StepSet& s, Point start,
                                                                  int n_max) {
  if (n_max < 0) throw std::domain_error("n_max must be nonnegative");
  if (start.i < 0) throw std::domain_error("start must satisfy i >= 0");
  // Weight of a horizontal step size h: the multiset of heights j with (h,j) in S.
  std::map<int, std::vector<int>> weights;
  for (const Step& st : s.steps()) weights[st.dx].push_back(st.dy);

  std::vector<std::map<int, LaurentPoly>> out(static_cast<std::size_t>(n_max) + 1);
  out[0][start.i] = LaurentPoly{0, {1}};
  for (int n = 1; n <= n_max; ++n) {
    auto& cur = out[static_cast<std::size_t>(n)];
    for (const auto& [i, poly] : out[static_cast<std::size_t>(n - 1)]) {
      for (const auto& [h, heights] : weights) {
        if (i + h < 0) continue;
        for (int dy : heights) add_shifted(cur[i + h], poly, dy);
      }
    }
  }
  return out;
}

}  // namespace walks
