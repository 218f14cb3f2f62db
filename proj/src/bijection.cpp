#include "walks/bijection.hpp"

#include <algorithm>

namespace walks {

namespace {

std::string point_str(Point p) { return "(" + std::to_string(p.i) + "," + std::to_string(p.j) + ")"; }

}  // namespace

Walk::Walk(Point start, std::vector<Step> steps, Region region)
    : start_(start), steps_(std::move(steps)), region_(region) {
  Point p = start_;
  if (!in_region(region_, p)) {
    throw std::domain_error("walk starts at " + point_str(p) + " outside the " + to_string(region_));
  }
  for (std::size_t t = 0; t < steps_.size(); ++t) {
    p = p + steps_[t];
    if (!in_region(region_, p)) {
      throw std::domain_error("walk leaves the " + to_string(region_) + " at step " +
                              std::to_string(t) + " (vertex " + point_str(p) + ")");
    }
  }
}

std::vector<Point> Walk::vertices() const {
  std::vector<Point> v{start_};
  v.reserve(steps_.size() + 1);
  for (const Step& s : steps_) v.push_back(v.back() + s);
  return v;
}

Point Walk::end() const {
  Point p = start_;
  for (const Step& s : steps_) p = p + s;
  return p;
}

int Walk::min_ordinate() const {
  int lo = start_.j;
  int y = start_.j;
  for (const Step& s : steps_) lo = std::min(lo, y += s.dy);
  return lo;
}

namespace {

using Reason = BijectionError::Reason;

void check_step_set(const Walk& w, const StepSet& s) {
  if (!is_x_symmetric(s))
    throw BijectionError(Reason::AsymmetricStepSet, "step set " + s.to_string() + " is not symmetric about the x-axis");
  if (!has_small_height_variation(s))
    throw BijectionError(Reason::LargeHeightVariation, "step set " + s.to_string() + " has a step with |dy| > 1");
  for (std::size_t t = 0; t < w.steps().size(); ++t) {
    const Step& st = w.steps()[t];
    if (!s.contains(st)) {
      throw BijectionError(Reason::StepNotInSet, "step " + std::to_string(t) + " (" + std::to_string(st.dx) +
                                                     "," + std::to_string(st.dy) + ") is not in " + s.to_string());
    }
  }
}

Walk with_flips(const Walk& w, const std::vector<std::size_t>& flips, Region region) {
  std::vector<Step> steps = w.steps();
  for (std::size_t t : flips) steps[t].dy = -steps[t].dy;
  return Walk(w.start(), std::move(steps), region);
}

}  // namespace

FlipResult flip_down_indexed(const Walk& w, const StepSet& s) {
  check_step_set(w, s);
  if (w.region() != Region::Quadrant)
    throw BijectionError(Reason::WrongRegion, "flip_down expects a quadrant walk");
  if (!w.visits_axis())
    throw BijectionError(Reason::NeverHitsAxis, "walk never visits the x-axis");
  const int end = w.end().j;
  // Levels 0..k-1 for an even end 2k, 0..k for an odd end 2k+1.
  const int levels = (end + 1) / 2;

  std::vector<Point> v = w.vertices();
  std::vector<std::size_t> flips;
  for (int level = 0; level < levels; ++level) {
    std::size_t last = v.size();
    for (std::size_t t = v.size(); t-- > 0;) {
      if (v[t].j == level) {
        last = t;
        break;
      }
    }
    // The walk ends above level, so a last visit exists and is followed by an up step.
    flips.push_back(last);
  }
  std::sort(flips.begin(), flips.end());
  return {with_flips(w, flips, Region::RightHalfPlane), flips};
}

Walk flip_down(const Walk& w, const StepSet& s) { return flip_down_indexed(w, s).walk; }

FlipResult flip_up_indexed(const Walk& w, const StepSet& s) {
  check_step_set(w, s);
  if (w.region() != Region::RightHalfPlane)
    throw BijectionError(Reason::WrongRegion, "flip_up expects a half-plane walk");
  const int end = w.end().j;
  if (end != 0 && end != -1)
    throw BijectionError(Reason::BadEndOrdinate,
                         "flip_up expects a walk ending at ordinate 0 or -1, got " + std::to_string(end));
  const int depth = -std::min(w.min_ordinate(), 0);

  std::vector<Point> v = w.vertices();
  std::vector<std::size_t> flips;
  int reached = 0;
  for (std::size_t t = 1; t < v.size() && reached < depth; ++t) {
    if (v[t].j == -(reached + 1)) {
      flips.push_back(t - 1);
      ++reached;
    }
  }
  return {with_flips(w, flips, Region::Quadrant), flips};
}

Walk flip_up(const Walk& w, const StepSet& s) { return flip_up_indexed(w, s).walk; }

}  // namespace walks
