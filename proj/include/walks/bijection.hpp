#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "walks/enumerate.hpp"
#include "walks/stepset.hpp"

namespace walks {

/// A walk confined to a region. The constructor rejects walks that leave it.
class Walk {
 public:
  /// Throws std::domain_error if the start or any later vertex leaves region.
  Walk(Point start, std::vector<Step> steps, Region region);

  Point start() const { return start_; }
  const std::vector<Step>& steps() const { return steps_; }
  Region region() const { return region_; }
  std::size_t length() const { return steps_.size(); }

  /// w_0 .. w_n.
  std::vector<Point> vertices() const;
  Point end() const;
  int min_ordinate() const;
  bool visits_axis() const { return min_ordinate() <= 0; }

  bool operator==(const Walk&) const = default;

 private:
  Point start_;
  std::vector<Step> steps_;
  Region region_;
};

class BijectionError : public std::domain_error {
 public:
  enum class Reason {
    AsymmetricStepSet,
    LargeHeightVariation,
    StepNotInSet,
    WrongRegion,
    NeverHitsAxis,
    BadEndOrdinate,
  };

  BijectionError(Reason reason, const std::string& what) : std::domain_error(what), reason_(reason) {}
  Reason reason() const { return reason_; }

 private:
  Reason reason_;
};

/// Image of a flip together with the indices (0-based) of the flipped steps.
struct FlipResult {
  Walk walk;
  std::vector<std::size_t> flipped;
};

/// Quadrant walk hitting the x-axis and ending at ordinate 2k (resp. 2k+1)
/// to the half-plane walk ending at ordinate 0 (resp. -1). Flips the steps
/// that follow the last visits to levels 0..k-1 (resp. 0..k).
FlipResult flip_down_indexed(const Walk& w, const StepSet& s);
Walk flip_down(const Walk& w, const StepSet& s);

/// Inverse of flip_down: for a half-plane walk ending at 0 or -1 whose lowest
/// ordinate is -m, flips the first steps reaching levels -1..-m.
FlipResult flip_up_indexed(const Walk& w, const StepSet& s);
Walk flip_up(const Walk& w, const StepSet& s);

}  // namespace walks
