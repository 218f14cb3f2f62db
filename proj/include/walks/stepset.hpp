#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace walks {

/// A lattice offset (dx, dy).
struct Step {
  int dx = 0;
  int dy = 0;

  constexpr auto operator<=>(const Step&) const = default;
};

/// A lattice point (i, j).
struct Point {
  int i = 0;
  int j = 0;

  constexpr auto operator<=>(const Point&) const = default;
};

constexpr Point operator+(Point p, Step s) { return {p.i + s.dx, p.j + s.dy}; }
constexpr Point operator-(Point p, Step s) { return {p.i - s.dx, p.j - s.dy}; }

/// Finite set of integer steps. Stored sorted lexicographically, so two sets
/// with the same elements compare equal regardless of input order.
class StepSet {
 public:
  /// Throws std::invalid_argument on an empty list or duplicate steps.
  explicit StepSet(std::vector<Step> steps);

  /// Parses the compact form "(2,-1);(-1,2)". Whitespace is ignored.
  static StepSet parse(std::string_view text);
  /// Parses a JSON array of [dx, dy] pairs.
  static StepSet from_json(const nlohmann::json& j);

  std::string to_string() const;
  nlohmann::json to_json() const;

  std::span<const Step> steps() const { return steps_; }
  std::size_t size() const { return steps_.size(); }
  bool contains(Step s) const;

  /// max over steps of max(|dx|, |dy|).
  int max_step() const { return max_step_; }
  int max_abs_dx() const { return max_abs_dx_; }
  int max_abs_dy() const { return max_abs_dy_; }

  bool operator==(const StepSet&) const = default;

 private:
  std::vector<Step> steps_;
  int max_step_ = 0;
  int max_abs_dx_ = 0;
  int max_abs_dy_ = 0;
};

namespace stepsets {
/// N, E, S, W.
StepSet square();
/// NE, SE, NW, SW.
StepSet diagonal();
/// {(2,-1), (-1,2)}.
StepSet knight();
}  // namespace stepsets

enum class Verdict { GuaranteedDFinite, Unknown };

std::string to_string(Verdict v);

bool is_x_symmetric(const StepSet& s);
bool has_small_height_variation(const StepSet& s);

/// Sufficient condition only: Unknown says nothing about the walks' nature.
Verdict holonomy_criterion(const StepSet& s);

}  // namespace walks
