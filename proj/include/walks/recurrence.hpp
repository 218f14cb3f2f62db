#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "walks/numeric.hpp"
#include "walks/stepset.hpp"

namespace walks::recur {

using Index = std::vector<std::int64_t>;

struct Shift {
  Index h;
  Rational c;
};

/// Initial values a_n for n >= 0 with n not >= start. Kept as a small
/// expression so specs serialize.
class InitialCondition {
 public:
  enum class Kind { Constant, Indicator, Table };

  static InitialCondition constant(const Rational& value);
  /// value at `at`, zero elsewhere.
  static InitialCondition indicator(Index at, const Rational& value = 1);
  static InitialCondition table(std::map<Index, Rational> entries, const Rational& fallback = 0);

  Kind kind() const { return kind_; }
  Rational operator()(const Index& n) const;

  nlohmann::json to_json() const;
  static InitialCondition from_json(const nlohmann::json& j);

 private:
  Kind kind_ = Kind::Constant;
  Rational value_;
  Index at_;
  std::map<Index, Rational> entries_;
};

/// a_n = sum_h c_h a_{n+h} for n >= start; a_n = initial(n) for n >= 0, n not >= start.
struct RecurrenceSpec {
  int d = 0;
  std::vector<Shift> shifts;
  Index start;
  InitialCondition initial = InitialCondition::constant(0);
  /// Points with a negative coordinate evaluate to 0; otherwise reaching one is an error.
  bool zero_extension = true;

  /// Throws std::invalid_argument on dimension mismatches, zero coefficients
  /// or repeated shifts.
  void check() const;

  nlohmann::json to_json() const;
  static RecurrenceSpec from_json(const nlohmann::json& j);
};

/// w >= 0 with w.h <= -1 for every shift: each dependency lowers w.n by at least 1.
struct RankingWeight {
  std::vector<Rational> w;
};

/// lambda >= 0, sum lambda = 1, sum lambda_h h >= 0: the hull of H meets the orthant.
struct HullWitness {
  std::vector<Rational> lambda;
};

struct Validation {
  std::optional<RankingWeight> weight;
  std::optional<HullWitness> witness;

  bool valid() const { return weight.has_value(); }
};

/// Decides by exact LP whether conv(H) avoids the closed orthant, returning
/// a ranking weight if so and an explicit witness otherwise. Among ranking
/// weights it returns one minimizing B (w_1 + ... + w_{d-1}) + w_d with B
/// larger than every shift entry, so trailing coordinates are preferred.
Validation validate(const RecurrenceSpec& spec);

bool check_certificate(const RecurrenceSpec& spec, const RankingWeight& w);
bool check_witness(const RecurrenceSpec& spec, const HullWitness& w);

enum class GfClass { Rational, Algebraic, Unknown };

std::string to_string(GfClass c);

struct ApexClass {
  Index apex;
  GfClass gf_class;
};

/// Apex = componentwise max of H and 0; Rational if it is 0, Algebraic with
/// one positive coordinate, Unknown otherwise.
ApexClass apex_and_class(const RecurrenceSpec& spec);

/// Inclusive coordinate ranges.
struct Box {
  std::vector<std::pair<std::int64_t, std::int64_t>> ranges;

  /// "0:12,0:12".
  static Box parse(const std::string& text);
  std::vector<Index> points() const;
};

struct IndexHash {
  std::size_t operator()(const Index& n) const noexcept;
};

struct EvaluationStats {
  std::size_t points = 0;
  std::size_t dependencies = 0;
  /// Smallest w.n - w.(n+h) seen over all followed dependencies.
  std::optional<Rational> min_rank_drop;
};

/// Demand-driven memoized evaluator. Single writer; queries after
/// construction share the memo.
class Evaluator {
 public:
  /// Throws std::domain_error if the spec's shift hull meets the orthant.
  explicit Evaluator(RecurrenceSpec spec);

  const RecurrenceSpec& spec() const { return spec_; }
  const RankingWeight& weight() const { return weight_; }
  const EvaluationStats& stats() const { return stats_; }

  const Rational& value(const Index& n);

 private:
  enum class Zone { Recurrence, Initial, Negative };
  Zone zone(const Index& n) const;

  RecurrenceSpec spec_;
  RankingWeight weight_;
  std::unordered_map<Index, Rational, IndexHash> memo_;
  EvaluationStats stats_;
};

std::map<Index, Rational> evaluate(const RecurrenceSpec& spec, const Box& box, EvaluationStats* stats = nullptr);

/// Quadrant walk counts as a 3-dimensional recurrence over (i', j', n) with
/// i' = i + offset.i, j' = j + offset.j and shifts (-h, -k, -1).
struct WalkRecurrence {
  RecurrenceSpec spec;
  Point offset;

  Index index(int i, int j, int n) const {
    return {i + offset.i, j + offset.j, n};
  }
};

WalkRecurrence from_stepset(const StepSet& s, Point start);

/// a_{i,j} = a_{i+1,j-2} + a_{i-2,j+1} for i, j >= 2, and 1 otherwise.
RecurrenceSpec knight_recurrence();

/// Coefficients f_0..f_{n_max} of F(x) = sum_{i>=2} a_{i,2} x^{i+1} for the
/// knight recurrence.
std::vector<BigInt> f_sequence(int n_max);

}  // namespace walks::recur
