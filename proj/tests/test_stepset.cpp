#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "walks/stepset.hpp"

using namespace walks;

TEST_CASE("parse and print round-trip") {
  const StepSet k = StepSet::parse("(2,-1);(-1,2)");
  CHECK(k == stepsets::knight());
  CHECK(StepSet::parse(k.to_string()) == k);
  CHECK(StepSet::from_json(k.to_json()) == k);
  CHECK(StepSet::parse(" ( 0 , 1 ) ; (1,0);(0,-1) ;(-1,0) ") == stepsets::square());
  CHECK(StepSet::from_json(nlohmann::json::parse("[[1,1],[1,-1],[-1,1],[-1,-1]]")) == stepsets::diagonal());
}

TEST_CASE("construction rejects empty and duplicate step lists") {
  CHECK_THROWS_AS(StepSet(std::vector<Step>{}), std::invalid_argument);
  CHECK_THROWS_AS(StepSet({{1, 0}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(StepSet::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(StepSet::parse("(1,0);(1,0)"), std::invalid_argument);
  CHECK_THROWS_AS(StepSet::parse("(1,0"), std::invalid_argument);
  CHECK_THROWS_AS(StepSet::parse("(1;0)"), std::invalid_argument);
  CHECK_THROWS_AS(StepSet::from_json(nlohmann::json::parse("[[1,2,3]]")), std::invalid_argument);
}

TEST_CASE("max_step is derived from the steps") {
  const StepSet k = stepsets::knight();
  CHECK(k.max_step() == 2);
  CHECK(k.max_abs_dx() == 2);
  CHECK(k.max_abs_dy() == 2);
  const StepSet s = StepSet::parse("(3,0);(0,-1)");
  CHECK(s.max_step() == 3);
  CHECK(s.max_abs_dx() == 3);
  CHECK(s.max_abs_dy() == 1);
  for (const Step& st : s.steps()) CHECK(std::max(std::abs(st.dx), std::abs(st.dy)) <= s.max_step());
}

TEST_CASE("symmetry and height variation predicates") {
  CHECK(is_x_symmetric(stepsets::square()));
  CHECK_FALSE(is_x_symmetric(stepsets::knight()));
  CHECK(is_x_symmetric(stepsets::diagonal()));

  CHECK(has_small_height_variation(stepsets::square()));
  CHECK_FALSE(has_small_height_variation(stepsets::knight()));
  CHECK(has_small_height_variation(StepSet::parse("(1,1);(0,-1);(-1,0)")));
}

TEST_CASE("holonomy criterion verdicts") {
  CHECK(holonomy_criterion(stepsets::square()) == Verdict::GuaranteedDFinite);
  CHECK(holonomy_criterion(stepsets::knight()) == Verdict::Unknown);
  CHECK(holonomy_criterion(StepSet::parse("(1,1);(0,-1);(-1,0)")) == Verdict::Unknown);
  CHECK(holonomy_criterion(stepsets::diagonal()) == Verdict::GuaranteedDFinite);
  CHECK(to_string(Verdict::GuaranteedDFinite) == "GuaranteedDFinite");
  CHECK(to_string(Verdict::Unknown) == "Unknown");
}

TEST_CASE("property: criterion is the conjunction and is order independent") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coord(-2, 2);
  std::uniform_int_distribution<int> size(1, 6);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<Step> steps;
    const int n = size(rng);
    while (static_cast<int>(steps.size()) < n) {
      const Step st{coord(rng), coord(rng)};
      if (std::find(steps.begin(), steps.end(), st) == steps.end()) steps.push_back(st);
    }
    const StepSet a(steps);
    std::shuffle(steps.begin(), steps.end(), rng);
    const StepSet b(steps);
    CHECK(a == b);
    CHECK(is_x_symmetric(a) == is_x_symmetric(b));
    CHECK(has_small_height_variation(a) == has_small_height_variation(b));
    const bool both = is_x_symmetric(a) && has_small_height_variation(a);
    CHECK((holonomy_criterion(a) == Verdict::GuaranteedDFinite) == both);
  }
}
