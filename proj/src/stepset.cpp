#include "walks/stepset.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <stdexcept>

namespace walks {

StepSet::StepSet(std::vector<Step> steps) : steps_(std::move(steps)) {
  if (steps_.empty()) throw std::invalid_argument("step set is empty");
  std::sort(steps_.begin(), steps_.end());
  auto dup = std::adjacent_find(steps_.begin(), steps_.end());
  if (dup != steps_.end()) {
    throw std::invalid_argument("duplicate step (" + std::to_string(dup->dx) + "," +
                                std::to_string(dup->dy) + ")");
  }
  for (const Step& s : steps_) {
    max_abs_dx_ = std::max(max_abs_dx_, std::abs(s.dx));
    max_abs_dy_ = std::max(max_abs_dy_, std::abs(s.dy));
  }
  max_step_ = std::max(max_abs_dx_, max_abs_dy_);
}

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= text_.size();
  }
  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  int integer() {
    skip_ws();
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    if (first != last && *first == '+') ++first;
    int value = 0;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{}) fail("expected integer");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return value;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("cannot parse step set \"" + std::string(text_) + "\" at offset " +
                                std::to_string(pos_) + ": " + what);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

StepSet StepSet::parse(std::string_view text) {
  Cursor cur(text);
  std::vector<Step> steps;
  do {
    cur.expect('(');
    Step s;
    s.dx = cur.integer();
    cur.expect(',');
    s.dy = cur.integer();
    cur.expect(')');
    steps.push_back(s);
  } while (cur.accept(';'));
  if (!cur.done()) cur.fail("trailing characters");
  return StepSet(std::move(steps));
}

StepSet StepSet::from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("step set JSON must be an array of [dx,dy] pairs");
  std::vector<Step> steps;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
      throw std::invalid_argument("step set JSON entry is not an integer pair: " + e.dump());
    }
    steps.push_back({e[0].get<int>(), e[1].get<int>()});
  }
  return StepSet(std::move(steps));
}

std::string StepSet::to_string() const {
  std::string out;
  for (const Step& s : steps_) {
    if (!out.empty()) out += ';';
    out += "(" + std::to_string(s.dx) + "," + std::to_string(s.dy) + ")";
  }
  return out;
}

nlohmann::json StepSet::to_json() const {
  nlohmann::json j = nlohmann::json::array();
  for (const Step& s : steps_) j.push_back({s.dx, s.dy});
  return j;
}

bool StepSet::contains(Step s) const { return std::binary_search(steps_.begin(), steps_.end(), s); }

namespace stepsets {
StepSet square() { return StepSet({{0, 1}, {1, 0}, {0, -1}, {-1, 0}}); }
StepSet diagonal() { return StepSet({{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}); }
StepSet knight() { return StepSet({{2, -1}, {-1, 2}}); }
}  // namespace stepsets

std::string to_string(Verdict v) {
  return v == Verdict::GuaranteedDFinite ? "GuaranteedDFinite" : "Unknown";
}

bool is_x_symmetric(const StepSet& s) {
  return std::all_of(s.steps().begin(), s.steps().end(),
                     [&](Step st) { return s.contains({st.dx, -st.dy}); });
}

bool has_small_height_variation(const StepSet& s) { return s.max_abs_dy() <= 1; }

Verdict holonomy_criterion(const StepSet& s) {
  return is_x_symmetric(s) && has_small_height_variation(s) ? Verdict::GuaranteedDFinite
                                                            : Verdict::Unknown;
}

}  // namespace walks
