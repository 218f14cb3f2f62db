#include "walks/recurrence.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "walks/lp.hpp"

namespace walks::recur {

namespace {

std::string index_str(const Index& n) {
  std::string s = "(";
  for (std::size_t k = 0; k < n.size(); ++k) s += (k ? "," : "") + std::to_string(n[k]);
  return s + ")";
}

Rational rational_from_json(const nlohmann::json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()));
  throw std::invalid_argument("expected a rational as a decimal string, got " + j.dump());
}

Index index_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an integer array, got " + j.dump());
  Index out;
  for (const auto& e : j) {
    if (!e.is_number_integer()) throw std::invalid_argument("expected an integer array, got " + j.dump());
    out.push_back(e.get<std::int64_t>());
  }
  return out;
}

}  // namespace

// ------------------------------------------------------- InitialCondition

InitialCondition InitialCondition::constant(const Rational& value) {
  InitialCondition ic;
  ic.kind_ = Kind::Constant;
  ic.value_ = value;
  return ic;
}

InitialCondition InitialCondition::indicator(Index at, const Rational& value) {
  InitialCondition ic;
  ic.kind_ = Kind::Indicator;
  ic.at_ = std::move(at);
  ic.value_ = value;
  return ic;
}

InitialCondition InitialCondition::table(std::map<Index, Rational> entries, const Rational& fallback) {
  InitialCondition ic;
  ic.kind_ = Kind::Table;
  ic.entries_ = std::move(entries);
  ic.value_ = fallback;
  return ic;
}

Rational InitialCondition::operator()(const Index& n) const {
  switch (kind_) {
    case Kind::Constant: return value_;
    case Kind::Indicator: return n == at_ ? value_ : Rational(0);
    case Kind::Table: {
      auto it = entries_.find(n);
      return it == entries_.end() ? value_ : it->second;
    }
  }
  return 0;
}

nlohmann::json InitialCondition::to_json() const {
  switch (kind_) {
    case Kind::Constant: return {{"type", "constant"}, {"value", to_decimal(value_)}};
    case Kind::Indicator: return {{"type", "indicator"}, {"at", at_}, {"value", to_decimal(value_)}};
    case Kind::Table: {
      nlohmann::json entries = nlohmann::json::array();
      for (const auto& [n, v] : entries_) entries.push_back({{"at", n}, {"value", to_decimal(v)}});
      return {{"type", "table"}, {"entries", entries}, {"default", to_decimal(value_)}};
    }
  }
  return {};
}

InitialCondition InitialCondition::from_json(const nlohmann::json& j) {
  const std::string type = j.at("type").get<std::string>();
  if (type == "constant") return constant(rational_from_json(j.at("value")));
  if (type == "indicator") {
    return indicator(index_from_json(j.at("at")), j.contains("value") ? rational_from_json(j["value"]) : Rational(1));
  }
  if (type == "table") {
    std::map<Index, Rational> entries;
    for (const auto& e : j.at("entries")) entries[index_from_json(e.at("at"))] = rational_from_json(e.at("value"));
    return table(std::move(entries), j.contains("default") ? rational_from_json(j["default"]) : Rational(0));
  }
  throw std::invalid_argument("unknown initial condition type \"" + type + "\"");
}

// --------------------------------------------------------- RecurrenceSpec

void RecurrenceSpec::check() const {
  if (d <= 0) throw std::invalid_argument("recurrence dimension must be positive");
  if (shifts.empty()) throw std::invalid_argument("recurrence needs at least one shift");
  if (static_cast<int>(start.size()) != d) throw std::invalid_argument("start point has wrong dimension");
  for (auto s : start)
    if (s < 0) throw std::invalid_argument("start point must be nonnegative");
  std::set<Index> seen;
  for (const Shift& sh : shifts) {
    if (static_cast<int>(sh.h.size()) != d) throw std::invalid_argument("shift " + index_str(sh.h) + " has wrong dimension");
    if (sgn(sh.c) == 0) throw std::invalid_argument("shift " + index_str(sh.h) + " has a zero coefficient");
    if (!seen.insert(sh.h).second) throw std::invalid_argument("repeated shift " + index_str(sh.h));
  }
}

nlohmann::json RecurrenceSpec::to_json() const {
  nlohmann::json sh = nlohmann::json::array();
  for (const Shift& s : shifts) sh.push_back({{"h", s.h}, {"c", to_decimal(s.c)}});
  return {{"d", d}, {"shifts", sh}, {"start", start}, {"initial", initial.to_json()}, {"zero_extension", zero_extension}};
}

RecurrenceSpec RecurrenceSpec::from_json(const nlohmann::json& j) {
  RecurrenceSpec spec;
  spec.d = j.at("d").get<int>();
  for (const auto& e : j.at("shifts")) spec.shifts.push_back({index_from_json(e.at("h")), rational_from_json(e.at("c"))});
  spec.start = index_from_json(j.at("start"));
  spec.initial = InitialCondition::from_json(j.at("initial"));
  if (j.contains("zero_extension")) spec.zero_extension = j["zero_extension"].get<bool>();
  spec.check();
  return spec;
}

// ------------------------------------------------------------- validation

Validation validate(const RecurrenceSpec& spec) {
  spec.check();
  const auto d = static_cast<std::size_t>(spec.d);
  const std::size_t k = spec.shifts.size();

  std::int64_t largest = 0;
  for (const Shift& s : spec.shifts)
    for (auto v : s.h) largest = std::max(largest, v < 0 ? -v : v);

  // Ranking weight: variables w (d) then surplus s (k); -h.w - s_h = 1.
  lp::Problem primal;
  primal.c.assign(d + k, 0);
  for (std::size_t c = 0; c < d; ++c) primal.c[c] = c + 1 < d ? Rational(largest + 1) : Rational(1);
  for (std::size_t r = 0; r < k; ++r) {
    std::vector<Rational> row(d + k);
    for (std::size_t c = 0; c < d; ++c) row[c] = Rational(static_cast<long>(-spec.shifts[r].h[c]));
    row[d + r] = -1;
    primal.A.push_back(std::move(row));
    primal.b.push_back(1);
  }
  const lp::Solution ps = lp::solve(primal);

  // Witness: variables lambda (k) then surplus t (d); sum lambda h - t = 0, sum lambda = 1.
  lp::Problem dual;
  dual.c.assign(k + d, 0);
  for (std::size_t r = 0; r < d; ++r) {
    std::vector<Rational> row(k + d);
    for (std::size_t c = 0; c < k; ++c) row[c] = Rational(static_cast<long>(spec.shifts[c].h[r]));
    row[k + r] = -1;
    dual.A.push_back(std::move(row));
    dual.b.push_back(0);
  }
  std::vector<Rational> ones(k + d);
  for (std::size_t c = 0; c < k; ++c) ones[c] = 1;
  dual.A.push_back(std::move(ones));
  dual.b.push_back(1);
  const lp::Solution ds = lp::solve(dual);

  const bool primal_ok = ps.status == lp::Status::Optimal;
  const bool dual_ok = ds.status == lp::Status::Optimal;
  if (primal_ok == dual_ok) throw std::logic_error("ranking weight and hull witness LPs disagree");

  Validation v;
  if (primal_ok) v.weight = RankingWeight{{ps.x.begin(), ps.x.begin() + static_cast<std::ptrdiff_t>(d)}};
  else v.witness = HullWitness{{ds.x.begin(), ds.x.begin() + static_cast<std::ptrdiff_t>(k)}};
  return v;
}

bool check_certificate(const RecurrenceSpec& spec, const RankingWeight& w) {
  if (static_cast<int>(w.w.size()) != spec.d) return false;
  for (const Rational& x : w.w)
    if (sgn(x) < 0) return false;
  for (const Shift& s : spec.shifts) {
    Rational dot;
    for (std::size_t c = 0; c < w.w.size(); ++c) dot += w.w[c] * Rational(static_cast<long>(s.h[c]));
    if (dot > -1) return false;
  }
  return true;
}

bool check_witness(const RecurrenceSpec& spec, const HullWitness& w) {
  if (w.lambda.size() != spec.shifts.size()) return false;
  Rational total;
  std::vector<Rational> point(static_cast<std::size_t>(spec.d));
  for (std::size_t r = 0; r < w.lambda.size(); ++r) {
    if (sgn(w.lambda[r]) < 0) return false;
    total += w.lambda[r];
    for (std::size_t c = 0; c < point.size(); ++c) point[c] += w.lambda[r] * Rational(static_cast<long>(spec.shifts[r].h[c]));
  }
  if (total != 1) return false;
  return std::all_of(point.begin(), point.end(), [](const Rational& x) { return sgn(x) >= 0; });
}

std::string to_string(GfClass c) {
  switch (c) {
    case GfClass::Rational: return "Rational";
    case GfClass::Algebraic: return "Algebraic";
    case GfClass::Unknown: return "Unknown";
  }
  return "?";
}

ApexClass apex_and_class(const RecurrenceSpec& spec) {
  spec.check();
  Index apex(static_cast<std::size_t>(spec.d), 0);
  for (const Shift& s : spec.shifts)
    for (std::size_t c = 0; c < apex.size(); ++c) apex[c] = std::max(apex[c], s.h[c]);
  const auto positive = std::count_if(apex.begin(), apex.end(), [](auto v) { return v > 0; });
  const GfClass cls = positive == 0 ? GfClass::Rational : positive == 1 ? GfClass::Algebraic : GfClass::Unknown;
  return {apex, cls};
}

// ------------------------------------------------------------- evaluation

Box Box::parse(const std::string& text) {
  Box box;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    auto colon = part.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("box range \"" + part + "\" is not lo:hi");
    try {
      box.ranges.emplace_back(std::stoll(part.substr(0, colon)), std::stoll(part.substr(colon + 1)));
    } catch (const std::logic_error&) {
      throw std::invalid_argument("box range \"" + part + "\" is not lo:hi");
    }
    if (box.ranges.back().first > box.ranges.back().second) throw std::invalid_argument("empty box range \"" + part + "\"");
  }
  if (box.ranges.empty()) throw std::invalid_argument("empty box");
  return box;
}

std::vector<Index> Box::points() const {
  std::vector<Index> out;
  Index cur;
  for (const auto& r : ranges) cur.push_back(r.first);
  for (;;) {
    out.push_back(cur);
    std::size_t k = 0;
    for (; k < ranges.size(); ++k) {
      if (cur[k] < ranges[k].second) {
        ++cur[k];
        break;
      }
      cur[k] = ranges[k].first;
    }
    if (k == ranges.size()) return out;
  }
}

std::size_t IndexHash::operator()(const Index& n) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (auto v : n) h ^= std::hash<std::int64_t>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

Evaluator::Evaluator(RecurrenceSpec spec) : spec_(std::move(spec)) {
  Validation v = validate(spec_);
  if (!v.valid()) throw std::domain_error("shift hull meets the first orthant; the recurrence is not computable");
  weight_ = *v.weight;
}

Evaluator::Zone Evaluator::zone(const Index& n) const {
  bool above_start = true;
  for (std::size_t k = 0; k < n.size(); ++k) {
    if (n[k] < 0) return Zone::Negative;
    if (n[k] < spec_.start[k]) above_start = false;
  }
  return above_start ? Zone::Recurrence : Zone::Initial;
}

const Rational& Evaluator::value(const Index& target) {
  if (static_cast<int>(target.size()) != spec_.d) throw std::invalid_argument("point " + index_str(target) + " has wrong dimension");
  if (auto it = memo_.find(target); it != memo_.end()) return it->second;

  std::vector<Rational> rank_drop;
  rank_drop.reserve(spec_.shifts.size());
  for (const Shift& s : spec_.shifts) {
    Rational dot;
    for (std::size_t c = 0; c < s.h.size(); ++c) dot -= weight_.w[c] * Rational(static_cast<long>(s.h[c]));
    rank_drop.push_back(dot);
  }

  std::vector<Index> stack{target};
  Index dep(target.size());
  while (!stack.empty()) {
    const Index n = stack.back();
    if (memo_.count(n)) {
      stack.pop_back();
      continue;
    }
    switch (zone(n)) {
      case Zone::Negative:
        if (!spec_.zero_extension) throw std::domain_error("evaluation reached " + index_str(n) + " outside the orthant");
        memo_.emplace(n, 0);
        stack.pop_back();
        continue;
      case Zone::Initial:
        memo_.emplace(n, spec_.initial(n));
        stack.pop_back();
        continue;
      case Zone::Recurrence: break;
    }
    bool ready = true;
    for (const Shift& s : spec_.shifts) {
      for (std::size_t c = 0; c < n.size(); ++c) dep[c] = n[c] + s.h[c];
      if (!memo_.count(dep)) {
        stack.push_back(dep);
        ready = false;
      }
    }
    if (!ready) continue;
    Rational sum;
    for (std::size_t r = 0; r < spec_.shifts.size(); ++r) {
      const Shift& s = spec_.shifts[r];
      for (std::size_t c = 0; c < n.size(); ++c) dep[c] = n[c] + s.h[c];
      sum += s.c * memo_.at(dep);
      ++stats_.dependencies;
      if (!stats_.min_rank_drop || rank_drop[r] < *stats_.min_rank_drop) stats_.min_rank_drop = rank_drop[r];
    }
    memo_.emplace(n, std::move(sum));
    ++stats_.points;
    stack.pop_back();
  }
  return memo_.at(target);
}

std::map<Index, Rational> evaluate(const RecurrenceSpec& spec, const Box& box, EvaluationStats* stats) {
  if (static_cast<int>(box.ranges.size()) != spec.d) throw std::invalid_argument("box dimension does not match the recurrence");
  Evaluator ev(spec);
  std::map<Index, Rational> out;
  for (const Index& n : box.points()) out.emplace(n, ev.value(n));
  if (stats) *stats = ev.stats();
  return out;
}

// -------------------------------------------------------------- instances

WalkRecurrence from_stepset(const StepSet& s, Point start) {
  if (start.i < 0 || start.j < 0) throw std::domain_error("start must lie in the quadrant");
  int max_h = 0;
  int max_k = 0;
  for (const Step& st : s.steps()) {
    max_h = std::max(max_h, st.dx);
    max_k = std::max(max_k, st.dy);
  }
  WalkRecurrence wr;
  wr.offset = {max_h, max_k};
  wr.spec.d = 3;
  for (const Step& st : s.steps()) wr.spec.shifts.push_back({{-st.dx, -st.dy, -1}, Rational(1)});
  wr.spec.start = {max_h, max_k, 1};
  wr.spec.initial = InitialCondition::indicator(wr.index(start.i, start.j, 0));
  return wr;
}

RecurrenceSpec knight_recurrence() {
  RecurrenceSpec spec;
  spec.d = 2;
  spec.shifts = {{{1, -2}, Rational(1)}, {{-2, 1}, Rational(1)}};
  spec.start = {2, 2};
  spec.initial = InitialCondition::constant(1);
  return spec;
}

std::vector<BigInt> f_sequence(int n_max) {
  if (n_max < 2) throw std::invalid_argument("f_sequence needs n_max >= 2");
  Evaluator ev(knight_recurrence());
  std::vector<BigInt> f(static_cast<std::size_t>(n_max) + 1);
  for (int m = 3; m <= n_max; ++m) {
    const Rational& a = ev.value({m - 1, 2});
    if (a.get_den() != 1) throw std::logic_error("non-integral recurrence value");
    f[static_cast<std::size_t>(m)] = a.get_num();
  }
  return f;
}

}  // namespace walks::recur
