#include "walks/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "walks/analytic.hpp"
#include "walks/bijection.hpp"
#include "walks/enumerate.hpp"
#include "walks/identities.hpp"
#include "walks/recurrence.hpp"

namespace walks::cli {

namespace {

using nlohmann::json;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Raised when a check ran to completion and did not hold.
struct CheckFailed {};

Point parse_point(const std::string& text, const std::string& flag) {
  Point p{};
  const char* first = text.data();
  const char* last = first + text.size();
  auto [mid, ec] = std::from_chars(first, last, p.i);
  if (ec == std::errc() && mid != last && *mid == ',') {
    auto [end, ec2] = std::from_chars(mid + 1, last, p.j);
    if (ec2 == std::errc() && end == last) return p;
  }
  throw UsageError(flag + ": expected i,j but got \"" + text + "\"");
}

std::complex<double> parse_complex(const std::string& text, const std::string& flag) {
  std::istringstream in(text);
  double re = 0, im = 0;
  char comma = 0;
  if (!(in >> re)) throw UsageError(flag + ": expected re[,im] but got \"" + text + "\"");
  if (in >> comma) {
    if (comma != ',' || !(in >> im)) throw UsageError(flag + ": expected re[,im] but got \"" + text + "\"");
  }
  return {re, im};
}

json complex_json(std::complex<double> z) { return json::array({z.real(), z.imag()}); }

json rational_pair(const Rational& r) { return json::array({r.get_num().get_str(), r.get_den().get_str()}); }

StepSet parse_steps(const std::string& text, const std::string& flag) {
  try {
    if (!text.empty() && text.front() == '[') return StepSet::from_json(json::parse(text));
    return StepSet::parse(text);
  } catch (const std::exception& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

// Writes to --out when given, otherwise to the command's stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : out_(&fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw UsageError("--out: cannot open \"" + path + "\" for writing");
      out_ = &file_;
    }
  }
  std::ostream& operator*() { return *out_; }

 private:
  std::ofstream file_;
  std::ostream* out_;
};

// ------------------------------------------------------------------ count

struct CountOpts {
  std::string steps = "(2,-1);(-1,2)";
  std::string start = "1,1";
  int n_max = 10;
  std::string region = "quadrant";
  bool aggregate = false;
  std::string format = "csv";
  std::string window;
  std::string out;
};

void count_cmd(const CountOpts& o, std::ostream& os) {
  const StepSet s = parse_steps(o.steps, "--steps");
  const Point start = parse_point(o.start, "--start");
  if (o.n_max < 0) throw UsageError("--nmax: must be nonnegative");
  if (o.region != "quadrant" && o.region != "half-plane") throw UsageError("--region: expected quadrant or half-plane");
  if (o.format == "pretty" && !o.aggregate) throw UsageError("--format pretty requires --aggregate");
  std::optional<Point> window;
  if (!o.window.empty()) window = parse_point(o.window, "--window");
  if (o.region == "quadrant" && (start.i < 0 || start.j < 0)) throw UsageError("--start: must lie in the quadrant");
  if (start.i < 0) throw UsageError("--start: must have i >= 0");

  const CountGrid grid = o.region == "quadrant" ? count_quadrant(s, start, o.n_max) : count_half_plane(s, start, o.n_max);
  auto inside = [&](Point p) { return !window || (p.i <= window->i && p.j <= window->j && p.j >= -window->j); };

  Sink sink(o.out, os);
  std::ostream& out = *sink;
  if (o.aggregate) {
    const auto agg = grid.aggregate();
    if (o.format == "csv") {
      out << "i,j,count\n";
      for (const auto& [p, v] : agg)
        if (sgn(v) != 0 && inside(p)) out << p.i << ',' << p.j << ',' << v.get_str() << '\n';
    } else if (o.format == "json") {
      json cells = json::array();
      for (const auto& [p, v] : agg)
        if (sgn(v) != 0 && inside(p)) cells.push_back({{"i", p.i}, {"j", p.j}, {"count", v.get_str()}});
      out << json{{"steps", s.to_json()}, {"start", {start.i, start.j}}, {"region", o.region}, {"n_max", o.n_max},
                  {"aggregate", true}, {"cells", cells}}
                 .dump(2)
          << '\n';
    } else {
      int i_hi = 0, j_hi = 0, j_lo = 0;
      std::size_t width = 1;
      for (const auto& [p, v] : agg) {
        if (sgn(v) == 0 || !inside(p)) continue;
        i_hi = std::max(i_hi, p.i);
        j_hi = std::max(j_hi, p.j);
        j_lo = std::min(j_lo, p.j);
        width = std::max(width, v.get_str().size());
      }
      if (window) {
        i_hi = window->i;
        j_hi = window->j;
      }
      width = std::max(width, std::to_string(std::max(i_hi, j_hi)).size());
      for (int j = j_hi; j >= j_lo; --j) {
        out << std::setw(4) << j << " |";
        for (int i = 0; i <= i_hi; ++i) {
          auto it = agg.find({i, j});
          const std::string cell = it == agg.end() || sgn(it->second) == 0 ? "" : it->second.get_str();
          out << ' ' << std::setw(static_cast<int>(width)) << cell;
        }
        out << '\n';
      }
      out << std::string(6, ' ') << std::string((width + 1) * static_cast<std::size_t>(i_hi + 1), '-') << '\n';
      out << std::string(6, ' ');
      for (int i = 0; i <= i_hi; ++i) out << ' ' << std::setw(static_cast<int>(width)) << i;
      out << '\n';
    }
    return;
  }
  if (o.format == "csv") {
    out << "i,j,n,count\n";
    for (int n = 0; n <= grid.n_max(); ++n)
      for (const auto& [p, v] : grid.layer(n))
        if (sgn(v) != 0 && inside(p)) out << p.i << ',' << p.j << ',' << n << ',' << v.get_str() << '\n';
  } else {
    json cells = json::array();
    for (int n = 0; n <= grid.n_max(); ++n)
      for (const auto& [p, v] : grid.layer(n))
        if (sgn(v) != 0 && inside(p)) cells.push_back({{"i", p.i}, {"j", p.j}, {"n", n}, {"count", v.get_str()}});
    out << json{{"steps", s.to_json()}, {"start", {start.i, start.j}}, {"region", o.region}, {"n_max", o.n_max},
                {"aggregate", false}, {"cells", cells}}
               .dump(2)
        << '\n';
  }
}

// -------------------------------------------------------------- bijection

struct BijectionOpts {
  std::string steps = "(0,1);(1,0);(0,-1);(-1,0)";
  std::string start = "0,0";
  std::string walk;
  std::string legend = "N=(0,1),E=(1,0),S=(0,-1),W=(-1,0),NE=(1,1),SE=(1,-1),NW=(-1,1),SW=(-1,-1)";
  std::string direction = "down";
  std::string format = "pretty";
};

std::map<std::string, Step> parse_legend(const std::string& text) {
  std::map<std::string, Step> legend;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto eq = text.find('=', pos);
    const auto close = text.find(')', eq);
    if (eq == std::string::npos || close == std::string::npos) throw UsageError("--legend: expected NAME=(dx,dy),...");
    const std::string name = text.substr(pos, eq - pos);
    const StepSet one = parse_steps(text.substr(eq + 1, close - eq), "--legend");
    legend[name] = one.steps().front();
    pos = close + 1;
    if (pos < text.size()) {
      if (text[pos] != ',') throw UsageError("--legend: expected ',' after " + name);
      ++pos;
    }
  }
  return legend;
}

void bijection_cmd(const BijectionOpts& o, std::ostream& out) {
  const StepSet s = parse_steps(o.steps, "--steps");
  const Point start = parse_point(o.start, "--start");
  if (o.direction != "down" && o.direction != "up") throw UsageError("--direction: expected down or up");
  const auto legend = parse_legend(o.legend);
  std::vector<Step> steps;
  std::stringstream ss(o.walk);
  std::string name;
  while (std::getline(ss, name, ',')) {
    if (name.empty()) continue;
    auto it = legend.find(name);
    if (it != legend.end()) {
      steps.push_back(it->second);
    } else if (name.front() == '(') {
      steps.push_back(parse_steps(name, "--walk").steps().front());
    } else {
      throw UsageError("--walk: step \"" + name + "\" is not in the legend");
    }
  }
  auto label = [&](Step st) {
    for (const auto& [n, v] : legend)
      if (v == st) return n;
    return "(" + std::to_string(st.dx) + "," + std::to_string(st.dy) + ")";
  };

  const Region from = o.direction == "down" ? Region::Quadrant : Region::RightHalfPlane;
  const Walk w(start, steps, from);
  const FlipResult r = o.direction == "down" ? flip_down_indexed(w, s) : flip_up_indexed(w, s);
  std::vector<std::string> names;
  for (const Step& st : r.walk.steps()) names.push_back(label(st));
  const Point end = r.walk.end();
  if (o.format == "json") {
    out << json{{"direction", o.direction},
                {"walk", names},
                {"flipped", r.flipped},
                {"end", {end.i, end.j}},
                {"min_ordinate", r.walk.min_ordinate()}}
               .dump(2)
        << '\n';
    return;
  }
  std::string joined;
  for (const auto& n : names) joined += (joined.empty() ? "" : ",") + n;
  std::string idx;
  for (auto k : r.flipped) idx += (idx.empty() ? "" : ",") + std::to_string(k);
  out << "image: " << (joined.empty() ? "(empty)" : joined) << '\n'
      << "flipped: " << (idx.empty() ? "(none)" : idx) << '\n'
      << "end: " << end.i << ',' << end.j << '\n';
}

// ----------------------------------------------------------------- series

struct SeriesOpts {
  std::string which = "xi";
  int order = 20;
  std::string format = "json";
};

void series_cmd(const SeriesOpts& o, std::ostream& out) {
  if (o.order < 0) throw UsageError("--order: must be nonnegative");
  std::vector<Rational> coeffs;
  std::vector<Rational> odd;
  if (o.which == "xi") {
    if (o.order < 2) throw UsageError("--order: xi needs order >= 2");
    coeffs = series::xi_series(o.order).coeffs();
  } else if (o.which == "psi") {
    coeffs = series::psi_series(o.order).coeffs();
  } else if (o.which == "G") {
    if (o.order < 6) throw UsageError("--order: G needs order >= 6");
    coeffs = series::g_series_iterated(o.order).coeffs();
  } else if (o.which == "F") {
    coeffs = series::f_series(o.order).coeffs();
  } else {
    throw UsageError("--which: expected xi, psi, G or F");
  }
  coeffs.resize(static_cast<std::size_t>(o.order) + 1);

  if (o.format == "json") {
    json c = json::array();
    for (const Rational& r : coeffs) c.push_back(rational_pair(r));
    out << json{{"which", o.which}, {"order", o.order}, {"coeffs", c}}.dump() << '\n';
  } else if (o.format == "csv") {
    out << "k,num,den\n";
    for (std::size_t k = 0; k < coeffs.size(); ++k)
      out << k << ',' << coeffs[k].get_num().get_str() << ',' << coeffs[k].get_den().get_str() << '\n';
  } else {
    std::string terms;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      if (sgn(coeffs[k]) == 0) continue;
      terms += (terms.empty() ? "" : (sgn(coeffs[k]) > 0 ? " + " : " - "));
      const Rational mag = terms.size() > 3 || sgn(coeffs[k]) > 0 ? abs(coeffs[k]) : coeffs[k];
      terms += (mag == 1 && k > 0 ? "" : mag.get_str()) + (k == 0 ? "" : k == 1 ? "x" : "x^" + std::to_string(k));
    }
    out << (terms.empty() ? "0" : terms) << " + O(x^" << o.order + 1 << ")\n";
  }
}

// ----------------------------------------------------------------- verify

struct VerifyOpts {
  std::string identity = "main";
  int order = 30;
  int branch = 0;
  std::vector<int> perturb_g;
  std::vector<int> perturb_f;
  std::string format = "pretty";
};

series::USeries perturb(series::USeries s, const std::vector<int>& at, const std::string& flag) {
  std::vector<Rational> c = s.coeffs();
  c.resize(static_cast<std::size_t>(std::max(s.order(), 0)) + 1);
  for (int k : at) {
    if (k < 0 || k > s.order()) throw UsageError(flag + ": index " + std::to_string(k) + " outside the series");
    c[static_cast<std::size_t>(k)] += 1;
  }
  return series::USeries(std::move(c), s.order());
}

void verify_cmd(const VerifyOpts& o, std::ostream& out) {
  using namespace series;
  Identity id{};
  try {
    id = parse_identity(o.identity);
  } catch (const std::invalid_argument&) {
    throw UsageError("--identity: expected main, knight-kernel, diagonal or main2");
  }
  if (o.order < 0) throw UsageError("--order: must be nonnegative");
  if (o.branch < 0 || o.branch > 2) throw UsageError("--branch: expected 0, 1 or 2");
  if (o.branch != 0 && id != Identity::Main2) throw UsageError("--branch applies only to main2");
  if (!o.perturb_f.empty() && id != Identity::Main2) throw UsageError("--perturb-f applies only to main2");
  if (!o.perturb_g.empty() && id == Identity::Main2) throw UsageError("--perturb-g does not apply to main2");
  const auto branch = static_cast<Branch>(o.branch);

  IdentityInputs in;
  if (!o.perturb_g.empty()) {
    const int g_order = id == Identity::Diagonal ? 3 * (o.order / 4) : o.order;
    in.g = perturb(knight_g_series(g_order), o.perturb_g, "--perturb-g");
  }
  if (!o.perturb_f.empty()) {
    const int f_order = branch == Branch::Xi0 ? o.order : 2 * o.order + 1;
    in.f = perturb(f_series(f_order), o.perturb_f, "--perturb-f");
  }
  const IdentityReport r = verify_identity(id, o.order, branch, in);
  if (o.format == "json") {
    json j{{"identity", to_string(id)}, {"order", o.order}, {"branch", o.branch}, {"holds", r.holds},
           {"terms_checked", r.terms_checked}};
    if (r.first_failure) {
      j["first_failure"] = {{"term", r.first_failure->term.to_string()},
                            {"lhs", to_decimal(r.first_failure->lhs)},
                            {"rhs", to_decimal(r.first_failure->rhs)}};
    } else {
      j["first_failure"] = nullptr;
    }
    out << j.dump(2) << '\n';
  } else if (r.holds) {
    out << "holds\n";
  } else {
    out << "fails at " << r.first_failure->term.to_string() << ": lhs " << to_decimal(r.first_failure->lhs) << ", rhs "
        << to_decimal(r.first_failure->rhs) << '\n';
  }
  if (!r.holds) throw CheckFailed{};
}

// --------------------------------------------------------------- analytic

struct AnalyticOpts {
  std::string task;
  bool json = false;
  std::string which = "G";
  int order = 300;
  std::string at = "0.1";
  std::size_t points = 10000;
  std::uint64_t seed = 20240601;
};

void analytic_cmd(const AnalyticOpts& o, std::ostream& out) {
  using namespace analytic;
  const auto& c = constants();
  if (o.task == "survey") {
    const auto entries = singularity_survey();
    bool expected = true;
    json rows = json::array();
    for (const auto& e : entries) {
      rows.push_back({{"branch", series::to_string(e.branch)},
                      {"candidate", complex_json(e.candidate)},
                      {"verdict", to_string(e.verdict)},
                      {"value", complex_json(e.fit.value)},
                      {"exponent", e.fit.exponent},
                      {"direction_exponents", e.fit.direction_exponents},
                      {"slope", e.fit.slope}});
      expected = expected && e.verdict != analytic::Verdict::Inconclusive;
    }
    if (o.json) {
      out << json{{"entries", rows}}.dump(2) << '\n';
    } else {
      for (const auto& e : entries) {
        out << std::left << std::setw(4) << series::to_string(e.branch) << " at (" << std::setprecision(6) << e.candidate.real()
            << ", " << e.candidate.imag() << "): " << to_string(e.verdict) << ", exponent " << e.fit.exponent << '\n';
      }
    }
    if (!expected) throw CheckFailed{};
  } else if (o.task == "chain") {
    const SingularityChain ch = singularity_chain_rec2();
    json pts = json::array();
    for (const auto& p : ch.points) pts.push_back(complex_json(p));
    json r1 = json::array();
    for (const auto& p : ch.roots_at_x1) r1.push_back(complex_json(p));
    if (o.json) {
      out << json{{"points", pts}, {"roots_at_x1", r1}, {"x1_roots_contain_x0", ch.x1_roots_contain_x0},
                  {"modulus_x3", ch.modulus_x3}}
                 .dump(2)
          << '\n';
    } else {
      out << std::setprecision(6);
      for (std::size_t k = 0; k < ch.points.size(); ++k)
        out << "x" << k << " = " << ch.points[k].real() << (ch.points[k].imag() < 0 ? " - " : " + ")
            << std::abs(ch.points[k].imag()) << "i\n";
      out << "|x3| = " << ch.modulus_x3 << '\n';
    }
    if (!ch.x1_roots_contain_x0 || ch.modulus_x3 <= 1.33) throw CheckFailed{};
  } else if (o.task == "radius") {
    std::vector<BigInt> seq;
    int stride = 1;
    if (o.which == "G") {
      if (o.order < 30) throw UsageError("--order: G radius needs order >= 30");
      seq = axis_sequence(count_quadrant(stepsets::knight(), {1, 1}, o.order - 5));
      seq.resize(static_cast<std::size_t>(o.order) + 1);
      stride = 3;
    } else if (o.which == "F") {
      if (o.order < 12) throw UsageError("--order: F radius needs order >= 12");
      seq = recur::f_sequence(o.order);
    } else {
      throw UsageError("--which: expected G or F");
    }
    const RadiusEstimate r = radius_estimate(seq, stride);
    const double rel = std::abs(r.estimate / c.x_c - 1);
    if (o.json) {
      out << json{{"which", o.which}, {"estimate", r.estimate}, {"index", r.index}, {"x_c", c.x_c}, {"relative_error", rel}}
                 .dump(2)
          << '\n';
    } else {
      out << std::setprecision(8) << o.which << " radius estimate " << r.estimate << " from index " << r.index
          << " (x_c = " << c.x_c << ", relative error " << rel << ")\n";
    }
  } else if (o.task == "gbound") {
    const GPrimeBound g = gprime_bound_check();
    if (o.json) {
      out << json{{"bound_value", g.bound_value}, {"threshold", g.threshold}, {"passes", g.passes}, {"terms", g.terms}}.dump(2)
          << '\n';
    } else {
      out << std::setprecision(8) << "majorant " << g.bound_value << ", threshold 2 x_c^2 y_c = " << g.threshold << ": "
          << (g.passes ? "passes" : "fails") << '\n';
    }
    if (!g.passes) throw CheckFailed{};
  } else if (o.task == "eval") {
    const auto x = parse_complex(o.at, "--at");
    const BranchValues v = eval_branches(x);
    if (o.json) {
      out << json{{"at", complex_json(x)},
                  {"method", to_string(v.method)},
                  {"Xi0", complex_json(v.values[0])},
                  {"Xi1", complex_json(v.values[1])},
                  {"Xi2", complex_json(v.values[2])}}
                 .dump(2)
          << '\n';
    } else {
      out << std::setprecision(12);
      for (int b = 0; b < 3; ++b) out << "xi" << b << " = " << v.values[static_cast<std::size_t>(b)] << '\n';
    }
  } else if (o.task == "sweep") {
    const SweepResult r = dominant_root_sweep(o.points, o.seed);
    if (o.json) {
      out << json{{"points", r.points}, {"failures", r.failures}}.dump(2) << '\n';
    } else {
      out << r.points << " points, " << r.failures << " failures\n";
    }
    if (r.failures) throw CheckFailed{};
  } else {
    throw UsageError("analytic: expected survey, chain, radius, gbound, eval or sweep");
  }
}

// ------------------------------------------------------------------ recur

struct RecurOpts {
  std::string spec;
  std::string preset;
  std::string box;
  std::string out;
  std::string format = "csv";
  bool no_zero_extension = false;
};

void recur_cmd(const RecurOpts& o, std::ostream& os) {
  using namespace recur;
  if (o.spec.empty() == o.preset.empty()) throw UsageError("recur: give exactly one of --spec and --preset");
  RecurrenceSpec spec;
  if (!o.spec.empty()) {
    std::ifstream f(o.spec);
    if (!f) throw UsageError("--spec: cannot read \"" + o.spec + "\"");
    try {
      spec = RecurrenceSpec::from_json(json::parse(f));
    } catch (const std::exception& e) {
      throw UsageError(std::string("--spec: ") + e.what());
    }
  } else if (o.preset == "knight") {
    spec = knight_recurrence();
  } else {
    throw UsageError("--preset: expected knight");
  }
  if (o.no_zero_extension) spec.zero_extension = false;
  std::optional<Box> box;
  if (!o.box.empty()) {
    try {
      box = Box::parse(o.box);
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--box: ") + e.what());
    }
    if (static_cast<int>(box->ranges.size()) != spec.d) throw UsageError("--box: dimension does not match the spec");
  }

  const Validation v = validate(spec);
  const ApexClass ac = apex_and_class(spec);
  Sink sink(o.out, os);
  std::ostream& out = *sink;
  if (!v.valid()) {
    json lam = json::array();
    for (const auto& l : v.witness->lambda) lam.push_back(to_decimal(l));
    if (o.format == "json") {
      out << json{{"valid", false}, {"witness", lam}, {"apex", ac.apex}, {"class", to_string(ac.gf_class)}}.dump(2) << '\n';
    } else {
      os << "invalid: shift hull meets the orthant; witness lambda = " << lam.dump() << '\n';
    }
    throw CheckFailed{};
  }
  json w = json::array();
  for (const auto& x : v.weight->w) w.push_back(to_decimal(x));
  std::map<Index, Rational> values;
  if (box) values = evaluate(spec, *box);

  if (o.format == "json") {
    json cells = json::array();
    for (const auto& [n, val] : values) cells.push_back({{"n", n}, {"value", to_decimal(val)}});
    out << json{{"valid", true}, {"weight", w}, {"apex", ac.apex}, {"class", to_string(ac.gf_class)}, {"values", cells}}.dump(2)
        << '\n';
    return;
  }
  if (!box) {
    out << "valid: ranking weight " << w.dump() << ", apex " << json(ac.apex).dump() << ", class "
        << to_string(ac.gf_class) << '\n';
    return;
  }
  for (int k = 0; k < spec.d; ++k) out << 'n' << k + 1 << ',';
  out << "value\n";
  for (const auto& [n, val] : values) {
    for (auto x : n) out << x << ',';
    out << to_decimal(val) << '\n';
  }
}

// -------------------------------------------------------------- criterion

void criterion_cmd(const std::string& steps_text, const std::string& format, std::ostream& out) {
  const StepSet s = parse_steps(steps_text, "--steps");
  const Verdict v = holonomy_criterion(s);
  if (format == "json") {
    out << json{{"steps", s.to_json()},
                {"x_symmetric", is_x_symmetric(s)},
                {"small_height_variation", has_small_height_variation(s)},
                {"verdict", to_string(v)}}
               .dump(2)
        << '\n';
  } else {
    out << to_string(v) << '\n';
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact enumeration of planar lattice walks in the quadrant, kernel-root series and recurrences", "walks"};
  app.set_version_flag("--version", std::string("walks ") + kVersion);
  app.require_subcommand(1);

  CountOpts count;
  auto* c = app.add_subcommand("count", "Count walks by endpoint and length");
  c->add_option("--steps", count.steps, "Step set, \"(dx,dy);...\" or JSON [[dx,dy],...]")->capture_default_str();
  c->add_option("--start", count.start, "Start point i,j")->capture_default_str();
  c->add_option("--nmax", count.n_max, "Largest walk length")->capture_default_str();
  c->add_option("--region", count.region, "quadrant or half-plane")->capture_default_str();
  c->add_flag("--aggregate", count.aggregate, "Sum counts over lengths");
  c->add_option("--format", count.format, "csv, json or pretty (pretty needs --aggregate)")
      ->check(CLI::IsMember({"csv", "json", "pretty"}))
      ->capture_default_str();
  c->add_option("--window", count.window, "Only report cells with i <= I and |j| <= J, given as I,J");
  c->add_option("--out", count.out, "Output file (default stdout)");

  BijectionOpts bij;
  auto* b = app.add_subcommand("bijection", "Apply the flip correspondence to one walk");
  b->add_option("--steps", bij.steps, "Step set")->capture_default_str();
  b->add_option("--start", bij.start, "Start point i,j")->capture_default_str();
  b->add_option("--walk", bij.walk, "Comma-separated step names, e.g. N,N,E,S")->required();
  b->add_option("--legend", bij.legend, "Step names NAME=(dx,dy),...")->capture_default_str();
  b->add_option("--direction", bij.direction, "down (quadrant to half-plane) or up")->capture_default_str();
  b->add_option("--format", bij.format, "pretty or json")->check(CLI::IsMember({"pretty", "json"}))->capture_default_str();

  SeriesOpts ser;
  auto* s = app.add_subcommand("series", "Print a series with exact coefficients");
  s->add_option("--which", ser.which, "xi, psi, G or F")->capture_default_str();
  s->add_option("--order", ser.order, "Truncation order")->capture_default_str();
  s->add_option("--format", ser.format, "json, csv or pretty")
      ->check(CLI::IsMember({"json", "csv", "pretty"}))
      ->capture_default_str();

  VerifyOpts ver;
  auto* v = app.add_subcommand("verify", "Check a functional equation coefficient by coefficient");
  v->add_option("--identity", ver.identity, "main, knight-kernel, diagonal or main2")->capture_default_str();
  v->add_option("--order", ver.order, "Order (total degree for knight-kernel)")->capture_default_str();
  v->add_option("--branch", ver.branch, "Kernel root 0, 1 or 2 (main2 only)")->capture_default_str();
  v->add_option("--perturb-g", ver.perturb_g, "Add 1 to these coefficients of G before checking");
  v->add_option("--perturb-f", ver.perturb_f, "Add 1 to these coefficients of F before checking");
  v->add_option("--format", ver.format, "pretty or json")->check(CLI::IsMember({"pretty", "json"}))->capture_default_str();

  AnalyticOpts an;
  auto* a = app.add_subcommand("analytic", "Numeric checks on the kernel branches");
  a->add_option("task", an.task, "survey, chain, radius, gbound, eval or sweep")->required();
  a->add_flag("--json", an.json, "JSON output");
  a->add_option("--which", an.which, "radius: G or F")->capture_default_str();
  a->add_option("--order", an.order, "radius: number of coefficients")->capture_default_str();
  a->add_option("--at", an.at, "eval: point re[,im]")->capture_default_str();
  a->add_option("--points", an.points, "sweep: sample size")->capture_default_str();
  a->add_option("--seed", an.seed, "sweep: RNG seed")->capture_default_str();

  RecurOpts rec;
  auto* r = app.add_subcommand("recur", "Validate and evaluate a constant-coefficient recurrence");
  r->add_option("--spec", rec.spec, "JSON spec file");
  r->add_option("--preset", rec.preset, "Built-in spec: knight");
  r->add_option("--box", rec.box, "Inclusive box lo:hi,... to evaluate");
  r->add_option("--out", rec.out, "Output file (default stdout)");
  r->add_option("--format", rec.format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  r->add_flag("--no-zero-extension", rec.no_zero_extension, "Fail instead of reading 0 at negative indices");

  std::string crit_steps = "(2,-1);(-1,2)";
  std::string crit_format = "pretty";
  auto* k = app.add_subcommand("criterion", "Decide the D-finiteness sufficient condition");
  k->add_option("--steps", crit_steps, "Step set")->capture_default_str();
  k->add_option("--format", crit_format, "pretty or json")->check(CLI::IsMember({"pretty", "json"}))->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << "walks " << kVersion << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "walks: " << e.what() << '\n';
    err << "run 'walks --help' for usage\n";
    return kUsage;
  }

  try {
    if (c->parsed()) count_cmd(count, out);
    else if (b->parsed()) bijection_cmd(bij, out);
    else if (s->parsed()) series_cmd(ser, out);
    else if (v->parsed()) verify_cmd(ver, out);
    else if (a->parsed()) analytic_cmd(an, out);
    else if (r->parsed()) recur_cmd(rec, out);
    else if (k->parsed()) criterion_cmd(crit_steps, crit_format, out);
  } catch (const CheckFailed&) {
    return kCheckFailed;
  } catch (const UsageError& e) {
    err << "walks: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "walks: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "walks: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "walks: " << e.what() << '\n';
    return kCheckFailed;
  }
  return kOk;
}

}  // namespace walks::cli
