#include "cext/cli.hpp"

#include <chrono>
#include <iostream>
#include <map>
#include <sstream>

#include "cext/extensions.hpp"

namespace cext {

namespace {

std::shared_ptr<const Presentation> load_presentation(const RunConfig& c) {
  if (!c.presentation.empty()) {
    return std::make_shared<const Presentation>(presentation_from_json(read_json_file(c.presentation)));
  }
  return std::make_shared<const Presentation>(Presentation::paper_family(c.truncation, c.relator_form));
}

std::optional<ReductionStrategy> make_strategy(const RunConfig& c) {
  if (!c.randomize_reduction) return std::nullopt;
  if (!c.seed) throw Error(ErrorCode::InvalidArgument, "--randomize-reduction needs --seed");
  return ReductionStrategy(*c.seed);
}

std::string require_word(const RunConfig& c) {
  if (c.word.empty()) throw Error(ErrorCode::InvalidArgument, c.command + " needs a word argument");
  return c.word;
}

std::string letter_name(const AlphabetPtr& alphabet, Letter x) {
  const Letter one[] = {x};
  return to_string(Word(alphabet, one));
}

std::vector<std::size_t> parse_index_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) continue;
    item = item.substr(b, e - b + 1);
    try {
      std::size_t pos = 0;
      out.push_back(std::stoul(item, &pos));
      if (pos != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidArgument, "bad element index '" + item + "'");
    }
  }
  return out;
}

Json integers_json(const std::vector<Integer>& v) {
  Json out = Json::array();
  for (const Integer& x : v) out.push_back(x.str());
  return out;
}

// Cocycles to feed the finite commands: the --cocycle file, or the H^2 representatives.
std::vector<CochainVector> finite_inputs(const RunConfig& c, const FiniteGroup& g, CoefficientRing coeff) {
  if (!c.cocycle.empty()) return {cochain_from_json(read_json_file(c.cocycle), g, coeff)};
  const CoefficientRing ring = coeff.kind == CoefficientRing::Kind::rationals ? CoefficientRing::integers() : coeff;
  return h2(g, ring).representatives;
}

Json run_check_cancellation(const RunConfig& c) {
  auto p = load_presentation(c);
  const Rational lambda = parse_rational(c.lambda);
  const auto r = check_small_cancellation(*p, lambda, c.max_index);
  return {{"holds", r.holds},
          {"lambda", format_rational(r.lambda)},
          {"max_index", r.max_index},
          {"worst", piece_to_json(r.worst)},
          {"worst_cross", piece_to_json(r.worst_cross)},
          {"worst_self", piece_to_json(r.worst_self)}};
}

Json run_word_problem(const RunConfig& c) {
  auto p = load_presentation(c);
  DehnSolver solver(p);
  const Word w = p->parse(require_word(c));
  auto strategy = make_strategy(c);
  ReductionTrace trace;
  const auto cert = solver.try_certificate(w, strategy ? &*strategy : nullptr, &trace);
  Json steps = Json::array();
  for (const auto& s : trace) {
    steps.push_back({{"before", to_string(s.before)},
                     {"relator_index", s.relator_index},
                     {"sign", s.sign},
                     {"matched", s.matched},
                     {"after", to_string(s.after)}});
  }
  return {{"word", to_string(w)}, {"length", w.length()}, {"trivial", cert.has_value()}, {"steps", steps}};
}

Json run_area(const RunConfig& c) {
  auto p = load_presentation(c);
  DehnSolver solver(p);
  const Word w = p->parse(require_word(c));
  auto strategy = make_strategy(c);
  const AreaCertificate cert = solver.area_certificate(w, strategy ? &*strategy : nullptr);
  const Json cj = certificate_to_json(cert);
  if (!c.emit_certificate.empty()) write_text_file(c.emit_certificate, cj.dump(2) + "\n");
  return {{"certificate", cj},
          {"length", w.length()},
          {"weight", cert.weight},
          {"within_length_bound", cert.weight <= static_cast<std::int64_t>(w.length())},
          {"verified", verify_certificate(w, cert, *p)}};
}

Json run_lift(const RunConfig& c) {
  auto p = load_presentation(c);
  DehnSolver solver(p);
  const SlowClass alpha = SlowClass::parse(c.alpha);
  const Word w = p->parse(require_word(c));
  auto strategy = make_strategy(c);
  const AreaCertificate cert = solver.area_certificate(w, strategy ? &*strategy : nullptr);
  const std::int64_t value = certificate_lift(cert, alpha);
  const Rational bound = alpha.lambda() * Rational(cert.weight);
  return {{"word", to_string(w)},
          {"alpha", alpha.to_string()},
          {"value", value},
          {"weight", cert.weight},
          {"lambda", format_rational(alpha.lambda())},
          {"within_bound", Rational(value < 0 ? -value : value) <= bound}};
}

Json run_ball(const RunConfig& c) {
  auto p = load_presentation(c);
  auto solver = std::make_shared<const DehnSolver>(p);
  return ball_to_json(enumerate_ball(c.radius, solver));
}

Json run_probe(const RunConfig& c) {
  auto p = load_presentation(c);
  auto solver = std::make_shared<const DehnSolver>(p);
  const SlowClass alpha = SlowClass::parse(c.alpha);
  auto ball = std::make_shared<const Ball>(enumerate_ball(c.radius, solver));
  const Cocycle2 omega = cocycle_from_section(ball, alpha);

  const auto check = check_cocycle_admissible(omega);
  const auto profile = weak_boundedness_profile(omega);
  Json maxima = Json::object();
  for (const auto& [x, m] : profile.generator_maxima) maxima[letter_name(ball->alphabet(), x)] = m;
  Json rows = Json::array();
  for (const auto& row : profile.rows) {
    rows.push_back({{"element", to_string(ball->representative(row.element))},
                    {"norm", row.norm},
                    {"max_abs", row.max_abs},
                    {"bound", row.bound}});
  }
  Json pullbacks = Json::array();
  for (std::size_t i = 0; i <= c.pullback_max && i < p->size(); ++i) {
    pullbacks.push_back({{"i", i}, {"value", pullback_euler(i, alpha, *solver)}, {"alpha_i", alpha.value(i)}});
  }

  MaximizingSection section(ball, alpha, c.cap_slack);
  const auto defects = section_defect_stats(section);
  Json excess = Json::array();
  for (const auto& e : defects.excess) {
    excess.push_back({{"element", to_string(ball->representative(e.element))},
                      {"generator", letter_name(ball->alphabet(), e.generator)},
                      {"defect", e.defect}});
  }
  return {{"alpha", alpha.to_string()},
          {"radius", c.radius},
          {"cap_slack", c.cap_slack},
          {"cocycle_check",
           {{"passed", check.passed},
            {"triples_checked", check.triples_checked},
            {"violations", check.violation_count},
            {"normalization_failures", check.normalization_failures}}},
          {"generator_maxima", maxima},
          {"c", profile.c},
          {"rows", rows},
          {"rows_within_bound", profile.all_within_bound},
          {"pullbacks", pullbacks},
          {"defect_max", defects.defect_max},
          {"k", defects.k},
          {"lambda_int", defects.lambda_int},
          {"theoretical_bound", defects.theoretical_bound},
          {"pairs_checked", defects.pairs_checked},
          {"excess", excess},
          {"bracket_ok", defects.bracket_ok}};
}

Json run_max_section(const RunConfig& c) {
  auto p = load_presentation(c);
  auto solver = std::make_shared<const DehnSolver>(p);
  const SlowClass alpha = SlowClass::parse(c.alpha);
  auto ball = std::make_shared<const Ball>(enumerate_ball(c.radius, solver));
  const ElementHandle g = canonical(p->parse(require_word(c)), *ball);
  const std::size_t cap = c.cap.value_or(g.norm() + c.cap_slack);
  const SectionValue v = maximizing_section(g, alpha, cap, ball);
  return {{"element", to_string(g.word)},
          {"norm", g.norm()},
          {"alpha", alpha.to_string()},
          {"cap", cap},
          {"lower", v.lower},
          {"upper", v.upper},
          {"witness", to_string(v.witness)}};
}

Json run_finite_h2(const RunConfig& c) {
  const FiniteGroup g = FiniteGroup::parse(c.group);
  const CoefficientRing coeff = CoefficientRing::parse(c.coeff);
  const H2Description d = h2(g, coeff);
  Json reps = Json::array();
  Json orders = Json::array();
  for (const auto& r : d.representatives) {
    reps.push_back(cochain_to_json(r));
    orders.push_back(class_order(r, d).str());
  }
  return {{"group", g.name()},
          {"order", g.order()},
          {"coefficients", coeff.to_string()},
          {"invariant_factors", integers_json(d.invariant_factors)},
          {"representatives", reps},
          {"representative_orders", orders}};
}

Json run_finite_transfer(const RunConfig& c) {
  const FiniteGroup g = FiniteGroup::parse(c.group);
  const CoefficientRing coeff = CoefficientRing::parse(c.coeff);
  if (c.subgroup.empty()) throw Error(ErrorCode::InvalidArgument, "finite-transfer needs --subgroup");
  const Subgroup h = make_subgroup(g, parse_index_list(c.subgroup));
  const std::size_t index = g.order() / h.elements.size();
  const H2Description d = h2(g, coeff);
  Json checks = Json::array();
  bool holds = true;
  for (const auto& omega : finite_inputs(c, g, coeff)) {
    const CochainVector tr = transfer_cocycle(g, h, restrict_cocycle(g, omega, h));
    CochainVector diff = tr;
    for (std::size_t i = 0; i < diff.values.size(); ++i) {
      diff.values[i] = coeff.normalize(tr.values[i] - Rational(static_cast<long long>(index)) * omega.values[i]);
    }
    const bool cocycle = is_cocycle(g, tr);
    const bool cob = cocycle && is_coboundary(diff, d);
    holds = holds && cob;
    checks.push_back({{"cocycle", cochain_to_json(omega)},
                      {"transfer", cochain_to_json(tr)},
                      {"transfer_is_cocycle", cocycle},
                      {"difference_is_coboundary", cob}});
  }
  return {{"group", g.name()},
          {"subgroup", h.elements},
          {"index", index},
          {"coefficients", coeff.to_string()},
          {"checks", checks},
          {"holds", holds}};
}

Json run_finite_avg(const RunConfig& c) {
  const FiniteGroup g = FiniteGroup::parse(c.group);
  Json items = Json::array();
  bool holds = true;
  for (auto omega : finite_inputs(c, g, CoefficientRing::rationals())) {
    omega.coefficients = CoefficientRing::rationals();
    const CochainVector f = averaging_primitive(g, omega);
    const auto check = verify_primitive(g, f, omega);
    holds = holds && check.ok();
    items.push_back({{"cocycle", cochain_to_json(omega)},
                     {"primitive", cochain_to_json(f)},
                     {"points", check.points},
                     {"failures", check.failures}});
  }
  return {{"group", g.name()}, {"items", items}, {"holds", holds}};
}

Json run_finite_linfty(const RunConfig& c) {
  const FiniteGroup g = FiniteGroup::parse(c.group);
  const CoefficientRing coeff = CoefficientRing::parse(c.coeff);
  Json items = Json::array();
  bool holds = true;
  for (const auto& omega : finite_inputs(c, g, coeff)) {
    const FunctionCochain phi = linfty_primitive(g, omega);
    const auto check = verify_linfty_primitive(g, phi, omega);
    holds = holds && check.ok();
    Json values = Json::array();
    for (const Rational& q : phi.values) values.push_back(format_rational(q));
    items.push_back({{"cocycle", cochain_to_json(omega)},
                     {"primitive", {{"degree", phi.degree}, {"values", values}}},
                     {"points", check.points},
                     {"failures", check.failures}});
  }
  return {{"group", g.name()}, {"coefficients", coeff.to_string()}, {"items", items}, {"holds", holds}};
}

using Runner = Json (*)(const RunConfig&);

const std::map<std::string, Runner>& runners() {
  static const std::map<std::string, Runner> table = {
      {"check-cancellation", run_check_cancellation},
      {"word-problem", run_word_problem},
      {"area", run_area},
      {"lift", run_lift},
      {"ball", run_ball},
      {"probe", run_probe},
      {"max-section", run_max_section},
      {"finite-h2", run_finite_h2},
      {"finite-transfer", run_finite_transfer},
      {"finite-avg", run_finite_avg},
      {"finite-linfty", run_finite_linfty},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, _] : runners()) out.push_back(name);
    return out;
  }();
  return names;
}

Json config_to_json(const RunConfig& c) {
  Json j = {{"presentation", c.presentation.empty() ? Json("paper") : Json(c.presentation)},
            {"relator_form", to_string(c.relator_form)},
            {"truncation", c.truncation},
            {"randomize_reduction", c.randomize_reduction}};
  if (c.seed) j["seed"] = *c.seed;
  if (!c.word.empty()) j["word"] = c.word;
  const std::string& cmd = c.command;
  if (cmd == "check-cancellation") {
    j["lambda"] = c.lambda;
    j["max_index"] = c.max_index;
  }
  if (cmd == "lift" || cmd == "probe" || cmd == "max-section") j["alpha"] = c.alpha;
  if (cmd == "ball" || cmd == "probe" || cmd == "max-section") j["radius"] = c.radius;
  if (cmd == "probe" || cmd == "max-section") j["cap_slack"] = c.cap_slack;
  if (cmd == "max-section" && c.cap) j["cap"] = *c.cap;
  if (cmd == "probe") j["pullback_max"] = c.pullback_max;
  if (cmd.rfind("finite-", 0) == 0) {
    j = Json{{"group", c.group}, {"coeff", c.coeff}};
    if (!c.subgroup.empty()) j["subgroup"] = c.subgroup;
    if (!c.cocycle.empty()) j["cocycle"] = c.cocycle;
  }
  return j;
}

Report run(const RunConfig& config) {
  const auto it = runners().find(config.command);
  if (it == runners().end()) throw Error(ErrorCode::InvalidArgument, "unknown command '" + config.command + "'");
  const auto start = std::chrono::steady_clock::now();
  Report r;
  r.command = config.command;
  r.config = config_to_json(config);
  r.result = it->second(config);
  if (config.timing) {
    r.duration_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
  return r;
}

std::string canonical_text(const Report& r) {
  Json j = {{"command", r.command}, {"config", r.config}, {"result", r.result}, {"version", r.version}};
  if (r.duration_seconds) j["duration_seconds"] = *r.duration_seconds;
  return j.dump(2) + "\n";
}

void emit_report(const Report& r, const std::string& path) {
  const std::string text = canonical_text(r);
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    if (!std::cout) throw Error(ErrorCode::IoError, "cannot write to standard output");
    return;
  }
  write_text_file(path, text);
}

Json error_json(const std::string& code, const std::string& message) {
  return {{"error", {{"code", code}, {"message", message}}}};
}

}  // namespace cext
